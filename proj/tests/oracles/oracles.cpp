#include "oracles.hpp"

#include <numeric>

namespace oracle {

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int phi(Int n) {
  Int c = 0;
  for (Int a = 1; a <= n; ++a)
    if (gcd(a, n) == 1) ++c;
  return c;
}

std::set<Int> closure(Int n, const std::vector<Int>& gens) {
  std::set<Int> s{mod(1, n), mod(-1, n)};
  for (Int g : gens) s.insert(mod(g, n));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Int> cur(s.begin(), s.end());
    for (Int a : cur)
      for (Int b : cur)
        if (s.insert(mod(a * b, n)).second) grew = true;
  }
  return s;
}

namespace {

// Finite model: coset index of the pair (c, d) mod N after Δ-scaling.
struct CosetSpace {
  Int n;
  std::vector<Int> rep;  // rep[c*n + d] = canonical pair index, -1 if not primitive
  std::vector<Int> classes;

  CosetSpace(Int n_, const std::set<Int>& delta) : n(n_), rep(static_cast<std::size_t>(n_ * n_), -1) {
    for (Int c = 0; c < n; ++c)
      for (Int d = 0; d < n; ++d) {
        if (gcd(gcd(c, d), n) != 1) continue;
        Int best = -1;
        for (Int u : delta) {
          Int idx = mod(u * c, n) * n + mod(u * d, n);
          if (best < 0 || idx < best) best = idx;
        }
        rep[static_cast<std::size_t>(c * n + d)] = best;
        if (best == c * n + d) classes.push_back(best);
      }
  }

  Int at(Int c, Int d) const { return rep[static_cast<std::size_t>(mod(c, n) * n + mod(d, n))]; }
};

}  // namespace

CosetCounts coset_counts(Int n, const std::set<Int>& delta) {
  CosetSpace sp(n, delta);
  CosetCounts out;
  out.mu = static_cast<Int>(sp.classes.size());
  std::set<Int> seen;
  for (Int idx : sp.classes) {
    const Int c = idx / n, d = idx % n;
    if (sp.at(d, -c) == idx) ++out.nu2;
    if (sp.at(d, d - c) == idx) ++out.nu3;
    if (seen.count(idx)) continue;
    ++out.nu_inf;
    for (Int dd = d;; dd += c) {
      Int k = sp.at(c, dd);
      if (!seen.insert(k).second) break;
    }
  }
  out.twice_genus_times_6 = 12 + out.mu - 3 * out.nu2 - 4 * out.nu3 - 6 * out.nu_inf;
  return out;
}

std::set<Int> all_units(Int n) {
  std::set<Int> s;
  for (Int a = 1; a <= n; ++a)
    if (gcd(a, n) == 1) s.insert(mod(a, n));
  return s;
}

CosetCounts coset_counts_gamma1(Int n) { return coset_counts(n, closure(n, {})); }
CosetCounts coset_counts_gamma0(Int n) { return coset_counts(n, all_units(n)); }

std::vector<CosetCusp> coset_cusps(Int n, const std::set<Int>& delta) {
  CosetSpace sp(n, delta);
  std::vector<CosetCusp> out;
  std::set<Int> seen;
  for (Int idx : sp.classes) {
    if (seen.count(idx)) continue;
    const Int c = idx / n, d = idx % n;
    Int width = 0;
    for (Int dd = d;; dd += c) {
      if (!seen.insert(sp.at(c, dd)).second) break;
      ++width;
    }
    // Lift (c, d) to a coprime integer pair and complete to (a b; c d).
    Int cl = c, dl = d;
    if (cl == 0) cl = n;
    while (gcd(cl, dl) != 1) dl += n;
    // a d - b c = 1: a = d^{-1} mod c.
    Int a = 0;
    if (cl == 1) {
      a = 1;
    } else {
      for (a = 1; mod(a * dl, cl) != 1; ++a) {
      }
    }
    out.push_back({a, cl, width});
  }
  return out;
}

std::vector<std::vector<std::pair<Int, Int>>> cusp_classes(Int n, const std::set<Int>& delta) {
  const auto size = static_cast<std::size_t>(n * n);
  std::vector<Int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  };
  auto unite = [&](Int u, Int v) { parent[static_cast<std::size_t>(find(u))] = find(v); };
  auto id = [&](Int x, Int y) { return mod(x, n) * n + mod(y, n); };
  auto primitive = [&](Int x, Int y) { return gcd(gcd(x, y), n) == 1; };

  // A generating set is enough for the union-find; pick one greedily.
  std::vector<Int> gens;
  std::set<Int> reached{mod(1, n)};
  for (Int a : delta) {
    if (reached.count(a)) continue;
    gens.push_back(a);
    std::vector<Int> frontier(reached.begin(), reached.end());
    while (!frontier.empty()) {
      Int h = frontier.back();
      frontier.pop_back();
      for (Int g : gens)
        if (reached.insert(mod(h * g, n)).second) frontier.push_back(mod(h * g, n));
    }
  }
  std::vector<std::pair<Int, Int>> inverses;
  for (Int a : gens)
    for (Int b = 1; b <= n; ++b)
      if (mod(a * b, n) == mod(1, n)) {
        inverses.emplace_back(a, b);
        break;
      }

  for (Int x = 0; x < n; ++x)
    for (Int y = 0; y < n; ++y) {
      if (!primitive(x, y)) continue;
      unite(id(x, y), id(x + y, y));
      unite(id(x, y), id(-x, -y));
      for (auto [a, ai] : inverses) unite(id(x, y), id(a * x, ai * y));
    }

  std::map<Int, std::vector<std::pair<Int, Int>>> groups;
  for (Int x = 0; x < n; ++x)
    for (Int y = 0; y < n; ++y)
      if (primitive(x, y)) groups[find(id(x, y))].emplace_back(x, y);
  std::vector<std::vector<std::pair<Int, Int>>> out;
  for (auto& [k, v] : groups) out.push_back(std::move(v));
  return out;
}

std::map<Int, Int> cusp_counts_by_d(Int n, const std::set<Int>& delta) {
  std::map<Int, Int> out;
  for (const auto& cls : cusp_classes(n, delta)) {
    Int y = cls.front().second;
    ++out[gcd(y == 0 ? n : y, n)];
  }
  return out;
}

}  // namespace oracle
