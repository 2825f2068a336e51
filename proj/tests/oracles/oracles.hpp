#pragma once

// Brute-force reference computations that share nothing with the library
// beyond plain integers. Used to cross-check closed forms.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;

Int gcd(Int a, Int b);
Int mod(Int a, Int m);
Int phi(Int n);  // by counting

/// Units mod n in the subgroup generated by gens and -1.
std::set<Int> closure(Int n, const std::vector<Int>& gens);

/// Right cosets of ±Γ_Δ(N) in SL_2(Z), as primitive bottom rows mod N up to
/// scaling by Δ. Everything below is counted on this finite set.
struct CosetCounts {
  Int mu = 0;
  Int nu2 = 0;
  Int nu3 = 0;
  Int nu_inf = 0;
  Int twice_genus_times_6 = 0;  // 12 g, kept integral
  Int genus() const { return twice_genus_times_6 / 12; }
  bool integral() const { return twice_genus_times_6 % 12 == 0; }
};

CosetCounts coset_counts(Int n, const std::set<Int>& delta);
CosetCounts coset_counts_gamma1(Int n);
CosetCounts coset_counts_gamma0(Int n);

/// A cusp as it comes out of the coset picture: the first column (a, c) of a
/// matrix in the T-orbit, together with the orbit length (the width).
struct CosetCusp {
  Int a;
  Int c;
  Int width;
};

std::vector<CosetCusp> coset_cusps(Int n, const std::set<Int>& delta);

/// Cusp classes by union-find on primitive pairs (x, y) mod N under
/// (x, y) -> (x + y, y), (x, y) -> (-x, -y) and, for each a in delta,
/// (x, y) -> (a x, a^-1 y). Returns each class as a set of pairs.
std::vector<std::vector<std::pair<Int, Int>>> cusp_classes(Int n, const std::set<Int>& delta);

/// Number of classes per d = gcd(y, N).
std::map<Int, Int> cusp_counts_by_d(Int n, const std::set<Int>& delta);

}  // namespace oracle
