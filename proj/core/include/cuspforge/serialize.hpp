#pragma once

// JSON (and TSV for the survey) renderings of the library's values. Field
// order is fixed so identical inputs give byte-identical output.

#include <string>

#include <nlohmann/json.hpp>

#include "cuspforge/criteria.hpp"
#include "cuspforge/cusps.hpp"
#include "cuspforge/etaq.hpp"
#include "cuspforge/genus.hpp"
#include "cuspforge/qseries.hpp"
#include "cuspforge/symmetry.hpp"
#include "cuspforge/verdict.hpp"

namespace cuspforge {

using Json = nlohmann::ordered_json;

Json to_json(const DeltaSubgroup& delta);
Json to_json(const CuspClass& c);  // {x, y, d, e, irregular, width, plus_sign}
Json to_json(const CuspAtlas& atlas);
Json to_json(const CuspOrbits& orbits);
Json to_json(const GenusProfile& p);
Json to_json(const CertStep& step);
Json to_json(const Verdict& v);
Json verdict_json(Int level, Int d, const Verdict& v);  // {N, d, status, weight?, certificate}
Json verdict_x0_json(Int p, Int m, const Verdict& v);
Json to_json(const GapSequence& gaps);
Json to_json(const QSeries& s);
Json to_json(const CuspDivisor& div);
Json to_json(const X120Certificate& cert);
Json to_json(const SurveyReport& report);

std::string survey_tsv(const SurveyReport& report);

/// Inverse of to_json(Verdict) for the fields a reader needs to recheck a
/// certificate.
Verdict verdict_from_json(const Json& j);

}  // namespace cuspforge
