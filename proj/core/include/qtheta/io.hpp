#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtheta/codes.hpp"
#include "qtheta/coset_theta.hpp"
#include "qtheta/lattice_theta.hpp"
#include "qtheta/qseries.hpp"
#include "qtheta/quadring.hpp"
#include "qtheta/uniqueness.hpp"

namespace qtheta {

using Json = nlohmann::ordered_json;

// {"scale": int, "precision": int, "terms": [[k, "coeff"], ...]}, terms in
// ascending k. A non-integral precision is written as the string "num/den".
Json to_json(const ScaledSeries& series);
ScaledSeries series_from_json(const Json& json);

// {"degree": n, "terms": [[[e1, ..., er], "coeff"], ...]}, exponent vectors in
// ascending lexicographic order.
Json to_json(const WeightEnumerator& enumerator);

// [{"canonical": [a, b], "members": [[a, b], ...]}, ...]
Json to_json(const std::vector<CosetClass>& classes);

Json to_json(const RankReport& report);
Json to_json(const LevelAgreement& agreement);
Json to_json(const SweepRow& row);

// A code file: {"p": 3, "ell": 7, "length": 2, "generators": [[[1,0],[1,0]]]}
// where each component [a, b] means a + b*w.
struct CodeFile {
  Level level;
  LinearCode code;
};

// Throws std::invalid_argument on schema violations and NotAdmissible for an
// invalid (p, ell).
CodeFile code_file_from_json(const Json& json);
CodeFile load_code_file(const std::string& path);

// Header p,n,ell,s,rows_used,rank,nullity,b_estimate then one line per row.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace qtheta
