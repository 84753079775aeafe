#include "qtheta/io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace qtheta {
namespace {

Json label_json(CosetLabel l) { return Json::array({l.a, l.b}); }

template <typename T>
T require(const Json& json, const char* key) {
  if (!json.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

Json to_json(const ScaledSeries& series) {
  Json out;
  out["scale"] = series.scale();
  const Rational& prec = series.precision();
  if (prec.get_den() == 1) {
    out["precision"] = prec.get_num().get_si();
  } else {
    out["precision"] = prec.get_str();
  }
  Json terms = Json::array();
  for (const auto& [k, c] : series.terms()) terms.push_back(Json::array({k, c.get_str()}));
  out["terms"] = std::move(terms);
  return out;
}

ScaledSeries series_from_json(const Json& json) {
  const auto scale = require<std::int64_t>(json, "scale");
  Rational precision;
  if (!json.contains("precision")) throw std::invalid_argument("missing field \"precision\"");
  if (json.at("precision").is_string()) {
    precision = Rational(json.at("precision").get<std::string>());
  } else {
    precision = Rational(static_cast<long>(require<std::int64_t>(json, "precision")));
  }
  ScaledSeries::Terms terms;
  for (const Json& t : json.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("series term must be a pair");
    terms[t.at(0).get<std::int64_t>()] = BigInt(t.at(1).get<std::string>());
  }
  return ScaledSeries(scale, precision, std::move(terms));
}

Json to_json(const WeightEnumerator& enumerator) {
  Json out;
  out["degree"] = enumerator.degree();
  Json terms = Json::array();
  for (const auto& [e, c] : enumerator.terms()) terms.push_back(Json::array({Json(e), c.get_str()}));
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const std::vector<CosetClass>& classes) {
  Json out = Json::array();
  for (const CosetClass& c : classes) {
    Json members = Json::array();
    for (const CosetLabel& l : c.members) members.push_back(label_json(l));
    Json entry;
    entry["canonical"] = label_json(c.canonical);
    entry["members"] = std::move(members);
    out.push_back(std::move(entry));
  }
  return out;
}

Json to_json(const RankReport& r) {
  Json out;
  out["p"] = r.p;
  out["n"] = r.n;
  out["ell"] = r.ell;
  out["ring"] = to_string(r.type);
  out["s"] = r.s;
  out["rows_used"] = r.rows_used;
  out["rank"] = r.rank;
  out["nullity"] = r.nullity;
  out["b_estimate"] = r.b_estimate;
  return out;
}

Json to_json(const LevelAgreement& agreement) {
  Json out;
  out["first_difference"] =
      agreement.first_difference ? Json(*agreement.first_difference) : Json(nullptr);
  out["bound"] = agreement.bound;
  return out;
}

Json to_json(const SweepRow& row) {
  Json out = to_json(row.report);
  Json above;
  above["shifted_ratio"] = row.flags.above_shifted_ratio;
  above["ratio"] = row.flags.above_ratio;
  above["half_product"] = row.flags.above_half_product;
  Json violations;
  violations["shifted_ratio"] = row.flags.violates_shifted_ratio;
  violations["ratio"] = row.flags.violates_ratio;
  violations["half_product"] = row.flags.violates_half_product;
  out["above_threshold"] = std::move(above);
  out["violations"] = std::move(violations);
  return out;
}

CodeFile code_file_from_json(const Json& json) {
  if (!json.is_object()) throw std::invalid_argument("code file must be a JSON object");
  const auto p = require<std::int64_t>(json, "p");
  const auto ell = require<std::int64_t>(json, "ell");
  const auto length = require<std::int64_t>(json, "length");
  if (length <= 0) throw std::invalid_argument("\"length\" must be positive");
  const Level level = make_level(p, ell);
  const QuotientRing ring = level.ring();

  if (!json.contains("generators") || !json.at("generators").is_array()) {
    throw std::invalid_argument("\"generators\" must be an array");
  }
  std::vector<Word> generators;
  for (const Json& g : json.at("generators")) {
    if (!g.is_array() || static_cast<std::int64_t>(g.size()) != length) {
      throw std::invalid_argument("every generator must have \"length\" components");
    }
    Word w;
    for (const Json& c : g) {
      if (!c.is_array() || c.size() != 2 || !c.at(0).is_number_integer() ||
          !c.at(1).is_number_integer()) {
        throw std::invalid_argument("components must be integer pairs [a, b]");
      }
      w.push_back(ring.make(c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>()));
    }
    generators.push_back(std::move(w));
  }
  if (generators.empty()) throw std::invalid_argument("\"generators\" must not be empty");
  return CodeFile{level, LinearCode::span(ring, std::move(generators))};
}

CodeFile load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file " + path);
  Json json;
  try {
    json = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("code file " + path + " is not valid JSON: " + e.what());
  }
  return code_file_from_json(json);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "p,n,ell,s,rows_used,rank,nullity,b_estimate\n";
  for (const SweepRow& row : rows) {
    const RankReport& r = row.report;
    out << r.p << ',' << r.n << ',' << r.ell << ',' << r.s << ',' << r.rows_used << ',' << r.rank
        << ',' << r.nullity << ',' << r.b_estimate << '\n';
  }
}

}  // namespace qtheta
