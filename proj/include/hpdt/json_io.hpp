#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hpdt/curve.hpp"
#include "hpdt/families.hpp"
#include "hpdt/search.hpp"

namespace hpdt::io {

using nlohmann::json;

inline constexpr const char* kTripleSchema = "hpdt.triple/1";
inline constexpr const char* kTupleSchema = "hpdt.tuple/1";

json to_json(const Rational& q);
json to_json(const GaussianRational& z);
json to_json(const Poly& p);
json to_json(const RatFunc& f);

template <class F>
json to_json(const Point<F>& p) {
  if (p.is_infinity()) return {{"infinity", true}};
  return {{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

template <class F>
json to_json(const Curve<F>& c) {
  return {{"a1", to_json(c.a1())}, {"a2", to_json(c.a2())}, {"a3", to_json(c.a3())},
          {"a4", to_json(c.a4())}, {"a6", to_json(c.a6())}, {"discriminant", to_json(c.discriminant())}};
}

/// {schema, k, half_power, r, s, t, a, b, c, witnesses, regular, signs}
json triple_record(const RegularTriple<Rational>& t);
json triple_record(const RegularTriple<GaussianRational>& t);

template <class T>
json tuple_record(const std::vector<T>& elements, int power, const TupleVerdict<T>& v) {
  json out{{"schema", kTupleSchema}, {"k", power}, {"verified", v.ok()}};
  out["elements"] = json::array();
  for (const auto& e : elements) out["elements"].push_back(to_json(e));
  if (v.ok()) {
    out["witnesses"] = json::array();
    for (const auto& [ij, w] : v.tuple->witnesses) {
      out["witnesses"].push_back({{"i", ij.first}, {"j", ij.second}, {"root", to_json(w)}});
    }
  } else {
    out["failures"] = json::array();
    for (const auto& f : v.failures) {
      out["failures"].push_back({{"i", f.pair.first}, {"j", f.pair.second}, {"product_plus_one", to_json(f.value)}});
    }
  }
  return out;
}

/// Elements as strings (Rational "p/q" or Gaussian "a+bi") plus the power,
/// read back from a triple or tuple record.
struct TupleInput {
  std::vector<std::string> elements;
  int power = 0;
};
TupleInput parse_tuple_record(const json& j);

json to_json(const FamilyPoint& p);
json to_json(const ProofReport& r);
json to_json(const SignReport& s);
json to_json(const PairHit& h);
json to_json(const PellSolution& p);
json to_json(const TaxicabHit& h);
json to_json(const SexticForm& f);
json to_json(const GaussianTripleRecord& g);

}  // namespace hpdt::io
