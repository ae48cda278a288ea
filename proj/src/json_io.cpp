#include "hpdt/json_io.hpp"

namespace hpdt::io {

json to_json(const Rational& q) { return q.str(); }

json to_json(const GaussianRational& z) { return {{"re", z.re().str()}, {"im", z.im().str()}}; }

json to_json(const Poly& p) {
  json out = json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).str());
  return out;
}

json to_json(const RatFunc& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"expr", f.str()}};
}

namespace {

int sign_of(const Rational& q) { return q.sign(); }

template <class F>
json regular_record(const RegularTriple<F>& t) {
  json out{{"schema", kTripleSchema},
           {"k", t.power()},
           {"half_power", t.half_power},
           {"r", to_json(t.r)},
           {"s", to_json(t.s)},
           {"t", to_json(t.t)},
           {"a", to_json(t.a)},
           {"b", to_json(t.b)},
           {"c", to_json(t.c)},
           {"regular", check_regular(t)}};
  // a b + 1 = r^(2k), a c + 1 = s^(2k), b c + 1 = t^(2k)
  out["witnesses"] = {{"ab", to_json(t.r)}, {"ac", to_json(t.s)}, {"bc", to_json(t.t)}};
  return out;
}

std::string element_text(const json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  if (e.is_object() && e.contains("re")) {
    const std::string re = e.at("re").get<std::string>();
    std::string im = e.at("im").get<std::string>();
    if (im.front() != '-') im = "+" + im;
    return re + im + "i";
  }
  throw InvalidInput("unrecognised element in record: " + e.dump());
}

}  // namespace

json triple_record(const RegularTriple<Rational>& t) {
  json out = regular_record(t);
  out["signs"] = {sign_of(t.a), sign_of(t.b), sign_of(t.c)};
  return out;
}

json triple_record(const RegularTriple<GaussianRational>& t) {
  json out = regular_record(t);
  out["signs"] = nullptr;  // no order on Q(i)
  return out;
}

TupleInput parse_tuple_record(const json& j) {
  TupleInput in;
  if (!j.contains("k")) throw InvalidInput("record has no k");
  in.power = j.at("k").get<int>();
  if (j.contains("elements")) {
    for (const auto& e : j.at("elements")) in.elements.push_back(element_text(e));
  } else {
    for (const char* key : {"a", "b", "c"}) in.elements.push_back(element_text(j.at(key)));
  }
  return in;
}

json to_json(const FamilyPoint& p) {
  json out{{"schema", "hpdt.family-point/1"},
           {"family", std::string(family_name(p.family))},
           {"param", to_json(p.param)}};
  if (p.k) out["fam2k_k"] = to_json(*p.k);
  out["triple"] = triple_record(p.triple);
  return out;
}

json to_json(const ProofReport& r) {
  json out{{"schema", "hpdt.report/1"}, {"subject", r.subject}, {"passed", r.all_passed()}};
  out["checks"] = json::array();
  for (const auto& c : r.checks) out["checks"].push_back({{"name", c.name}, {"passed", c.passed}});
  return out;
}

json to_json(const SignReport& s) {
  return {{"signs", {s.a, s.b, s.c}},
          {"sign_factor", s.sign_factor},
          {"inside_decimal_interval", s.inside_decimal_interval}};
}

json to_json(const PairHit& h) {
  return {{"r", h.r}, {"s", h.s}, {"t", to_json(h.t)}, {"integral", h.integral}};
}

json to_json(const PellSolution& p) {
  return {{"index", p.index}, {"p", p.p.get_str()}, {"r", p.r.get_str()}};
}

json to_json(const TaxicabHit& h) {
  json out{{"X", h.X}, {"Y", h.Y}, {"Z", h.Z}, {"W", h.W}, {"k", h.k}, {"square_product", h.square_product}};
  if (h.sqrt_witness) out["sqrt_product"] = h.sqrt_witness->get_str();
  return out;
}

json to_json(const SexticForm& f) {
  return {{"x1", f.x1.get_str()}, {"y1", f.y1.get_str()}, {"x2", f.x2.get_str()},
          {"y2", f.y2.get_str()}, {"h", f.h.get_str()}};
}

json to_json(const GaussianTripleRecord& g) {
  json out{{"schema", kTupleSchema}, {"k", 4}, {"origin", g.origin}};
  out["elements"] = json::array();
  for (const auto& e : g.elements) out["elements"].push_back(to_json(e));
  out["witnesses"] = json::array();
  for (const auto& w : g.witnesses) out["witnesses"].push_back(to_json(w));
  if (g.seed_r) out["seed_r"] = to_json(*g.seed_r);
  return out;
}

}  // namespace hpdt::io
