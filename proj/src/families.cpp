#include "hpdt/families.hpp"

#include <initializer_list>

namespace hpdt {

namespace {

/// Polynomial in u from integer coefficients, highest degree first.
Poly desc(std::initializer_list<long> coeffs) {
  std::vector<Rational> v(coeffs.size());
  std::size_t i = coeffs.size();
  for (long c : coeffs) v[--i] = Rational(c);
  return Poly(std::move(v));
}

RatFunc rf(const Poly& p) { return RatFunc(p); }

const RatFunc& var() {
  static const RatFunc u = RatFunc::variable();
  return u;
}

}  // namespace

std::string_view family_name(FamilyId id) {
  switch (id) {
    case FamilyId::fam1: return "fam1";
    case FamilyId::fam2: return "fam2";
    case FamilyId::fam2k: return "fam2k";
    case FamilyId::fam3a: return "fam3a";
    case FamilyId::fam3b: return "fam3b";
    case FamilyId::fam4: return "fam4";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId id : kAllFamilies) {
    if (family_name(id) == name) return id;
  }
  return std::nullopt;
}

RegularTriple<RatFunc> family_triple_symbolic(FamilyId id, const Rational& k) {
  const auto [r, s, t] = family_rst<RatFunc>(id, var(), RatFunc(k));
  const RatFunc r2 = r * r, s2 = s * s, t2 = t * t;
  return {2, r, s, t, s2 - r2, t2 - r2, s2 + t2};
}

std::optional<std::array<RatFunc, 3>> closed_form_abc(FamilyId id) {
  switch (id) {
    case FamilyId::fam1: {
      const Poly u4p1 = desc({1, 0, 0, 0, 1});
      const Poly u4m1 = desc({1, 0, 0, 0, -1});
      const Poly u2m1 = desc({1, 0, -1});
      const Poly u2p1 = desc({1, 0, 1});
      const Poly u4 = desc({1, 0, 0, 0, 0});
      const Poly den_common = Poly(16) * pow(u4p1, 2) * u4;
      const RatFunc a = rf(pow(u4p1, 2)) / rf(pow(u4m1, 2));
      const RatFunc b = rf(desc({1, 0, -4, 0, -6, 0, -4, 0, 1}) * desc({1, 0, 4, 0, 10, 0, 4, 0, 1}) *
                           pow(u2m1, 2)) /
                        rf(den_common * pow(u2p1, 2));
      const RatFunc c = rf(desc({1, 0, 4, 0, -6, 0, 4, 0, 1}) * desc({1, 0, -4, 0, 10, 0, -4, 0, 1}) *
                           pow(u2p1, 2)) /
                        rf(den_common * pow(u2m1, 2));
      return std::array<RatFunc, 3>{a, b, c};
    }
    case FamilyId::fam2: {
      const Poly p = desc({1, 0, 6, 0, -3});   // a^4 + 6a^2 - 3
      const Poly q = desc({3, 0, -6, 0, -1});  // 3a^4 - 6a^2 - 1
      const Poly a2p1 = desc({1, 0, 1});
      const Poly a2m1 = desc({1, 0, -1});
      const Poly den = pow(q, 2) * pow(p, 2);
      const RatFunc a = rf(pow(p, 2) * desc({1, 1}) * desc({1, -1})) / rf(pow(q, 2));
      const RatFunc b = rf(Poly(-16) * desc({5, 0, -2, 0, 1}) * desc({1, 0, -2, 0, 5}) *
                           desc({1, 2, -1}) * desc({1, -2, -1}) * a2p1) /
                        rf(den);
      const Poly alpha2 = desc({1, 0, 0});
      const Poly f1 = pow(a2p1, 4) + Poly(16) * alpha2 * pow(a2m1, 2);
      const Poly f2 = pow(desc({1, -1}), 4) + Poly(4) * alpha2;
      const Poly f3 = pow(desc({1, 1}), 4) + Poly(4) * alpha2;
      const RatFunc c = rf(f1 * f2 * f3 * a2p1) / rf(den);
      return std::array<RatFunc, 3>{a, b, c};
    }
    case FamilyId::fam3a: {
      const Poly u4m9 = desc({1, 0, 0, 0, -9});
      const Poly u2 = desc({1, 0, 0});
      const RatFunc a = rf(Poly(-4) * desc({1, 0, -9}) * desc({1, 0, -1}) * u2) / rf(pow(u4m9, 2));
      const RatFunc b =
          rf(desc({1, 0, -2, 0, 9}) * pow(desc({1, 0, 3}), 2)) / rf(Poly(4) * pow(desc({1, 0, -3}), 2) * u2);
      const RatFunc c = rf(desc({1, 0, 0, 0, 46, 0, 0, 0, 81}) * desc({1, 0, 9}) * desc({1, 0, 1})) /
                        rf(Poly(4) * pow(u4m9, 2) * u2);
      return std::array<RatFunc, 3>{a, b, c};
    }
    case FamilyId::fam3b: {
      const Poly w = desc({1, 0, 2, 0, 9});  // u^4 + 2u^2 + 9
      const Poly u2m3 = desc({1, 0, -3});
      const Poly u4 = desc({1, 0, 0, 0, 0});
      const RatFunc a = rf(pow(w, 2) * desc({1, 0, -1}) * desc({1, 0, -9})) /
                        rf(Poly(64) * pow(u2m3, 2) * u4);
      const RatFunc b = rf(Poly(-64) * desc({1, 0, -2, 0, 9}) * u4) / rf(pow(w, 2) * pow(u2m3, 2));
      const RatFunc c = rf(desc({1, 0, 0, 0, 46, 0, 0, 0, 81}) * desc({1, 0, 9}) * desc({1, 0, 1}) *
                           pow(u2m3, 2)) /
                        rf(Poly(64) * pow(w, 2) * u4);
      return std::array<RatFunc, 3>{a, b, c};
    }
    default:
      return std::nullopt;
  }
}

namespace {

void check_admissible(FamilyId id, const Rational& u, const std::optional<Rational>& k) {
  auto excluded = [&](std::initializer_list<long> values) {
    for (long v : values) {
      if (u == Rational(v)) {
        throw ExcludedParameter(std::string(family_name(id)) + ": parameter " + u.str() +
                                " is excluded");
      }
    }
  };
  switch (id) {
    case FamilyId::fam1:
    case FamilyId::fam2:
      excluded({0, 1, -1});
      break;
    case FamilyId::fam2k: {
      if (!k || k->is_zero()) throw ExcludedParameter("fam2k: k must be given and nonzero");
      excluded({0});
      const Rational ku2 = *k * u * u;
      if (ku2 == Rational(1) || ku2 == Rational(-1))
        throw ExcludedParameter("fam2k: k u^2 = +-1 is excluded");
      break;
    }
    case FamilyId::fam3a:
    case FamilyId::fam3b:
      excluded({0, 1, -1, 3, -3});
      break;
    case FamilyId::fam4:
      excluded({0});
      break;
  }
}

}  // namespace

FamilyPoint family_triple(FamilyId id, const Rational& u, const std::optional<Rational>& k) {
  check_admissible(id, u, k);
  std::pair<Rational, Rational> rs;
  try {
    rs = family_rs<Rational>(id, u, k.value_or(Rational(1)));
  } catch (const ArithmeticError&) {
    throw ExcludedParameter(std::string(family_name(id)) + ": parameter hits a pole");
  }
  std::optional<RegularTriple<Rational>> triple;
  try {
    triple = construct_regular(rs.first, rs.second, 2);
  } catch (const InvalidInput& e) {
    throw DegenerateTriple(std::string(family_name(id)) + ": degenerate (r, s) at " + u.str() +
                           ": " + e.what());
  }
  if (!triple) throw DegenerateTriple("family (r, s) failed to give a triple");
  if (id == FamilyId::fam4) triple->t = fam4_t(u);
  const auto verdict = verify_tuple(std::vector<Rational>{triple->a, triple->b, triple->c}, 4);
  if (!verdict.ok()) {
    throw DegenerateTriple(std::string(family_name(id)) + ": triple at " + u.str() +
                           " has a vanishing witness");
  }
  return {id, u, id == FamilyId::fam2k ? k : std::nullopt, *triple};
}

Poly fam1_sign_factor() { return desc({1, 0, -4, 0, -6, 0, -4, 0, 1}); }

SignReport positivity_classify(const Rational& u) {
  const FamilyPoint fp = family_triple(FamilyId::fam1, u);
  SignReport rep;
  rep.a = fp.triple.a.sign();
  rep.b = fp.triple.b.sign();
  rep.c = fp.triple.c.sign();
  rep.sign_factor = fam1_sign_factor()(u).sign();
  const Rational mag = abs(u);
  rep.inside_decimal_interval = mag > Rational(Integer(4354), Integer(10000)) &&
                                mag < Rational(Integer(22967), Integer(10000));
  return rep;
}

int fam3_t_index(FamilyId id) {
  if (id != FamilyId::fam3a && id != FamilyId::fam3b) throw InvalidInput("fam3 families only");
  const RatFunc t = family_rst<RatFunc>(id, var()).t;
  const auto list = fam3_svalues(var());
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == t) return static_cast<int>(i);
  }
  return -1;
}

ProofReport symbolic_verify(FamilyId id, const Rational& k) {
  ProofReport rep;
  rep.subject = std::string(family_name(id));
  if (id == FamilyId::fam2k) rep.subject += " (k = " + k.str() + ")";
  auto add = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };

  const RegularTriple<RatFunc> tr = family_triple_symbolic(id, k);
  const RatFunc r2 = tr.r * tr.r, s2 = tr.s * tr.s, t2 = tr.t * tr.t;
  add("(s^2 r^2 - 1)/(s^2 - r^2) = t^2", (s2 * r2 - RatFunc(1)) / (s2 - r2) == t2);
  add("a = s^2 - r^2", tr.a == s2 - r2);
  add("b = t^2 - r^2 = (r^4 - 1)/a", tr.b == t2 - r2 && tr.b == (r2 * r2 - RatFunc(1)) / tr.a);
  add("c = s^2 + t^2 = (s^4 - 1)/a", tr.c == s2 + t2 && tr.c == (s2 * s2 - RatFunc(1)) / tr.a);
  add("c = a + b + 2 r^2", tr.c == tr.a + tr.b + RatFunc(2) * r2);
  add("ab + 1 = r^4", tr.a * tr.b + RatFunc(1) == r2 * r2);
  add("ac + 1 = s^4", tr.a * tr.c + RatFunc(1) == s2 * s2);
  add("bc + 1 = t^4", tr.b * tr.c + RatFunc(1) == t2 * t2);
  add("a^2 + b^2 + c^2 - 2ab - 2bc - 2ca - 4 = 0", is_zero(regularity_defect(tr.a, tr.b, tr.c)));
  add("a, b, c distinct and nonzero", !is_zero(tr.a) && !is_zero(tr.b) && !is_zero(tr.c) &&
                                          tr.a != tr.b && tr.b != tr.c && tr.a != tr.c);

  if (auto closed = closed_form_abc(id)) {
    add("a matches the closed form", (*closed)[0] == tr.a);
    add("b matches the closed form", (*closed)[1] == tr.b);
    add("c matches the closed form", (*closed)[2] == tr.c);
  }

  const RatFunc& u = var();
  switch (id) {
    case FamilyId::fam1: {
      const Curve<RatFunc> curve = fam1_curve(u);
      const RatFunc u2p1 = u * u + RatFunc(1);
      const RatFunc um1 = u - RatFunc(1);
      const Point<RatFunc> p(RatFunc(2) * u2p1 * um1 * um1, RatFunc(4) * u2p1 * u2p1 * um1 * um1);
      add("P = (2(u^2+1)(u-1)^2, 4(u^2+1)^2(u-1)^2) on y^2 = x^3 + 4(u^4-1)^2 x",
          curve.on_curve(p));
      // the map is only fixed up to r -> -r; P and P + (0,0) give the trivial r = +-1
      const RatFunc r_p = fam1_point_to_rs(u, p).first;
      const RatFunc r_pt = fam1_point_to_rs(u, curve.add(p, Point<RatFunc>(RatFunc(0), RatFunc(0)))).first;
      add("P and P + (0,0) map to r = 1 and r = -1",
          (r_p == RatFunc(1) || r_p == RatFunc(-1)) && r_pt == -r_p);
      const Point<RatFunc> two_p = curve.dbl(p);
      const Point<RatFunc> expected(RatFunc(4) * u * u,
                                    RatFunc(-4) * u * (u * u * u * u + RatFunc(1)));
      add("2P = (4u^2, -4u(u^4+1))", two_p == expected);
      const auto rs = fam1_point_to_rs(u, two_p);
      add("2P maps to the family (r, s)", rs.first == tr.r && rs.second == tr.s);
      add("(0,0) has order 2", curve.torsion_order(Point<RatFunc>(RatFunc(0), RatFunc(0))) == 2);
      add("u^8-4u^6-6u^4-4u^2+1 = (u^4+2u^3+2u+1)(u^4-2u^3-2u+1)",
          fam1_sign_factor() == desc({1, 2, 0, 2, 1}) * desc({1, -2, 0, -2, 1}));
      break;
    }
    case FamilyId::fam2: {
      const Curve<RatFunc> curve = fam2_curve(u);
      const RatFunc a2 = u * u;
      add("P = (4a^2, 4a^2(a^2+1)) on y^2 = x^3 + 4a^2(a^2-1)^2 x",
          curve.on_curve(Point<RatFunc>(RatFunc(4) * a2, RatFunc(4) * a2 * (a2 + RatFunc(1)))));
      add("s = alpha r", tr.s == u * tr.r);
      break;
    }
    case FamilyId::fam2k: {
      const RatFunc kk(k);
      const RatFunc ku2 = kk * u * u;
      const RatFunc direct_r =
          (pow(ku2 + RatFunc(1), 4) - RatFunc(12) * kk * kk * pow(u, 4)) /
          (pow(ku2 - RatFunc(1), 4) - RatFunc(12) * kk * kk * pow(u, 4));
      add("fam2k r written in k, u equals fam2 r(alpha)", direct_r == tr.r);
      add("s = (ku^2+1)/(ku^2-1) r", tr.s == (ku2 + RatFunc(1)) / (ku2 - RatFunc(1)) * tr.r);
      const Curve<RatFunc> curve = fam2k_curve(kk, u);
      const Point<RatFunc> p(RatFunc(4) * kk * kk * u * u,
                             RatFunc(4) * kk * kk * u * (kk * kk * pow(u, 4) + RatFunc(1)));
      add("P = (4k^2u^2, 4k^2u(k^2u^4+1)) on y^2 = x^3 + 4k^2(k^2u^4-1)^2 x", curve.on_curve(p));
      break;
    }
    case FamilyId::fam3a:
    case FamilyId::fam3b: {
      const RatFunc u2 = u * u;
      const RatFunc p = (RatFunc(3) + u2) / (RatFunc(3) - u2);
      add("p^2 - 3r^2 = 1 for p = (3+u^2)/(3-u^2)", p * p - RatFunc(3) * r2 == RatFunc(1));
      add("u^4+2u^2+9 = (u^2+2u+3)(u^2-2u+3)",
          desc({1, 0, 2, 0, 9}) == desc({1, 2, 3}) * desc({1, -2, 3}));
      add("u^8+46u^4+81 = (u^4+2u^3+2u^2-6u+9)(u^4-2u^3+2u^2+6u+9)",
          desc({1, 0, 0, 0, 46, 0, 0, 0, 81}) == desc({1, 2, 2, -6, 9}) * desc({1, -2, 2, 6, 9}));
      add("Pell point (r^2+1, pr(1-r^2)) on E_r", er_curve(tr.r).on_curve(pell_point(tr.r, p)));
      const auto translates = pell_torsion_svalues(u);
      bool s_found = false;
      for (const RatFunc& s : translates) s_found = s_found || s == tr.s;
      add("s arises from a torsion translate of the Pell point", s_found);
      add("t is one of the eight listed expressions", fam3_t_index(id) >= 0);
      if (id == FamilyId::fam3b) {
        const RatFunc other = family_rst<RatFunc>(FamilyId::fam3a, u).s;
        add("s is the reciprocal of fam3a's s", tr.s == other.inverse());
        add("u^4 - 2u^2 + 9 = (u^2-1)^2 + 8 (so b < 0)",
            desc({1, 0, -2, 0, 9}) == pow(desc({1, 0, -1}), 2) + Poly(8));
      }
      break;
    }
    case FamilyId::fam4:
      add("t = (u-1)(3u+1)/(2(3u^2+1))", tr.t == fam4_t(u));
      add("c is a square in Q(u)", ratfunc_kth_root(tr.c, 2).has_value());
      break;
  }
  return rep;
}

}  // namespace hpdt
