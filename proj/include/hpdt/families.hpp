#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpdt/catalog.hpp"
#include "hpdt/triples.hpp"

namespace hpdt {

/// The explicit one-parameter families of regular quartic triples.
enum class FamilyId { fam1, fam2, fam2k, fam3a, fam3b, fam4 };

inline constexpr std::array<FamilyId, 6> kAllFamilies = {
    FamilyId::fam1, FamilyId::fam2, FamilyId::fam2k, FamilyId::fam3a, FamilyId::fam3b,
    FamilyId::fam4};

std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// Parameter outside the family's admissible set.
class ExcludedParameter : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

template <ExactField F>
struct FamilyRST {
  F r, s, t;
};

/// (r, s) of a family at parameter u (alpha for fam2). fam2k reads k and
/// uses alpha = (ku^2+1)/(ku^2-1).
template <ExactField F>
std::pair<F, F> family_rs(FamilyId id, const F& u, const F& k = F(1)) {
  const F u2 = u * u;
  switch (id) {
    case FamilyId::fam1: {
      const F n = u2 * u2 + F(1);
      return {n / (F(2) * u * (u2 + F(1))), n / (F(2) * u * (u2 - F(1)))};
    }
    case FamilyId::fam2k: {
      const F alpha = (k * u2 + F(1)) / (k * u2 - F(1));
      return family_rs(FamilyId::fam2, alpha);
    }
    case FamilyId::fam2: {
      const F a2 = u2;
      const F r = -(a2 * a2 + F(6) * a2 - F(3)) / (F(3) * a2 * a2 - F(6) * a2 - F(1));
      return {r, u * r};
    }
    case FamilyId::fam3a:
      return {F(2) * u / (F(3) - u2), F(8) * u2 / (u2 * u2 - F(9))};
    case FamilyId::fam3b:
      return {F(2) * u / (F(3) - u2), (u2 * u2 - F(9)) / (F(8) * u2)};
    case FamilyId::fam4: {
      const F r = (F(9) * u2 * u2 + F(22) * u2 + F(1)) /
                  (F(2) * (F(9) * u2 * u2 + F(6) * u2 * u + F(2) * u2 - F(2) * u + F(1)));
      return {r, (u + F(1)) * (F(3) * u - F(1)) / (F(4) * u)};
    }
  }
  throw InvalidInput("unknown family");
}

/// Closed-form t for fam4: (u-1)(3u+1) / (2(3u^2+1)).
template <ExactField F>
F fam4_t(const F& u) {
  return (u - F(1)) * (F(3) * u + F(1)) / (F(2) * (F(3) * u * u + F(1)));
}

/// (r, s, t) with (s^2 r^2 - 1)/(s^2 - r^2) = t^2. t is the closed form for
/// fam4 and the extracted square root otherwise.
template <ExactField F>
FamilyRST<F> family_rst(FamilyId id, const F& u, const F& k = F(1)) {
  auto [r, s] = family_rs(id, u, k);
  const F q = (s * s * r * r - F(1)) / (s * s - r * r);
  if (id == FamilyId::fam4) {
    F t = fam4_t(u);
    if (t * t != q) throw DegenerateTriple("fam4: closed-form t does not satisfy the curve");
    return {r, s, t};
  }
  auto t = kth_root(q, 2);
  if (!t) throw DegenerateTriple("family (r, s) does not give a square t^2");
  return {r, s, *t};
}

/// The regular triple of a family as exact rational functions of u.
RegularTriple<RatFunc> family_triple_symbolic(FamilyId id, const Rational& k = Rational(1));

/// Closed forms (a, b, c) in u for fam1, fam2, fam3a, fam3b.
std::optional<std::array<RatFunc, 3>> closed_form_abc(FamilyId id);

struct FamilyPoint {
  FamilyId family;
  Rational param;
  std::optional<Rational> k;  ///< fam2k only
  RegularTriple<Rational> triple;
};

/// Throws ExcludedParameter for excluded parameters and DegenerateTriple
/// for sporadic collisions; the returned triple passes verify_tuple at 4.
FamilyPoint family_triple(FamilyId id, const Rational& u,
                          const std::optional<Rational>& k = std::nullopt);

struct ProofCheck {
  std::string name;
  bool passed = false;
};

struct ProofReport {
  std::string subject;
  std::vector<ProofCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
};

/// Establishes the family identities as exact equalities in Q(u).
ProofReport symbolic_verify(FamilyId id, const Rational& k = Rational(2));

/// u^8 - 4u^6 - 6u^4 - 4u^2 + 1, the factor deciding the sign of fam1's b.
Poly fam1_sign_factor();

struct SignReport {
  int a = 0, b = 0, c = 0;
  int sign_factor = 0;
  /// The decimal interval (0.4354, 2.2967) in |u|, used only as a cross-check.
  bool inside_decimal_interval = false;
};

/// Exact signs of fam1's (a, b, c) at u.
SignReport positivity_classify(const Rational& u);

/// The eight s candidates +-(u^4-9)/(8u^2), +-8u^2/(u^4-9),
/// +-2u(u^2-3)/(u^4+2u^2+9), +-(u^4+2u^2+9)/(2u(u^2-3)).
template <ExactField F>
std::array<F, 8> fam3_svalues(const F& u) {
  if (is_zero(u)) throw InvalidInput("fam3_svalues: u = 0");
  const F u2 = u * u;
  const F e1 = (u2 * u2 - F(9)) / (F(8) * u2);
  const F e2 = F(1) / e1;
  const F e3 = F(2) * u * (u2 - F(3)) / (u2 * u2 + F(2) * u2 + F(9));
  const F e4 = F(1) / e3;
  return {e1, -e1, e2, -e2, e3, -e3, e4, -e4};
}

/// s from er_to_alpha_s(P + T) for the Pell point P at r = 2u/(3-u^2),
/// p = (3+u^2)/(3-u^2), in the order of er_torsion_points.
template <ExactField F>
std::array<F, 8> pell_torsion_svalues(const F& u) {
  const F r = F(2) * u / (F(3) - u * u);
  const F p = (F(3) + u * u) / (F(3) - u * u);
  const Curve<F> curve = er_curve(r);
  const Point<F> base = pell_point(r, p);
  const auto torsion = er_torsion_points(r);
  std::array<F, 8> out;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    out[i] = er_to_alpha_s(r, curve.add(base, torsion[i])).s;
  }
  return out;
}

/// Index into fam3_svalues matching the extracted t of fam3a / fam3b.
int fam3_t_index(FamilyId id);

}  // namespace hpdt
