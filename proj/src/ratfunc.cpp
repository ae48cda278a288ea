#include "hpdt/ratfunc.hpp"

namespace hpdt {

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  const Rational lead = den.leading();
  if (lead != Rational(1)) {
    const Poly scale(lead.inverse());
    num *= scale;
    den *= scale;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

Rational RatFunc::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (d.is_zero()) throw ArithmeticError("rational function evaluated at a pole");
  return num_(at) / d;
}

std::string RatFunc::str(std::string_view var) const {
  if (den_ == Poly(1)) return num_.str(var);
  auto wrap = [&](const Poly& p) {
    const std::string s = p.str(var);
    const bool single = p.degree() <= 0 ||
                        (p.coeffs().size() - p.valuation() == 1 && p.leading() == Rational(1));
    return single ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) return *this = RatFunc(num_ - o.num_, den_);
  return *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  // cross-cancel first to keep the gcd inputs small
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  const Poly n1 = divmod(num_, g1).first;
  const Poly d2 = divmod(o.den_, g1).first;
  const Poly n2 = divmod(o.num_, g2).first;
  const Poly d1 = divmod(den_, g2).first;
  Poly num = n1 * n2;
  Poly den = d1 * d2;
  const Rational lead = den.leading();
  if (lead != Rational(1)) {
    const Poly scale(lead.inverse());
    num *= scale;
    den *= scale;
  }
  return *this = RatFunc(std::move(num), std::move(den), Canonical{});
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc pow(const RatFunc& f, long e) {
  if (e < 0) return pow(f.inverse(), -e);
  // canonical form is preserved by powers of coprime parts
  const Poly n = pow(f.num(), static_cast<unsigned>(e));
  const Poly d = pow(f.den(), static_cast<unsigned>(e));
  return RatFunc(n, d);
}

RatFunc substitute(const Poly& g, const RatFunc& f) {
  if (g.is_zero()) return RatFunc();
  // homogenize: g(n/d) = sum c_i n^i d^(D-i) / d^D
  const std::size_t deg = static_cast<std::size_t>(g.degree());
  std::vector<Poly> npow(deg + 1), dpow(deg + 1);
  npow[0] = Poly(1);
  dpow[0] = Poly(1);
  for (std::size_t i = 1; i <= deg; ++i) {
    npow[i] = npow[i - 1] * f.num();
    dpow[i] = dpow[i - 1] * f.den();
  }
  Poly acc;
  for (std::size_t i = 0; i <= deg; ++i) {
    if (g.coeffs()[i].is_zero()) continue;
    acc += Poly(g.coeffs()[i]) * npow[i] * dpow[deg - i];
  }
  return RatFunc(acc, dpow[deg]);
}

RatFunc substitute(const RatFunc& g, const RatFunc& f) {
  return substitute(g.num(), f) / substitute(g.den(), f);
}

std::optional<RatFunc> ratfunc_kth_root(const RatFunc& f, unsigned k) {
  if (f.is_zero()) return RatFunc();
  // canonical + monic denominator: f = h^k forces num = A^k, den = B^k
  auto n = poly_kth_root(f.num(), k);
  if (!n) return std::nullopt;
  auto d = poly_kth_root(f.den(), k);
  if (!d) return std::nullopt;
  return RatFunc(*n, *d);
}

}  // namespace hpdt
