#include "hpdt/poly.hpp"

#include <algorithm>

#include "hpdt/roots.hpp"

namespace hpdt {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const Integer& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (Integer& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

/// p = ints / den with den the lcm of coefficient denominators.
std::pair<IntPoly, Integer> clear_denominators(const std::vector<Rational>& c) {
  Integer den = 1;
  for (const Rational& q : c) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.raw().get_den_mpz_t());
  }
  IntPoly ints(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    ints[i] = c[i].numerator() * (den / c[i].denominator());
  }
  return {std::move(ints), den};
}

IntPoly convolve(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

// Pseudo-remainder up to a nonzero constant factor.
IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const Integer lr = r.back();
    for (Integer& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[j + shift].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    if (r.size() > 8) make_primitive(r);
  }
  return r;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, std::size_t n) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw ArithmeticError("leading coefficient of zero polynomial");
  return c_.back();
}

std::size_t Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return 0;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const Rational inv = leading().inverse();
  std::vector<Rational> v = c_;
  for (Rational& q : v) q *= inv;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> v = c_;
  for (Rational& q : v) q = -q;
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto [ia, da] = clear_denominators(a.c_);
  auto [ib, db] = clear_denominators(b.c_);
  IntPoly prod = convolve(ia, ib);
  const Integer den = da * db;
  std::vector<Rational> v;
  v.reserve(prod.size());
  for (const Integer& c : prod) v.emplace_back(c, den);
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

std::string Poly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t n = c_.size(); n-- > 0;) {
    const Rational& c = c_[n];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    const Rational mag = abs(c);
    std::string mono;
    if (n == 1) mono = std::string(var);
    else if (n > 1) mono = std::string(var) + "^" + std::to_string(n);
    if (mono.empty()) out += mag.str();
    else if (mag == Rational(1)) out += mono;
    else out += mag.str() + "*" + mono;
  }
  return out;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result(1);
  Poly base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv = b.leading().inverse();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Rational f = rem[i] * inv;
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = clear_denominators(a.coeffs()).first;
  IntPoly y = clear_denominators(b.coeffs()).first;
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return Poly(1);
    IntPoly r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> v;
  v.reserve(x.size());
  for (const Integer& c : x) v.emplace_back(c);
  return Poly(std::move(v)).monic();
}

std::optional<Poly> poly_kth_root(const Poly& p, unsigned k) {
  if (k == 0) throw ArithmeticError("poly_kth_root with k = 0");
  if (p.is_zero()) return Poly();
  const std::size_t v = p.valuation();
  const std::size_t deg = static_cast<std::size_t>(p.degree());
  if (v % k != 0 || (deg - v) % k != 0) return std::nullopt;
  const auto c0root = rational_kth_root(p.coeffs()[v], k);
  if (!c0root) return std::nullopt;

  // p = c0 x^v (1 + f1 x + ...); g = (1 + f x + ...)^(1/k) as a power series
  const std::size_t n = (deg - v) / k;
  const Rational c0inv = p.coeffs()[v].inverse();
  std::vector<Rational> f(deg - v + 1);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = p.coeffs()[v + i] * c0inv;
  const Rational alpha(Integer(1), Integer(k));
  std::vector<Rational> g(n + 1);
  g[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t j = 1; j <= m && j < f.size(); ++j) {
      if (f[j].is_zero()) continue;
      acc += (alpha * Rational(static_cast<long>(j)) - Rational(static_cast<long>(m - j))) * f[j] *
             g[m - j];
    }
    g[m] = acc / Rational(static_cast<long>(m));
  }
  std::vector<Rational> q(v / k + n + 1);
  for (std::size_t i = 0; i <= n; ++i) q[v / k + i] = g[i] * *c0root;
  Poly root(std::move(q));
  if (k % 2 == 0 && root.leading().sign() < 0) root = -root;
  if (pow(root, k) != p) return std::nullopt;
  return root;
}

Poly reversal(const Poly& p, unsigned degree_hint) {
  if (p.degree() > static_cast<int>(degree_hint))
    throw ArithmeticError("reversal: degree hint below polynomial degree");
  std::vector<Rational> v(degree_hint + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[degree_hint - i] = p.coeffs()[i];
  return Poly(std::move(v));
}

std::optional<Poly> symmetric_in_u(const Poly& g, unsigned half_span) {
  if (g.is_zero()) return Poly();
  if (g.degree() > static_cast<int>(2 * half_span)) return std::nullopt;
  for (std::size_t j = 0; j <= half_span; ++j) {
    if (g.coeff(half_span + j) != g.coeff(half_span - j)) return std::nullopt;
  }
  // peel off c * a^(m-d) (a^2+1)^d from the top; each step keeps symmetry
  const Poly a2p1({Rational(1), Rational(0), Rational(1)});
  Poly rest = g;
  std::vector<Rational> h(half_span + 1);
  while (!rest.is_zero()) {
    const int d = rest.degree() - static_cast<int>(half_span);
    if (d < 0) return std::nullopt;
    const Rational c = rest.leading();
    h[static_cast<std::size_t>(d)] = c;
    rest -= Poly::monomial(c, half_span - static_cast<unsigned>(d)) * pow(a2p1, static_cast<unsigned>(d));
  }
  return Poly(std::move(h));
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Poly(*it);
  return acc;
}

}  // namespace hpdt
