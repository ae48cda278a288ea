#include "hpdt/roots.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace hpdt {

KthRoot int_kth_root(const Integer& n, unsigned k) {
  if (n < 0) throw ArithmeticError("int_kth_root of a negative integer");
  if (k == 0) throw ArithmeticError("int_kth_root with k = 0");
  KthRoot out;
  out.exact = mpz_root(out.root.get_mpz_t(), n.get_mpz_t(), k) != 0;
  return out;
}

std::optional<Rational> rational_kth_root(const Rational& q, unsigned k) {
  if (k == 0) throw ArithmeticError("rational_kth_root with k = 0");
  if (q.is_zero()) return Rational(0);
  const bool negative = q.sign() < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  // a reduced fraction is a k-th power iff numerator and denominator are
  const KthRoot num = int_kth_root(abs(q.numerator()), k);
  if (!num.exact) return std::nullopt;
  const KthRoot den = int_kth_root(q.denominator(), k);
  if (!den.exact) return std::nullopt;
  Rational t(num.root, den.root);
  return negative ? -t : t;
}

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  // trial division is fine up to ~1e12; larger denominators only try 1 and n
  if (n > Integer("1000000000000")) return {Integer(1), n};
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer round_to_integer(long double v) { return Integer(std::to_string(std::llroundl(v))); }

bool canonical_before(const GaussianRational& a, const GaussianRational& b) {
  if (a.re() != b.re()) return a.re() > b.re();
  return a.im().sign() >= 0 && b.im().sign() < 0;
}

}  // namespace

std::optional<GaussianRational> gaussian_kth_root(const GaussianRational& z, unsigned k) {
  if (k == 0) throw ArithmeticError("gaussian_kth_root with k = 0");
  if (z.is_zero()) return GaussianRational(0);

  // Denominator of any root divides the common denominator of z.
  const Integer den = lcm(z.re().denominator(), z.im().denominator());
  const long double re = z.re().to_double();
  const long double im = z.im().to_double();
  const long double modulus = std::pow(std::hypot(re, im), 1.0L / k);
  const long double theta = std::atan2(im, re);

  std::optional<GaussianRational> best;
  for (const Integer& e : divisors(den)) {
    const long double scale = modulus * e.get_d();
    if (scale > 9.0e18L) continue;
    for (unsigned j = 0; j < k; ++j) {
      const long double phi = (theta + 2.0L * std::numbers::pi_v<long double> * j) / k;
      GaussianRational w(Rational(round_to_integer(scale * std::cos(phi)), e),
                         Rational(round_to_integer(scale * std::sin(phi)), e));
      if (pow(w, k) != z) continue;
      if (!best || canonical_before(w, *best)) best = w;
      // the other roots in Q(i) differ by a unit; try those rotations too
      GaussianRational rot = w;
      for (int u = 0; u < 3; ++u) {
        rot *= GaussianRational::i();
        if (pow(rot, k) == z && canonical_before(rot, *best)) best = rot;
      }
    }
    if (best) break;
  }
  return best;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw ArithmeticError("squarefree_part of zero");
  Integer m = abs(n);
  Integer out = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    int mult = 0;
    while (m % p == 0) {
      m /= p;
      ++mult;
    }
    if (mult % 2) out *= p;
  }
  return out * m;
}

}  // namespace hpdt
