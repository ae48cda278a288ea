#include "hpdt/triples.hpp"

#include <algorithm>
#include <array>

namespace hpdt {

std::optional<RegularTriple<Rational>> from_taxicab(const Rational& x, const Rational& y,
                                                    const Rational& z, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (x.is_zero() || y.is_zero() || z.is_zero()) throw InvalidInput("x, y, z must be nonzero");
  if (pow(x, k) + pow(y, k) != pow(z, k) + Rational(1)) {
    throw InvalidInput("x^k + y^k != z^k + 1");
  }
  auto r = rational_kth_root(x * y / z, 2);
  auto s = rational_kth_root(x * z / y, 2);
  auto t = rational_kth_root(y * z / x, 2);
  if (!r || !s || !t) return std::nullopt;
  // xyz > 0 here, so sgn s = sgn x, sgn t = sgn y also gives st = z
  if (x.sign() < 0) s = -*s;
  if (y.sign() < 0) t = -*t;
  const Rational rk = pow(*r, k), sk = pow(*s, k), tk = pow(*t, k);
  RegularTriple<Rational> out{k, *r, *s, *t, sk - rk, tk - rk, sk + tk};
  try {
    require_nondegenerate(out.a, out.b, out.c);
  } catch (const DegenerateTriple&) {
    return std::nullopt;
  }
  return out;
}

std::vector<AffineCubic> dehomogenize(const Integer& X, const Integer& Y, const Integer& Z,
                                      const Integer& W, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (X == 0 || Y == 0 || Z == 0 || W == 0) throw InvalidInput("entries must be nonzero");
  auto power = [k](const Integer& v) { return ipow(v, static_cast<unsigned long>(k)); };
  if (power(X) + power(Y) != power(Z) + power(W)) throw InvalidInput("X^k + Y^k != Z^k + W^k");
  const bool trivial = (X == Z && Y == W) || (X == W && Y == Z);
  if (trivial) throw InvalidInput("trivial identity {X,Y} = {Z,W}");

  std::array<Integer, 4> v{X, Y, Z, W};
  std::sort(v.begin(), v.end());
  std::vector<AffineCubic> out;
  do {
    for (int signs = 0; signs < 16; ++signs) {
      std::array<Integer, 4> e;
      for (int i = 0; i < 4; ++i) e[i] = (signs >> i & 1) ? Integer(-v[i]) : v[i];
      if (power(e[0]) + power(e[1]) != power(e[2]) + power(e[3])) continue;
      out.push_back({Rational(e[0], e[3]), Rational(e[1], e[3]), Rational(e[2], e[3])});
    }
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hpdt
