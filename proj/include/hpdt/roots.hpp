#pragma once

#include <optional>

#include "hpdt/gaussian.hpp"
#include "hpdt/rational.hpp"

namespace hpdt {

struct KthRoot {
  Integer root;  ///< floor(n^(1/k))
  bool exact = false;
};

/// floor(n^(1/k)) and whether it is exact. n >= 0, k >= 1.
KthRoot int_kth_root(const Integer& n, unsigned k);

/// Rational t with t^k = q, nonnegative for even k; nullopt if none.
std::optional<Rational> rational_kth_root(const Rational& q, unsigned k);

/// Some w in Q(i) with w^k = z. Among the unit rotations that qualify the
/// canonical one is returned: maximal real part, ties to im >= 0.
std::optional<GaussianRational> gaussian_kth_root(const GaussianRational& z, unsigned k);

inline std::optional<Rational> kth_root(const Rational& q, unsigned k) {
  return rational_kth_root(q, k);
}
inline std::optional<GaussianRational> kth_root(const GaussianRational& z, unsigned k) {
  return gaussian_kth_root(z, k);
}

/// Square-free part of |n| (n != 0), by trial division. Intended for the
/// small integers produced by the searches.
Integer squarefree_part(const Integer& n);

}  // namespace hpdt
