#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hpdt/field.hpp"
#include "hpdt/gaussian.hpp"
#include "hpdt/ratfunc.hpp"
#include "hpdt/roots.hpp"

namespace hpdt {

/// Duplicate or zero elements, bad exponents, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction produced repeated or zero elements.
class DegenerateTriple : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Elements with every a_i a_j + 1 = witnesses[i,j]^power.
template <class T>
struct PowerTuple {
  std::vector<T> elements;
  int power = 0;
  std::map<IndexPair, T> witnesses;
};

template <class T>
struct OffendingPair {
  IndexPair pair;
  T value;  ///< a_i a_j + 1, not a power (or zero)
};

template <class T>
struct TupleVerdict {
  std::optional<PowerTuple<T>> tuple;
  std::vector<OffendingPair<T>> failures;
  bool ok() const { return tuple.has_value(); }
};

/// Checks every pair. Pairs with a_i a_j + 1 = 0 fail unless
/// allow_zero_witness is set. Throws InvalidInput on duplicate/zero
/// elements or power < 2.
template <ExactField T>
TupleVerdict<T> verify_tuple(const std::vector<T>& elements, int power,
                             bool allow_zero_witness = false) {
  if (power < 2) throw InvalidInput("power must be at least 2");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (is_zero(elements[i])) throw InvalidInput("tuple element is zero");
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i] == elements[j]) throw InvalidInput("tuple elements are not distinct");
    }
  }
  TupleVerdict<T> verdict;
  PowerTuple<T> tuple{elements, power, {}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      T value = elements[i] * elements[j] + T(1);
      if (is_zero(value) && !allow_zero_witness) {
        verdict.failures.push_back({{i, j}, value});
        continue;
      }
      auto root = kth_root(value, static_cast<unsigned>(power));
      if (!root) {
        verdict.failures.push_back({{i, j}, std::move(value)});
        continue;
      }
      tuple.witnesses.emplace(IndexPair{i, j}, std::move(*root));
    }
  }
  if (verdict.failures.empty()) verdict.tuple = std::move(tuple);
  return verdict;
}

/// Regular 2k-th power triple: a = s^k - r^k, b = t^k - r^k, c = s^k + t^k.
template <ExactField F>
struct RegularTriple {
  int half_power = 0;
  F r, s, t;
  F a, b, c;
  int power() const { return 2 * half_power; }
};

/// a^2 + b^2 + c^2 - 2ab - 2bc - 2ca - 4
template <ExactField F>
F regularity_defect(const F& a, const F& b, const F& c) {
  return a * a + b * b + c * c - F(2) * a * b - F(2) * b * c - F(2) * c * a - F(4);
}

template <ExactField F>
F field_pow(const F& x, int e) {
  F out(1);
  for (int i = 0; i < e; ++i) out = out * x;
  return out;
}

/// Throws DegenerateTriple unless a, b, c are distinct and nonzero.
template <ExactField F>
void require_nondegenerate(const F& a, const F& b, const F& c) {
  if (is_zero(a) || is_zero(b) || is_zero(c)) throw DegenerateTriple("triple has a zero element");
  if (a == b || b == c || a == c) throw DegenerateTriple("triple elements are not distinct");
}

/// Regular triple from (r, s) when (r^k s^k - 1)/(s^k - r^k) is a k-th
/// power; nullopt otherwise. Throws InvalidInput when r or s is in
/// {0, +-1} or s = +-r, DegenerateTriple for sporadic collisions and t = 0.
template <ExactField F>
std::optional<RegularTriple<F>> construct_regular(const F& r, const F& s, int k) {
  if (k < 1) throw InvalidInput("half power must be at least 1");
  for (const F* v : {&r, &s}) {
    if (is_zero(*v) || *v == F(1) || *v == F(-1)) throw InvalidInput("r, s must avoid 0 and +-1");
  }
  if (s == r || s == -r) throw InvalidInput("s must differ from +-r");
  const F rk = field_pow(r, k);
  const F sk = field_pow(s, k);
  if (sk == rk) throw InvalidInput("s^k = r^k");
  const F target = (rk * sk - F(1)) / (sk - rk);
  auto t = kth_root(target, static_cast<unsigned>(k));
  if (!t) return std::nullopt;
  // r^k s^k = 1: bc + 1 = 0, a zero witness
  if (is_zero(*t)) throw DegenerateTriple("t = 0 (r^k s^k = 1)");
  const F tk = field_pow(*t, k);
  RegularTriple<F> out{k, r, s, *t, sk - rk, tk - rk, sk + tk};
  require_nondegenerate(out.a, out.b, out.c);
  return out;
}

/// {-1/r^(k/2), (r^k - 1)/r^(k/2), r^(k/2)} for even k, verified as a
/// k-th power triple (one witness is 0 by construction).
template <ExactField F>
PowerTuple<F> bst_family(const F& r, int k) {
  if (k < 2 || k % 2 != 0) throw InvalidInput("bst_family needs even k >= 2");
  if (is_zero(r) || r == F(1) || r == F(-1)) throw InvalidInput("bst_family: degenerate r");
  const F h = field_pow(r, k / 2);
  std::vector<F> elems{-(F(1) / h), (h * h - F(1)) / h, h};
  auto verdict = verify_tuple(elems, k, /*allow_zero_witness=*/true);
  if (!verdict.ok()) throw DegenerateTriple("bst_family: verification failed");
  return std::move(*verdict.tuple);
}

struct AffineCubic {
  Rational x, y, z;
  friend auto operator<=>(const AffineCubic&, const AffineCubic&) = default;
};

/// Regular 2k-th power triple from x^k + y^k = z^k + 1 with xy/z, xz/y, yz/x
/// rational squares: x = rs, y = rt, z = st with r > 0. nullopt when a
/// root is missing or the triple degenerates. Throws InvalidInput when the
/// sum identity fails or an entry is zero.
std::optional<RegularTriple<Rational>> from_taxicab(const Rational& x, const Rational& y,
                                                    const Rational& z, int k);

/// All (x, y, z) with x^k + y^k = z^k + 1 obtained from X^k+Y^k = Z^k+W^k by
/// reordering, sign changes and dividing by the entry moved to the "1" slot.
std::vector<AffineCubic> dehomogenize(const Integer& X, const Integer& Y, const Integer& Z,
                                      const Integer& W, int k);

/// Regular-triple invariants: a = s^k - r^k, b = t^k - r^k, c = s^k + t^k,
/// c = a + b + 2r^k, the three power conditions and zero defect.
template <ExactField F>
bool check_regular(const RegularTriple<F>& t) {
  const int k = t.half_power;
  const F rk = field_pow(t.r, k), sk = field_pow(t.s, k), tk = field_pow(t.t, k);
  return t.a == sk - rk && t.b == tk - rk && t.c == sk + tk && t.c == t.a + t.b + F(2) * rk &&
         t.a * t.b + F(1) == rk * rk && t.a * t.c + F(1) == sk * sk &&
         t.b * t.c + F(1) == tk * tk && is_zero(regularity_defect(t.a, t.b, t.c));
}

}  // namespace hpdt
