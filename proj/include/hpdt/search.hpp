#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hpdt/families.hpp"
#include "hpdt/triples.hpp"

namespace hpdt {

struct SearchOptions {
  unsigned threads = 1;
  /// Resume from / periodically write this file when set.
  std::optional<std::filesystem::path> checkpoint;
  /// Rows (outer-loop values or sum segments) between checkpoint writes.
  unsigned checkpoint_every = 256;
};

/// Integers 1 < r < s with (s^2 r^2 - 1)/(s^2 - r^2) = t^2 for rational t.
struct PairHit {
  std::uint64_t r = 0, s = 0;
  Rational t;             ///< t >= 0
  bool integral = false;  ///< t (and so the triple) integral
  friend bool operator==(const PairHit&, const PairHit&) = default;
};

/// All pairs 1 < r < s < bound, sorted by (r, s).
std::vector<PairHit> search_integer_pairs(std::uint64_t bound, const SearchOptions& opts = {});

struct PellSolution {
  Integer p, r;
  int index = 0;  ///< 1 for the fundamental solution (2, 1)
};

/// p^2 - 3r^2 = 1 from (2, 1) via (p, r) -> (2p + 3r, p + 2r).
std::vector<PellSolution> pell_sequence(int count);

/// r = 2u/(3-u^2), p = (3+u^2)/(3-u^2).
template <ExactField F>
std::pair<F, F> pell_parametrize(const F& u) {
  const F den = F(3) - u * u;
  return {F(2) * u / den, (F(3) + u * u) / den};
}

/// X^k + Y^k = Z^k + W^k with X < Y, Z < W, X < Z.
struct TaxicabHit {
  std::uint64_t X = 0, Y = 0, Z = 0, W = 0;
  int k = 0;
  bool square_product = false;
  std::optional<Integer> sqrt_witness;  ///< sqrt(XYZW) when square_product
  friend bool operator==(const TaxicabHit&, const TaxicabHit&) = default;
};

/// Nontrivial positive solutions with all entries <= bound, sorted.
std::vector<TaxicabHit> taxicab_search(std::uint64_t bound, int k, const SearchOptions& opts = {});

/// x1^6 + h^3 y1^6 = x2^6 + h^3 y2^6 rewriting of a cubic hit.
struct SexticForm {
  Integer x1, y1, x2, y2, h;
};

/// Needs one perfect square on each side of a k = 3 hit; nullopt otherwise.
std::optional<SexticForm> sextic_form_check(const TaxicabHit& hit);

/// Euler's degree-7 forms X, Y, Z, W at b = 1 (homogeneous of degree 7).
std::array<Poly, 4> euler_octic_forms();

struct EulerValues {
  std::array<Rational, 4> xyzw;
  bool degenerate = false;  ///< X = Z or Y = W (trivial identity)
};

EulerValues euler_quartic_parametrization(const Rational& a);

/// u^12 - 23u^10 + 141u^8 - 266u^6 - 80u^4 + 351u^2 + 324
Poly euler_u_polynomial();
/// t^6 - 23t^5 + 141t^4 - 266t^3 - 80t^2 + 351t + 324
Poly euler_genus2_sextic();

ProofReport euler_reduction_check();

struct GaussianTripleRecord {
  std::array<GaussianRational, 3> elements;
  std::array<GaussianRational, 3> witnesses;  ///< pairs (0,1), (0,2), (1,2)
  std::optional<GaussianRational> seed_r;
  std::string origin;
};

struct GaussianScan {
  std::vector<GaussianTripleRecord> known;  ///< two reference triples plus conjugates/negations
  std::vector<GaussianTripleRecord> found;  ///< scan hits, one per symmetry class
};

/// The two reference Gaussian quartic triples.
std::array<std::array<GaussianRational, 3>, 2> known_gaussian_triples();

/// Verifies the reference triples and scans Gaussian-integer seeds r with
/// |Re r|, |Im r| <= box on the s = r + 2 curve. box = 0 skips the scan.
GaussianScan gaussian_verify_and_scan(int box);

}  // namespace hpdt
