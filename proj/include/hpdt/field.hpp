#pragma once

#include <concepts>

namespace hpdt {

/// Exact field with decidable equality: Rational, GaussianRational and
/// RatFunc all qualify. Division by zero throws.
template <class F>
concept ExactField = std::regular<F> && std::constructible_from<F, int> &&
                     requires(const F a, const F b) {
                       { a + b } -> std::convertible_to<F>;
                       { a - b } -> std::convertible_to<F>;
                       { a * b } -> std::convertible_to<F>;
                       { a / b } -> std::convertible_to<F>;
                       { -a } -> std::convertible_to<F>;
                       { is_zero(a) } -> std::convertible_to<bool>;
                     };

}  // namespace hpdt
