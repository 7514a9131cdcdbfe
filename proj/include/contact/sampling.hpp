#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "contact/algebra.hpp"
#include "contact/group.hpp"

namespace contact {

/// Deterministic sampler: a fixed seed yields the same values on every
/// platform (modulo reduction only, no distribution objects).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  /// Uniform in [0, k).
  std::uint64_t index(std::uint64_t k) { return rng_() % k; }

  /// Rational with |numerator| <= 5 and denominator <= 3.
  Rational small_rational() {
    long num = static_cast<long>(index(11)) - 5;
    long den = static_cast<long>(index(3)) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational nonzero_small_rational() {
    for (;;) {
      Rational r = small_rational();
      if (r != 0) return r;
    }
  }

  Gaussian small_gaussian(bool complex_entries) {
    if (!complex_entries) return Gaussian(small_rational());
    return Gaussian(small_rational(), small_rational());
  }

  /// Random element supported on the given degree (all degrees if deg unset).
  AlgebraElement algebra_element(const GradedContactAlgebra& alg,
                                 std::optional<int> deg = std::nullopt) {
    std::vector<Rational> c(alg.dim(), Rational(0));
    for (int b = 0; b < alg.dim(); ++b)
      if (!deg || alg.degree(b) == *deg) c[b] = small_rational();
    return alg.element_from_coeffs(c);
  }

  AlgebraElement nonzero_algebra_element(const GradedContactAlgebra& alg,
                                         std::optional<int> deg = std::nullopt) {
    for (;;) {
      AlgebraElement x = algebra_element(alg, deg);
      if (!x.is_zero()) return x;
    }
  }

  /// Random group element preserving the family's defining form, via the
  /// Cayley transform (I - A)(I + A)^{-1} of a random algebra element A.
  GroupElement group_element(const GradedContactAlgebra& alg) {
    return cayley(alg, std::nullopt);
  }

  /// Random grading-preserving group element: the Cayley transform of a
  /// random degree-0 algebra element is weight-block-diagonal and preserves
  /// the defining form.
  GroupElement grading_preserving_element(const GradedContactAlgebra& alg) {
    return cayley(alg, 0);
  }

 private:
  /// Cayley transform (I - A)(I + A)^{-1} of a random algebra element; retries
  /// until both I + A and I - A are invertible, so the result is too.
  GroupElement cayley(const GradedContactAlgebra& alg, std::optional<int> deg) {
    GMatrix id = GMatrix::identity(alg.matrix_size());
    for (;;) {
      AlgebraElement a = algebra_element(alg, deg);
      auto inv = try_inverse(id + a.m);
      if (!inv || !try_inverse(id - a.m)) continue;
      return {(id - a.m) * *inv, &alg};
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace contact
