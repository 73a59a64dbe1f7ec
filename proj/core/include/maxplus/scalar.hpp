#pragma once

#include <compare>
#include <limits>

namespace maxplus {

/// An element of the max-plus semiring: a finite real or the bottom
/// element epsilon (stored as -infinity).
class Scalar {
 public:
  /// Default-constructs epsilon, the additive identity.
  constexpr Scalar() noexcept = default;

  /// Accepts any finite value; -infinity maps to epsilon. Throws
  /// DomainError for NaN and +infinity.
  Scalar(double value);  // NOLINT(google-explicit-constructor)

  static constexpr Scalar eps() noexcept { return Scalar(); }

  constexpr bool is_eps() const noexcept { return value_ == kNegInf; }
  constexpr bool is_finite() const noexcept { return value_ != kNegInf; }

  /// Raw value; -infinity for epsilon.
  constexpr double value() const noexcept { return value_; }

  constexpr auto operator<=>(const Scalar&) const = default;

 private:
  static constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double value_ = kNegInf;
};

/// a (+) b = max(a, b).
constexpr Scalar oplus(Scalar a, Scalar b) noexcept { return a < b ? b : a; }

/// a (x) b = a + b, absorbing at epsilon.
Scalar otimes(Scalar a, Scalar b) noexcept;

/// Multiplicative inverse of a finite scalar (its negation).
Scalar inverse(Scalar a);

/// Real power a^r = r * a. Epsilon is returned for epsilon with r > 0.
Scalar real_power(Scalar a, double r);

/// Absolute equality tolerance used by every verdict in the library.
/// Finite values compare equal when |a - b| <= tau; epsilon equals only
/// epsilon.
struct Tolerance {
  double tau = 1e-9;

  bool equal(Scalar a, Scalar b) const noexcept;
  bool is_zero(Scalar a) const noexcept { return equal(a, Scalar(0.0)); }
  /// a <= b up to tau.
  bool leq(Scalar a, Scalar b) const noexcept;
  /// a < b by more than tau.
  bool less(Scalar a, Scalar b) const noexcept { return !leq(b, a); }
};

}  // namespace maxplus
