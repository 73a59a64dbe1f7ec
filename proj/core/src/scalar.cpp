#include "maxplus/scalar.hpp"

#include <cmath>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

Scalar::Scalar(double value) : value_(value) {
  if (std::isnan(value) || value == std::numeric_limits<double>::infinity()) {
    throw DomainError("max-plus scalar must be finite or -inf, got " +
                      std::to_string(value));
  }
}

Scalar otimes(Scalar a, Scalar b) noexcept {
  if (a.is_eps() || b.is_eps()) return Scalar::eps();
  return Scalar(a.value() + b.value());
}

Scalar inverse(Scalar a) {
  if (a.is_eps()) throw DomainError("epsilon has no multiplicative inverse");
  return Scalar(-a.value());
}

Scalar real_power(Scalar a, double r) {
  if (a.is_eps()) {
    if (r > 0) return Scalar::eps();
    throw DomainError("epsilon raised to a non-positive power");
  }
  return Scalar(r * a.value());
}

bool Tolerance::equal(Scalar a, Scalar b) const noexcept {
  if (a.is_eps() || b.is_eps()) return a.is_eps() && b.is_eps();
  return std::fabs(a.value() - b.value()) <= tau;
}

bool Tolerance::leq(Scalar a, Scalar b) const noexcept {
  if (a.is_eps()) return true;
  if (b.is_eps()) return false;
  return a.value() <= b.value() + tau;
}

}  // namespace maxplus
