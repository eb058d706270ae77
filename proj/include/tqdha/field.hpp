#pragma once

// Exact arithmetic in K = Q(zeta_N), optionally extended by one square root
// K[y]/(y^2 - d).  Elements are stored in the power basis 1, z, ..., z^{phi(N)-1}
// reduced modulo the N-th cyclotomic polynomial, so equality is coefficientwise.

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqdha/error.hpp"

namespace tqdha {

using Rational = mpq_class;
using RationalPoly = std::vector<Rational>;

class FieldElement;

namespace detail {
struct FieldData;
}

/// Handle to an immutable coefficient field.  Cheap to copy.
class Field {
 public:
  /// Q(zeta_N).  N = 1 gives Q.
  explicit Field(int cyclotomic_order = 1);
  /// Q(zeta_N)[y]/(y^2 - d) where d is a scalar expression in `z`.
  Field(int cyclotomic_order, std::string_view radicand);

  int cyclotomic_order() const;
  /// phi(N), the dimension of Q(zeta_N) over Q.
  int degree() const;
  bool has_extension() const;
  /// Coefficients of the N-th cyclotomic polynomial, constant term first.
  const RationalPoly& modulus() const;
  /// The radicand d (as an element of the base field); throws
  /// ExtensionUnavailable when there is no extension.
  FieldElement radicand() const;
  /// The radicand text as supplied on construction (empty if none).
  const std::string& radicand_text() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement from_rational(const Rational& r) const;
  /// zeta_N^k for any integer k.
  FieldElement zeta(long k = 1) const;
  /// The adjoined root y.
  FieldElement root() const;
  /// Primitive r-th root of unity zeta_N^{N/r}; throws FieldTooSmall if r does not divide N.
  FieldElement root_of_unity(int r) const;

  /// Parses a scalar expression (see README for the grammar).
  FieldElement parse(std::string_view text) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
  friend class FieldElement;
};

/// An exact scalar.  A default-constructed element is a zero that is not yet
/// attached to a field; it adopts the field of whatever it is combined with.
class FieldElement {
 public:
  FieldElement() = default;

  bool is_zero() const;
  bool is_one() const;
  /// True if the element lies in Q (no z or y terms).
  bool is_rational() const;
  Field field() const;
  bool attached() const { return data_ != nullptr; }

  /// Base-field coefficients (empty for a detached zero).
  const RationalPoly& base_part() const { return base_; }
  /// Coefficients of y (empty when the field has no extension).
  const RationalPoly& radical_part() const { return rad_; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Multiplicative inverse; throws NonInvertible for zero or a zero divisor.
  FieldElement inverse() const;
  FieldElement pow(long k) const;

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

  /// Canonical scalar-expression text; parses back to the same element.
  std::string to_string() const;
  /// Stable key usable for hashing / ordering (coefficient dump).
  std::string key() const;

 private:
  FieldElement(std::shared_ptr<const detail::FieldData> data, RationalPoly base, RationalPoly rad);
  void adopt(const FieldElement& other);

  std::shared_ptr<const detail::FieldData> data_;
  RationalPoly base_;
  RationalPoly rad_;
  friend class Field;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Free-function spelling of parse for symmetry with the operation name.
inline FieldElement parse_scalar(std::string_view text, const Field& field) {
  return field.parse(text);
}

/// Euler phi.
int euler_phi(int n);
/// Coefficients of the n-th cyclotomic polynomial (constant term first).
RationalPoly cyclotomic_polynomial(int n);

}  // namespace tqdha
