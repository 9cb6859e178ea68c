#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace midconvex {

/// Thrown when two values from different quadratic fields Q(sqrt D) meet in
/// one arithmetic operation.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact number a + b*sqrt(D): a rational when b == 0, otherwise an element of
/// the quadratic field Q(sqrt D) for a square-free D >= 2.
///
/// Values are kept normalized: a zero irrational part always collapses to a
/// plain rational (root() == 0), so structural equality is value equality.
/// Rationals mix freely with any field; two irrational values must share D.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value) : a_(std::move(value)) { a_.canonicalize(); }  // NOLINT
  Scalar(long num, long den);

  /// a + b*sqrt(root). `root` must be square-free and >= 2.
  Scalar(mpq_class a, mpq_class b, int root);

  static Scalar sqrt(int root) { return Scalar(mpq_class(0), mpq_class(1), root); }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  /// 0 for rationals, D otherwise.
  int root() const { return root_; }
  bool is_rational() const { return root_ == 0; }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;
  double to_double() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.root_ == rhs.root_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  /// Text form: `p`, `p/q`, or `p/q+r/s*sqrtD` (`-` when the coefficient of
  /// the root is negative). No spaces.
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  void check_field(const Scalar& rhs) const;
  void normalize();

  mpq_class a_{0};
  mpq_class b_{0};
  int root_ = 0;
};

/// Common field of two values: 0 if both rational, the shared D otherwise.
/// Throws FieldMismatch for distinct irrational fields.
int common_root(int lhs, int rhs);

/// Best rational approximation of `value` with denominator <= max_den
/// (continued-fraction convergents and semiconvergents).
mpq_class rationalize(double value, long max_den);

}  // namespace midconvex
