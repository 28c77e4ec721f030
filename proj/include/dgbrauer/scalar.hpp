#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace dgb {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A base field: the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "Fp:5" and "F5".
  static Field parse(const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field in canonical form (reduced fraction with positive
/// denominator, or a residue in [0, p)).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}
  static Scalar zero(Field f) { return from_int(f, 0); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, long v);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// Residue in F_p given directly.
  static Scalar residue(Field f, std::uint64_t r);
  /// Parses "a/b", "a" (rationals) or a decimal residue (prime fields).
  /// Over F_p a fraction "a/b" is read as a * b^-1.
  static Scalar parse(Field f, const std::string& text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Canonical string form; see class comment.
  std::string to_string() const;

  /// Rational value; only valid over the rationals.
  const mpq_class& rational() const;
  /// Residue; only valid over a prime field.
  std::uint32_t residue_value() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// True when the stored value is in canonical form (always, barring bugs).
  bool is_canonical() const;

 private:
  Scalar(Field f, std::uint32_t r) : field_(f), value_(r) {}
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

/// Multiplies by (-1)^e.
inline Scalar signed_by(int parity_exponent, Scalar s) {
  return (parity_exponent & 1) ? -s : s;
}

/// (-1)^(a*b) as +1/-1, the Koszul sign of transposing degrees a and b.
inline int koszul(int a, int b) { return ((a & 1) && (b & 1)) ? -1 : 1; }

}  // namespace dgb
