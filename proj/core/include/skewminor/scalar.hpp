#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace skewminor {

enum class RingKind { integer, rational, modular };

/// Identifies one of the three supported commutative rings.
struct Ring {
  RingKind kind = RingKind::integer;
  std::uint64_t modulus = 0;  // only meaningful for RingKind::modular

  static Ring integers() { return {RingKind::integer, 0}; }
  static Ring rationals() { return {RingKind::rational, 0}; }
  /// Integers mod m, m >= 2.
  static Ring modulo(std::uint64_t m);

  [[nodiscard]] bool is_modular() const { return kind == RingKind::modular; }
  /// True for the integers, the rationals and Z/p with p prime.
  [[nodiscard]] bool is_integral_domain() const;

  /// "int", "rat" or "mod <m>".
  [[nodiscard]] std::string to_string() const;
  static Ring parse(std::string_view text);

  friend bool operator==(const Ring&, const Ring&) = default;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedRing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical representative of a residue class, value in [0, modulus).
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An exact element of one of the rings above. Arithmetic between scalars of
/// different rings throws RingMismatch.
class Scalar {
 public:
  /// Integer zero.
  Scalar() = default;

  static Scalar zero(const Ring& ring) { return from_int(ring, 0); }
  static Scalar one(const Ring& ring) { return from_int(ring, 1); }
  static Scalar from_int(const Ring& ring, long value);
  static Scalar integer(mpz_class value) { return Scalar(std::move(value)); }
  /// Throws DivisionError if `den` is zero; the result is reduced.
  static Scalar rational(mpz_class num, mpz_class den);
  static Scalar residue(mpz_class value, std::uint64_t modulus);

  /// Integers: decimal. Rationals: "p/q" or "p". Modular: "v" or "v mod m".
  static Scalar parse(const Ring& ring, std::string_view text);

  [[nodiscard]] Ring ring() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  [[nodiscard]] const mpz_class* as_integer() const {
    return std::get_if<mpz_class>(&rep_);
  }
  [[nodiscard]] const mpq_class* as_rational() const {
    return std::get_if<mpq_class>(&rep_);
  }
  [[nodiscard]] const Residue* as_residue() const {
    return std::get_if<Residue>(&rep_);
  }

  /// Same formats parse() accepts; residues print as "v mod m".
  [[nodiscard]] std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator-(const Scalar& a);

  /// Exact equality; scalars from different rings compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  using Rep = std::variant<mpz_class, mpq_class, Residue>;
  explicit Scalar(mpz_class v) : rep_(std::move(v)) {}
  explicit Scalar(mpq_class v) : rep_(std::move(v)) {}
  explicit Scalar(Residue v) : rep_(v) {}

  Rep rep_{mpz_class(0)};

  friend Scalar exact_div(const Scalar& a, const Scalar& b);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar neg(const Scalar& a) { return -a; }

/// q with q * b == a. Over the integers throws DivisionError when b does not
/// divide a; over Z/m throws when b is not invertible. Division by zero
/// throws DivisionError in every ring.
[[nodiscard]] Scalar exact_div(const Scalar& a, const Scalar& b);

/// (-1)^k as a ring element.
[[nodiscard]] inline Scalar signed_one(const Ring& ring, int sign) {
  return Scalar::from_int(ring, sign);
}

}  // namespace skewminor
