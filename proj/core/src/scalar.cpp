#include "skewminor/scalar.hpp"

#include <charconv>
#include <sstream>

namespace skewminor {

namespace {

__extension__ typedef unsigned __int128 u128;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty()) {
    throw std::invalid_argument("expected an integer, got '" +
                                std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("expected an integer, got '" +
                                  std::string(text) + "'");
    }
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return mpz_class(owned, 10);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r.get_ui();
}

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw RingMismatch("ring mismatch: " + a.ring().to_string() + " vs " +
                     b.ring().to_string());
}

}  // namespace

Ring Ring::modulo(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  return {RingKind::modular, m};
}

bool Ring::is_integral_domain() const {
  if (kind != RingKind::modular) return true;
  const mpz_class m(static_cast<unsigned long>(modulus));
  return mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
}

std::string Ring::to_string() const {
  switch (kind) {
    case RingKind::integer:
      return "int";
    case RingKind::rational:
      return "rat";
    case RingKind::modular:
      return "mod " + std::to_string(modulus);
  }
  return "?";
}

Ring Ring::parse(std::string_view text) {
  text = trim(text);
  if (text == "int") return integers();
  if (text == "rat") return rationals();
  if (text.substr(0, 3) == "mod") {
    const std::string_view rest = trim(text.substr(3));
    std::uint64_t m = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), m);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) {
      throw std::invalid_argument("bad modulus in ring '" + std::string(text) +
                                  "'");
    }
    return modulo(m);
  }
  throw std::invalid_argument("unknown ring '" + std::string(text) +
                              "' (expected int, rat or mod <m>)");
}

Scalar Scalar::from_int(const Ring& ring, long value) {
  switch (ring.kind) {
    case RingKind::integer:
      return Scalar(mpz_class(value));
    case RingKind::rational:
      return Scalar(mpq_class(value));
    case RingKind::modular:
      return residue(mpz_class(value), ring.modulus);
  }
  return {};
}

Scalar Scalar::rational(mpz_class num, mpz_class den) {
  if (den == 0) throw DivisionError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::residue(mpz_class value, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  return Scalar(Residue{reduce(value, modulus), modulus});
}

Scalar Scalar::parse(const Ring& ring, std::string_view text) {
  text = trim(text);
  switch (ring.kind) {
    case RingKind::integer:
      return Scalar(parse_integer(text));
    case RingKind::rational: {
      const auto slash = text.find('/');
      if (slash == std::string_view::npos) return Scalar(mpq_class(parse_integer(text)));
      return rational(parse_integer(text.substr(0, slash)),
                      parse_integer(text.substr(slash + 1)));
    }
    case RingKind::modular: {
      const auto mod = text.find("mod");
      if (mod == std::string_view::npos) {
        return residue(parse_integer(text), ring.modulus);
      }
      const Ring stated = Ring::parse(text.substr(mod));
      if (stated != ring) {
        throw RingMismatch("value '" + std::string(text) +
                           "' does not belong to " + ring.to_string());
      }
      return residue(parse_integer(text.substr(0, mod)), ring.modulus);
    }
  }
  return {};
}

Ring Scalar::ring() const {
  if (std::holds_alternative<mpz_class>(rep_)) return Ring::integers();
  if (std::holds_alternative<mpq_class>(rep_)) return Ring::rationals();
  return Ring{RingKind::modular, std::get<Residue>(rep_).modulus};
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Residue>) {
          return v.value == 0;
        } else {
          return sgn(v) == 0;
        }
      },
      rep_);
}

bool Scalar::is_one() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Residue>) {
          return v.value == 1;
        } else {
          return v == 1;
        }
      },
      rep_);
}

std::string Scalar::to_string() const {
  if (const auto* z = as_integer()) return z->get_str();
  if (const auto* q = as_rational()) return q->get_str();
  const auto& r = std::get<Residue>(rep_);
  return std::to_string(r.value) + " mod " + std::to_string(r.modulus);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rep_.index() != rhs.rep_.index()) mismatch(*this, rhs);
  if (auto* z = std::get_if<mpz_class>(&rep_)) {
    *z += std::get<mpz_class>(rhs.rep_);
  } else if (auto* q = std::get_if<mpq_class>(&rep_)) {
    *q += std::get<mpq_class>(rhs.rep_);
  } else {
    auto& a = std::get<Residue>(rep_);
    const auto& b = std::get<Residue>(rhs.rep_);
    if (a.modulus != b.modulus) mismatch(*this, rhs);
    a.value = static_cast<std::uint64_t>((u128(a.value) + b.value) % a.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rep_.index() != rhs.rep_.index()) mismatch(*this, rhs);
  if (auto* z = std::get_if<mpz_class>(&rep_)) {
    *z *= std::get<mpz_class>(rhs.rep_);
  } else if (auto* q = std::get_if<mpq_class>(&rep_)) {
    *q *= std::get<mpq_class>(rhs.rep_);
  } else {
    auto& a = std::get<Residue>(rep_);
    const auto& b = std::get<Residue>(rhs.rep_);
    if (a.modulus != b.modulus) mismatch(*this, rhs);
    a.value = static_cast<std::uint64_t>((u128(a.value) * b.value) % a.modulus);
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar out = a;
  if (auto* z = std::get_if<mpz_class>(&out.rep_)) {
    mpz_neg(z->get_mpz_t(), z->get_mpz_t());
  } else if (auto* q = std::get_if<mpq_class>(&out.rep_)) {
    mpq_neg(q->get_mpq_t(), q->get_mpq_t());
  } else {
    auto& r = std::get<Residue>(out.rep_);
    r.value = r.value == 0 ? 0 : r.modulus - r.value;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return lhs == std::get<T>(b.rep_);
      },
      a.rep_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

Scalar exact_div(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) mismatch(a, b);
  if (b.is_zero()) throw DivisionError("division by zero");
  if (const auto* z = a.as_integer()) {
    const auto& d = std::get<mpz_class>(b.rep_);
    if (!mpz_divisible_p(z->get_mpz_t(), d.get_mpz_t())) {
      throw DivisionError(z->get_str() + " is not divisible by " + d.get_str());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), z->get_mpz_t(), d.get_mpz_t());
    return Scalar(std::move(q));
  }
  if (const auto* q = a.as_rational()) {
    return Scalar(mpq_class(*q / std::get<mpq_class>(b.rep_)));
  }
  const auto& x = std::get<Residue>(a.rep_);
  const auto& y = std::get<Residue>(b.rep_);
  if (x.modulus != y.modulus) mismatch(a, b);
  mpz_class inv;
  const mpz_class yy(static_cast<unsigned long>(y.value));
  const mpz_class mm(static_cast<unsigned long>(y.modulus));
  if (mpz_invert(inv.get_mpz_t(), yy.get_mpz_t(), mm.get_mpz_t()) == 0) {
    throw DivisionError(std::to_string(y.value) + " is not invertible mod " +
                        std::to_string(y.modulus));
  }
  const std::uint64_t iv = inv.get_ui();
  return Scalar(Residue{
      static_cast<std::uint64_t>((u128(x.value) * iv) % x.modulus), x.modulus});
}

}  // namespace skewminor
