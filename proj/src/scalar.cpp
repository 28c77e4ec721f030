#include "dgbrauer/scalar.hpp"

#include <cctype>

namespace dgb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31))
    throw std::invalid_argument("field characteristic must be a prime <= 2^31, got " +
                                std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.size() > 1 && text[0] == 'F')
    digits = text.substr(1);
  else
    throw std::invalid_argument("unknown field '" + text + "' (expected Q or Fp:<prime>)");
  if (digits.empty() || digits.size() > 10)
    throw std::invalid_argument("bad field characteristic in '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad field characteristic in '" + text + "'");
  return prime(static_cast<std::uint32_t>(std::stoull(digits)));
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

namespace {

std::uint32_t mod_reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mpz_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Scalar Scalar::from_int(Field f, long v) {
  if (f.is_rationals()) return Scalar(f, mpq_class(v));
  return Scalar(f, mod_reduce(v, f.characteristic()));
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rationals()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(f, std::move(c));
  }
  const std::uint32_t p = f.characteristic();
  std::uint32_t den = mpz_mod(q.get_den(), p);
  if (den == 0) throw DivisionByZero("denominator vanishes in " + f.to_string());
  std::uint64_t num = mpz_mod(q.get_num(), p);
  return Scalar(f, static_cast<std::uint32_t>(num * mod_pow(den, p - 2, p) % p));
}

Scalar Scalar::residue(Field f, std::uint64_t r) {
  if (f.is_rationals()) return Scalar(f, mpq_class(static_cast<unsigned long>(r)));
  return Scalar(f, static_cast<std::uint32_t>(r % f.characteristic()));
}

Scalar Scalar::parse(Field f, const std::string& text) {
  auto bad = [&] { return std::invalid_argument("malformed scalar '" + text + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) throw bad();
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  std::string num = text.substr(0, slash);
  check_int(num, true);
  if (num[0] == '+') num = num.substr(1);
  mpq_class q;
  if (slash == std::string::npos) {
    q = mpq_class(mpz_class(num));
  } else {
    std::string den = text.substr(slash + 1);
    check_int(den, false);
    mpz_class d(den);
    if (d == 0) throw DivisionByZero("zero denominator in '" + text + "'");
    q = mpq_class(mpz_class(num), d);
  }
  return from_rational(f, q);
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw FieldMismatch("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue_value() const {
  if (field_.is_rationals()) throw FieldMismatch("scalar is not a residue");
  return std::get<std::uint32_t>(value_);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalar field mismatch: " + field_.to_string() + " vs " +
                        o.field_.to_string());
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<std::uint32_t>(&value_))
    return Scalar(field_, *r == 0 ? 0u : field_.characteristic() - *r);
  return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (auto r = std::get_if<std::uint32_t>(&value_))
    return Scalar(field_, mod_pow(*r, field_.characteristic() - 2, field_.characteristic()));
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  inv.canonicalize();
  return Scalar(field_, std::move(inv));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<std::uint32_t>(&value_)) {
    std::uint64_t s = std::uint64_t(*r) + std::get<std::uint32_t>(o.value_);
    *r = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<std::uint32_t>(&value_)) {
    std::uint64_t s = std::uint64_t(*r) * std::get<std::uint32_t>(o.value_);
    *r = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

bool Scalar::is_canonical() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r < field_.characteristic();
  const mpq_class& q = std::get<mpq_class>(value_);
  if (q.get_den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

}  // namespace dgb
