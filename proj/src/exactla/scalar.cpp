#include "entwine/exactla/scalar.hpp"

#include <charconv>
#include <stdexcept>

#include "entwine/errors.hpp"

namespace entwine::exactla {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("Fp needs a prime below 2^31, got " + std::to_string(p));
  FieldSpec f;
  f.kind_ = FieldKind::PrimeField;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(const FieldSpec& f, long v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
  } else {
    long m = v % static_cast<long>(f.characteristic());
    if (m < 0) m += static_cast<long>(f.characteristic());
    r_ = static_cast<std::uint64_t>(m);
  }
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = q;
    return s;
  }
  const std::uint64_t p = f.characteristic();
  std::uint64_t den = reduce_mpz(q.get_den(), p);
  if (den == 0)
    throw std::invalid_argument("denominator of " + q.get_str() + " vanishes in " + f.to_string());
  s.r_ = mulmod(reduce_mpz(q.get_num(), p), powmod(den, p - 2, p), p);
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  auto digits_ok = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  std::string ns(num);
  if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
  mpz_class n(ns, 10), d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatchError("rational() on an F_p scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldMismatchError("residue() on a rational scalar");
  return r_;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatchError("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rational())
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = field_.characteristic() - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = mulmod(r_, o.r_, field_.characteristic());
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same(a);
  check_same(b);
  if (field_.is_rational()) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    q_ += t;
  } else {
    r_ = (r_ + mulmod(a.r_, b.r_, field_.characteristic())) % field_.characteristic();
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s(*this);
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = powmod(r_, field_.characteristic() - 2, field_.characteristic());
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace entwine::exactla
