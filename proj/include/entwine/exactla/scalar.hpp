#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace entwine::exactla {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

// Q, or F_p for a prime p < 2^31 (products then fit in 64 bits).
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);
  // "Q" or "Fp:<p>"
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rationals; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
};

// One field element. The field travels with the value so that mixing Q with F_p,
// or F_p with F_q, throws instead of silently producing garbage.
class Scalar {
 public:
  Scalar() = default;  // 0 in Q
  Scalar(const FieldSpec& f, long v);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
  // Fails if p divides the denominator.
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);
  // "a", "-a", "a/b". "1/0" and anything non-numeric throw std::invalid_argument.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;  // Q only
  std::uint64_t residue() const;      // F_p only

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  // *this += a * b, without a temporary Scalar
  void add_product(const Scalar& a, const Scalar& b);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Canonical text: "p/q" in lowest terms, "n" for integers, residues in [0,p).
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace entwine::exactla
