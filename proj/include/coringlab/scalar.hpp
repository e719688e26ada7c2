#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coringlab {

enum class FieldKind { Rationals, PrimeField };

/// Ground field descriptor: either Q or F_p for a prime p.
struct Field {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;

  static Field rationals() { return {}; }
  /// Throws FieldError unless p is prime and below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return kind == FieldKind::Rationals; }
  bool is_prime_field() const { return kind == FieldKind::PrimeField; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Exact element of Q or F_p.
///
/// Rationals are stored as a reduced int64 fraction while they fit and are
/// promoted to GMP otherwise; results are demoted back whenever possible.
/// Elements of F_p carry their modulus so that every value is
/// self-describing. Mixing elements of different fields throws FieldError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, std::int64_t v);
  static Scalar rational(std::int64_t num, std::int64_t den);
  static Scalar from_mpq(const mpq_class& q);
  static Scalar residue(std::uint64_t value, std::uint64_t p);
  /// Accepts "p/q" and integer literals; for F_p the value is reduced mod p.
  static Scalar parse(const Field& f, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  int sign() const;  // rationals only; 0/1 for F_p

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  /// this += a * b
  void add_mul(const Scalar& a, const Scalar& b);
  /// this -= a * b
  void sub_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "p/q" in lowest terms (just "p" when q = 1), or the
  /// residue in [0, p) for F_p.
  std::string to_string() const;
  mpq_class to_mpq() const;
  std::uint64_t residue_value() const;
  bool is_integer() const;

 private:
  enum class Rep : std::uint8_t { Small, Big, Mod };

  static Scalar from_i128(__int128 num, __int128 den);
  static Scalar normalize_big(mpq_class q);
  void check_compatible(const Scalar& rhs) const;

  Rep rep_ = Rep::Small;
  std::int64_t a_ = 0;  // numerator, or residue
  std::int64_t b_ = 1;  // denominator (> 0), or modulus
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace coringlab
