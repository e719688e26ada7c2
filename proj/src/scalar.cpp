#include "coringlab/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace coringlab {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs_i128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v) {
  u128 mag = abs_i128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class r = (hi << 64) + lo;
  return v < 0 ? mpz_class(-r) : r;
}

bool fits_i64(i128 v) {
  return v > static_cast<i128>(std::numeric_limits<std::int64_t>::min()) &&
         v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw FieldError("modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field{FieldKind::PrimeField, p};
}

std::string Field::name() const { return is_rationals() ? "Q" : "F_" + std::to_string(p); }

Scalar::Scalar(const Scalar& other)
    : rep_(other.rep_),
      a_(other.a_),
      b_(other.b_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    rep_ = other.rep_;
    a_ = other.a_;
    b_ = other.b_;
    if (other.big_) {
      if (big_) {
        *big_ = *other.big_;
      } else {
        big_ = std::make_unique<mpq_class>(*other.big_);
      }
    } else {
      big_.reset();
    }
  }
  return *this;
}

Scalar Scalar::zero(const Field& f) { return f.is_rationals() ? Scalar{} : residue(0, f.p); }

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, std::int64_t v) {
  if (f.is_rationals()) return rational(v, 1);
  i128 r = static_cast<i128>(v) % static_cast<i128>(f.p);
  if (r < 0) r += f.p;
  return residue(static_cast<std::uint64_t>(r), f.p);
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw FieldError("zero denominator");
  return from_i128(num, den);
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return normalize_big(std::move(c));
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
  Scalar s;
  s.rep_ = Rep::Mod;
  s.a_ = static_cast<std::int64_t>(value % p);
  s.b_ = static_cast<std::int64_t>(p);
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw FieldError("empty scalar literal");
  std::string_view num_text = text;
  std::string_view den_text = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_text = trim(text.substr(0, slash));
    den_text = trim(text.substr(slash + 1));
  }
  auto valid = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = s.front() == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!valid(num_text) || !valid(den_text)) {
    throw FieldError("malformed scalar literal '" + std::string(text) + "'");
  }
  mpz_class num{std::string(num_text)};
  mpz_class den{std::string(den_text)};
  if (den == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  if (f.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return normalize_big(std::move(q));
  }
  mpz_class p(static_cast<unsigned long>(f.p));
  mpz_class n = num % p;
  if (n < 0) n += p;
  mpz_class d = den % p;
  if (d < 0) d += p;
  if (d == 0) throw FieldError("denominator divisible by p in '" + std::string(text) + "'");
  Scalar sn = residue(n.get_ui(), f.p);
  Scalar sd = residue(d.get_ui(), f.p);
  return sn / sd;
}

Scalar Scalar::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd_u128(abs_i128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0) den = 1;
  if (fits_i64(num) && fits_i64(den)) {
    Scalar s;
    s.a_ = static_cast<std::int64_t>(num);
    s.b_ = static_cast<std::int64_t>(den);
    return s;
  }
  Scalar s;
  s.rep_ = Rep::Big;
  s.big_ = std::make_unique<mpq_class>(mpz_from_i128(num), mpz_from_i128(den));
  return s;
}

Scalar Scalar::normalize_big(mpq_class q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != std::numeric_limits<long>::min()) {
    Scalar s;
    s.a_ = n.get_si();
    s.b_ = d.get_si();
    return s;
  }
  Scalar s;
  s.rep_ = Rep::Big;
  s.big_ = std::make_unique<mpq_class>(std::move(q));
  return s;
}

Field Scalar::field() const {
  return rep_ == Rep::Mod ? Field{FieldKind::PrimeField, static_cast<std::uint64_t>(b_)} : Field::rationals();
}

bool Scalar::is_zero() const { return rep_ == Rep::Big ? false : a_ == 0; }

bool Scalar::is_one() const {
  if (rep_ == Rep::Big) return false;
  return a_ == 1 && (rep_ == Rep::Mod || b_ == 1);
}

int Scalar::sign() const {
  switch (rep_) {
    case Rep::Small:
      return (a_ > 0) - (a_ < 0);
    case Rep::Big:
      return sgn(*big_);
    case Rep::Mod:
      return a_ != 0;
  }
  return 0;
}

bool Scalar::is_integer() const {
  switch (rep_) {
    case Rep::Small:
      return b_ == 1;
    case Rep::Big:
      return big_->get_den() == 1;
    case Rep::Mod:
      return true;
  }
  return false;
}

void Scalar::check_compatible(const Scalar& rhs) const {
  bool lm = rep_ == Rep::Mod;
  bool rm = rhs.rep_ == Rep::Mod;
  if (lm != rm || (lm && b_ != rhs.b_)) {
    throw FieldError("arithmetic between elements of different fields (" + field().name() + ", " +
                     rhs.field().name() + ")");
  }
}

mpq_class Scalar::to_mpq() const {
  switch (rep_) {
    case Rep::Small:
      return mpq_class(mpz_class(static_cast<long>(a_)), mpz_class(static_cast<long>(b_)));
    case Rep::Big:
      return *big_;
    case Rep::Mod:
      break;
  }
  throw FieldError("to_mpq on a prime-field element");
}

std::uint64_t Scalar::residue_value() const {
  if (rep_ != Rep::Mod) throw FieldError("residue_value on a rational");
  return static_cast<std::uint64_t>(a_);
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  switch (rep_) {
    case Rep::Small:
      r.a_ = -a_;
      break;
    case Rep::Big:
      *r.big_ = -*big_;
      break;
    case Rep::Mod:
      r.a_ = a_ == 0 ? 0 : b_ - a_;
      break;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  switch (rep_) {
    case Rep::Small:
      return from_i128(b_, a_);
    case Rep::Big:
      return normalize_big(mpq_class(1) / *big_);
    case Rep::Mod: {
      auto p = static_cast<std::uint64_t>(b_);
      return residue(powmod(static_cast<std::uint64_t>(a_), p - 2, p), p);
    }
  }
  return {};
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_compatible(rhs);
  if (rep_ == Rep::Mod) {
    auto p = static_cast<std::uint64_t>(b_);
    std::uint64_t s = static_cast<std::uint64_t>(a_) + static_cast<std::uint64_t>(rhs.a_);
    if (s >= p) s -= p;
    a_ = static_cast<std::int64_t>(s);
    return *this;
  }
  if (rep_ == Rep::Small && rhs.rep_ == Rep::Small) {
    if (rhs.a_ == 0) return *this;
    if (b_ == 1 && rhs.b_ == 1) {
      i128 s = static_cast<i128>(a_) + rhs.a_;
      if (fits_i64(s)) {
        a_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    *this = from_i128(static_cast<i128>(a_) * rhs.b_ + static_cast<i128>(rhs.a_) * b_,
                      static_cast<i128>(b_) * rhs.b_);
    return *this;
  }
  *this = normalize_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_compatible(rhs);
  if (rep_ == Rep::Small && rhs.rep_ == Rep::Small && b_ == 1 && rhs.b_ == 1) {
    i128 s = static_cast<i128>(a_) - rhs.a_;
    if (fits_i64(s)) {
      a_ = static_cast<std::int64_t>(s);
      return *this;
    }
  }
  return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_compatible(rhs);
  if (rep_ == Rep::Mod) {
    a_ = static_cast<std::int64_t>(
        mulmod(static_cast<std::uint64_t>(a_), static_cast<std::uint64_t>(rhs.a_), static_cast<std::uint64_t>(b_)));
    return *this;
  }
  if (rep_ == Rep::Small && rhs.rep_ == Rep::Small) {
    if (a_ == 0) return *this;
    if (rhs.a_ == 0) {
      a_ = 0;
      b_ = 1;
      return *this;
    }
    if (b_ == 1 && rhs.b_ == 1) {
      i128 pr = static_cast<i128>(a_) * rhs.a_;
      if (fits_i64(pr)) {
        a_ = static_cast<std::int64_t>(pr);
        return *this;
      }
    }
    *this = from_i128(static_cast<i128>(a_) * rhs.a_, static_cast<i128>(b_) * rhs.b_);
    return *this;
  }
  *this = normalize_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_compatible(rhs);
  return *this *= rhs.inverse();
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (rep_ == Rep::Mod && a.rep_ == Rep::Mod && b.rep_ == Rep::Mod && a.b_ == b_ && b.b_ == b_) {
    auto p = static_cast<std::uint64_t>(b_);
    std::uint64_t t = mulmod(static_cast<std::uint64_t>(a.a_), static_cast<std::uint64_t>(b.a_), p);
    std::uint64_t s = static_cast<std::uint64_t>(a_) + t;
    if (s >= p) s -= p;
    a_ = static_cast<std::int64_t>(s);
    return;
  }
  if (a.is_zero() || b.is_zero()) {
    check_compatible(a);
    check_compatible(b);
    return;
  }
  Scalar t(a);
  t *= b;
  *this += t;
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) {
    check_compatible(a);
    check_compatible(b);
    return;
  }
  Scalar t(a);
  t *= b;
  *this -= t;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if ((a.rep_ == Scalar::Rep::Mod) != (b.rep_ == Scalar::Rep::Mod)) return false;
  if (a.rep_ == Scalar::Rep::Mod) return a.b_ == b.b_ && a.a_ == b.a_;
  if (a.rep_ == Scalar::Rep::Small && b.rep_ == Scalar::Rep::Small) return a.a_ == b.a_ && a.b_ == b.b_;
  // Canonical forms: a small value never equals a big one.
  if (a.rep_ != b.rep_) return false;
  return *a.big_ == *b.big_;
}

std::string Scalar::to_string() const {
  switch (rep_) {
    case Rep::Small:
      return b_ == 1 ? std::to_string(a_) : std::to_string(a_) + "/" + std::to_string(b_);
    case Rep::Big:
      return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
    case Rep::Mod:
      return std::to_string(a_);
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace coringlab
