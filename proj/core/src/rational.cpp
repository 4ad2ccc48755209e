#include "mzva/rational.hpp"

#include <limits>
#include <stdexcept>

namespace mzva {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { assign(value); }

void Rational::assign(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  const mpz_class& n = v.get_num();
  const mpz_class& d = v.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(v));
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  i128 g = gcd128(num, den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  r.assign(q);
  return r;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  if (!digits_ok(num, true)) return std::nullopt;
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!digits_ok(den, false)) return std::nullopt;
    d = mpz_class(std::string(den), 10);
    if (d == 0) return std::nullopt;
  }
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::optional<long long> Rational::to_int64() const {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      i128 s = static_cast<i128>(num_) + other.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
    i128 d = static_cast<i128>(den_) * other.den_;
    *this = from_wide(n, d);
    return *this;
  }
  assign(to_mpq() + other.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      i128 p = static_cast<i128>(num_) * other.num_;
      if (fits(p)) {
        num_ = static_cast<std::int64_t>(p);
        return *this;
      }
    }
    *this = from_wide(static_cast<i128>(num_) * other.num_,
                      static_cast<i128>(den_) * other.den_);
    return *this;
  }
  assign(to_mpq() * other.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational");
  if (!big_ && !other.big_) {
    *this = from_wide(static_cast<i128>(num_) * other.den_,
                      static_cast<i128>(den_) * other.num_);
    return *this;
  }
  assign(to_mpq() / other.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: small-range values are never stored big
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational binomial(long long top, int k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (int i = 0; i < k; ++i) {
    r *= Rational(top - i);
    r /= Rational(i + 1);
  }
  return r;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

}  // namespace mzva
