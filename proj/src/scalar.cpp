#include "wreath/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace wreath {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t residue_of(std::int64_t v, std::uint64_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t residue_of(const mpz_class& v, std::uint64_t p) {
  // p < 2^62 fits an unsigned long on LP64 targets
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

bool fits_int64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime_u64(p)) {
    throw Error("field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field{p};
}

Field Field::parse(const std::string& text) {
  if (text == "rational" || text == "Q") return rational();
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("malformed field descriptor '" + text + "'");
    }
    return prime(std::stoull(digits));
  }
  throw Error("unknown field descriptor '" + text + "'");
}

std::string Field::to_string() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(modulus_);
}

Scalar::Scalar(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den == 0) throw Error("zero denominator");
  normalize_small();
}

Scalar::Scalar(const mpq_class& q) { set_big(q); }

Scalar::Scalar(const Scalar& o)
    : num_(o.num_), den_(o.den_), modulus_(o.modulus_),
      big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    modulus_ = o.modulus_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

Scalar Scalar::in(const Field& f, std::int64_t v) { return Scalar(v).to_field(f); }

Scalar Scalar::parse(const std::string& text, const Field& f) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error("malformed scalar '" + text + "'");
  }
  if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(q).to_field(f);
}

Field Scalar::field() const { return Field{modulus_}; }

void Scalar::normalize_small() {
  if (modulus_) return;
  if (den_ < 0) {
    if (den_ == std::numeric_limits<std::int64_t>::min() ||
        num_ == std::numeric_limits<std::int64_t>::min()) {
      mpq_class q(to_mpz(num_), to_mpz(den_));
      q.canonicalize();
      set_big(q);
      return;
    }
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

void Scalar::set_big(mpq_class q) {
  modulus_ = 0;
  if (fits_int64(q.get_num()) && fits_int64(q.get_den())) {
    num_ = mpz_get_si(q.get_num().get_mpz_t());
    den_ = mpz_get_si(q.get_den().get_mpz_t());
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

mpq_class Scalar::to_mpq() const {
  if (modulus_) throw Error("prime-field element has no rational value");
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

void Scalar::reduce_into(std::uint64_t p) {
  std::uint64_t n;
  std::uint64_t d;
  if (big_) {
    n = residue_of(big_->get_num(), p);
    d = residue_of(big_->get_den(), p);
    big_.reset();
  } else {
    n = residue_of(num_, p);
    d = residue_of(den_, p);
  }
  if (d == 0) throw Error("denominator is not invertible modulo " + std::to_string(p));
  num_ = static_cast<std::int64_t>(mul_mod(n, pow_mod(d, p - 2, p), p));
  den_ = 1;
  modulus_ = p;
}

Scalar Scalar::to_field(const Field& f) const {
  if (f.modulus() == modulus_) return *this;
  if (modulus_ != 0) {
    throw FieldMismatch("cannot map " + field().to_string() + " element into " + f.to_string());
  }
  Scalar r = *this;
  r.reduce_into(f.modulus());
  return r;
}

void Scalar::unify(const Scalar& o) {
  if (modulus_ == o.modulus_) return;
  if (modulus_ == 0) {
    reduce_into(o.modulus_);
    return;
  }
  if (o.modulus_ != 0) {
    throw FieldMismatch("arithmetic across " + field().to_string() + " and " +
                        o.field().to_string());
  }
}

bool Scalar::is_zero() const { return !big_ && num_ == 0; }

bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_) {
    if (r.num_ != 0) r.num_ = static_cast<std::int64_t>(modulus_) - r.num_;
  } else if (big_) {
    r.set_big(-*big_);
  } else if (num_ == std::numeric_limits<std::int64_t>::min()) {
    r.set_big(-to_mpq());
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (modulus_) {
    Scalar r = *this;
    r.num_ = static_cast<std::int64_t>(
        pow_mod(static_cast<std::uint64_t>(num_), modulus_ - 2, modulus_));
    return r;
  }
  if (big_) {
    Scalar r;
    r.set_big(1 / *big_);
    return r;
  }
  return Scalar(den_, num_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar other_conv;
  const Scalar* rhs = &o;
  if (modulus_ != o.modulus_) {
    if (o.modulus_ == 0) {
      other_conv = o.to_field(field());
      rhs = &other_conv;
    } else {
      unify(o);
    }
  }
  if (modulus_) {
    std::uint64_t s = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(rhs->num_);
    if (s >= modulus_) s -= modulus_;
    num_ = static_cast<std::int64_t>(s);
    return *this;
  }
  if (!big_ && !rhs->big_) {
    std::int64_t n;
    if (den_ == 1 && rhs->den_ == 1) {
      if (!__builtin_add_overflow(num_, rhs->num_, &n)) {
        num_ = n;
        return *this;
      }
    } else {
      const std::int64_t g = std::gcd(den_, rhs->den_);
      const std::int64_t dl = den_ / g;
      const std::int64_t dr = rhs->den_ / g;
      std::int64_t a, b, d;
      if (!__builtin_mul_overflow(num_, dr, &a) && !__builtin_mul_overflow(rhs->num_, dl, &b) &&
          !__builtin_add_overflow(a, b, &n) && !__builtin_mul_overflow(den_, dr, &d)) {
        num_ = n;
        den_ = d;
        normalize_small();
        return *this;
      }
    }
  }
  set_big(to_mpq() + rhs->to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar other_conv;
  const Scalar* rhs = &o;
  if (modulus_ != o.modulus_) {
    if (o.modulus_ == 0) {
      other_conv = o.to_field(field());
      rhs = &other_conv;
    } else {
      unify(o);
    }
  }
  if (modulus_) {
    num_ = static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(num_),
                                             static_cast<std::uint64_t>(rhs->num_), modulus_));
    return *this;
  }
  if (!big_ && !rhs->big_) {
    std::int64_t n;
    if (den_ == 1 && rhs->den_ == 1) {
      if (!__builtin_mul_overflow(num_, rhs->num_, &n)) {
        num_ = n;
        return *this;
      }
    } else {
      const std::int64_t g1 = std::gcd(num_, rhs->den_);
      const std::int64_t g2 = std::gcd(rhs->num_, den_);
      const std::int64_t a = g1 ? num_ / g1 : num_;
      const std::int64_t c = g2 ? rhs->num_ / g2 : rhs->num_;
      const std::int64_t b = g2 ? den_ / g2 : den_;
      const std::int64_t d = g1 ? rhs->den_ / g1 : rhs->den_;
      std::int64_t dd;
      if (!__builtin_mul_overflow(a, c, &n) && !__builtin_mul_overflow(b, d, &dd)) {
        num_ = n;
        den_ = dd;
        if (num_ == 0) den_ = 1;
        return *this;
      }
    }
  }
  set_big(to_mpq() * rhs->to_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) {
    if (a.modulus_ == 0) return a.to_field(b.field()).num_ == b.num_;
    if (b.modulus_ == 0) return b.to_field(a.field()).num_ == a.num_;
    throw FieldMismatch("comparison across " + a.field().to_string() + " and " +
                        b.field().to_string());
  }
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (modulus_ || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace wreath
