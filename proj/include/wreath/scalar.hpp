#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "wreath/errors.hpp"

namespace wreath {

/// Descriptor of the ground field: the rationals, or Z/p for a prime p.
class Field {
 public:
  static Field rational() { return Field{0}; }
  /// Throws Error if p is not a prime below 2^62.
  static Field prime(std::uint64_t p);
  /// Accepts "rational" or "prime:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t m) : modulus_(m) {}
  std::uint64_t modulus_ = 0;
};

/// Exact field element.
///
/// Rationals take a fast path through reduced int64 fractions and promote to
/// GMP on overflow. Prime-field residues carry their modulus. A rational value
/// combined with a residue is first reduced into the prime field, so small
/// integer constants such as 0 and 1 work in every field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& q);

  /// The integer v viewed in field f.
  static Scalar in(const Field& f, std::int64_t v);
  /// Parses an integer or "a/b" into field f.
  static Scalar parse(const std::string& text, const Field& f);

  Scalar(const Scalar& o);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  Field field() const;
  /// Same value mapped into f (identity when already there).
  Scalar to_field(const Field& f) const;

  bool is_zero() const;
  bool is_one() const;

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
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "a", "-a/b" for rationals; the canonical residue for prime fields.
  std::string to_string() const;

  /// Exact rational value; throws for prime-field elements.
  mpq_class to_mpq() const;

 private:
  bool is_big() const { return static_cast<bool>(big_); }
  void normalize_small();
  void set_big(mpq_class q);
  void unify(const Scalar& o);
  void reduce_into(std::uint64_t p);

  // Rational: num_/den_ reduced with den_ > 0, unless big_ is set.
  // Prime field: num_ holds the residue in [0, modulus_).
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint64_t modulus_ = 0;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace wreath
