#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "exshift/errors.hpp"

namespace exshift {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

/// Arithmetic in F_q for a prime q < 2^31. Products of two residues fit in
/// 62 bits, and reduction uses a precomputed Barrett constant.
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t q = kDefaultPrime) : q_(q), barrett_(~0ULL / q) {
    if (q >= (1ULL << 31) || !is_prime(q))
      throw InputError("field modulus must be a prime below 2^31, got " + std::to_string(q));
  }

  std::uint64_t modulus() const noexcept { return q_; }

  /// Reduces any x < 2^63.
  std::uint64_t reduce(std::uint64_t x) const noexcept {
    const auto quot = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - quot * q_;
    while (r >= q_) r -= q_;
    return r;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return reduce(a * b); }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1;
    a = reduce(a);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % q_ == 0) throw SingularMatrix("inverse of zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
  }

  /// Maps a signed integer into F_q.
  std::uint64_t from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += static_cast<std::int64_t>(q_);
    return static_cast<std::uint64_t>(r);
  }

  /// Uniform residue by rejection on the raw 64-bit engine output, so the
  /// stream is identical across standard library implementations.
  std::uint64_t random(std::mt19937_64& rng) const {
    const std::uint64_t limit = ~0ULL - (~0ULL % q_);
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % q_;
  }

  std::uint64_t random_nonzero(std::mt19937_64& rng) const {
    std::uint64_t x;
    do {
      x = random(rng);
    } while (x == 0);
    return x;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

 private:
  std::uint64_t q_;
  std::uint64_t barrett_;
};

/// A single element of F_q carrying its modulus.
class FieldScalar {
 public:
  FieldScalar(const PrimeField& field, std::int64_t v) : field_(field), value_(field.from_int(v)) {}

  std::uint64_t value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }

  FieldScalar operator+(const FieldScalar& o) const { return raw(field_.add(value_, o.value_)); }
  FieldScalar operator-(const FieldScalar& o) const { return raw(field_.sub(value_, o.value_)); }
  FieldScalar operator*(const FieldScalar& o) const { return raw(field_.mul(value_, o.value_)); }
  FieldScalar operator-() const { return raw(field_.neg(value_)); }
  FieldScalar inverse() const { return raw(field_.inv(value_)); }
  FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }

  bool operator==(const FieldScalar& o) const { return value_ == o.value_ && field_ == o.field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend std::ostream& operator<<(std::ostream& os, const FieldScalar& s) { return os << s.value_; }

 private:
  FieldScalar raw(std::uint64_t v) const {
    FieldScalar s(field_, 0);
    s.value_ = v;
    return s;
  }

  PrimeField field_;
  std::uint64_t value_;
};

}  // namespace exshift
