#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace descents {

// Arbitrary-precision nonnegative integer. Every count in the library is a
// Nat; subtraction that would go below zero throws instead of wrapping.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  // Accepts a nonempty string of ASCII digits (leading zeros allowed).
  static Nat from_decimal(std::string_view text);

  // Throws std::domain_error if value is negative.
  static Nat from_mpz(mpz_class value);

  std::string to_decimal() const;
  std::optional<std::uint64_t> to_u64() const;

  const mpz_class& mpz() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  Nat& operator+=(const Nat& rhs);
  Nat& operator*=(const Nat& rhs);
  // Throws std::domain_error on underflow.
  Nat& operator-=(const Nat& rhs);
  Nat& operator<<=(unsigned bits);

  // *this += a * b without a temporary.
  Nat& add_product(const Nat& a, const Nat& b);

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }
  friend Nat operator-(Nat lhs, const Nat& rhs) { return lhs -= rhs; }
  friend Nat operator<<(Nat lhs, unsigned bits) { return lhs <<= bits; }

  friend bool operator==(const Nat& a, const Nat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& out, const Nat& n);

 private:
  mpz_class value_;
};

}  // namespace descents
