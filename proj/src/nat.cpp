#include "descents/nat.hpp"

#include <ostream>
#include <stdexcept>

namespace descents {

Nat::Nat(std::uint64_t value) {
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  value_ = static_cast<unsigned long>(value);
}

Nat Nat::from_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty decimal string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal natural: '" + std::string(text) + "'");
    }
  }
  Nat out;
  out.value_.set_str(std::string(text), 10);
  return out;
}

Nat Nat::from_mpz(mpz_class value) {
  if (sgn(value) < 0) {
    throw std::domain_error("negative value cannot be a Nat: " + value.get_str());
  }
  Nat out;
  out.value_ = std::move(value);
  return out;
}

std::string Nat::to_decimal() const { return value_.get_str(10); }

std::optional<std::uint64_t> Nat::to_u64() const {
  if (mpz_sizeinbase(value_.get_mpz_t(), 2) > 64) {
    return std::nullopt;
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

Nat& Nat::operator+=(const Nat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Nat& Nat::operator-=(const Nat& rhs) {
  if (cmp(value_, rhs.value_) < 0) {
    throw std::domain_error("Nat underflow: " + value_.get_str() + " - " + rhs.value_.get_str());
  }
  value_ -= rhs.value_;
  return *this;
}

Nat& Nat::operator<<=(unsigned bits) {
  mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
  return *this;
}

Nat& Nat::add_product(const Nat& a, const Nat& b) {
  mpz_addmul(value_.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return *this;
}

std::ostream& operator<<(std::ostream& out, const Nat& n) { return out << n.to_decimal(); }

}  // namespace descents
