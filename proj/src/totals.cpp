#include "descents/totals.hpp"

#include <stdexcept>
#include <string>

namespace descents {

namespace {

std::vector<mpz_class> robinson_prefix(int n) {
  std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class sum = 0;
    for (int k = 1; k <= m; ++k) {
      mpz_class term;
      mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(k * (m - k)));
      term *= a[static_cast<std::size_t>(m - k)];
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    a[static_cast<std::size_t>(m)] = sum;
  }
  return a;
}

// n! * 2^C(n,2)
mpz_class series_denominator(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(n * (n - 1) / 2));
  return out;
}

}  // namespace

Nat robinson_total(int n) {
  if (n < 0) {
    throw std::invalid_argument("robinson_total: negative n " + std::to_string(n));
  }
  return Nat::from_mpz(robinson_prefix(n).back());
}

std::vector<mpq_class> stanley_product(int degree) {
  if (degree < 0) {
    throw std::invalid_argument("stanley_product: negative degree " + std::to_string(degree));
  }
  const auto a = robinson_prefix(degree);
  std::vector<mpq_class> counted, alternating;
  for (int n = 0; n <= degree; ++n) {
    const mpz_class den = series_denominator(n);
    mpq_class c(a[static_cast<std::size_t>(n)], den);
    c.canonicalize();
    counted.push_back(c);
    mpq_class s(n % 2 == 0 ? 1 : -1, den);
    s.canonicalize();
    alternating.push_back(s);
  }
  std::vector<mpq_class> product(static_cast<std::size_t>(degree) + 1);
  for (int m = 0; m <= degree; ++m) {
    mpq_class sum = 0;
    for (int i = 0; i <= m; ++i) {
      sum += counted[static_cast<std::size_t>(i)] * alternating[static_cast<std::size_t>(m - i)];
    }
    product[static_cast<std::size_t>(m)] = sum;
  }
  return product;
}

bool stanley_series_check(int degree) {
  const auto product = stanley_product(degree);
  for (std::size_t m = 0; m < product.size(); ++m) {
    if (product[m] != (m == 0 ? 1 : 0)) {
      return false;
    }
  }
  return true;
}

}  // namespace descents
