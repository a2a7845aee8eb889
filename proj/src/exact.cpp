#include "permpat/exact.hpp"

namespace permpat {

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::logic_error("exact_div: division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw std::logic_error("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
  return q;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace permpat
