#ifndef GRALG_FIELD_HPP
#define GRALG_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gralg {

using coeff_t = std::int64_t;

// Arithmetic context for the prime field F_p. Elements are canonical
// residues in [0, p). The default characteristic used by callers is 32003.
class PrimeField {
public:
  explicit PrimeField(coeff_t p) : p_(p) {
    if (p < 3 || p >= (coeff_t(1) << 31))
      throw std::invalid_argument("characteristic out of range: " + std::to_string(p));
    if (!is_prime(p))
      throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
  }

  coeff_t p() const { return p_; }

  coeff_t reduce(coeff_t a) const {
    coeff_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }

  coeff_t add(coeff_t a, coeff_t b) const {
    coeff_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }

  coeff_t sub(coeff_t a, coeff_t b) const {
    coeff_t r = a - b;
    return r < 0 ? r + p_ : r;
  }

  coeff_t neg(coeff_t a) const { return a == 0 ? 0 : p_ - a; }

  coeff_t mul(coeff_t a, coeff_t b) const { return (a * b) % p_; }

  coeff_t inv(coeff_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    coeff_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      coeff_t q = r / new_r;
      coeff_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return t < 0 ? t + p_ : t;
  }

  coeff_t divide(coeff_t a, coeff_t b) const { return mul(a, inv(b)); }

private:
  static bool is_prime(coeff_t n) {
    if (n % 2 == 0) return n == 2;
    for (coeff_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  coeff_t p_;
};

} // namespace gralg

#endif
