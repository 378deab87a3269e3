#ifndef GRALG_POLYNOMIAL_HPP
#define GRALG_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gralg/ring.hpp"

namespace gralg {

struct Term {
  coeff_t c;
  Monomial m;
};

// Sparse polynomial, terms strictly descending in the ring's monomial order.
class Polynomial {
public:
  Polynomial() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }
  size_t size() const { return terms_.size(); }

  bool operator==(const Polynomial& o) const;

  // builds a polynomial from arbitrary terms: sorts, merges, drops zeros
  static Polynomial make(const PolyRing& R, std::vector<Term> terms);

  // trusted constructor: terms must already be strictly descending, nonzero
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial f;
    f.terms_ = std::move(terms);
    return f;
  }

private:
  std::vector<Term> terms_;
};

Polynomial poly_zero();
Polynomial poly_constant(const PolyRing& R, coeff_t c);
Polynomial poly_monomial(const PolyRing& R, coeff_t c, Monomial m);
Polynomial poly_variable(const PolyRing& R, int i);

Polynomial add(const PolyRing& R, const Polynomial& f, const Polynomial& g);
Polynomial sub(const PolyRing& R, const Polynomial& f, const Polynomial& g);
Polynomial negate(const PolyRing& R, const Polynomial& f);
Polynomial scale(const PolyRing& R, coeff_t c, const Polynomial& f);
Polynomial term_mul(const PolyRing& R, coeff_t c, const Monomial& m, const Polynomial& f);
Polynomial multiply(const PolyRing& R, const Polynomial& f, const Polynomial& g);

// weighted degree of the (unique) degree of a homogeneous polynomial;
// nullopt for 0, throws for inhomogeneous input when strict
std::optional<int> homogeneous_degree(const PolyRing& R, const Polynomial& f);
bool is_homogeneous(const PolyRing& R, const Polynomial& f);

std::string to_string(const PolyRing& R, const Polynomial& f);
std::string to_string(const PolyRing& R, const Monomial& m);

} // namespace gralg

#endif
