#ifndef GRALG_MODULE_HPP
#define GRALG_MODULE_HPP

#include <string>
#include <vector>

#include "gralg/polynomial.hpp"

namespace gralg {

// Graded free module F = (+) R(-shift_k). The order on module terms is
// term-over-position: internal degree first (monomial degree plus the
// position's shift), then the ring's monomial order, then lower position
// wins. A positive dominant_prefix makes positions [0, dominant_prefix)
// an elimination block that beats all trailing positions; the syzygy
// computation uses this to read kernels off a Groebner basis.
struct GradedFreeModule {
  std::vector<int> shifts;
  int dominant_prefix = 0;

  int rank() const { return static_cast<int>(shifts.size()); }
};

struct ModTerm {
  coeff_t c;
  Monomial m;
  int pos;
};

class FreeVector {
public:
  FreeVector() = default;

  const std::vector<ModTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModTerm& leading_term() const { return terms_.front(); }
  size_t size() const { return terms_.size(); }

  bool operator==(const FreeVector& o) const;

  static FreeVector make(const PolyRing& R, const GradedFreeModule& F,
                         std::vector<ModTerm> terms);
  static FreeVector from_sorted(std::vector<ModTerm> terms) {
    FreeVector v;
    v.terms_ = std::move(terms);
    return v;
  }

private:
  std::vector<ModTerm> terms_;
};

Cmp compare(const PolyRing& R, const GradedFreeModule& F, const ModTerm& a,
            const ModTerm& b);

int internal_degree(const PolyRing& R, const GradedFreeModule& F, const ModTerm& t);

// internal degree of a homogeneous vector; throws on inhomogeneous input
int internal_degree(const PolyRing& R, const GradedFreeModule& F, const FreeVector& v);
bool is_homogeneous(const PolyRing& R, const GradedFreeModule& F, const FreeVector& v);

FreeVector add(const PolyRing& R, const GradedFreeModule& F, const FreeVector& a,
               const FreeVector& b);
FreeVector negate(const PolyRing& R, const FreeVector& a);
FreeVector scale(const PolyRing& R, coeff_t c, const FreeVector& a);
FreeVector term_mul(const PolyRing& R, const GradedFreeModule& F, coeff_t c,
                    const Monomial& m, const FreeVector& a);

// place a polynomial at a position of F
FreeVector unit_vector(const PolyRing& R, const GradedFreeModule& F, int pos,
                       const Polynomial& f);
Polynomial component(const FreeVector& v, int pos, const PolyRing& R);

std::string to_string(const PolyRing& R, const FreeVector& v);

} // namespace gralg

#endif
