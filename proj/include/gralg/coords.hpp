#ifndef GRALG_COORDS_HPP
#define GRALG_COORDS_HPP

#include <utility>
#include <vector>

#include "gralg/groebner.hpp"
#include "gralg/linalg.hpp"

namespace gralg {

// Dense coordinates on a graded piece of a free module over R = S/I: one
// block of standard monomials per position, positions ascending, monomials
// lex descending within a block.
struct FreePiece {
  std::vector<int> offset;
  int dim = 0;
};

FreePiece free_piece(const QuotientRing& R, const std::vector<int>& shifts, int d);

std::vector<coeff_t> free_coords(const QuotientRing& R, const std::vector<int>& shifts,
                                 const FreeVector& v, int d);

// image of a degree-d coordinate vector under multiplication by x_v
std::vector<coeff_t> free_var_mult(const QuotientRing& R, const std::vector<int>& shifts,
                                   int d, int v, const std::vector<coeff_t>& in);

std::vector<coeff_t> free_mon_mult(const QuotientRing& R, const std::vector<int>& shifts,
                                   int d, const Monomial& m, std::vector<coeff_t> vec);

FreeVector from_coords(const QuotientRing& R, const GradedFreeModule& F,
                       const std::vector<coeff_t>& vec, int d);

// homogeneous vectors chosen degree by degree, as coordinates over the free
// module on Fdegs
struct DegreeSelection {
  std::vector<int> degs;
  std::vector<std::vector<coeff_t>> vecs;
};

// graded Nakayama among explicit candidates: keeps the ones not spanned by
// multiples of lower (or earlier) keepers
DegreeSelection select_minimal_vectors(const QuotientRing& R, const std::vector<int>& Fdegs,
                                       std::vector<std::pair<int, std::vector<coeff_t>>> cands);

// minimal generators of ker(phi) through degree D, where the columns of
// phi: F -> G are given in coordinates over G at their degrees
DegreeSelection minimal_kernel_generators(const QuotientRing& R, const std::vector<int>& Fdegs,
                                          const std::vector<int>& Gdegs,
                                          const std::vector<std::vector<coeff_t>>& cols, int D);

} // namespace gralg

#endif
