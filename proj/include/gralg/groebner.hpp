#ifndef GRALG_GROEBNER_HPP
#define GRALG_GROEBNER_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "gralg/linalg.hpp"
#include "gralg/module.hpp"

namespace gralg {

struct Submodule {
  GradedFreeModule module;
  std::vector<FreeVector> gens;
};

struct GroebnerBasis {
  GradedFreeModule module;
  std::vector<FreeVector> gens; // monic, auto-reduced, ascending leading terms
  int degree_cap = 0;
  bool truncated = false; // an S-pair above the cap was skipped
};

// Degree-truncated Buchberger with the coprimality and chain criteria.
// Inputs must be homogeneous; pairs are processed by ascending internal
// degree, so every leading term of internal degree <= degree_cap is found.
// If no pair exceeds the cap the basis is complete in all degrees.
GroebnerBasis buchberger(const PolyRing& R, const GradedFreeModule& F,
                         const std::vector<FreeVector>& gens, int degree_cap);

FreeVector normal_form(const PolyRing& R, const GradedFreeModule& F,
                       const FreeVector& v, const std::vector<FreeVector>& basis);
FreeVector normal_form(const PolyRing& R, const FreeVector& v, const GroebnerBasis& gb);

// Ideal (rank one) convenience wrappers.
std::vector<Polynomial> buchberger_ideal(const PolyRing& R,
                                         const std::vector<Polynomial>& gens,
                                         int degree_cap, bool* truncated = nullptr);
Polynomial normal_form(const PolyRing& R, const Polynomial& f,
                       const std::vector<Polynomial>& basis);

// Quotient ring R = S/I. Ideal generators are minimalized on construction;
// the Groebner basis of I is cached and extended on demand.
class QuotientRing {
public:
  QuotientRing(PolyRing S, std::vector<Polynomial> ideal_gens);

  const PolyRing& ring() const { return *ring_; }
  const std::vector<Polynomial>& ideal_gens() const { return ideal_gens_; }
  bool ideal_is_zero() const { return ideal_gens_.empty(); }

  const std::vector<Polynomial>& ideal_groebner(int degree_cap) const;
  bool ideal_groebner_complete() const { return gb_complete_; }

  // componentwise normal form mod I, canonical representative over R
  Polynomial reduce(const Polynomial& f) const;
  FreeVector reduce(const GradedFreeModule& F, const FreeVector& v) const;

  // standard monomials of degree d, lex descending; cached
  const std::vector<Monomial>& std_monomials(int degree) const;
  int hilbert(int degree) const;

  // dense coordinates of reduce(f) on the standard monomial basis
  std::vector<coeff_t> std_coords(const Polynomial& f, int degree) const;
  // column j: coordinates of x_v * (j-th standard monomial of from_degree)
  const std::vector<std::vector<coeff_t>>& var_mult_table(int v, int from_degree) const;

private:
  std::shared_ptr<const PolyRing> ring_;
  std::vector<Polynomial> ideal_gens_;
  mutable std::vector<Polynomial> gb_;
  mutable int gb_cap_ = -1;
  mutable bool gb_complete_ = false;
  mutable std::map<int, std::vector<Monomial>> std_cache_;
  mutable std::map<int, std::map<std::vector<int>, int>> std_index_;
  mutable std::map<std::pair<int, int>, std::vector<std::vector<coeff_t>>> mult_;
};

struct SyzygyResult {
  Submodule syzygies;     // ambient: one position per input generator
  bool truncated = false; // complete in all degrees when false
};

// Generating set for the syzygies of gens over R = S/I, up to the cap:
// vectors a with sum a_k gens_k lying in I*F. Computed by running
// Buchberger on the graph module {(g_k, eps_k)} + I*F with the positions
// of F dominant and harvesting the elements supported on the eps block.
SyzygyResult syzygy_basis(const QuotientRing& R, const Submodule& U, int degree_cap);

// Graded Nakayama: keeps a subset of gens that minimally generates the
// same submodule of F over R = S/I. Degreewise linear algebra on the
// standard monomial coordinates.
Submodule minimal_generators(const QuotientRing& R, const Submodule& U);

// Standard monomial basis of (F/(U + I*F))_degree as (monomial, position)
// pairs, positions ascending, monomials lex descending within a position.
std::vector<std::pair<Monomial, int>> k_basis(const QuotientRing& R,
                                              const Submodule& U, int degree);
// ring case: standard monomials of R in the given degree
const std::vector<Monomial>& k_basis(const QuotientRing& R, int degree);

struct EliminationResult {
  std::vector<Polynomial> gens; // supported on variables >= keep_from
  bool truncated = false;
};

// Intersection of the ideal with the subring on variables [keep_from, n).
// The ring must carry the elimination block order with block_split ==
// keep_from (discarded variables first).
EliminationResult eliminate(const PolyRing& R, const std::vector<Polynomial>& gens,
                            int keep_from, int degree_cap);

// Coordinate machinery for F/(U + I*F): graded piece bases and coordinate
// vectors, with the combined Groebner basis cached.
class QuotientModule {
public:
  QuotientModule(const QuotientRing& R, GradedFreeModule F,
                 std::vector<FreeVector> relations);

  const QuotientRing& ring() const { return *R_; }
  const GradedFreeModule& free_module() const { return F_; }
  const std::vector<FreeVector>& relations() const { return rel_; }

  const GroebnerBasis& combined_gb(int degree_cap) const;
  const std::vector<std::pair<Monomial, int>>& basis(int degree) const;
  int hilbert(int degree) const { return static_cast<int>(basis(degree).size()); }

  FreeVector reduce(const FreeVector& v) const;
  // coordinates of a homogeneous vector of the given internal degree
  std::vector<coeff_t> coords(const FreeVector& v, int degree) const;

private:
  const QuotientRing* R_;
  GradedFreeModule F_;
  std::vector<FreeVector> rel_;
  mutable GroebnerBasis gb_;
  mutable int gb_cap_ = -1;
  mutable bool gb_complete_ = false;
  mutable std::map<int, std::vector<std::pair<Monomial, int>>> basis_;
  mutable std::map<int, std::map<std::pair<std::vector<int>, int>, int>> index_;
};

// all monomials of the given plain degree, lex descending
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

} // namespace gralg

#endif
