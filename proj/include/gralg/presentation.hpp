#ifndef GRALG_PRESENTATION_HPP
#define GRALG_PRESENTATION_HPP

#include <memory>

#include "gralg/groebner.hpp"
#include "gralg/rational.hpp"

namespace gralg {

// Finite graded presentation of a module over R = S/I: the cokernel of the
// relation columns inside the free module on the generator shifts. A twist
// of d presents M(d), so the degrees the invariants see are shift - twist.
struct ModulePresentation {
  std::shared_ptr<const QuotientRing> ring;
  GradedFreeModule gens;             // generator shifts, before the twist
  std::vector<FreeVector> relations; // homogeneous w.r.t. gens
  int twist = 0;
  bool relations_complete = true;
  int relations_complete_to = 0; // untwisted degree bound when incomplete

  std::vector<int> shifted_degrees() const; // shifts - twist
};

std::shared_ptr<const QuotientRing> make_ring(PolyRing S, std::vector<Polynomial> ideal_gens);

// throws unless the relations are homogeneous and the shifts make sense
void validate_presentation(const ModulePresentation& M);

ModulePresentation ring_as_module(std::shared_ptr<const QuotientRing> R);

// K = R/m: one generator in degree zero, the variables as relations
ModulePresentation residue_field_module(std::shared_ptr<const QuotientRing> R);

// m^s(s): generators are the standard monomials of degree s, twisted to
// degree zero; relations are their minimal syzygies over R, complete through
// twisted degree relation_cap (or in all degrees if nothing was truncated)
ModulePresentation power_ideal_module(std::shared_ptr<const QuotientRing> R, int s,
                                      int relation_cap);

ModulePresentation twisted(ModulePresentation M, int d); // apply a further twist

// eliminates relations with constant entries, pruning the generators they
// make redundant; afterwards the generator set is minimal
ModulePresentation minimalize_presentation(ModulePresentation M);

// largest degree of a minimal generator of the defining ideal; -inf for 0
ExtRational max_ideal_degree(const QuotientRing& R);

} // namespace gralg

#endif
