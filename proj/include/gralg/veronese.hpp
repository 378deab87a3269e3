#ifndef GRALG_VERONESE_HPP
#define GRALG_VERONESE_HPP

#include <memory>
#include <vector>

#include "gralg/presentation.hpp"
#include "gralg/resolution.hpp"

namespace gralg {

// where a shifted free summand R(-j) lands when regraded over the c-th
// Veronese subring: piece k_d, shifted by i_d
struct VeroneseShift {
  int piece = 0;
  int shift = 0;
};

VeroneseShift veronese_shift_transform(int j, int c, int d);

// the subring generated by the degree-c part, presented as K[y]/J with one
// variable per standard monomial of degree c (lex descending)
struct VeroneseMap {
  std::shared_ptr<const QuotientRing> source;
  int level = 1;
  std::shared_ptr<const QuotientRing> target; // K[y]/J, standard graded
  std::vector<Monomial> reps;                 // source monomial behind each y
  int elim_cap = 0;        // weighted degree cap used in the elimination
  bool truncated = false;  // J may be missing generators above the cap
  int complete_to = 0;     // y-degree through which J is certified
};

// J = eliminate((y_k - rep_k) + I, keep y); degree_cap is in the y-grading
VeroneseMap veronese_ring(std::shared_ptr<const QuotientRing> R, int c, int degree_cap);

struct VeroneseModule {
  ModulePresentation pres;          // over map.target
  std::vector<FreeVector> gen_reps; // chosen generators inside the source module
  std::vector<int> gen_degrees;     // their degrees in the y-grading
  bool gens_complete = true;        // generators span every probed piece
};

// the piece \oplus_i M_{ic+d} as a module over the Veronese subring;
// generators are hunted through degree gen_cap and relations through
// relation_cap (both in the y-grading); gen_cap < 0 picks a default from the
// regularity of M over the polynomial cover
VeroneseModule veronese_module(const ModulePresentation& M, const VeroneseMap& v, int d,
                               int gen_cap, int relation_cap);

// all c pieces of M, index d = 0 .. c-1
std::vector<VeroneseModule> restrict_module_to_veronese(const ModulePresentation& M,
                                                        const VeroneseMap& v, int gen_cap,
                                                        int relation_cap);

// shift data of a resolution transported along the regrading
std::vector<std::vector<VeroneseShift>> restrict_resolution_to_veronese(
    const ResolutionSlice& F, int c, int d);

// resolution of M over the polynomial ring behind its quotient ring, with
// every column certified complete; N defaults to the variable count, which
// already covers the whole resolution
BettiTable resolve_over_cover(const ModulePresentation& M, int N = -1);

// exact regularity of M over the polynomial ring behind its quotient ring
ExtRational regularity_over_cover(const ModulePresentation& M);

// ceil(reg_S(M) / c) + 1, the default generation-degree cap
int default_generation_cap(const ModulePresentation& M, int c);

} // namespace gralg

#endif
