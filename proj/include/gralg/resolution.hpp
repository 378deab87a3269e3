#ifndef GRALG_RESOLUTION_HPP
#define GRALG_RESOLUTION_HPP

#include "gralg/presentation.hpp"

namespace gralg {

// Graded Betti numbers up to the cutoffs. Entries with j <= degree_cutoff
// are exact at every homological index; column_complete[i] additionally
// certifies that column i is exact in all degrees, so its t_i is final.
struct BettiTable {
  std::vector<std::map<int, int>> beta; // beta[i][j]
  int hom_cutoff = 0;
  int degree_cutoff = 0;
  std::vector<bool> column_complete;
};

struct ResolutionSlice {
  std::vector<std::vector<int>> shifts; // shifts[i]: generator degrees of F_i
  // maps[i][row][col]: entry of F_i -> F_{i-1} as a representative over S;
  // maps[0] is empty
  std::vector<std::vector<std::vector<Polynomial>>> maps;
};

// The groebner engine iterates syzygy bases and can certify columns complete
// in all degrees; the windowed engine finds kernels degree by degree with
// linear algebra and only ever claims the window j <= D.
enum class ResolveEngine { groebner, windowed };

std::pair<ResolutionSlice, BettiTable> resolve_minimal(
    const ModulePresentation& M, int N, int D,
    ResolveEngine engine = ResolveEngine::groebner, bool store_maps = true);

std::vector<ExtRational> t_values(const BettiTable& B); // -inf for empty columns
ExtRational regularity_truncated(const BettiTable& B);  // max t_i - i
ExtRational rate_truncated(const BettiTable& B);        // max t_i/i, 1 <= i <= N

// max over 2 <= i <= N+1 of (t_i(K) - 1)/(i - 1), resolving K through N+1;
// *truncated reports whether some column in that range was uncertified
ExtRational rat_of_ring(const std::shared_ptr<const QuotientRing>& R, int N, int D,
                        bool* truncated = nullptr,
                        ResolveEngine engine = ResolveEngine::groebner);

int default_degree_cutoff(int N, const ModulePresentation& M); // 3N + top gen degree

} // namespace gralg

#endif
