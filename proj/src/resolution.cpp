#include "gralg/resolution.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gralg/coords.hpp"

namespace gralg {

namespace {

std::vector<std::vector<Polynomial>> matrix_of(const PolyRing& S, const GradedFreeModule& target,
                                               const std::vector<FreeVector>& cols) {
  std::vector<std::vector<Polynomial>> m(
      target.rank(), std::vector<Polynomial>(cols.size(), poly_zero()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < target.rank(); ++r)
      m[r][c] = component(cols[c], r, S);
  return m;
}

void sort_by_degree(const PolyRing& S, const GradedFreeModule& F,
                    std::vector<FreeVector>& cols) {
  std::stable_sort(cols.begin(), cols.end(), [&](const FreeVector& a, const FreeVector& b) {
    return internal_degree(S, F, a) < internal_degree(S, F, b);
  });
}

}  // namespace

std::pair<ResolutionSlice, BettiTable> resolve_minimal(const ModulePresentation& input, int N,
                                                       int D, ResolveEngine engine,
                                                       bool store_maps) {
  if (N < 0) throw std::invalid_argument("negative homological cutoff");
  ModulePresentation M = minimalize_presentation(input);
  const QuotientRing& R = *M.ring;
  const PolyRing& S = R.ring();

  GradedFreeModule F0{M.shifted_degrees(), 0};
  if (!M.relations_complete && M.relations_complete_to - M.twist < D)
    throw std::invalid_argument("relations not known through the degree cutoff");
  for (int a : F0.shifts)
    if (a > D) throw std::invalid_argument("degree cutoff below the top generator degree");

  BettiTable B;
  B.hom_cutoff = N;
  B.degree_cutoff = D;
  B.beta.resize(N + 1);
  B.column_complete.assign(N + 1, false);
  ResolutionSlice slice;
  slice.shifts.resize(N + 1);
  slice.maps.resize(N + 1);

  slice.shifts[0] = F0.shifts;
  for (int a : F0.shifts) B.beta[0][a]++;
  B.column_complete[0] = true;
  if (N == 0) return {slice, B};
  if (F0.rank() == 0) {
    for (int i = 1; i <= N; ++i) B.column_complete[i] = true;
    return {slice, B};
  }

  if (engine == ResolveEngine::groebner) {
    GradedFreeModule F = F0;
    std::vector<FreeVector> cols = minimal_generators(R, Submodule{F0, M.relations}).gens;
    sort_by_degree(S, F, cols);
    bool complete = M.relations_complete;
    for (int i = 1; i <= N; ++i) {
      std::vector<int> degs;
      for (const auto& c : cols) degs.push_back(internal_degree(S, F, c));
      for (int d : degs) B.beta[i][d]++;
      slice.shifts[i] = degs;
      if (store_maps) slice.maps[i] = matrix_of(S, F, cols);
      B.column_complete[i] = complete;
      if (i == N) break;
      if (cols.empty()) {
        for (int j = i + 1; j <= N; ++j) B.column_complete[j] = complete;
        break;
      }
      SyzygyResult syz = syzygy_basis(R, Submodule{F, cols}, D);
      complete = complete && !syz.truncated;
      Submodule mins = minimal_generators(R, syz.syzygies);
      F = mins.module;
      cols = std::move(mins.gens);
      sort_by_degree(S, F, cols);
    }
    return {slice, B};
  }

  // windowed engine: degreewise linear algebra, exact through degree D only
  std::vector<int> Gdegs = F0.shifts;
  bool all_rels_in_window = true;
  std::vector<std::pair<int, std::vector<coeff_t>>> cands;
  for (const auto& rel : M.relations) {
    if (rel.is_zero()) continue;
    int d = internal_degree(S, F0, rel);
    if (d > D) {
      all_rels_in_window = false;
      continue;
    }
    cands.push_back({d, free_coords(R, Gdegs, rel, d)});
  }
  DegreeSelection step = select_minimal_vectors(R, Gdegs, std::move(cands));
  bool complete = M.relations_complete && all_rels_in_window;
  for (int i = 1; i <= N; ++i) {
    for (int d : step.degs) B.beta[i][d]++;
    slice.shifts[i] = step.degs;
    if (store_maps) {
      GradedFreeModule G{Gdegs, 0};
      std::vector<FreeVector> cols;
      for (std::size_t k = 0; k < step.vecs.size(); ++k)
        cols.push_back(from_coords(R, G, step.vecs[k], step.degs[k]));
      slice.maps[i] = matrix_of(S, G, cols);
    }
    B.column_complete[i] = complete;
    if (i == N) break;
    if (step.degs.empty()) {
      for (int j = i + 1; j <= N; ++j) B.column_complete[j] = complete;
      break;
    }
    DegreeSelection next = minimal_kernel_generators(R, step.degs, Gdegs, step.vecs, D);
    complete = false;
    Gdegs = std::move(step.degs);
    step = std::move(next);
  }
  return {slice, B};
}

std::vector<ExtRational> t_values(const BettiTable& B) {
  std::vector<ExtRational> t;
  t.reserve(B.beta.size());
  for (const auto& col : B.beta)
    t.push_back(col.empty() ? ExtRational::minus_infinity()
                            : ExtRational(Rational(col.rbegin()->first)));
  return t;
}

ExtRational regularity_truncated(const BettiTable& B) {
  ExtRational out = ExtRational::minus_infinity();
  std::vector<ExtRational> t = t_values(B);
  for (std::size_t i = 0; i < t.size(); ++i)
    out = ExtRational::max(out, t[i].sub(Rational(static_cast<long long>(i))));
  return out;
}

ExtRational rate_truncated(const BettiTable& B) {
  ExtRational out = ExtRational::minus_infinity();
  std::vector<ExtRational> t = t_values(B);
  for (std::size_t i = 1; i < t.size(); ++i)
    out = ExtRational::max(out, t[i].div_pos(static_cast<long long>(i)));
  return out;
}

ExtRational rat_of_ring(const std::shared_ptr<const QuotientRing>& R, int N, int D,
                        bool* truncated, ResolveEngine engine) {
  if (N < 1) throw std::invalid_argument("rat needs at least one syzygy step");
  ModulePresentation K = residue_field_module(R);
  BettiTable B = resolve_minimal(K, N + 1, D, engine, false).second;
  std::vector<ExtRational> t = t_values(B);
  ExtRational out = ExtRational::minus_infinity();
  bool trunc = false;
  for (int i = 2; i <= N + 1; ++i) {
    if (!B.column_complete[i]) trunc = true;
    if (t[i].is_minus_infinity()) continue;
    out = ExtRational::max(out, ExtRational((t[i].value() - Rational(1)) / Rational(i - 1)));
  }
  if (truncated) *truncated = trunc;
  return out;
}

int default_degree_cutoff(int N, const ModulePresentation& M) {
  int top = 0;
  for (int a : M.shifted_degrees()) top = std::max(top, a);
  return 3 * N + top;
}

}  // namespace gralg
