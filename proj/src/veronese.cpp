#include "gralg/veronese.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "gralg/coords.hpp"

namespace gralg {

namespace {

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// exponent vector of the source monomial representing a y-monomial
Monomial lift_monomial(const std::vector<Monomial>& reps, int nvars, const Monomial& mu) {
  std::vector<int> e(nvars, 0);
  for (int k = 0; k < mu.nvars(); ++k)
    for (int i = 0; i < nvars; ++i) e[i] += mu.exponent(k) * reps[k].exponent(i);
  return Monomial(std::move(e));
}

}  // namespace

VeroneseShift veronese_shift_transform(int j, int c, int d) {
  if (c < 1) throw std::invalid_argument("veronese level must be at least 1");
  if (d < 0 || d >= c) throw std::invalid_argument("piece index out of range");
  int i = ceil_div(j - d, c);
  return {i * c + d - j, i};
}

VeroneseMap veronese_ring(std::shared_ptr<const QuotientRing> R, int c, int degree_cap) {
  if (c < 1) throw std::invalid_argument("veronese level must be at least 1");
  const PolyRing& S = R->ring();
  if (!S.weights_trivial() || S.block_split() != 0)
    throw std::invalid_argument("veronese ring needs a standard graded source");

  VeroneseMap out;
  out.source = R;
  out.level = c;
  out.reps = R->std_monomials(c);
  out.elim_cap = degree_cap * c;

  int n = S.nvars();
  int m = static_cast<int>(out.reps.size());
  std::vector<std::string> ynames;
  for (int k = 0; k < m; ++k) ynames.push_back("y" + std::to_string(k));

  std::vector<std::string> names = S.var_names();
  names.insert(names.end(), ynames.begin(), ynames.end());
  std::vector<int> weights(n, 1);
  weights.insert(weights.end(), m, c);
  PolyRing big(S.field(), std::move(names), std::move(weights), n,
               std::max(S.degree_cap(), out.elim_cap));

  auto lift = [&](const Monomial& a, int yvar) {
    std::vector<int> e = a.exponents();
    e.resize(n + m, 0);
    if (yvar >= 0) e[n + yvar] = 1;
    return Monomial(std::move(e));
  };
  std::vector<Polynomial> gens;
  for (const auto& f : R->ideal_gens()) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) ts.push_back({t.c, lift(t.m, -1)});
    gens.push_back(Polynomial::make(big, std::move(ts)));
  }
  for (int k = 0; k < m; ++k) {
    Monomial one = Monomial::one(n);
    gens.push_back(Polynomial::make(
        big, {{1, lift(one, k)}, {S.field().neg(1), lift(out.reps[k], -1)}}));
  }

  EliminationResult el = eliminate(big, gens, n, out.elim_cap);
  out.truncated = el.truncated;
  out.complete_to = degree_cap;

  PolyRing Y(S.field(), ynames);
  std::vector<Polynomial> J;
  for (const auto& f : el.gens) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
      const auto& e = t.m.exponents();
      ts.push_back({t.c, Monomial(std::vector<int>(e.begin() + n, e.end()))});
    }
    J.push_back(Polynomial::make(Y, std::move(ts)));
  }
  out.target = make_ring(std::move(Y), std::move(J));
  for (const auto& g : out.target->ideal_gens())
    if (g.terms()[0].m.degree() < 2)
      throw std::logic_error("veronese presentation has a linear relation");
  return out;
}

VeroneseModule veronese_module(const ModulePresentation& input, const VeroneseMap& v, int d,
                               int gen_cap, int relation_cap) {
  const int c = v.level;
  if (d < 0 || d >= c) throw std::invalid_argument("piece index out of range");
  ModulePresentation M = minimalize_presentation(input);
  const QuotientRing& R = *M.ring;
  const PolyRing& S = R.ring();
  if (S.nvars() != v.source->ring().nvars())
    throw std::invalid_argument("module and veronese map live over different rings");
  if (gen_cap < 0) gen_cap = default_generation_cap(M, c);
  if (v.truncated && relation_cap > v.complete_to)
    throw std::invalid_argument("veronese relations not certified through the cap");
  int probe_top = relation_cap * c + d;  // highest twisted source degree touched
  if (!M.relations_complete && M.relations_complete_to - M.twist < probe_top)
    throw std::invalid_argument("source relations not known through the probe window");

  VeroneseModule out;
  const QuotientRing& Y = *v.target;
  GradedFreeModule F = M.gens;
  QuotientModule QM(R, F, M.relations);

  int min_shift = 0;
  for (int a : M.shifted_degrees()) min_shift = std::min(min_shift, a);
  int e0 = ceil_div(min_shift - d, c);

  // generators: a piece needs new ones where R_c times the previous piece
  // does not span it
  for (int e = e0; e <= gen_cap && e <= relation_cap; ++e) {
    int u = e * c + d + M.twist;
    const auto& B = QM.basis(u);
    if (B.empty()) continue;
    RowSpace span(S.field(), static_cast<int>(B.size()));
    for (const auto& [mb, pb] : QM.basis(u - c))
      for (const auto& rep : v.reps) {
        FreeVector w = QM.reduce(
            FreeVector::make(S, F, {{1, rep * mb, pb}}));
        if (!w.is_zero()) span.insert(QM.coords(w, u));
      }
    for (std::size_t i = 0; i < B.size(); ++i) {
      std::vector<coeff_t> unit(B.size(), 0);
      unit[i] = 1;
      if (span.insert(std::move(unit))) {
        out.gen_reps.push_back(FreeVector::make(S, F, {{1, B[i].first, B[i].second}}));
        out.gen_degrees.push_back(e);
      }
    }
  }

  // relations: kernels of the evaluation map from the free module on the
  // chosen generators, degree by degree
  std::vector<std::pair<int, std::vector<coeff_t>>> cands;
  if (!out.gen_degrees.empty()) {
    int emin = *std::min_element(out.gen_degrees.begin(), out.gen_degrees.end());
    for (int e = emin; e <= relation_cap; ++e) {
      FreePiece PF = free_piece(Y, out.gen_degrees, e);
      if (PF.dim == 0) continue;
      int u = e * c + d + M.twist;
      int rows = static_cast<int>(QM.basis(u).size());
      std::vector<std::vector<coeff_t>> cols;
      for (std::size_t t = 0; t < out.gen_reps.size(); ++t)
        for (const auto& mu : Y.std_monomials(e - out.gen_degrees[t])) {
          Monomial xm = lift_monomial(v.reps, S.nvars(), mu);
          FreeVector w = QM.reduce(term_mul(S, F, 1, xm, out.gen_reps[t]));
          cols.push_back(w.is_zero() ? std::vector<coeff_t>(rows, 0) : QM.coords(w, u));
        }
      RowSpace image(S.field(), rows);
      for (const auto& co : cols) image.insert(co);
      if (image.rank() < rows) out.gens_complete = false;
      std::vector<std::vector<coeff_t>> A(rows, std::vector<coeff_t>(PF.dim, 0));
      for (int j = 0; j < PF.dim; ++j)
        for (int r = 0; r < rows; ++r) A[r][j] = cols[j][r];
      for (auto& kv : nullspace(S.field(), std::move(A), PF.dim))
        cands.push_back({e, std::move(kv)});
    }
  }
  DegreeSelection rel = select_minimal_vectors(Y, out.gen_degrees, std::move(cands));

  GradedFreeModule GF{out.gen_degrees, 0};
  std::vector<FreeVector> rels;
  for (std::size_t i = 0; i < rel.vecs.size(); ++i)
    rels.push_back(from_coords(Y, GF, rel.vecs[i], rel.degs[i]));
  out.pres = ModulePresentation{v.target,
                                GF,
                                std::move(rels),
                                0,
                                out.gen_degrees.empty(),
                                relation_cap};
  return out;
}

std::vector<VeroneseModule> restrict_module_to_veronese(const ModulePresentation& M,
                                                        const VeroneseMap& v, int gen_cap,
                                                        int relation_cap) {
  std::vector<VeroneseModule> out;
  for (int d = 0; d < v.level; ++d) out.push_back(veronese_module(M, v, d, gen_cap, relation_cap));
  return out;
}

std::vector<std::vector<VeroneseShift>> restrict_resolution_to_veronese(
    const ResolutionSlice& F, int c, int d) {
  std::vector<std::vector<VeroneseShift>> out;
  for (const auto& col : F.shifts) {
    std::vector<VeroneseShift> slice;
    for (int j : col) slice.push_back(veronese_shift_transform(j, c, d));
    out.push_back(std::move(slice));
  }
  return out;
}

BettiTable resolve_over_cover(const ModulePresentation& M, int N) {
  const QuotientRing& R = *M.ring;
  const PolyRing& S = R.ring();
  auto cover = make_ring(S, {});
  std::vector<FreeVector> rels = M.relations;
  for (const auto& f : R.ideal_gens())
    for (int pos = 0; pos < M.gens.rank(); ++pos)
      rels.push_back(unit_vector(S, M.gens, pos, f));
  ModulePresentation Mc{cover, M.gens, std::move(rels), M.twist, true, 0};

  if (N < 0) N = S.nvars();
  for (int D = default_degree_cutoff(N, Mc);; D += 3 * N + 3) {
    BettiTable B = resolve_minimal(Mc, N, D, ResolveEngine::groebner, false).second;
    if (std::all_of(B.column_complete.begin(), B.column_complete.end(),
                    [](bool b) { return b; }))
      return B;
  }
}

ExtRational regularity_over_cover(const ModulePresentation& M) {
  return regularity_truncated(resolve_over_cover(M));
}

int default_generation_cap(const ModulePresentation& M, int c) {
  ExtRational reg = regularity_over_cover(M);
  if (reg.is_minus_infinity()) return 0;
  return static_cast<int>((reg.value() / Rational(c)).ceil_ll()) + 1;
}

}  // namespace gralg
