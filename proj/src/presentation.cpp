#include "gralg/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace gralg {

namespace {

FreeVector poly_mul(const PolyRing& R, const GradedFreeModule& F, const Polynomial& p,
                    const FreeVector& v) {
  FreeVector acc;
  for (const auto& t : p.terms())
    acc = add(R, F, acc, term_mul(R, F, t.c, t.m, v));
  return acc;
}

} // namespace

std::vector<int> ModulePresentation::shifted_degrees() const {
  std::vector<int> out = gens.shifts;
  for (int& a : out) a -= twist;
  return out;
}

std::shared_ptr<const QuotientRing> make_ring(PolyRing S, std::vector<Polynomial> ideal_gens) {
  return std::make_shared<const QuotientRing>(std::move(S), std::move(ideal_gens));
}

void validate_presentation(const ModulePresentation& M) {
  if (!M.ring) throw std::invalid_argument("module presentation without a ring");
  const PolyRing& S = M.ring->ring();
  if (M.gens.dominant_prefix != 0)
    throw std::invalid_argument("module presentation with an elimination block");
  for (const auto& v : M.relations) {
    if (!is_homogeneous(S, M.gens, v))
      throw std::invalid_argument("inhomogeneous relation in module presentation");
    for (const auto& t : v.terms())
      if (t.pos < 0 || t.pos >= M.gens.rank())
        throw std::invalid_argument("relation position out of range");
  }
}

ModulePresentation ring_as_module(std::shared_ptr<const QuotientRing> R) {
  ModulePresentation M;
  M.ring = std::move(R);
  M.gens = GradedFreeModule{{0}, 0};
  return M;
}

ModulePresentation residue_field_module(std::shared_ptr<const QuotientRing> R) {
  ModulePresentation M;
  M.ring = std::move(R);
  M.gens = GradedFreeModule{{0}, 0};
  const PolyRing& S = M.ring->ring();
  for (int v = 0; v < S.nvars(); ++v)
    M.relations.push_back(unit_vector(S, M.gens, 0, poly_variable(S, v)));
  return M;
}

ModulePresentation power_ideal_module(std::shared_ptr<const QuotientRing> R, int s,
                                      int relation_cap) {
  if (s < 0) throw std::invalid_argument("negative power of the maximal ideal");
  if (s == 0) return ring_as_module(std::move(R));
  ModulePresentation M;
  M.ring = std::move(R);
  M.twist = s;
  const QuotientRing& Q = *M.ring;
  const PolyRing& S = Q.ring();
  const auto& mons = Q.std_monomials(s);
  M.gens = GradedFreeModule{std::vector<int>(mons.size(), s), 0};
  if (mons.empty()) return M; // m^s = 0

  GradedFreeModule F{{0}, 0};
  Submodule U{F, {}};
  for (const auto& m : mons)
    U.gens.push_back(unit_vector(S, F, 0, poly_monomial(S, 1, m)));
  auto syz = syzygy_basis(Q, U, relation_cap + s);
  Submodule mins = minimal_generators(Q, syz.syzygies);
  M.relations = std::move(mins.gens);
  M.relations_complete = !syz.truncated;
  M.relations_complete_to = relation_cap + s;
  return M;
}

ModulePresentation twisted(ModulePresentation M, int d) {
  M.twist += d;
  return M;
}

ModulePresentation minimalize_presentation(ModulePresentation M) {
  validate_presentation(M);
  const PolyRing& S = M.ring->ring();
  for (;;) {
    // hunt for a relation with a unit entry
    int rel_idx = -1, pos = -1;
    coeff_t unit = 0;
    for (int r = 0; r < static_cast<int>(M.relations.size()) && rel_idx < 0; ++r)
      for (const auto& t : M.relations[r].terms())
        if (t.m.is_one()) {
          rel_idx = r;
          pos = t.pos;
          unit = t.c;
          break;
        }
    if (rel_idx < 0) break;

    FreeVector pivot = M.relations[rel_idx];
    coeff_t inv = S.field().inv(unit);
    std::vector<FreeVector> next;
    for (int r = 0; r < static_cast<int>(M.relations.size()); ++r) {
      if (r == rel_idx) continue;
      Polynomial entry = component(M.relations[r], pos, S);
      FreeVector w = M.relations[r];
      if (!entry.is_zero())
        w = add(S, M.gens, w,
                poly_mul(S, M.gens, scale(S, S.field().neg(inv), entry), pivot));
      next.push_back(std::move(w));
    }

    // drop the pruned generator and reindex
    GradedFreeModule smaller;
    smaller.shifts = M.gens.shifts;
    smaller.shifts.erase(smaller.shifts.begin() + pos);
    std::vector<FreeVector> reindexed;
    for (const auto& v : next) {
      if (v.is_zero()) continue;
      std::vector<ModTerm> terms;
      for (const auto& t : v.terms()) {
        if (t.pos == pos)
          throw std::logic_error("presentation minimalization left a pruned entry");
        terms.push_back({t.c, t.m, t.pos > pos ? t.pos - 1 : t.pos});
      }
      reindexed.push_back(FreeVector::make(S, smaller, std::move(terms)));
    }
    M.gens = std::move(smaller);
    M.relations = std::move(reindexed);
  }
  return M;
}

ExtRational max_ideal_degree(const QuotientRing& R) {
  ExtRational out = ExtRational::minus_infinity();
  for (const auto& f : R.ideal_gens())
    out = ExtRational::max(out, ExtRational(*homogeneous_degree(R.ring(), f)));
  return out;
}

} // namespace gralg
