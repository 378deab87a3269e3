#include "gralg/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gralg {

namespace {

FreeVector make_monic(const PolyRing& R, FreeVector v) {
  if (v.is_zero() || v.leading_term().c == 1) return v;
  return scale(R, R.field().inv(v.leading_term().c), v);
}

FreeVector drop_leading(const FreeVector& v) {
  std::vector<ModTerm> rest(v.terms().begin() + 1, v.terms().end());
  return FreeVector::from_sorted(std::move(rest));
}

// max internal degree over the terms; 0 for the zero vector
int top_degree(const PolyRing& R, const GradedFreeModule& F, const FreeVector& v) {
  int d = 0;
  for (const auto& t : v.terms()) d = std::max(d, internal_degree(R, F, t));
  return d;
}

// leading terms pairwise indivisible after minimalization, so one pass of
// tail reduction against the updated elements yields the reduced basis
std::vector<FreeVector> reduce_basis(const PolyRing& R, const GradedFreeModule& F,
                                     std::vector<FreeVector> basis) {
  std::stable_sort(basis.begin(), basis.end(),
                   [&](const FreeVector& a, const FreeVector& b) {
                     return compare(R, F, a.leading_term(), b.leading_term()) == Cmp::less;
                   });
  std::vector<FreeVector> kept;
  for (auto& g : basis) {
    const ModTerm& lt = g.leading_term();
    bool redundant = false;
    for (const auto& h : kept) {
      const ModTerm& lh = h.leading_term();
      if (lh.pos == lt.pos && lh.m.divides(lt.m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<FreeVector> others;
    others.reserve(kept.size() - 1);
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = normal_form(R, F, kept[i], others);
  }
  return kept;
}

} // namespace

FreeVector normal_form(const PolyRing& R, const GradedFreeModule& F,
                       const FreeVector& v, const std::vector<FreeVector>& basis) {
  FreeVector work = v;
  std::vector<ModTerm> out;
  while (!work.is_zero()) {
    const ModTerm t = work.leading_term();
    const FreeVector* g = nullptr;
    for (const auto& b : basis) {
      if (b.is_zero()) continue;
      const ModTerm& lt = b.leading_term();
      if (lt.pos == t.pos && lt.m.divides(t.m)) {
        g = &b;
        break;
      }
    }
    if (!g) {
      out.push_back(t);
      work = drop_leading(work);
      continue;
    }
    const ModTerm& lt = g->leading_term();
    coeff_t f = R.field().divide(t.c, lt.c);
    Monomial u = Monomial::quotient(t.m, lt.m);
    work = add(R, F, work, term_mul(R, F, R.field().neg(f), u, *g));
  }
  return FreeVector::from_sorted(std::move(out));
}

FreeVector normal_form(const PolyRing& R, const FreeVector& v, const GroebnerBasis& gb) {
  return normal_form(R, gb.module, v, gb.gens);
}

Polynomial normal_form(const PolyRing& R, const Polynomial& f,
                       const std::vector<Polynomial>& basis) {
  GradedFreeModule F{{0}, 0};
  std::vector<FreeVector> b;
  b.reserve(basis.size());
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(unit_vector(R, F, 0, g));
  return component(normal_form(R, F, unit_vector(R, F, 0, f), b), 0, R);
}

GroebnerBasis buchberger(const PolyRing& R, const GradedFreeModule& F,
                         const std::vector<FreeVector>& gens, int degree_cap) {
  for (const auto& g : gens)
    if (!is_homogeneous(R, F, g))
      throw std::invalid_argument("buchberger: generators must be homogeneous");

  std::vector<FreeVector> basis;
  std::set<std::tuple<int, int, int>> queue; // (internal degree of lcm, i, j)
  std::set<std::pair<int, int>> treated;
  bool truncated = false;

  // the product criterion needs the rank-one argument, so it only applies
  // when both vectors live entirely in their common leading position
  auto single_position = [](const FreeVector& v) {
    int p = v.leading_term().pos;
    for (const auto& t : v.terms())
      if (t.pos != p) return false;
    return true;
  };

  auto push_pairs = [&](int k) {
    const ModTerm& lk = basis[k].leading_term();
    for (int i = 0; i < k; ++i) {
      const ModTerm& li = basis[i].leading_term();
      if (li.pos != lk.pos) continue;
      Monomial L = Monomial::lcm(li.m, lk.m);
      queue.insert({R.weighted_degree(L) + F.shifts[li.pos], i, k});
    }
  };

  for (const auto& g : gens) {
    FreeVector h = normal_form(R, F, g, basis);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(R, std::move(h)));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  while (!queue.empty()) {
    auto [d, i, j] = *queue.begin();
    if (d > degree_cap) {
      truncated = true;
      break;
    }
    queue.erase(queue.begin());
    treated.insert({i, j});
    const ModTerm& li = basis[i].leading_term();
    const ModTerm& lj = basis[j].leading_term();
    if (Monomial::coprime(li.m, lj.m) && single_position(basis[i]) &&
        single_position(basis[j]))
      continue;
    Monomial L = Monomial::lcm(li.m, lj.m);
    // chain criterion, proper-divisor form: the two smaller pairs sit at
    // strictly lower degree, hence were already processed
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == i || k == j) continue;
      const ModTerm& lk = basis[k].leading_term();
      if (lk.pos != li.pos || !lk.m.divides(L)) continue;
      Monomial lik = Monomial::lcm(li.m, lk.m);
      Monomial ljk = Monomial::lcm(lj.m, lk.m);
      if (lik == L || ljk == L) continue;
      if (treated.count({std::min(i, k), std::max(i, k)}) &&
          treated.count({std::min(j, k), std::max(j, k)}))
        chained = true;
    }
    if (chained) continue;
    FreeVector s =
        add(R, F, term_mul(R, F, 1, Monomial::quotient(L, li.m), basis[i]),
            term_mul(R, F, R.field().neg(1), Monomial::quotient(L, lj.m), basis[j]));
    FreeVector h = normal_form(R, F, s, basis);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(R, std::move(h)));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  GroebnerBasis out;
  out.module = F;
  out.gens = reduce_basis(R, F, std::move(basis));
  out.degree_cap = degree_cap;
  out.truncated = truncated;
  return out;
}

std::vector<Polynomial> buchberger_ideal(const PolyRing& R,
                                         const std::vector<Polynomial>& gens,
                                         int degree_cap, bool* truncated) {
  GradedFreeModule F{{0}, 0};
  std::vector<FreeVector> vecs;
  for (const auto& f : gens)
    if (!f.is_zero()) vecs.push_back(unit_vector(R, F, 0, f));
  GroebnerBasis gb = buchberger(R, F, vecs, degree_cap);
  if (truncated) *truncated = gb.truncated;
  std::vector<Polynomial> out;
  out.reserve(gb.gens.size());
  for (const auto& v : gb.gens) out.push_back(component(v, 0, R));
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<int> exps(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == nvars - 1) {
      exps[i] = rem;
      out.push_back(Monomial(exps));
      return;
    }
    for (int e = rem; e >= 0; --e) {
      exps[i] = e;
      rec(i + 1, rem - e);
    }
  };
  rec(0, degree);
  return out;
}

// ---- quotient rings ----

namespace {
std::vector<Polynomial> minimalize_ideal(const PolyRing& R, std::vector<Polynomial> gens);
}

QuotientRing::QuotientRing(PolyRing S, std::vector<Polynomial> ideal_gens)
    : ring_(std::make_shared<PolyRing>(std::move(S))) {
  std::vector<Polynomial> cleaned;
  for (auto& f : ideal_gens) {
    if (f.is_zero()) continue;
    homogeneous_degree(*ring_, f); // throws on inhomogeneous input
    cleaned.push_back(std::move(f));
  }
  // generator minimalization runs degreewise on standard monomials, which
  // needs the plain grading; block/weighted rings keep their input list
  if (cleaned.size() > 1 && ring_->weights_trivial() && ring_->block_split() == 0)
    cleaned = minimalize_ideal(*ring_, std::move(cleaned));
  ideal_gens_ = std::move(cleaned);
}

const std::vector<Polynomial>& QuotientRing::ideal_groebner(int degree_cap) const {
  if (gb_complete_ || gb_cap_ >= degree_cap) return gb_;
  bool trunc = false;
  gb_ = buchberger_ideal(*ring_, ideal_gens_, degree_cap, &trunc);
  gb_cap_ = degree_cap;
  gb_complete_ = !trunc;
  return gb_;
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  if (f.is_zero() || ideal_gens_.empty()) return f;
  int d = 0;
  for (const auto& t : f.terms()) d = std::max(d, ring_->weighted_degree(t.m));
  return normal_form(*ring_, f, ideal_groebner(d));
}

FreeVector QuotientRing::reduce(const GradedFreeModule& F, const FreeVector& v) const {
  if (v.is_zero() || ideal_gens_.empty()) return v;
  int d = 0;
  for (const auto& t : v.terms()) d = std::max(d, ring_->weighted_degree(t.m));
  const auto& gb = ideal_groebner(d);
  FreeVector acc;
  for (int pos = 0; pos < F.rank(); ++pos) {
    Polynomial comp = component(v, pos, *ring_);
    if (comp.is_zero()) continue;
    Polynomial r = normal_form(*ring_, comp, gb);
    if (!r.is_zero()) acc = add(*ring_, F, acc, unit_vector(*ring_, F, pos, r));
  }
  return acc;
}

const std::vector<Monomial>& QuotientRing::std_monomials(int degree) const {
  if (!ring_->weights_trivial() || ring_->block_split() != 0)
    throw std::logic_error("standard monomials need the plain graded order");
  auto it = std_cache_.find(degree);
  if (it != std_cache_.end()) return it->second;
  if (degree < 0)
    return std_cache_.emplace(degree, std::vector<Monomial>{}).first->second;
  const auto& gb = ideal_groebner(degree);
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(ring_->nvars(), degree)) {
    bool reducible = false;
    for (const auto& g : gb) {
      if (g.leading_term().m.divides(m)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(std::move(m));
  }
  return std_cache_.emplace(degree, std::move(out)).first->second;
}

int QuotientRing::hilbert(int degree) const {
  if (degree < 0) return 0;
  return static_cast<int>(std_monomials(degree).size());
}

std::vector<coeff_t> QuotientRing::std_coords(const Polynomial& f, int degree) const {
  const auto& B = std_monomials(degree);
  auto idx_it = std_index_.find(degree);
  if (idx_it == std_index_.end()) {
    auto& idx = std_index_[degree];
    for (int i = 0; i < static_cast<int>(B.size()); ++i) idx[B[i].exponents()] = i;
    idx_it = std_index_.find(degree);
  }
  const auto& idx = idx_it->second;
  std::vector<coeff_t> out(B.size(), 0);
  Polynomial r = reduce(f);
  for (const auto& t : r.terms()) {
    auto it = idx.find(t.m.exponents());
    if (it == idx.end())
      throw std::logic_error("std_coords: polynomial is not homogeneous of the given degree");
    out[it->second] = t.c;
  }
  return out;
}

const std::vector<std::vector<coeff_t>>& QuotientRing::var_mult_table(int v,
                                                                      int from_degree) const {
  auto key = std::make_pair(v, from_degree);
  auto it = mult_.find(key);
  if (it != mult_.end()) return it->second;
  const auto& B = std_monomials(from_degree);
  std::vector<std::vector<coeff_t>> table;
  table.reserve(B.size());
  for (const auto& m : B) {
    Polynomial p = poly_monomial(*ring_, 1, m * Monomial::variable(ring_->nvars(), v));
    table.push_back(std_coords(p, from_degree + 1));
  }
  return mult_.emplace(key, std::move(table)).first->second;
}

// ---- quotient modules ----

QuotientModule::QuotientModule(const QuotientRing& R, GradedFreeModule F,
                               std::vector<FreeVector> relations)
    : R_(&R), F_(std::move(F)), rel_(std::move(relations)) {
  for (const auto& v : rel_)
    if (!is_homogeneous(R.ring(), F_, v))
      throw std::invalid_argument("quotient module: relations must be homogeneous");
}

const GroebnerBasis& QuotientModule::combined_gb(int degree_cap) const {
  if (gb_complete_ || gb_cap_ >= degree_cap) return gb_;
  const PolyRing& S = R_->ring();
  std::vector<FreeVector> gens = rel_;
  for (const auto& f : R_->ideal_gens())
    for (int pos = 0; pos < F_.rank(); ++pos)
      gens.push_back(unit_vector(S, F_, pos, f));
  gb_ = buchberger(S, F_, gens, degree_cap);
  gb_cap_ = degree_cap;
  gb_complete_ = !gb_.truncated;
  return gb_;
}

const std::vector<std::pair<Monomial, int>>& QuotientModule::basis(int degree) const {
  auto it = basis_.find(degree);
  if (it != basis_.end()) return it->second;
  const PolyRing& S = R_->ring();
  if (!S.weights_trivial() || S.block_split() != 0)
    throw std::logic_error("graded piece basis needs the plain graded order");
  std::vector<std::pair<Monomial, int>> B;
  bool nonempty = false;
  for (int pos = 0; pos < F_.rank(); ++pos)
    if (degree - F_.shifts[pos] >= 0) nonempty = true;
  const GroebnerBasis* gb = nonempty ? &combined_gb(degree) : nullptr;
  for (int pos = 0; pos < F_.rank(); ++pos) {
    int d = degree - F_.shifts[pos];
    if (d < 0) continue;
    for (auto& m : monomials_of_degree(S.nvars(), d)) {
      bool reducible = false;
      for (const auto& g : gb->gens) {
        const ModTerm& lt = g.leading_term();
        if (lt.pos == pos && lt.m.divides(m)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) B.emplace_back(std::move(m), pos);
    }
  }
  auto& slot = basis_[degree];
  slot = std::move(B);
  auto& idx = index_[degree];
  for (int i = 0; i < static_cast<int>(slot.size()); ++i)
    idx[{slot[i].first.exponents(), slot[i].second}] = i;
  return slot;
}

FreeVector QuotientModule::reduce(const FreeVector& v) const {
  if (v.is_zero()) return v;
  const PolyRing& S = R_->ring();
  const GroebnerBasis& gb = combined_gb(top_degree(S, F_, v));
  return normal_form(S, F_, v, gb.gens);
}

std::vector<coeff_t> QuotientModule::coords(const FreeVector& v, int degree) const {
  const auto& B = basis(degree);
  const auto& idx = index_.at(degree);
  std::vector<coeff_t> out(B.size(), 0);
  FreeVector r = reduce(v);
  for (const auto& t : r.terms()) {
    auto it = idx.find({t.m.exponents(), t.pos});
    if (it == idx.end())
      throw std::logic_error("coords: vector is not homogeneous of the given degree");
    out[it->second] = t.c;
  }
  return out;
}

// ---- graded piece bases ----

std::vector<std::pair<Monomial, int>> k_basis(const QuotientRing& R,
                                              const Submodule& U, int degree) {
  QuotientModule qm(R, U.module, U.gens);
  return qm.basis(degree);
}

const std::vector<Monomial>& k_basis(const QuotientRing& R, int degree) {
  return R.std_monomials(degree);
}

// ---- minimal generators ----

Submodule minimal_generators(const QuotientRing& R, const Submodule& U) {
  const PolyRing& S = R.ring();
  const GradedFreeModule& F = U.module;
  struct Cand {
    int input;
    FreeVector red;
    int degree;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < static_cast<int>(U.gens.size()); ++i) {
    FreeVector r = R.reduce(F, U.gens[i]);
    if (r.is_zero()) continue;
    int d = internal_degree(S, F, r);
    cands.push_back({i, std::move(r), d});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.degree < b.degree; });

  QuotientModule amb(R, F, {});
  std::vector<std::pair<FreeVector, int>> kept; // reduced generator, degree
  std::vector<int> kept_inputs;

  size_t pos = 0;
  while (pos < cands.size()) {
    int d = cands[pos].degree;
    const auto& B = amb.basis(d);
    RowSpace span(S.field(), static_cast<int>(B.size()));
    for (const auto& [g, e] : kept)
      for (const auto& m : R.std_monomials(d - e)) {
        FreeVector w = R.reduce(F, term_mul(S, F, 1, m, g));
        if (!w.is_zero()) span.insert(amb.coords(w, d));
      }
    while (pos < cands.size() && cands[pos].degree == d) {
      if (span.insert(amb.coords(cands[pos].red, d))) {
        kept.emplace_back(cands[pos].red, d);
        kept_inputs.push_back(cands[pos].input);
      }
      ++pos;
    }
  }

  std::sort(kept_inputs.begin(), kept_inputs.end());
  Submodule out;
  out.module = F;
  for (int i : kept_inputs) out.gens.push_back(U.gens[i]);
  return out;
}

namespace {
std::vector<Polynomial> minimalize_ideal(const PolyRing& R, std::vector<Polynomial> gens) {
  QuotientRing trivial(R, {});
  GradedFreeModule F{{0}, 0};
  Submodule U;
  U.module = F;
  for (const auto& f : gens) U.gens.push_back(unit_vector(R, F, 0, f));
  Submodule kept = minimal_generators(trivial, U);
  std::vector<Polynomial> out;
  out.reserve(kept.gens.size());
  for (const auto& v : kept.gens) out.push_back(component(v, 0, R));
  return out;
}
} // namespace

// ---- syzygies ----

SyzygyResult syzygy_basis(const QuotientRing& R, const Submodule& U, int degree_cap) {
  const PolyRing& S = R.ring();
  const GradedFreeModule& F = U.module;
  int r = F.rank();
  GradedFreeModule G;
  G.shifts = F.shifts;
  for (const auto& g : U.gens) {
    if (g.is_zero())
      throw std::invalid_argument("syzygy basis: zero generator");
    G.shifts.push_back(internal_degree(S, F, g));
  }
  G.dominant_prefix = r;

  std::vector<FreeVector> graph;
  for (int k = 0; k < static_cast<int>(U.gens.size()); ++k) {
    std::vector<ModTerm> terms = U.gens[k].terms();
    terms.push_back({1, Monomial::one(S.nvars()), r + k});
    graph.push_back(FreeVector::make(S, G, std::move(terms)));
  }
  for (const auto& f : R.ideal_gens())
    for (int pos = 0; pos < r; ++pos)
      graph.push_back(unit_vector(S, G, pos, f));

  GroebnerBasis gb = buchberger(S, G, graph, degree_cap);

  GradedFreeModule E{std::vector<int>(G.shifts.begin() + r, G.shifts.end()), 0};
  std::vector<FreeVector> syz;
  for (const auto& v : gb.gens) {
    bool eps_only = true;
    for (const auto& t : v.terms())
      if (t.pos < r) {
        eps_only = false;
        break;
      }
    if (!eps_only) continue;
    std::vector<ModTerm> shifted;
    shifted.reserve(v.size());
    for (const auto& t : v.terms()) shifted.push_back({t.c, t.m, t.pos - r});
    FreeVector w = R.reduce(E, FreeVector::make(S, E, std::move(shifted)));
    if (!w.is_zero()) syz.push_back(std::move(w));
  }
  return {Submodule{E, std::move(syz)}, gb.truncated};
}

// ---- elimination ----

EliminationResult eliminate(const PolyRing& R, const std::vector<Polynomial>& gens,
                            int keep_from, int degree_cap) {
  if (R.block_split() != keep_from)
    throw std::invalid_argument("eliminate: ring must use the block order split at keep_from");
  bool trunc = false;
  std::vector<Polynomial> gb = buchberger_ideal(R, gens, degree_cap, &trunc);
  std::vector<Polynomial> out;
  for (auto& f : gb) {
    bool keep = true;
    for (const auto& t : f.terms()) {
      for (int i = 0; i < keep_from; ++i)
        if (t.m.exponent(i) > 0) {
          keep = false;
          break;
        }
      if (!keep) break;
    }
    if (keep) out.push_back(std::move(f));
  }
  return {std::move(out), trunc};
}

} // namespace gralg
