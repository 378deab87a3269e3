#include "gralg/coords.hpp"

#include <algorithm>

namespace gralg {

FreePiece free_piece(const QuotientRing& R, const std::vector<int>& shifts, int d) {
  FreePiece P;
  P.offset.resize(shifts.size());
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    P.offset[k] = P.dim;
    P.dim += R.hilbert(d - shifts[k]);
  }
  return P;
}

std::vector<coeff_t> free_coords(const QuotientRing& R, const std::vector<int>& shifts,
                                 const FreeVector& v, int d) {
  const PolyRing& S = R.ring();
  FreePiece P = free_piece(R, shifts, d);
  std::vector<coeff_t> out(P.dim, 0);
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    Polynomial comp = component(v, static_cast<int>(k), S);
    if (comp.is_zero()) continue;
    std::vector<coeff_t> c = R.std_coords(comp, d - shifts[k]);
    std::copy(c.begin(), c.end(), out.begin() + P.offset[k]);
  }
  return out;
}

std::vector<coeff_t> free_var_mult(const QuotientRing& R, const std::vector<int>& shifts,
                                   int d, int v, const std::vector<coeff_t>& in) {
  const PrimeField& K = R.ring().field();
  FreePiece P = free_piece(R, shifts, d);
  FreePiece Q = free_piece(R, shifts, d + 1);
  std::vector<coeff_t> out(Q.dim, 0);
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    int e = d - shifts[k];
    if (e < 0) continue;
    const auto& T = R.var_mult_table(v, e);
    for (std::size_t j = 0; j < T.size(); ++j) {
      coeff_t c = in[P.offset[k] + j];
      if (c == 0) continue;
      const auto& col = T[j];
      for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] != 0)
          out[Q.offset[k] + i] = K.add(out[Q.offset[k] + i], K.mul(c, col[i]));
    }
  }
  return out;
}

std::vector<coeff_t> free_mon_mult(const QuotientRing& R, const std::vector<int>& shifts,
                                   int d, const Monomial& m, std::vector<coeff_t> vec) {
  for (int v = 0; v < m.nvars(); ++v)
    for (int rep = 0; rep < m.exponent(v); ++rep) {
      vec = free_var_mult(R, shifts, d, v, vec);
      ++d;
    }
  return vec;
}

FreeVector from_coords(const QuotientRing& R, const GradedFreeModule& F,
                       const std::vector<coeff_t>& vec, int d) {
  const PolyRing& S = R.ring();
  FreePiece P = free_piece(R, F.shifts, d);
  std::vector<ModTerm> terms;
  for (std::size_t k = 0; k < F.shifts.size(); ++k) {
    const auto& ms = R.std_monomials(d - F.shifts[k]);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      coeff_t c = vec[P.offset[k] + j];
      if (c != 0) terms.push_back({c, ms[j], static_cast<int>(k)});
    }
  }
  return FreeVector::make(S, F, std::move(terms));
}

DegreeSelection select_minimal_vectors(const QuotientRing& R, const std::vector<int>& Fdegs,
                                       std::vector<std::pair<int, std::vector<coeff_t>>> cands) {
  DegreeSelection out;
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t pos = 0;
  while (pos < cands.size()) {
    int d = cands[pos].first;
    RowSpace span(R.ring().field(), free_piece(R, Fdegs, d).dim);
    for (std::size_t g = 0; g < out.vecs.size(); ++g)
      for (const auto& m : R.std_monomials(d - out.degs[g]))
        span.insert(free_mon_mult(R, Fdegs, out.degs[g], m, out.vecs[g]));
    while (pos < cands.size() && cands[pos].first == d) {
      if (span.insert(cands[pos].second)) {
        out.degs.push_back(d);
        out.vecs.push_back(std::move(cands[pos].second));
      }
      ++pos;
    }
  }
  return out;
}

DegreeSelection minimal_kernel_generators(const QuotientRing& R, const std::vector<int>& Fdegs,
                                          const std::vector<int>& Gdegs,
                                          const std::vector<std::vector<coeff_t>>& cols, int D) {
  DegreeSelection out;
  if (Fdegs.empty()) return out;
  const PrimeField& K = R.ring().field();
  int dmin = *std::min_element(Fdegs.begin(), Fdegs.end()) + 1;
  for (int d = dmin; d <= D; ++d) {
    FreePiece PF = free_piece(R, Fdegs, d);
    if (PF.dim == 0) continue;
    FreePiece PG = free_piece(R, Gdegs, d);
    RowSpace span(K, PF.dim);

    if (!out.vecs.empty()) {
      // dim of the kernel first: stream the images of the standard basis
      // through a row space, counting rank without holding the matrix
      int kdim = PF.dim;
      {
        RowSpace image(K, PG.dim);
        for (std::size_t k = 0; k < Fdegs.size() && image.rank() < PG.dim; ++k)
          for (const auto& m : R.std_monomials(d - Fdegs[k])) {
            image.insert(free_mon_mult(R, Gdegs, Fdegs[k], m, cols[k]));
            if (image.rank() == PG.dim) break;
          }
        kdim -= image.rank();
      }
      if (kdim == 0) continue;

      // multiples of the generators found so far; when they already fill
      // the kernel this degree contributes nothing new. Newest generators
      // first: their low-degree multiples carry the fresh directions, so the
      // rank usually fills before the older generators are reached
      bool full = false;
      for (std::size_t g = out.vecs.size(); g-- > 0 && !full;)
        for (const auto& m : R.std_monomials(d - out.degs[g])) {
          span.insert(free_mon_mult(R, Fdegs, out.degs[g], m, out.vecs[g]));
          if (span.rank() == kdim) {
            full = true;
            break;
          }
        }
      if (full) continue;
    }

    // something genuinely new at this degree: pay for the full kernel
    std::vector<std::vector<coeff_t>> A(PG.dim, std::vector<coeff_t>(PF.dim, 0));
    int col = 0;
    for (std::size_t k = 0; k < Fdegs.size(); ++k)
      for (const auto& m : R.std_monomials(d - Fdegs[k])) {
        std::vector<coeff_t> img = free_mon_mult(R, Gdegs, Fdegs[k], m, cols[k]);
        for (int r = 0; r < PG.dim; ++r) A[r][col] = img[r];
        ++col;
      }
    auto ker = nullspace(K, std::move(A), PF.dim);
    for (auto& kv : ker) {
      if (span.insert(kv)) {
        out.degs.push_back(d);
        out.vecs.push_back(std::move(kv));
      }
      if (span.rank() == static_cast<int>(ker.size())) break;
    }
  }
  return out;
}

} // namespace gralg
