#include "gralg/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace gralg {

Cmp compare(const PolyRing& R, const GradedFreeModule& F, const ModTerm& a,
            const ModTerm& b) {
  if (F.dominant_prefix > 0) {
    bool da = a.pos < F.dominant_prefix;
    bool db = b.pos < F.dominant_prefix;
    if (da != db) return da ? Cmp::greater : Cmp::less;
  }
  int ia = internal_degree(R, F, a);
  int ib = internal_degree(R, F, b);
  if (ia != ib) return ia > ib ? Cmp::greater : Cmp::less;
  Cmp c = R.compare(a.m, b.m);
  if (c != Cmp::equal) return c;
  if (a.pos != b.pos) return a.pos < b.pos ? Cmp::greater : Cmp::less;
  return Cmp::equal;
}

int internal_degree(const PolyRing& R, const GradedFreeModule& F, const ModTerm& t) {
  return R.weighted_degree(t.m) + F.shifts[t.pos];
}

int internal_degree(const PolyRing& R, const GradedFreeModule& F, const FreeVector& v) {
  if (v.is_zero()) throw std::invalid_argument("internal degree of zero vector");
  int d = internal_degree(R, F, v.terms().front());
  for (const auto& t : v.terms())
    if (internal_degree(R, F, t) != d)
      throw std::invalid_argument("vector is not homogeneous");
  return d;
}

bool is_homogeneous(const PolyRing& R, const GradedFreeModule& F, const FreeVector& v) {
  if (v.is_zero()) return true;
  int d = internal_degree(R, F, v.terms().front());
  for (const auto& t : v.terms())
    if (internal_degree(R, F, t) != d) return false;
  return true;
}

bool FreeVector::operator==(const FreeVector& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].pos != o.terms_[i].pos ||
        terms_[i].m != o.terms_[i].m)
      return false;
  return true;
}

FreeVector FreeVector::make(const PolyRing& R, const GradedFreeModule& F,
                            std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
    return compare(R, F, a, b) == Cmp::greater;
  });
  FreeVector v;
  for (auto& t : terms) {
    if (t.pos < 0 || t.pos >= F.rank()) throw std::invalid_argument("bad position");
    coeff_t c = R.field().reduce(t.c);
    if (c == 0) continue;
    auto& ts = v.terms_;
    if (!ts.empty() && ts.back().pos == t.pos && ts.back().m == t.m) {
      ts.back().c = R.field().add(ts.back().c, c);
      if (ts.back().c == 0) ts.pop_back();
    } else {
      ts.push_back({c, t.m, t.pos});
    }
  }
  return v;
}

FreeVector add(const PolyRing& R, const GradedFreeModule& F, const FreeVector& a,
               const FreeVector& b) {
  std::vector<ModTerm> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  const auto& x = a.terms();
  const auto& y = b.terms();
  while (i < x.size() && j < y.size()) {
    Cmp c = compare(R, F, x[i], y[j]);
    if (c == Cmp::greater) {
      out.push_back(x[i++]);
    } else if (c == Cmp::less) {
      out.push_back(y[j++]);
    } else {
      coeff_t s = R.field().add(x[i].c, y[j].c);
      if (s != 0) out.push_back({s, x[i].m, x[i].pos});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back(y[j]);
  return FreeVector::from_sorted(std::move(out));
}

FreeVector negate(const PolyRing& R, const FreeVector& a) {
  std::vector<ModTerm> out = a.terms();
  for (auto& t : out) t.c = R.field().neg(t.c);
  return FreeVector::from_sorted(std::move(out));
}

FreeVector scale(const PolyRing& R, coeff_t c, const FreeVector& a) {
  c = R.field().reduce(c);
  if (c == 0) return FreeVector();
  std::vector<ModTerm> out = a.terms();
  for (auto& t : out) t.c = R.field().mul(t.c, c);
  return FreeVector::from_sorted(std::move(out));
}

FreeVector term_mul(const PolyRing& R, const GradedFreeModule&, coeff_t c,
                    const Monomial& m, const FreeVector& a) {
  c = R.field().reduce(c);
  if (c == 0) return FreeVector();
  std::vector<ModTerm> out;
  out.reserve(a.size());
  for (const auto& t : a.terms())
    out.push_back({R.field().mul(t.c, c), R.multiply(m, t.m), t.pos});
  // multiplying by a monomial preserves the term order
  return FreeVector::from_sorted(std::move(out));
}

FreeVector unit_vector(const PolyRing& R, const GradedFreeModule& F, int pos,
                       const Polynomial& f) {
  std::vector<ModTerm> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.c, t.m, pos});
  return FreeVector::make(R, F, std::move(out));
}

Polynomial component(const FreeVector& v, int pos, const PolyRing& R) {
  std::vector<Term> out;
  for (const auto& t : v.terms())
    if (t.pos == pos) out.push_back({t.c, t.m});
  return Polynomial::make(R, std::move(out));
}

std::string to_string(const PolyRing& R, const FreeVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& t : v.terms()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(t.c) + "*" + to_string(R, t.m) + "*e" + std::to_string(t.pos);
  }
  return s;
}

} // namespace gralg
