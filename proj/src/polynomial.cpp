#include "gralg/polynomial.hpp"

#include <algorithm>

namespace gralg {

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
  return true;
}

Polynomial Polynomial::make(const PolyRing& R, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
    return R.compare(a.m, b.m) == Cmp::greater;
  });
  Polynomial f;
  for (auto& t : terms) {
    coeff_t c = R.field().reduce(t.c);
    if (c == 0) continue;
    if (!f.terms_.empty() && f.terms_.back().m == t.m) {
      f.terms_.back().c = R.field().add(f.terms_.back().c, c);
      if (f.terms_.back().c == 0) f.terms_.pop_back();
    } else {
      f.terms_.push_back({c, t.m});
    }
  }
  return f;
}

Polynomial poly_zero() { return Polynomial(); }

Polynomial poly_constant(const PolyRing& R, coeff_t c) {
  return Polynomial::make(R, {{c, Monomial::one(R.nvars())}});
}

Polynomial poly_monomial(const PolyRing& R, coeff_t c, Monomial m) {
  return Polynomial::make(R, {{c, std::move(m)}});
}

Polynomial poly_variable(const PolyRing& R, int i) {
  return Polynomial::make(R, {{1, Monomial::variable(R.nvars(), i)}});
}

Polynomial add(const PolyRing& R, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    Cmp c = R.compare(a[i].m, b[j].m);
    if (c == Cmp::greater) {
      out.push_back(a[i++]);
    } else if (c == Cmp::less) {
      out.push_back(b[j++]);
    } else {
      coeff_t s = R.field().add(a[i].c, b[j].c);
      if (s != 0) out.push_back({s, a[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return Polynomial::from_sorted(std::move(out));
}

Polynomial sub(const PolyRing& R, const Polynomial& f, const Polynomial& g) {
  return add(R, f, negate(R, g));
}

Polynomial negate(const PolyRing& R, const Polynomial& f) {
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.c = R.field().neg(t.c);
  return Polynomial::from_sorted(std::move(out));
}

Polynomial scale(const PolyRing& R, coeff_t c, const Polynomial& f) {
  c = R.field().reduce(c);
  if (c == 0) return Polynomial();
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.c = R.field().mul(t.c, c);
  return Polynomial::from_sorted(std::move(out));
}

Polynomial term_mul(const PolyRing& R, coeff_t c, const Monomial& m, const Polynomial& f) {
  c = R.field().reduce(c);
  if (c == 0) return Polynomial();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms())
    out.push_back({R.field().mul(t.c, c), R.multiply(m, t.m)});
  // multiplying by a monomial preserves the term order
  return Polynomial::from_sorted(std::move(out));
}

Polynomial multiply(const PolyRing& R, const Polynomial& f, const Polynomial& g) {
  Polynomial acc;
  for (const auto& t : f.terms())
    acc = add(R, acc, term_mul(R, t.c, t.m, g));
  return acc;
}

std::optional<int> homogeneous_degree(const PolyRing& R, const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  int d = R.weighted_degree(f.terms().front().m);
  for (const auto& t : f.terms())
    if (R.weighted_degree(t.m) != d)
      throw std::invalid_argument("polynomial is not homogeneous: " + to_string(R, f));
  return d;
}

bool is_homogeneous(const PolyRing& R, const Polynomial& f) {
  if (f.is_zero()) return true;
  int d = R.weighted_degree(f.terms().front().m);
  for (const auto& t : f.terms())
    if (R.weighted_degree(t.m) != d) return false;
  return true;
}

std::string to_string(const PolyRing& R, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < R.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += R.var_name(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string to_string(const PolyRing& R, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    coeff_t c = t.c;
    if (first) {
      first = false;
    } else {
      // render coefficients in (p/2, p) as subtracted terms for readability
      if (c > R.field().p() / 2) {
        s += " - ";
        c = R.field().neg(c);
      } else {
        s += " + ";
      }
    }
    if (t.m.is_one()) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += to_string(R, t.m);
    }
  }
  return s;
}

} // namespace gralg
