#ifndef GRALG_RING_HPP
#define GRALG_RING_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "gralg/field.hpp"
#include "gralg/monomial.hpp"

namespace gralg {

enum class Cmp { less = -1, equal = 0, greater = 1 };

// Polynomial ring context: coefficient field, named variables, variable
// weights, and the monomial order. The order is graded reverse
// lexicographic; a positive block_split puts variables [0, block_split)
// into a dominant block compared first, which is the elimination order
// used when projecting ideals onto a trailing variable block.
class PolyRing {
public:
  PolyRing(PrimeField field, std::vector<std::string> var_names,
           std::vector<int> weights = {}, int block_split = 0,
           int degree_cap = 40)
      : field_(field), names_(std::move(var_names)), weights_(std::move(weights)),
        block_split_(block_split), degree_cap_(degree_cap) {
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
      throw std::invalid_argument("weights/variables size mismatch");
    for (int w : weights_)
      if (w < 1) throw std::invalid_argument("variable weights must be positive");
    if (block_split_ < 0 || block_split_ > nvars())
      throw std::invalid_argument("bad order block split");
  }

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(int i) const { return names_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  int block_split() const { return block_split_; }
  int degree_cap() const { return degree_cap_; }

  bool weights_trivial() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
  }

  int weighted_degree(const Monomial& m) const {
    if (weights_trivial()) return m.degree();
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.exponent(i);
    return d;
  }

  Monomial multiply(const Monomial& a, const Monomial& b) const {
    Monomial r = a * b;
    if (r.degree() > degree_cap_)
      throw std::overflow_error("monomial degree cap exceeded");
    return r;
  }

  Cmp compare(const Monomial& a, const Monomial& b) const {
    if (block_split_ > 0) {
      Cmp c = compare_block(a, b, 0, block_split_);
      if (c != Cmp::equal) return c;
      return compare_block(a, b, block_split_, nvars());
    }
    return compare_block(a, b, 0, nvars());
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::greater;
  }

  int variable_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

private:
  // graded reverse lexicographic restricted to [lo, hi)
  Cmp compare_block(const Monomial& a, const Monomial& b, int lo, int hi) const {
    long da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += long(weights_[i]) * a.exponent(i);
      db += long(weights_[i]) * b.exponent(i);
    }
    if (da != db) return da > db ? Cmp::greater : Cmp::less;
    for (int i = hi - 1; i >= lo; --i) {
      int ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea < eb ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
  }

  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  int block_split_;
  int degree_cap_;
};

} // namespace gralg

#endif
