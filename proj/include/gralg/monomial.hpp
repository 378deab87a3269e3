#ifndef GRALG_MONOMIAL_HPP
#define GRALG_MONOMIAL_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

namespace gralg {

// Exponent vector with cached total degree (sum of exponents, unweighted).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps)
      : exps_(std::move(exps)),
        degree_(std::accumulate(exps_.begin(), exps_.end(), 0)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }

  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  static Monomial variable(int nvars, int i, int power = 1) {
    std::vector<int> e(nvars, 0);
    e[i] = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; } // container order only

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& b) const {
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > b.exps_[i]) return false;
    return true;
  }

  // quotient b / a, requires a.divides(b)
  static Monomial quotient(const Monomial& b, const Monomial& a) {
    std::vector<int> e(b.exps_.size());
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = b.exps_[i] - a.exps_[i];
      if (e[i] < 0) throw std::domain_error("monomial quotient not defined");
    }
    return Monomial(std::move(e));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_.size());
    for (size_t i = 0; i < e.size(); ++i)
      e[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
    return Monomial(std::move(e));
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
  }

  // lexicographic on exponent vectors, first variable strongest
  static bool lex_greater(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exps_.size(); ++i) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
    }
    return false;
  }

private:
  std::vector<int> exps_;
  int degree_ = 0;
};

} // namespace gralg

#endif
