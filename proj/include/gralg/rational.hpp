#ifndef GRALG_RATIONAL_HPP
#define GRALG_RATIONAL_HPP

#include <numeric>
#include <stdexcept>
#include <string>

namespace gralg {

// Exact rational arithmetic on the small values the invariants produce.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  long long ceil_ll() const {
    if (num_ >= 0) return (num_ + den_ - 1) / den_;
    return -((-num_) / den_);
  }

private:
  long long num_;
  long long den_;
};

// Rational extended by a minus-infinity sentinel, ordered below everything.
// Taking its ceiling is an error, never a silent zero.
class ExtRational {
public:
  ExtRational() : finite_(true), v_(0) {}
  ExtRational(const Rational& v) : finite_(true), v_(v) {}
  ExtRational(long long n) : finite_(true), v_(n) {}
  static ExtRational minus_infinity() {
    ExtRational e;
    e.finite_ = false;
    return e;
  }

  bool is_minus_infinity() const { return !finite_; }
  const Rational& value() const {
    if (!finite_) throw std::domain_error("value of minus-infinity");
    return v_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

  static ExtRational max(const ExtRational& a, const ExtRational& b) {
    return a < b ? b : a;
  }

  // minus-infinity absorbs finite shifts and positive scalings
  ExtRational sub(const Rational& r) const {
    return finite_ ? ExtRational(v_ - r) : *this;
  }
  ExtRational div_pos(long long c) const {
    if (c <= 0) throw std::domain_error("division by a nonpositive scalar");
    return finite_ ? ExtRational(v_ / Rational(c)) : *this;
  }

  long long ceil_ll() const {
    if (!finite_) throw std::domain_error("ceiling of minus-infinity");
    return v_.ceil_ll();
  }

private:
  bool finite_;
  Rational v_;
};

inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.num());
  if (r.den() != 1) s += "/" + std::to_string(r.den());
  return s;
}

inline std::string to_string(const ExtRational& r) {
  return r.is_minus_infinity() ? "-inf" : to_string(r.value());
}

} // namespace gralg

#endif
