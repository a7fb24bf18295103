#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhcis {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced, denominator > 0, zero is 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return Rational(unsafe(), -num_, den_); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

private:
  struct unsafe {};
  Rational(unsafe, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    if (num_ == 0) { den_ = 1; return; }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g != 1) { num_ /= g; den_ /= g; }
  }

  BigInt num_;
  BigInt den_;
};

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
struct QuadExt {
  Rational a;
  Rational b;

  QuadExt() = default;
  QuadExt(Rational ra) : a(std::move(ra)), b(0) {}
  QuadExt(long long n) : a(n), b(0) {}
  QuadExt(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }

  QuadExt operator-() const { return QuadExt(-a, -b); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r,  r^2 = 2
    return QuadExt(x.a * y.a + Rational(2) * (x.b * y.b), x.a * y.b + x.b * y.a);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
    // 1/(c + d r) = (c - d r)/(c^2 - 2 d^2); the norm vanishes only at 0.
    Rational n = y.a * y.a - Rational(2) * (y.b * y.b);
    return QuadExt((x.a * y.a - Rational(2) * (x.b * y.b)) / n, (x.b * y.a - x.a * y.b) / n);
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  /// Sign of the real value a + b*sqrt(2).
  int sign() const {
    if (b.is_zero()) return a.sign();
    if (a.is_zero()) return b.sign();
    if (a.sign() == b.sign()) return a.sign();
    int n = (a * a - Rational(2) * (b * b)).sign();
    return a.sign() > 0 ? n : -n;
  }

  std::string str() const {
    if (b.is_zero()) return a.str();
    std::string rad;
    if (b == Rational(1)) rad = "√2";
    else if (b == Rational(-1)) rad = "-√2";
    else rad = b.str() + "√2";
    if (a.is_zero()) return rad;
    if (b.sign() > 0) return a.str() + "+" + rad;
    return a.str() + rad;  // rad carries its own minus sign
  }
};

/// Polynomial in the formal bundle parameter s with QuadExt coefficients.
/// Everything this library produces is affine in s; the type is kept general.
class SPoly {
public:
  SPoly() = default;
  SPoly(QuadExt c0) { c_.push_back(std::move(c0)); trim(); }
  SPoly(long long n) : SPoly(QuadExt(n)) {}
  static SPoly s() { return SPoly(std::vector<QuadExt>{QuadExt(0), QuadExt(1)}); }
  static SPoly affine(QuadExt c0, QuadExt c1) {
    return SPoly(std::vector<QuadExt>{std::move(c0), std::move(c1)});
  }

  explicit SPoly(std::vector<QuadExt> c) : c_(std::move(c)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  QuadExt coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : QuadExt(0);
  }

  SPoly operator-() const {
    std::vector<QuadExt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return SPoly(std::move(r));
  }
  friend SPoly operator+(const SPoly& x, const SPoly& y) {
    std::vector<QuadExt> r(std::max(x.c_.size(), y.c_.size()), QuadExt(0));
    for (size_t i = 0; i < x.c_.size(); ++i) r[i] += x.c_[i];
    for (size_t i = 0; i < y.c_.size(); ++i) r[i] += y.c_[i];
    return SPoly(std::move(r));
  }
  friend SPoly operator-(const SPoly& x, const SPoly& y) { return x + (-y); }
  friend SPoly operator*(const SPoly& x, const SPoly& y) {
    if (x.is_zero() || y.is_zero()) return SPoly();
    std::vector<QuadExt> r(x.c_.size() + y.c_.size() - 1, QuadExt(0));
    for (size_t i = 0; i < x.c_.size(); ++i)
      for (size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
    return SPoly(std::move(r));
  }
  friend SPoly operator*(const QuadExt& k, const SPoly& y) { return SPoly(k) * y; }
  SPoly& operator+=(const SPoly& y) { return *this = *this + y; }
  SPoly& operator-=(const SPoly& y) { return *this = *this - y; }
  SPoly& operator*=(const SPoly& y) { return *this = *this * y; }

  friend bool operator==(const SPoly& x, const SPoly& y) { return x.c_ == y.c_; }
  friend bool operator!=(const SPoly& x, const SPoly& y) { return !(x == y); }

  QuadExt eval(const QuadExt& s) const {
    QuadExt v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * s + c_[i];
    return v;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    auto wrap = [](const QuadExt& q) {
      std::string t = q.str();
      return (t.find('+') != std::string::npos || t.rfind('-', 0) == 0 ||
              t.find("√") != std::string::npos)
                 ? "(" + t + ")"
                 : t;
    };
    std::string out = c_[0].str();
    for (size_t k = 1; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      out += " + " + wrap(c_[k]) + "·s";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<QuadExt> c_;  // c_[k] is the coefficient of s^k
};

/// Unique zero of an affine polynomial c0 + c1*s with c1 != 0.
inline QuadExt spoly_root(const SPoly& p) {
  if (p.degree() != 1) throw std::domain_error("spoly_root: not affine");
  return -p.coeff(0) / p.coeff(1);
}

}  // namespace qhcis
