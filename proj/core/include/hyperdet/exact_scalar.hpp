#pragma once

#include "hyperdet/rational.hpp"

namespace hyperdet {

// A rational multiple of a half-integer power of pi: value = coeff * pi^(h/2)
// with h >= 0. This is the universal scalar for Selberg-type closed forms,
// where Gamma at half-integers introduces sqrt(pi) factors that must cancel
// identically at the end of every combinatorial evaluation.
//
// Addition is defined only between scalars carrying the same power of pi
// (zero is compatible with everything); mixing powers throws instead of
// coercing. Multiplication adds powers, division subtracts them and refuses
// to go negative. Values are immutable in all library code paths.
class ExactScalar {
 public:
  ExactScalar() : coeff_(0), pi_half_(0) {}
  ExactScalar(const Rat& c) : coeff_(c), pi_half_(0) {}  // NOLINT: implicit by design
  ExactScalar(long c) : coeff_(c), pi_half_(0) {}        // NOLINT
  ExactScalar(const Rat& c, int pi_half) : coeff_(c), pi_half_(pi_half) {
    if (pi_half_ < 0) throw std::domain_error("negative power of pi");
    normalize();
  }

  const Rat& coeff() const { return coeff_; }
  int pi_half_power() const { return pi_half_; }
  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return pi_half_ == 0; }

  Rat as_rat() const {
    if (!is_rational()) throw std::domain_error("scalar carries a power of pi");
    return coeff_;
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_half_ != b.pi_half_)
      throw std::domain_error("adding scalars with different powers of pi");
    return ExactScalar(a.coeff_ + b.coeff_, a.pi_half_);
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return a + (-b);
  }
  friend ExactScalar operator-(const ExactScalar& a) {
    return ExactScalar(-a.coeff_, a.pi_half_);
  }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero() || b.is_zero()) return ExactScalar();
    return ExactScalar(a.coeff_ * b.coeff_, a.pi_half_ + b.pi_half_);
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_zero()) return ExactScalar();
    int h = a.pi_half_ - b.pi_half_;
    if (h < 0) throw std::domain_error("division yields negative power of pi");
    return ExactScalar(a.coeff_ / b.coeff_, h);
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.coeff_ == b.coeff_ && a.pi_half_ == b.pi_half_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }

  // Serialized as "p/q" when rational, else "p/q*pi^(h/2)".
  std::string str() const;
  static ExactScalar parse(const std::string& s);

 private:
  void normalize() {
    if (coeff_ == 0) pi_half_ = 0;
  }
  Rat coeff_;
  int pi_half_;
};

// Gamma at positive integers and half-integers: Gamma(n) = (n-1)!,
// Gamma(n + 1/2) = (2n)!/(4^n n!) sqrt(pi). Anything else is out of domain.
ExactScalar gamma_exact(const Rat& x);

}  // namespace hyperdet
