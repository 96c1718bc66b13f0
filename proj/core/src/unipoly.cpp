#include "hyperdet/unipoly.hpp"

#include <algorithm>

namespace hyperdet {

UniPoly::UniPoly(const Rat& constant, std::string var) : var_(std::move(var)) {
  if (constant != 0) c_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rat> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::variable(const std::string& name) {
  return UniPoly({Rat(0), Rat(1)}, name);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UniPoly::check_compatible(const UniPoly& other) const {
  if (!is_constant() && !other.is_constant() && var_ != other.var_)
    throw std::invalid_argument("polynomials in different variables: " + var_ +
                                " vs " + other.var_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  a.check_compatible(b);
  UniPoly r;
  r.var_ = a.is_constant() && !b.is_constant() ? b.var_ : a.var_;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& q : r.c_) q = -q;
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero())
    return UniPoly(Rat(0), a.is_constant() ? b.var_ : a.var_);
  UniPoly r;
  r.var_ = a.is_constant() && !b.is_constant() ? b.var_ : a.var_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

UniPoly operator*(const UniPoly& a, const Rat& s) {
  if (s == 0) return UniPoly(Rat(0), a.var_);
  UniPoly r = a;
  for (auto& q : r.c_) q *= s;
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.c_ != b.c_) return false;
  return a.is_constant() || b.is_constant() || a.var_ == b.var_;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r(Rat(1), var_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(Rat(0), var_);
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(d), var_);
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

ExactScalar UniPoly::eval(const ExactScalar& x) const {
  ExactScalar r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + ExactScalar(*it);
  return r;
}

UniPoly UniPoly::exact_divide(const UniPoly& d) const {
  check_compatible(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return UniPoly(Rat(0), var_);
  std::vector<Rat> rem = c_;
  std::vector<Rat> quot(c_.size(), Rat(0));
  int dd = d.degree();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / d.c_[dd];
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
  }
  for (const auto& q : rem)
    if (q != 0) throw std::domain_error("inexact polynomial division");
  return UniPoly(std::move(quot), var_);
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& q = c_[i];
    if (q == 0) continue;
    Rat a = q > 0 ? q : Rat(-q);
    if (!out.empty())
      out += (q > 0) ? "+" : "-";
    else if (q < 0)
      out += "-";
    if (i == 0) {
      out += rat_to_string(a);
    } else {
      if (a != 1) out += rat_to_string(a) + "*";
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace hyperdet
