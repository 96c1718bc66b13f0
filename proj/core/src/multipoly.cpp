#include "hyperdet/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace hyperdet {

bool grlex_less(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[p.var_index(name)] = 1;
  p.terms_[e] = 1;
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p) {
  MultiPoly r({p.var()});
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) r.terms_[{static_cast<int>(i)}] = p.coeffs()[i];
  return r;
}

size_t MultiPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw std::invalid_argument("unknown variable: " + name);
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

Rat MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(const std::string& name) const {
  size_t i = var_index(name);
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

void MultiPoly::check_same_vars(const MultiPoly& b) const {
  if (vars_ != b.vars_)
    throw std::invalid_argument("polynomials over different variable lists");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_.empty() && a.is_zero()) return b;
  if (b.vars_.empty() && b.is_zero()) return a;
  a.check_same_vars(b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly r(a.vars_);
  MultiPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const Rat& s) {
  MultiPoly r(a.vars_);
  if (s == 0) return r;
  r.terms_ = a.terms_;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  // Allow comparing across variable lists by promoting both to the union.
  std::vector<std::string> u = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
  return a.promote(u).terms_ == b.promote(u).terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(vars_, Rat(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  size_t i = var_index(name);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    r.add_term(d, c * Rat(e[i]));
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  size_t i = var_index(name);
  check_same_vars(value);
  // Group by exponent of `name`, then Horner over the grouped pieces.
  std::map<int, MultiPoly> groups;
  int maxe = 0;
  for (const auto& [e, c] : terms_) {
    if (e[i] < 0) throw std::domain_error("substitute into negative exponent");
    maxe = std::max(maxe, e[i]);
    auto [it, fresh] = groups.try_emplace(e[i], vars_);
    Exponents d = e;
    d[i] = 0;
    it->second.add_term(d, c);
  }
  MultiPoly r(vars_);
  for (int d = maxe; d >= 0; --d) {
    r = r * value;
    auto it = groups.find(d);
    if (it != groups.end()) r += it->second;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::string& name, const Rat& value) const {
  size_t i = var_index(name);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] < 0) throw std::domain_error("substitute into negative exponent");
    Rat scaled = c;
    for (int t = 0; t < e[i]; ++t) scaled *= value;
    Exponents d = e;
    d[i] = 0;
    r.add_term(d, scaled);
  }
  return r;
}

MultiPoly MultiPoly::affine_substitute(const std::string& name, const Rat& scale,
                                       const Rat& shift) const {
  MultiPoly image = variable(vars_, name) * scale + constant(vars_, shift);
  return substitute(name, image);
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& d) const {
  check_same_vars(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (d.terms_.size() == 1) {
    // Monomial division is unconditional in the Laurent ring.
    const auto& [de, dc] = *d.terms_.begin();
    MultiPoly r(vars_);
    Exponents q(vars_.size());
    for (const auto& [e, c] : terms_) {
      for (size_t i = 0; i < q.size(); ++i) q[i] = e[i] - de[i];
      r.terms_[q] = c / dc;
    }
    return r;
  }
  // Leading term in graded-lex order; exact quotients are recovered greedily.
  // Restricted to honest (non-Laurent) quotients, which covers every divisor
  // with more than one term used in this library.
  auto leading = [](const MultiPoly& p) {
    auto best = p.terms_.begin();
    for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
      if (grlex_less(best->first, it->first)) best = it;
    return best;
  };
  const auto dl = leading(d);
  MultiPoly rem = *this;
  MultiPoly quot(vars_);
  Exponents q(vars_.size());
  while (!rem.is_zero()) {
    auto rl = leading(rem);
    for (size_t i = 0; i < q.size(); ++i) {
      q[i] = rl->first[i] - dl->first[i];
      if (q[i] < 0) throw std::domain_error("inexact polynomial division");
    }
    Rat qc = rl->second / dl->second;
    MultiPoly qt(vars_);
    qt.terms_[q] = qc;
    quot.add_term(q, qc);
    rem -= qt * d;
    if (!rem.is_zero() && !grlex_less(leading(rem)->first, rl->first))
      throw std::domain_error("inexact polynomial division");
  }
  return quot;
}

MultiPoly MultiPoly::promote(const std::vector<std::string>& new_vars) const {
  std::vector<size_t> where(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it == new_vars.end())
      throw std::invalid_argument("promote: missing variable " + vars_[i]);
    where[i] = static_cast<size_t>(it - new_vars.begin());
  }
  MultiPoly r(new_vars);
  for (const auto& [e, c] : terms_) {
    Exponents d(new_vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
    r.terms_[d] = c;
  }
  return r;
}

MultiPoly MultiPoly::with_vars(std::vector<std::string> new_names) const {
  if (new_names.size() != vars_.size())
    throw std::invalid_argument("with_vars: arity mismatch");
  MultiPoly r(std::move(new_names));
  r.terms_ = terms_;
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("eval arity mismatch");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::domain_error("eval with negative exponent");
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    }
    total += t;
  }
  return total;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Rat>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
  std::string out;
  for (auto* t : order) {
    const Rat& q = t->second;
    Rat a = q > 0 ? q : Rat(-q);
    if (!out.empty())
      out += q > 0 ? "+" : "-";
    else if (q < 0)
      out += "-";
    std::string mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += rat_to_string(a);
    } else {
      if (a != 1) out += rat_to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly poch_poly(const MultiPoly& p, unsigned long n) {
  MultiPoly r = MultiPoly::constant(p.vars(), Rat(1));
  for (unsigned long i = 0; i < n; ++i)
    r = r * (p + MultiPoly::constant(p.vars(), Rat(static_cast<long>(i))));
  return r;
}

MultiPoly vandermonde_poly(const std::vector<std::string>& vars, unsigned power) {
  MultiPoly v = MultiPoly::constant(vars, Rat(1));
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      v *= MultiPoly::variable(vars, vars[i]) - MultiPoly::variable(vars, vars[j]);
  return v.pow(power);
}

}  // namespace hyperdet
