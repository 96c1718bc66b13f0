#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperdet/unipoly.hpp"

namespace hyperdet {

// Sparse multivariate (Laurent) polynomial over the rationals. The variable
// list is declared at construction and fixed; binary operations require
// identical lists (use promote() to move into a superset). Exponents may be
// negative: the symmetric-function machinery works with alternants like
// a_{-delta}. No zero coefficients are stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rat>;

  MultiPoly() = default;  // zero polynomial in zero variables
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
  static MultiPoly from_unipoly(const UniPoly& p);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t var_index(const std::string& name) const;

  void add_term(const Exponents& e, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // throws unless constant
  Rat coeff(const Exponents& e) const;
  int total_degree() const;
  int degree_in(const std::string& name) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const Rat& s);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(const std::string& name) const;

  // Substitutions. substitute() requires nonnegative exponents in `name`.
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  MultiPoly substitute(const std::string& name, const Rat& value) const;
  // name -> scale*name + shift, the bridge between [0,1] and [-1,1] forms.
  MultiPoly affine_substitute(const std::string& name, const Rat& scale,
                              const Rat& shift) const;

  // Exact division; throws std::domain_error if the divisor does not divide.
  MultiPoly exact_divide(const MultiPoly& d) const;

  // Same polynomial over a superset variable list (matched by name).
  MultiPoly promote(const std::vector<std::string>& new_vars) const;

  // Positional rename of the variable list (same arity).
  MultiPoly with_vars(std::vector<std::string> new_names) const;

  Rat eval(const std::vector<Rat>& point) const;

  // Canonical text form: terms in graded-lexicographic descending order.
  std::string str() const;

 private:
  void check_same_vars(const MultiPoly& b) const;
  std::vector<std::string> vars_;
  TermMap terms_;
};

// (p)_n = p(p+1)...(p+n-1) for a polynomial argument.
MultiPoly poch_poly(const MultiPoly& p, unsigned long n);

// prod_{i<j} (v_i - v_j) over the given variables (all of them), raised to
// `power`, fully expanded.
MultiPoly vandermonde_poly(const std::vector<std::string>& vars, unsigned power);

// True graded-lex order used for leading terms and printing.
bool grlex_less(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b);

}  // namespace hyperdet
