#pragma once

#include "hyperdet/ring.hpp"

namespace hyperdet {

// Skew-symmetric matrix storing only the strictly upper triangle, so
// M[i][j] = -M[j][i] and M[i][i] = 0 hold structurally.
template <class T>
class SkewMatrix {
 public:
  SkewMatrix(int size, const T& zero)
      : size_(size), zero_(zero), upper_(size_t(size) * (size - 1) / 2, zero) {
    if (size < 0) throw std::invalid_argument("negative size");
  }

  int size() const { return size_; }

  void set(int i, int j, const T& v) {
    if (i >= j) throw std::invalid_argument("SkewMatrix::set requires i < j");
    upper_[index(i, j)] = v;
  }
  const T& upper(int i, int j) const { return upper_[index(i, j)]; }
  T get(int i, int j) const {
    if (i == j) return zero_;
    if (i < j) return upper_[index(i, j)];
    return zero_ - upper_[index(j, i)];
  }

 private:
  size_t index(int i, int j) const {
    return size_t(i) * size_ - size_t(i) * (i + 1) / 2 + size_t(j - i - 1);
  }
  int size_;
  T zero_;
  std::vector<T> upper_;
};

namespace detail {
template <class T>
T pf_rec(const SkewMatrix<T>& M, std::vector<int>& active, const T& zero) {
  const size_t m = active.size();
  if (m == 0) throw std::logic_error("pf_rec on empty index set");
  if (m == 2) return M.get(active[0], active[1]);
  T acc = zero;
  std::vector<int> rest(m - 2);
  const int i0 = active[0];
  for (size_t j = 1; j < m; ++j) {
    size_t t = 0;
    for (size_t s = 1; s < m; ++s)
      if (s != j) rest[t++] = active[s];
    T term = M.get(i0, active[j]) * pf_rec(M, rest, zero);
    if (j % 2 == 1)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}
}  // namespace detail

// Pfaffian by expansion along the first row; pf(M)^2 = det(M).
template <class T>
T pfaffian(const SkewMatrix<T>& M) {
  if (M.size() % 2 != 0) throw std::invalid_argument("pfaffian of odd-sized matrix");
  if (M.size() == 0) throw std::invalid_argument("pfaffian of empty matrix");
  T zero = zero_like(M.get(0, 1));
  std::vector<int> active(M.size());
  for (int i = 0; i < M.size(); ++i) active[i] = i;
  return detail::pf_rec(M, active, zero);
}

// Ordinary determinant of a skew matrix, for the pf^2 = det identity.
template <class T>
T skew_det(const SkewMatrix<T>& M) {
  std::vector<std::vector<T>> m(M.size(), std::vector<T>(M.size(), M.get(0, 0)));
  for (int i = 0; i < M.size(); ++i)
    for (int j = 0; j < M.size(); ++j) m[i][j] = M.get(i, j);
  return det_cofactor(m);
}

}  // namespace hyperdet
