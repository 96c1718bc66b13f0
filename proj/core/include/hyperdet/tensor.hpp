#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>

#include "hyperdet/ring.hpp"

namespace hyperdet {

// Dense order-d dimension-n tensor. Index (i1,...,id), each in 0..n-1,
// stored row-major (last index fastest). All entries share one ring.
template <class T>
class HyperTensor {
 public:
  HyperTensor(int order, int dim, const T& fill)
      : order_(order), dim_(dim), data_(size_t(pow_size(dim, order)), fill) {
    if (order < 1 || dim < 1) throw std::invalid_argument("bad tensor shape");
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  size_t offset(const std::vector<int>& idx) const {
    size_t off = 0;
    for (int v : idx) off = off * size_t(dim_) + size_t(v);
    return off;
  }
  T& at(const std::vector<int>& idx) { return data_[offset(idx)]; }
  const T& at(const std::vector<int>& idx) const { return data_[offset(idx)]; }

 private:
  static size_t pow_size(int dim, int order) {
    size_t s = 1;
    for (int i = 0; i < order; ++i) s *= size_t(dim);
    return s;
  }
  int order_, dim_;
  std::vector<T> data_;
};

struct PermTable {
  std::vector<std::vector<int>> perms;
  std::vector<int> signs;
};

inline const PermTable& perm_table(int n) {
  static std::map<int, PermTable> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PermTable t;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    t.perms.push_back(p);
    t.signs.push_back(inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(t)).first->second;
}

// Cayley's first hyperdeterminant of an even-order tensor, by the alternating
// sum over 2k permutations. The summand is invariant under composing all
// permutations with a common one, so the first permutation is pinned to the
// identity instead of dividing by n!; this keeps the computation division
// free in polynomial rings.
template <class T>
T det_even(const HyperTensor<T>& A, int k) {
  if (A.order() != 2 * k) throw std::invalid_argument("det_even: order must be 2k");
  const int n = A.dim();
  const auto& pt = perm_table(n);
  const size_t np = pt.perms.size();
  const int slots = 2 * k - 1;
  std::vector<size_t> sel(slots, 0);
  std::vector<int> idx(2 * k);
  T acc = zero_like(A.data()[0]);
  for (;;) {
    int sign = 1;
    for (int s = 0; s < slots; ++s) sign *= pt.signs[sel[s]];
    idx[0] = 0;
    for (int s = 0; s < slots; ++s) idx[s + 1] = pt.perms[sel[s]][0];
    T prod = A.at(idx);
    for (int i = 1; i < n; ++i) {
      idx[0] = i;
      for (int s = 0; s < slots; ++s) idx[s + 1] = pt.perms[sel[s]][i];
      prod = prod * A.at(idx);
    }
    if (sign > 0)
      acc = acc + prod;
    else
      acc = acc - prod;
    int s = slots - 1;
    while (s >= 0 && ++sel[s] == np) sel[s--] = 0;
    if (s < 0) break;
  }
  return acc;
}

// Odd-order pseudo-hyperdeterminant: the first index is never permuted.
template <class T>
T det_plus(const HyperTensor<T>& A) {
  const int order = A.order();
  if (order % 2 == 0 || order < 3)
    throw std::invalid_argument("det_plus: order must be odd and >= 3");
  const int n = A.dim();
  const int slots = order - 1;
  const auto& pt = perm_table(n);
  const size_t np = pt.perms.size();
  std::vector<size_t> sel(slots, 0);
  std::vector<int> idx(order);
  T acc = zero_like(A.data()[0]);
  for (;;) {
    int sign = 1;
    for (int s = 0; s < slots; ++s) sign *= pt.signs[sel[s]];
    idx[0] = 0;
    for (int s = 0; s < slots; ++s) idx[s + 1] = pt.perms[sel[s]][0];
    T prod = A.at(idx);
    for (int i = 1; i < n; ++i) {
      idx[0] = i;
      for (int s = 0; s < slots; ++s) idx[s + 1] = pt.perms[sel[s]][i];
      prod = prod * A.at(idx);
    }
    if (sign > 0)
      acc = acc + prod;
    else
      acc = acc - prod;
    int s = slots - 1;
    while (s >= 0 && ++sel[s] == np) sel[s--] = 0;
    if (s < 0) break;
  }
  return acc;
}

// Hankel tensor of order `order` from moments c: entry = c[i1+...+id+r].
template <class T>
HyperTensor<T> hankel_tensor(const std::vector<T>& c, int n, int order, int r) {
  size_t need = size_t(order) * size_t(n - 1) + size_t(r) + 1;
  if (c.size() < need) throw std::invalid_argument("insufficient moments");
  HyperTensor<T> A(order, n, c[0]);
  std::vector<int> idx(order, 0);
  for (;;) {
    int s = r;
    for (int v : idx) s += v;
    A.at(idx) = c[size_t(s)];
    int p = order - 1;
    while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
    if (p < 0) break;
  }
  return A;
}

// Odd-order Hankel-type tensor with a per-row shift vector m:
// entry(i1,...,id) = c[m[i1] + i2 + ... + id].
template <class T>
HyperTensor<T> hankel_tensor_shifted_rows(const std::vector<T>& c,
                                          const std::vector<int>& mvec, int order) {
  const int n = static_cast<int>(mvec.size());
  HyperTensor<T> A(order, n, c[0]);
  std::vector<int> idx(order, 0);
  for (;;) {
    int s = mvec[size_t(idx[0])];
    for (int p = 1; p < order; ++p) s += idx[p];
    A.at(idx) = c.at(size_t(s));
    int p = order - 1;
    while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
    if (p < 0) break;
  }
  return A;
}

// Toeplitz tensor of order 2k: the first k indices are lower, the last k
// upper, and the entry is f(sum of lower - sum of upper).
template <class T>
HyperTensor<T> toeplitz_tensor(const std::map<int, T>& f, int n, int k) {
  auto lookup = [&f](int d) -> const T& {
    auto it = f.find(d);
    if (it == f.end())
      throw std::invalid_argument("toeplitz: missing offset " + std::to_string(d));
    return it->second;
  };
  HyperTensor<T> A(2 * k, n, lookup(0));
  std::vector<int> idx(2 * k, 0);
  for (;;) {
    int d = 0;
    for (int p = 0; p < k; ++p) d += idx[p];
    for (int p = k; p < 2 * k; ++p) d -= idx[p];
    A.at(idx) = lookup(d);
    int p = 2 * k - 1;
    while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
    if (p < 0) break;
  }
  return A;
}

template <class T>
T toeplitz_det(const std::map<int, T>& f, int n, int k) {
  return det_even(toeplitz_tensor(f, n, k), k);
}

}  // namespace hyperdet
