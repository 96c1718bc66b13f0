#pragma once

#include <optional>
#include <thread>
#include <unordered_map>

#include "hyperdet/ring.hpp"

namespace hyperdet {

// A finite moment sequence c_0..c_m, optionally tagged with the name of the
// closed-form family it came from (used by the CLI and reporting layers).
template <class T>
struct MomentSequence {
  std::vector<T> moments;
  std::optional<std::string> family_tag;
};

int hankel_threads_default();  // HYPERDET_THREADS env var, else 1

namespace detail {

// Enumerates all strictly lower triangular matrices M with entries in
// 0..2k (row-major over the n(n-1)/2 free entries) and accumulates the
// integer weight (-1)^{|M|} prod binom(2k, m_ij) per exponent vector
// alpha(M). Exponent vectors are packed into a 64-bit key.
struct MSumTable {
  std::vector<std::pair<uint64_t, long long>> entries;  // sorted by key
  int n, k;
};

MSumTable hankel_msum(int n, int k, int threads);

inline std::vector<int> unpack_alpha(uint64_t key, int n, int base) {
  std::vector<int> a(n);
  for (int p = 0; p < n; ++p) {
    a[p] = int(key % uint64_t(base));
    key /= uint64_t(base);
  }
  return a;
}

}  // namespace detail

// Shifted Hankel hyperdeterminant D_{n;r}^{(k)}(c) by the triangular-matrix
// expansion of the 2k-th Vandermonde power: much faster than the alternating
// sum over permutation tuples and exact over any Q-algebra. The enumeration
// is grouped by moment-index vector first, so each distinct product of
// moments is formed once; with several threads the enumeration range is
// partitioned and merged in a fixed order, making the result identical for
// every thread count.
template <class T>
T hankel_fast(const std::vector<T>& c, int n, int k, int r, int threads = 0) {
  if (n < 1 || k < 1 || r < 0) throw std::invalid_argument("hankel_fast: bad shape");
  const size_t need = size_t(2 * k) * size_t(n - 1) + size_t(r) + 1;
  if (c.size() < need)
    throw std::invalid_argument("insufficient moments: need " + std::to_string(need) +
                                ", have " + std::to_string(c.size()));
  if (threads <= 0) threads = hankel_threads_default();
  if (n == 1) return c[size_t(r)];

  const auto table = detail::hankel_msum(n, k, threads);
  const int base = 2 * k * (n - 1) + 1;
  T acc = zero_like(c[0]);
  for (const auto& [key, weight] : table.entries) {
    auto alpha = detail::unpack_alpha(key, n, base);
    T prod = c[size_t(alpha[0] + r)];
    for (int p = 1; p < n; ++p) prod = prod * c[size_t(alpha[p] + r)];
    acc = acc + scale(prod, Rat(static_cast<long>(weight)));
  }
  return scale(acc, rat(Int(1), factorial(unsigned(n))));
}

template <class T>
T hankel_fast(const MomentSequence<T>& seq, int n, int k, int r, int threads = 0) {
  return hankel_fast(seq.moments, n, k, r, threads);
}

}  // namespace hyperdet
