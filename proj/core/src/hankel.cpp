#include "hyperdet/hankel.hpp"

#include <algorithm>
#include <cstdlib>

namespace hyperdet {

int hankel_threads_default() {
  if (const char* env = std::getenv("HYPERDET_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

namespace detail {

namespace {

struct PairIdx {
  int i, j;  // i > j
};

// Accumulate weights for every M-matrix whose first free entry lies in
// [first_lo, first_hi). alpha_p(M) = 2k(p-1) + sum_{i>p} m_ip - sum_{j<p} m_pj.
void enumerate_range(int n, int k, const std::vector<PairIdx>& pairs,
                     const std::vector<long long>& binom2k, int first_lo, int first_hi,
                     std::unordered_map<uint64_t, long long>& out) {
  const int F = static_cast<int>(pairs.size());
  const int base = 2 * k * (n - 1) + 1;
  std::vector<int> m(F, 0);
  std::vector<int> alpha(n);
  for (int p = 0; p < n; ++p) alpha[p] = 2 * k * p;
  std::vector<uint64_t> pw(n);
  uint64_t b = 1;
  for (int p = 0; p < n; ++p, b *= uint64_t(base)) pw[p] = b;

  m[0] = first_lo;
  // entry m_ij contributes +m to alpha_{j} and -m to alpha_{i} (0-based).
  auto apply = [&](int t, int delta) {
    alpha[pairs[size_t(t)].j] += delta;
    alpha[pairs[size_t(t)].i] -= delta;
  };
  apply(0, first_lo);

  long long weight = binom2k[size_t(m[0])];
  int parity = m[0] % 2;
  for (;;) {
    // weight and alpha are maintained incrementally for the current m.
    uint64_t key = 0;
    for (int p = 0; p < n; ++p) key += pw[size_t(p)] * uint64_t(alpha[size_t(p)]);
    out[key] += (parity % 2 == 0) ? weight : -weight;

    int t = F - 1;
    for (;;) {
      if (t < 0) return;
      int limit = (t == 0) ? first_hi - 1 : 2 * k;
      if (m[t] < limit) break;
      // reset this digit to 0 (or first_lo for the partitioned digit)
      int reset = (t == 0) ? first_lo : 0;
      apply(t, reset - m[t]);
      parity = (parity + m[t] - reset) % 2;
      m[t] = reset;
      --t;
    }
    if (t < 0) return;
    apply(t, 1);
    m[t] += 1;
    parity = (parity + 1) % 2;
    // recompute multiplicative weight lazily: only digits t..F changed
    weight = 1;
    for (int s = 0; s < F; ++s) weight *= binom2k[size_t(m[s])];
  }
}

}  // namespace

MSumTable hankel_msum(int n, int k, int threads) {
  MSumTable table;
  table.n = n;
  table.k = k;
  // The total weight mass is 2^{k n (n-1)}, which bounds every accumulator.
  if (int64_t(k) * n * (n - 1) >= 62)
    throw std::overflow_error("hankel_fast: size out of supported range");

  std::vector<PairIdx> pairs;  // row-major: (1,0),(2,0),(2,1),(3,0),...
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) pairs.push_back({i, j});

  std::vector<long long> binom2k(size_t(2 * k) + 1);
  for (int t = 0; t <= 2 * k; ++t)
    binom2k[size_t(t)] = binomial(unsigned(2 * k), unsigned(t)).get_si();

  const int digits = 2 * k + 1;
  threads = std::max(1, std::min(threads, digits));
  std::vector<std::unordered_map<uint64_t, long long>> maps{size_t(threads)};
  if (threads == 1) {
    enumerate_range(n, k, pairs, binom2k, 0, digits, maps[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      int lo = w * digits / threads;
      int hi = (w + 1) * digits / threads;
      pool.emplace_back([&, lo, hi, w] {
        enumerate_range(n, k, pairs, binom2k, lo, hi, maps[size_t(w)]);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::unordered_map<uint64_t, long long> merged;
  for (auto& m : maps)
    for (const auto& [key, w] : m) merged[key] += w;
  table.entries.assign(merged.begin(), merged.end());
  std::sort(table.entries.begin(), table.entries.end());
  std::erase_if(table.entries, [](const auto& e) { return e.second == 0; });
  return table;
}

}  // namespace detail
}  // namespace hyperdet
