#ifndef GLAISHER_BERNOULLI_HPP
#define GLAISHER_BERNOULLI_HPP

#include <gmpxx.h>

#include <cstddef>
#include <mutex>
#include <vector>

#include "real.hpp"

namespace glaisher {

/// Exact even-index Bernoulli number B_{2k} (B_0 = 1, B_2 = 1/6, ...).
/// Computed once from sum_{j=0}^{m} C(m+1, j) B_j = 0 and cached.
inline mpq_class bernoulli_b2k(std::size_t k) {
  static std::mutex mutex;
  static std::vector<mpq_class> all{mpq_class(1)};  // B_0, B_1, B_2, ...
  std::lock_guard<std::mutex> lock(mutex);
  const std::size_t want = 2 * k;
  while (all.size() <= want) {
    const std::size_t m = all.size();
    if (m % 2 == 1 && m > 1) {
      all.emplace_back(0);
      continue;
    }
    mpz_class binom = 1;  // C(m+1, j)
    mpq_class acc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      acc += binom * all[j];
      mpz_class next;
      mpz_bin_uiui(next.get_mpz_t(), m + 1, j + 1);
      binom = next;
    }
    mpq_class b = -acc / mpq_class(static_cast<unsigned long>(m + 1));
    b.canonicalize();
    all.push_back(b);
  }
  return all[want];
}

inline Real bernoulli_b2k_real(std::size_t k) {
  const mpq_class q = bernoulli_b2k(k);
  return Real::from_mpq(q.get_mpq_t());
}

}  // namespace glaisher

#endif  // GLAISHER_BERNOULLI_HPP
