#ifndef BOOLEFOCK_TESTS_TEST_SUPPORT_HPP_
#define BOOLEFOCK_TESTS_TEST_SUPPORT_HPP_

#include <numeric>

#include "boolefock/sampling.hpp"

namespace boolefock::testing {

/// Random density of the given rank on sites {1..max_site}, no vacuum part.
inline TraceClassOperator site_density(Rng& rng, std::size_t rank, Site max_site = 6) {
  std::vector<FockVector> vs;
  for (std::size_t k = 0; k < rank; ++k) {
    FockVector::Amplitudes amps;
    for (Site j = 1; j <= max_site; ++j) amps.emplace(Index::site(j), random_complex(rng));
    vs.emplace_back(std::move(amps));
  }
  vs = orthonormalize(std::move(vs));
  std::vector<double> w(rank);
  std::uniform_real_distribution<double> dist(0.1, 1.0);
  for (auto& x : w) x = dist(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<Eigenpair> pairs;
  for (std::size_t k = 0; k < rank; ++k) pairs.push_back({w[k] / total, vs[k]});
  return TraceClassOperator{std::move(pairs)};
}

inline std::vector<Index> index_pool(Site n) {
  std::vector<Index> out{Index::vacuum()};
  for (Site j = 1; j <= n; ++j) out.push_back(Index::site(j));
  return out;
}

}  // namespace boolefock::testing

#endif  // BOOLEFOCK_TESTS_TEST_SUPPORT_HPP_
