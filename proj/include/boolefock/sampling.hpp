#ifndef BOOLEFOCK_SAMPLING_HPP_
#define BOOLEFOCK_SAMPLING_HPP_

// Random inputs for the property checkers. Complex amplitudes have real and
// imaginary parts uniform in [-1, 1]; sites default to {1, ..., 8}.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "boolefock/algebra.hpp"
#include "boolefock/fock.hpp"
#include "boolefock/states.hpp"
#include "boolefock/tail.hpp"

namespace boolefock {

using Rng = std::mt19937_64;

inline constexpr Site kDefaultMaxSite = 8;

/// Independent stream `stream` of the generator family selected by `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// {1, ..., max_site}.
std::vector<Site> site_range(Site max_site);

Complex random_complex(Rng& rng);
TestAlgebraElement random_test_element(Rng& rng);
TailElement random_tail_element(Rng& rng);

/// A word of length uniform in [1, max_len] over sites drawn from `pool`.
Word random_word(Rng& rng, std::span<const Site> pool, std::size_t max_len);

/// A uniformly random bijection of `pool`.
FinitePermutation random_permutation(Rng& rng, std::span<const Site> pool);

/// A vector of H (no vacuum part) supported on at most `max_support` sites of {1..max_site}.
FockVector random_one_particle_vector(Rng& rng, std::size_t max_support, Site max_site);

/// Random element with `n_entries` compact entries over `pool` and a random scalar.
BooleanElement random_element(Rng& rng, std::span<const Index> pool, std::size_t n_entries);

/// A random element of the algebra generated by iota_i(A), i in `block`, and the
/// tail algebra: either the generic form
///   omega_#(A) P_# + P_# A P_I + P_I A P_# + P_I A P_I + a P_{N\I}
/// or a short product of embeddings and tail elements.
BooleanElement random_block_element(Rng& rng, std::span<const Site> block);

/// `n` pairwise disjoint non-empty blocks drawn from `pool` (needs n <= pool.size()).
std::vector<std::vector<Site>> random_disjoint_blocks(Rng& rng, std::size_t n, std::span<const Site> pool,
                                                      std::size_t max_block_size);

enum class DensityKind {
  vacuum,        // T = P_#
  expected,      // e_# an eigenvector of T, omega_#(T) < 1
  non_expected,  // e_# not an eigenvector
};

/// A random density of the requested kind with rank <= `rank` (exactly `rank`
/// unless the kind forces rank 1), supported on {#} u {1..max_site}.
TraceClassOperator random_density(Rng& rng, DensityKind kind, std::size_t rank, Site max_site = 6);

}  // namespace boolefock

#endif  // BOOLEFOCK_SAMPLING_HPP_
