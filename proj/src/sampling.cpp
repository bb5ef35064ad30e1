#include "boolefock/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace boolefock {

namespace {

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// `count` distinct sites from {1..max_site}, in increasing order.
std::vector<Site> random_subset(Rng& rng, std::size_t count, Site max_site) {
  std::vector<Site> all = site_range(max_site);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<double> random_weights(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = dist(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

FockVector dense_random_vector(Rng& rng, std::span<const Index> support) {
  FockVector::Amplitudes amps;
  for (Index i : support) amps.emplace(i, random_complex(rng));
  return FockVector{std::move(amps)};
}

TraceClassOperator assemble(const std::vector<FockVector>& vectors, const std::vector<double>& weights) {
  std::vector<Eigenpair> pairs;
  for (std::size_t k = 0; k < vectors.size(); ++k) pairs.push_back({weights[k], vectors[k]});
  return TraceClassOperator{std::move(pairs)};
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng{seq};
}

std::vector<Site> site_range(Site max_site) {
  std::vector<Site> out(max_site);
  std::iota(out.begin(), out.end(), Site{1});
  return out;
}

Complex random_complex(Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double re = dist(rng);
  const double im = dist(rng);
  return {re, im};
}

TestAlgebraElement random_test_element(Rng& rng) {
  TestAlgebraElement x;
  x.a = random_complex(rng);
  x.b = random_complex(rng);
  x.c = random_complex(rng);
  x.d = random_complex(rng);
  x.beta = random_complex(rng);
  return x;
}

TailElement random_tail_element(Rng& rng) {
  const Complex x = random_complex(rng);
  const Complex y = random_complex(rng);
  return {x, y};
}

Word random_word(Rng& rng, std::span<const Site> pool, std::size_t max_len) {
  if (pool.empty() || max_len == 0) throw std::invalid_argument("random_word: empty pool or max_len 0");
  const std::size_t len = uniform_size(rng, 1, max_len);
  Word out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    const Site j = pool[uniform_size(rng, 0, pool.size() - 1)];
    out.push_back({j, random_test_element(rng)});
  }
  return out;
}

FinitePermutation random_permutation(Rng& rng, std::span<const Site> pool) {
  std::vector<Site> image(pool.begin(), pool.end());
  std::shuffle(image.begin(), image.end(), rng);
  std::map<Site, Site> mapping;
  for (std::size_t k = 0; k < pool.size(); ++k) mapping.emplace(pool[k], image[k]);
  return FinitePermutation{std::move(mapping)};
}

FockVector random_one_particle_vector(Rng& rng, std::size_t max_support, Site max_site) {
  const std::size_t n = uniform_size(rng, 1, std::min<std::size_t>(max_support, max_site));
  FockVector::Amplitudes amps;
  for (Site j : random_subset(rng, n, max_site)) amps.emplace(Index::site(j), random_complex(rng));
  return FockVector{std::move(amps)};
}

BooleanElement random_element(Rng& rng, std::span<const Index> pool, std::size_t n_entries) {
  BooleanElement::Entries entries;
  for (std::size_t k = 0; k < n_entries; ++k) {
    const Index row = pool[uniform_size(rng, 0, pool.size() - 1)];
    const Index col = pool[uniform_size(rng, 0, pool.size() - 1)];
    entries[{row, col}] += random_complex(rng);
  }
  const Complex s = random_complex(rng);
  return BooleanElement{std::move(entries), s};
}

BooleanElement random_block_element(Rng& rng, std::span<const Site> block) {
  if (std::bernoulli_distribution(0.5)(rng)) {
    // A on {#} u I, plus a P_{N\I} = a (I - P_# - P_I).
    std::vector<Index> indices{Index::vacuum()};
    for (Site j : block) indices.push_back(Index::site(j));
    BooleanElement::Entries entries;
    for (Index r : indices) {
      for (Index c : indices) entries.emplace(IndexPair{r, c}, random_complex(rng));
    }
    const Complex a = random_complex(rng);
    for (Index i : indices) entries[{i, i}] -= a;
    return BooleanElement{std::move(entries), a};
  }

  BooleanElement out = BooleanElement::identity();
  const std::size_t factors = uniform_size(rng, 1, 3);
  for (std::size_t k = 0; k < factors; ++k) {
    if (std::bernoulli_distribution(0.25)(rng)) {
      out = out * embed_tail(random_tail_element(rng));
    } else {
      const Site j = block[uniform_size(rng, 0, block.size() - 1)];
      out = out * embed(j, random_test_element(rng));
    }
  }
  return out;
}

std::vector<std::vector<Site>> random_disjoint_blocks(Rng& rng, std::size_t n, std::span<const Site> pool,
                                                      std::size_t max_block_size) {
  if (n > pool.size()) throw std::invalid_argument("random_disjoint_blocks: pool too small");
  std::vector<Site> shuffled(pool.begin(), pool.end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<std::vector<Site>> blocks;
  std::size_t next = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t spare = shuffled.size() - next - (n - k - 1);
    const std::size_t size = uniform_size(rng, 1, std::max<std::size_t>(1, std::min(max_block_size, spare)));
    blocks.emplace_back(shuffled.begin() + next, shuffled.begin() + next + size);
    std::sort(blocks.back().begin(), blocks.back().end());
    next += size;
  }
  return blocks;
}

TraceClassOperator random_density(Rng& rng, DensityKind kind, std::size_t rank, Site max_site) {
  if (rank == 0) throw std::invalid_argument("random_density: rank must be >= 1");
  switch (kind) {
    case DensityKind::vacuum:
      return TraceClassOperator::vacuum_projection();

    case DensityKind::expected: {
      if (rank > max_site + 1) throw std::invalid_argument("random_density: rank exceeds the space");
      const bool with_vacuum = rank > 1 && std::bernoulli_distribution(0.75)(rng);
      const std::size_t n_sites_vectors = with_vacuum ? rank - 1 : rank;
      const auto subset = random_subset(rng, uniform_size(rng, n_sites_vectors, max_site), max_site);
      std::vector<Index> support;
      for (Site j : subset) support.push_back(Index::site(j));

      std::vector<FockVector> vectors;
      if (with_vacuum) vectors.push_back(FockVector::basis(Index::vacuum()));
      for (std::size_t k = 0; k < n_sites_vectors; ++k) vectors.push_back(dense_random_vector(rng, support));
      return assemble(orthonormalize(std::move(vectors)), random_weights(rng, rank));
    }

    case DensityKind::non_expected: {
      if (rank > max_site + 1) throw std::invalid_argument("random_density: rank exceeds the space");
      for (;;) {
        const std::size_t n_sites = uniform_size(rng, std::max<std::size_t>(rank, 1), max_site);
        std::vector<Index> support{Index::vacuum()};
        for (Site j : random_subset(rng, n_sites, max_site)) support.push_back(Index::site(j));
        std::vector<FockVector> vectors;
        for (std::size_t k = 0; k < rank; ++k) vectors.push_back(dense_random_vector(rng, support));
        TraceClassOperator t = assemble(orthonormalize(std::move(vectors)), random_weights(rng, rank));
        if (!is_expected(t, 1e-6)) return t;
      }
    }
  }
  throw std::logic_error("random_density: unknown kind");
}

}  // namespace boolefock
