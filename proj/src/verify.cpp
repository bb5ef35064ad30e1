#include "boolefock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <variant>

#include "boolefock/json_io.hpp"
#include "boolefock/sampling.hpp"

namespace boolefock {

namespace {

using nlohmann::json;

// Stream ids keep the generators of different checkers independent for a seed.
enum Stream : std::uint64_t {
  kStreamRelations = 1,
  kStreamEmbedding,
  kStreamExchange,
  kStreamIndependence,
  kStreamPreservation,
  kStreamFactorization,
  kStreamClassify,
  kStreamSweepState = std::uint64_t{1} << 32,
};

class SparseKernel final : public Kernel {
 public:
  BooleanElement multiply(const BooleanElement& x, const BooleanElement& y) const override { return mul(x, y); }
  Complex evaluate(const BooleanState& state, const BooleanElement& x) const override {
    return boolefock::evaluate(state, x);
  }
  TailElement conditional_expectation(const PhiState& phi, const BooleanElement& x) const override {
    return cond_expect(phi, x);
  }
};

// Accumulates per-sample deviations; keeps the first failing sample's witness.
class ReportBuilder {
 public:
  ReportBuilder(std::string name, double tolerance) : tolerance_(tolerance) { report_.name = std::move(name); }

  template <typename MakeWitness>
  void record(double deviation, MakeWitness&& make_witness) {
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    ++report_.samples_run;
    report_.max_deviation = std::max(report_.max_deviation, deviation);
    if (deviation > tolerance_ && !report_.witness) report_.witness = make_witness();
  }

  CheckReport finish() {
    report_.passed = report_.max_deviation <= tolerance_;
    return std::move(report_);
  }

 private:
  double tolerance_;
  CheckReport report_;
};

const Kernel& kernel_of(const CheckSettings& settings) {
  return settings.kernel ? *settings.kernel : sparse_kernel();
}

BooleanElement product(const Kernel& k, std::span<const BooleanElement> factors) {
  BooleanElement out = BooleanElement::identity();
  for (const auto& f : factors) out = k.multiply(out, f);
  return out;
}

Complex kernel_moment(const Kernel& k, const BooleanState& state, std::span<const Letter> word) {
  BooleanElement out = BooleanElement::identity();
  for (const auto& letter : word) out = k.multiply(out, embed(letter.site, letter.value));
  return k.evaluate(state, out);
}

BooleanElement conditioned(const Kernel& k, const PhiState& phi, const BooleanElement& x) {
  return embed_tail(k.conditional_expectation(phi, x));
}

// --- the two sides of every checked identity, shared with replay -----------

using Sides = std::pair<Complex, Complex>;

std::pair<BooleanElement, BooleanElement> boolean_relation_sides(const Kernel& k, const FockVector& f,
                                                                 const FockVector& g) {
  const Index vac = Index::vacuum();
  return {k.multiply(annihilator(f), creator(g)), scale(inner(g, f), matrix_unit(vac, vac))};
}

// b+(f) b(g) e_n against <e_n, 0+g> (0+f).
std::pair<FockVector, FockVector> rank_one_sides(const Kernel& k, const FockVector& f, const FockVector& g,
                                                 Index n) {
  const FockVector e = FockVector::basis(n);
  return {apply(k.multiply(creator(f), annihilator(g)), e), scale(inner(e, g), f)};
}

std::pair<BooleanElement, BooleanElement> matrix_unit_sides(const Kernel& k, Index m, Index n, Index p, Index q) {
  return {k.multiply(matrix_unit(m, n), matrix_unit(p, q)), n == p ? matrix_unit(m, q) : BooleanElement{}};
}

// j == # : e_{##} = b_i b+_i; otherwise e_{ij} = b+_i b_j.
std::pair<BooleanElement, BooleanElement> dictionary_sides(const Kernel& k, Site i, Index j) {
  const Index vac = Index::vacuum();
  const FockVector ei = FockVector::basis(Index::site(i));
  if (j.is_vacuum()) return {matrix_unit(vac, vac), k.multiply(annihilator(ei), creator(ei))};
  return {matrix_unit(Index::site(i), j), k.multiply(creator(ei), annihilator(FockVector::basis(j)))};
}

std::pair<BooleanElement, BooleanElement> embedding_sides(const Kernel& k, const std::string& mode, Site j,
                                                          const TestAlgebraElement& a,
                                                          const TestAlgebraElement& b) {
  if (mode == "product") return {k.multiply(embed(j, a), embed(j, b)), embed(j, a * b)};
  if (mode == "unit") return {embed(j, TestAlgebraElement::unit()), BooleanElement::identity()};
  if (mode == "adjoint") return {adjoint(embed(j, a)), embed(j, adjoint(a))};
  throw std::invalid_argument("unknown embedding mode '" + mode + "'");
}

Sides exchange_sides(const Kernel& k, const BooleanState& state, std::span<const Letter> word,
                     const FinitePermutation& g) {
  const Word moved = permute(g, word);
  return {kernel_moment(k, state, word), kernel_moment(k, state, moved)};
}

std::pair<TailElement, TailElement> identical_sides(const Kernel& k, const PhiState& phi,
                                                    const TestAlgebraElement& a, Site i, Site j) {
  return {k.conditional_expectation(phi, embed(i, a)), k.conditional_expectation(phi, embed(j, a))};
}

Sides independence_sides(const Kernel& k, const BooleanState& state, const PhiState& phi, const BooleanElement& x,
                         const BooleanElement& y) {
  return {k.evaluate(state, k.multiply(x, y)),
          k.evaluate(state, k.multiply(conditioned(k, phi, x), conditioned(k, phi, y)))};
}

Sides preservation_sides(const Kernel& k, const BooleanState& state, const PhiState& phi, const BooleanElement& x) {
  return {k.evaluate(state, conditioned(k, phi, x)), k.evaluate(state, x)};
}

// Telescoping chain for omega(X1..Xn) = omega(F(X1)..F(Xn)); returns the line values.
std::vector<Complex> telescoping_lines(const Kernel& k, const BooleanState& state, const PhiState& phi,
                                       std::span<const BooleanElement> xs) {
  const std::size_t n = xs.size();
  std::vector<Complex> lines;
  lines.push_back(k.evaluate(state, product(k, xs)));

  BooleanElement prefix = BooleanElement::identity();  // F(X1) ... F(X_{m-1})
  for (std::size_t m = 0; m + 1 < n; ++m) {
    const BooleanElement rest = product(k, xs.subspan(m + 1));
    const BooleanElement head = k.multiply(prefix, xs[m]);
    if (m > 0) lines.push_back(k.evaluate(state, conditioned(k, phi, k.multiply(head, rest))));
    lines.push_back(k.evaluate(state, k.multiply(conditioned(k, phi, head), conditioned(k, phi, rest))));
    prefix = k.multiply(prefix, conditioned(k, phi, xs[m]));
    if (m > 0) lines.push_back(k.evaluate(state, k.multiply(prefix, conditioned(k, phi, rest))));
  }
  if (n == 1) lines.push_back(k.evaluate(state, conditioned(k, phi, xs[0])));
  return lines;
}

std::vector<std::string> telescoping_labels(std::size_t n) {
  auto range = [](std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i <= to; ++i) s += (s.empty() ? "X" : " X") + std::to_string(i);
    return s;
  };
  auto conds = [](std::size_t to) {
    std::string s;
    for (std::size_t i = 1; i <= to; ++i) s += (s.empty() ? "F(X" : " F(X") + std::to_string(i) + ")";
    return s;
  };
  std::vector<std::string> labels{"w(" + range(1, n) + ")"};
  for (std::size_t m = 1; m < n; ++m) {
    const std::string prefix = m > 1 ? conds(m - 1) + " " : "";
    if (m > 1) labels.push_back("w(F(" + prefix + range(m, n) + "))");
    labels.push_back("w(F(" + prefix + "X" + std::to_string(m) + ") F(" + range(m + 1, n) + "))");
    if (m > 1) labels.push_back("w(" + conds(m) + " F(" + range(m + 1, n) + "))");
  }
  return labels;
}

struct CounterexampleSides {
  Counterexample ce;
  Complex psi_x;
  Sides sides;
};

CounterexampleSides counterexample_sides(const Kernel& k, const TraceClassOperator& t, const PhiState& phi,
                                         double tolerance) {
  CounterexampleSides out{counterexample_ratio(t, tolerance), {}, {}};
  const BooleanState psi{1.0, t};
  out.psi_x = k.evaluate(psi, out.ce.witness);
  out.sides = {k.evaluate(psi, conditioned(k, phi, out.ce.witness)), out.ce.ratio * out.psi_x};
  return out;
}

double deviation(const Sides& s) { return std::abs(s.first - s.second); }

json sides_json(const Sides& s) { return {{"lhs", complex_to_json(s.first)}, {"rhs", complex_to_json(s.second)}}; }

template <typename T>
json sides_json(const std::pair<T, T>& s) {
  return {{"lhs", s.first}, {"rhs", s.second}};
}

json with(json base, const json& extra) {
  base.update(extra);
  return base;
}

std::vector<Site> sorted_union(std::set<Site> sites) { return {sites.begin(), sites.end()}; }

std::set<Site> density_sites(const TraceClassOperator& t) {
  std::set<Site> out;
  for (Index i : t.support()) {
    if (!i.is_vacuum()) out.insert(i.site_label());
  }
  return out;
}

double finite_or_max(double d) { return std::isfinite(d) ? d : std::numeric_limits<double>::max(); }

}  // namespace

const Kernel& sparse_kernel() {
  static const SparseKernel kernel;
  return kernel;
}

json report_to_json(const CheckReport& report) {
  return {{"name", report.name},
          {"passed", report.passed},
          {"max_deviation", finite_or_max(report.max_deviation)},
          {"samples_run", report.samples_run},
          {"witness", report.witness ? *report.witness : json(nullptr)}};
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.max_deviation = j.at("max_deviation").get<double>();
  r.samples_run = j.at("samples_run").get<std::size_t>();
  if (const auto& w = j.at("witness"); !w.is_null()) r.witness = w;
  return r;
}

// --- algebraic relations ---------------------------------------------------

CheckReport check_boolean_relations(std::size_t n_pairs, std::uint64_t seed, const CheckSettings& settings) {
  const Kernel& k = kernel_of(settings);
  Rng rng = make_rng(seed, kStreamRelations);
  ReportBuilder out("boolean_relations", settings.tolerance);
  constexpr std::size_t kMaxSupport = 16;
  constexpr Site kMaxSite = 24;

  for (std::size_t s = 0; s < n_pairs; ++s) {
    const FockVector f = random_one_particle_vector(rng, kMaxSupport, kMaxSite);
    const FockVector g = random_one_particle_vector(rng, kMaxSupport, kMaxSite);
    const auto first = boolean_relation_sides(k, f, g);
    double dev = max_deviation(first.first, first.second);

    std::set<Index> basis = f.support();
    basis.merge(g.support());
    basis.insert(Index::vacuum());
    basis.insert(Index::site(kMaxSite + 1));
    std::optional<json> second_witness;
    for (Index n : basis) {
      const auto second = rank_one_sides(k, f, g, n);
      const double d = max_deviation(second.first, second.second);
      if (d > settings.tolerance && !second_witness) {
        second_witness = with({{"kind", "rank_one_relation"}, {"f", f}, {"g", g}, {"basis", n}}, sides_json(second));
      }
      dev = std::max(dev, d);
    }
    out.record(dev, [&] {
      if (max_deviation(first.first, first.second) > settings.tolerance || !second_witness) {
        return with({{"kind", "boolean_relation"}, {"f", f}, {"g", g}}, sides_json(first));
      }
      return *second_witness;
    });
  }
  return out.finish();
}

CheckReport check_matrix_units(Site max_site, const CheckSettings& settings) {
  const Kernel& k = kernel_of(settings);
  ReportBuilder out("matrix_units", settings.tolerance);
  std::vector<Index> pool{Index::vacuum()};
  for (Site j = 1; j <= max_site; ++j) pool.push_back(Index::site(j));

  for (Index m : pool) {
    for (Index n : pool) {
      for (Index p : pool) {
        for (Index q : pool) {
          const auto s = matrix_unit_sides(k, m, n, p, q);
          out.record(max_deviation(s.first, s.second), [&] {
            return with({{"kind", "matrix_unit"}, {"m", m}, {"n", n}, {"p", p}, {"q", q}}, sides_json(s));
          });
        }
      }
    }
  }
  for (Site i = 1; i <= max_site; ++i) {
    for (Index j : pool) {
      const auto s = dictionary_sides(k, i, j);
      out.record(max_deviation(s.first, s.second),
                 [&] { return with({{"kind", "dictionary"}, {"i", i}, {"j", j}}, sides_json(s)); });
    }
  }
  return out.finish();
}

CheckReport check_embedding_homomorphism(std::size_t n_pairs, std::uint64_t seed, const CheckSettings& settings) {
  const Kernel& k = kernel_of(settings);
  Rng rng = make_rng(seed, kStreamEmbedding);
  ReportBuilder out("embedding_homomorphism", settings.tolerance);
  std::uniform_int_distribution<Site> site(1, kDefaultMaxSite);

  for (std::size_t s = 0; s < n_pairs; ++s) {
    const Site j = site(rng);
    const TestAlgebraElement a = random_test_element(rng);
    const TestAlgebraElement b = random_test_element(rng);
    double dev = 0.0;
    std::optional<json> witness;
    for (const char* mode : {"product", "unit", "adjoint"}) {
      const auto sides = embedding_sides(k, mode, j, a, b);
      const double d = max_deviation(sides.first, sides.second);
      if (d > settings.tolerance && !witness) {
        witness = with({{"kind", "embedding"}, {"mode", mode}, {"site", j}, {"A", a}, {"B", b}}, sides_json(sides));
      }
      dev = std::max(dev, d);
    }
    out.record(dev, [&] { return *witness; });
  }
  return out.finish();
}

// --- process properties ----------------------------------------------------

std::vector<Site> exchangeability_pool(const BooleanState& state) {
  std::set<Site> sites;
  for (Site j = 1; j <= kDefaultMaxSite; ++j) sites.insert(j);
  if (state.gamma() > 0.0) sites.merge(density_sites(state.density()));
  const Site top = *sites.rbegin();
  sites.insert(top + 1);
  sites.insert(top + 2);
  return sorted_union(std::move(sites));
}

CheckReport check_exchangeable(const BooleanState& state, std::size_t n_words, std::size_t max_len,
                               std::uint64_t seed, const CheckSettings& settings) {
  const Kernel& k = kernel_of(settings);
  Rng rng = make_rng(seed, kStreamExchange);
  const std::vector<Site> pool = exchangeability_pool(state);
  ReportBuilder out("exchangeable", settings.tolerance);

  for (std::size_t s = 0; s < n_words; ++s) {
    const Word word = random_word(rng, pool, max_len);
    const FinitePermutation g = random_permutation(rng, pool);
    const Sides sides = exchange_sides(k, state, word, g);
    out.record(deviation(sides), [&] {
      return with({{"kind", "exchangeability"}, {"state", state}, {"word", word}, {"permutation", g}},
                  sides_json(sides));
    });
  }
  return out.finish();
}

CheckReport check_identically_distributed(const PhiState& phi, std::span<const TestAlgebraElement> samples,
                                          std::span<const std::pair<Site, Site>> index_pairs,
                                          const CheckSettings& settings) {
  const Kernel& k = kernel_of(settings);
  ReportBuilder out("identically_distributed", settings.tolerance);
  for (const auto& a : samples) {
    for (const auto& [i, j] : index_pairs) {
      const auto sides = identical_sides(k, phi, a, i, j);
      out.record(max_deviation(sides.first, sides.second), [&] {
        return with({{"kind", "identical_distribution"}, {"phi", phi}, {"A", a}, {"i", i}, {"k", j}},
                    sides_json(sides));
      });
    }
  }
  return out.finish();
}

CheckReport check_pair_independence(const BooleanState& state, const PhiState& phi, std::size_t n_samples,
                                    std::uint64_t seed, const CheckSettings& settings) {
  const Kernel& k = kernel_of(settings);
  Rng rng = make_rng(seed, kStreamIndependence);
  const std::vector<Site> pool = site_range(kDefaultMaxSite);
  ReportBuilder out("pair_independence", settings.tolerance);

  for (std::size_t s = 0; s < n_samples; ++s) {
    const auto blocks = random_disjoint_blocks(rng, 2, pool, 3);
    const BooleanElement x = random_block_element(rng, blocks[0]);
    const BooleanElement y = random_block_element(rng, blocks[1]);
    const Sides sides = independence_sides(k, state, phi, x, y);
    out.record(deviation(sides), [&] {
      return with({{"kind", "independence"}, {"state", state}, {"phi", phi}, {"X", x}, {"Y", y}},
                  sides_json(sides));
    });
  }
  return out.finish();
}

CheckReport check_preservation(const BooleanState& state, const PhiState& phi, std::size_t n_samples,
                               std::uint64_t seed, const CheckSettings& settings) {
  const Kernel& k = kernel_of(settings);
  Rng rng = make_rng(seed, kStreamPreservation);
  std::set<Index> indices{Index::vacuum()};
  for (Site j = 1; j <= kDefaultMaxSite; ++j) indices.insert(Index::site(j));
  if (state.gamma() > 0.0) indices.merge(state.density().support());
  const std::vector<Index> pool(indices.begin(), indices.end());
  const std::vector<Site> sites = site_range(kDefaultMaxSite);
  ReportBuilder out("preservation", settings.tolerance);

  for (std::size_t s = 0; s < n_samples; ++s) {
    BooleanElement x;
    if (s % 2 == 0) {
      x = random_element(rng, pool, 8);
    } else {
      x = random_block_element(rng, random_disjoint_blocks(rng, 1, sites, 4)[0]);
    }
    const Sides sides = preservation_sides(k, state, phi, x);
    out.record(deviation(sides), [&] {
      return with({{"kind", "preservation"}, {"state", state}, {"phi", phi}, {"X", x}}, sides_json(sides));
    });
  }
  return out.finish();
}

CheckReport check_counterexample(const TraceClassOperator& t, const CheckSettings& settings) {
  const Kernel& k = kernel_of(settings);
  CheckReport report;
  report.name = "counterexample";

  const PhiState singular = PhiState::singular();
  const PhiState normal = PhiState::normal(TraceClassOperator{{Eigenpair{1.0, FockVector::basis(Index::site(1))}}});
  json witness;
  for (const PhiState* phi : {&singular, &normal}) {
    const auto cs = counterexample_sides(k, t, *phi, kDefaultTolerance);
    const double d = deviation(cs.sides);
    ++report.samples_run;
    if (report.samples_run == 1 || d > report.max_deviation) {
      witness = with({{"kind", "counterexample"},
                      {"T", t},
                      {"phi", *phi},
                      {"X", cs.ce.witness},
                      {"ratio", cs.ce.ratio},
                      {"psi_X", complex_to_json(cs.psi_x)}},
                     sides_json(cs.sides));
    }
    report.max_deviation = std::max(report.max_deviation, std::isnan(d) ? std::numeric_limits<double>::infinity() : d);
    report.passed = cs.ce.ratio < 1.0 - kRatioMargin;
  }
  report.passed = report.passed && report.max_deviation <= settings.tolerance;
  report.witness = std::move(witness);
  return report;
}

FactorizationReport check_nfold_factorization(const BooleanState& state, const PhiState& phi,
                                              std::span<const std::vector<Site>> blocks, std::size_t n_samples,
                                              std::uint64_t seed, const CheckSettings& settings) {
  const std::size_t n = blocks.size();
  if (n < 2 || n > 6) throw std::invalid_argument("check_nfold_factorization: need 2 <= n <= 6 blocks");
  std::set<Site> seen;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("check_nfold_factorization: empty block");
    for (Site j : b) {
      if (!seen.insert(j).second) {
        throw std::invalid_argument("check_nfold_factorization: blocks overlap at site " + std::to_string(j));
      }
    }
  }

  const Kernel& k = kernel_of(settings);
  Rng rng = make_rng(seed, kStreamFactorization);
  const auto labels = telescoping_labels(n);
  FactorizationReport out;
  for (const auto& label : labels) out.steps.push_back({label, 0.0});
  ReportBuilder builder("nfold_factorization", settings.tolerance);

  for (std::size_t s = 0; s < n_samples; ++s) {
    std::vector<BooleanElement> xs;
    for (const auto& b : blocks) xs.push_back(random_block_element(rng, b));
    const auto lines = telescoping_lines(k, state, phi, xs);
    double dev = std::abs(lines.front() - lines.back());
    for (std::size_t l = 1; l < lines.size(); ++l) {
      const double d = std::abs(lines[l] - lines[l - 1]);
      out.steps[l].deviation = std::max(out.steps[l].deviation, d);
      dev = std::max(dev, d);
    }
    builder.record(dev, [&] {
      return with({{"kind", "factorization"}, {"state", state}, {"phi", phi}, {"factors", xs}},
                  sides_json(Sides{lines.front(), lines.back()}));
    });
  }
  out.report = builder.finish();
  return out;
}

FactorizationReport check_nfold_factorization(const BooleanState& state, const PhiState& phi, std::size_t n,
                                              std::uint64_t seed, std::size_t n_samples,
                                              const CheckSettings& settings) {
  if (n < 2 || n > 6) throw std::invalid_argument("check_nfold_factorization: need 2 <= n <= 6");
  Rng rng = make_rng(seed, kStreamFactorization + 100);
  const auto pool = site_range(kDefaultMaxSite);
  const auto blocks = random_disjoint_blocks(rng, n, pool, kDefaultMaxSite / n);
  return check_nfold_factorization(state, phi, blocks, n_samples, seed, settings);
}

// --- De Finetti classification ---------------------------------------------

Classification classify_definetti(const BooleanState& state, const ClassifyOptions& options) {
  Classification out;
  const CheckSettings& settings = options.settings;
  Rng rng = make_rng(options.seed, kStreamClassify);

  out.reports.push_back(check_exchangeable(state, options.n_words, options.max_word_len, options.seed, settings));
  out.symmetric = out.reports.back().passed;

  std::optional<PhiState> phi;
  std::optional<BooleanState> reduced;
  if (state.gamma() == 0.0) {
    out.expected = true;
    phi = PhiState::singular();
    reduced = state;
  } else {
    const TraceClassOperator& t = state.density();
    out.expected = is_expected(t);
    if (out.expected) {
      phi = preserving_phi(t);
      reduced = BooleanState{1.0, t};
    } else {
      out.counterexample = counterexample_ratio(t);
      out.reports.push_back(check_counterexample(t, settings));
    }
  }

  if (phi) {
    out.reports.push_back(check_preservation(*reduced, *phi, options.n_samples, options.seed, settings));
    out.reports.push_back(check_pair_independence(*reduced, *phi, options.n_samples, options.seed, settings));

    std::vector<TestAlgebraElement> samples{
        {1.0, 0.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 0.0, 1.0},
    };
    for (int s = 0; s < 5; ++s) samples.push_back(random_test_element(rng));
    std::set<Site> sites{1, 2};
    if (state.gamma() > 0.0) sites.merge(density_sites(state.density()));
    const Site top = *sites.rbegin();
    sites.insert(top + 1);
    sites.insert(top + 2);
    std::vector<std::pair<Site, Site>> pairs;
    for (auto i = sites.begin(); i != sites.end(); ++i) {
      for (auto j = std::next(i); j != sites.end(); ++j) pairs.emplace_back(*i, *j);
    }
    out.reports.push_back(check_identically_distributed(*phi, samples, pairs, settings));

    out.iid = std::all_of(out.reports.begin() + 1, out.reports.end(), [](const auto& r) { return r.passed; });
  }

  out.consistent = out.symmetric == out.iid;
  for (const auto& r : out.reports) {
    if (r.passed) out.max_deviation = std::max(out.max_deviation, r.max_deviation);
  }
  return out;
}

json classification_to_json(const Classification& c) {
  json reports = json::array();
  for (const auto& r : c.reports) reports.push_back(report_to_json(r));
  json ce = nullptr;
  if (c.counterexample) {
    ce = {{"ratio", c.counterexample->ratio},
          {"eigen_index", c.counterexample->eigen_index},
          {"witness", c.counterexample->witness}};
  }
  return {{"symmetric", c.symmetric},   {"expected", c.expected},
          {"iid", c.iid},               {"consistent", c.consistent},
          {"max_deviation", finite_or_max(c.max_deviation)},
          {"counterexample", std::move(ce)},
          {"reports", std::move(reports)}};
}

BooleanState sweep_state(std::uint64_t seed, std::size_t index, std::size_t max_rank) {
  if (max_rank == 0) throw std::invalid_argument("sweep: max_rank must be >= 1");
  Rng rng = make_rng(seed, kStreamSweepState + index);
  const std::size_t gamma_kind = index % 3;
  const auto kind = static_cast<DensityKind>((index / 3) % 3);

  double gamma = 0.0;
  if (gamma_kind == 1) gamma = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  if (gamma_kind == 2) gamma = 1.0;
  const std::size_t rank =
      kind == DensityKind::vacuum ? 1 : std::uniform_int_distribution<std::size_t>(1, max_rank)(rng);
  const Site max_site = std::max<Site>(6, static_cast<Site>(rank));
  return BooleanState{gamma, random_density(rng, kind, rank, max_site)};
}

std::vector<SweepRow> run_sweep(std::size_t n_states, std::size_t max_rank, const ClassifyOptions& options) {
  std::vector<SweepRow> rows;
  rows.reserve(n_states);
  for (std::size_t i = 0; i < n_states; ++i) {
    const BooleanState state = sweep_state(options.seed, i, max_rank);
    ClassifyOptions local = options;
    local.seed = make_rng(options.seed, kStreamSweepState + i)();
    const Classification c = classify_definetti(state, local);
    rows.push_back({state.gamma(), state.density().rank(), c.symmetric, c.expected, c.iid, c.consistent,
                    c.max_deviation});
  }
  return rows;
}

// --- witness replay --------------------------------------------------------

namespace {

using Quantity = std::variant<Complex, TailElement, BooleanElement, FockVector>;

double distance(const Quantity& a, const Quantity& b) {
  return std::visit(
      [&](const auto& x) -> double {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, Complex>) {
          return std::abs(x - y);
        } else {
          return max_deviation(x, y);
        }
      },
      a);
}

json quantity_json(const Quantity& q) {
  return std::visit(
      [](const auto& x) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Complex>) {
          return complex_to_json(x);
        } else {
          return json(x);
        }
      },
      q);
}

template <typename T>
Quantity parse_as(const json& j) {
  if constexpr (std::is_same_v<T, Complex>) {
    return complex_from_json(j);
  } else {
    return j.get<T>();
  }
}

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("witness: missing field '") + key + "'");
  return *it;
}

}  // namespace

ReplayResult replay_witness(const json& input, const CheckSettings& settings) {
  const json* w = &input;
  if (input.contains("witness") && !input.contains("kind")) {
    w = &input.at("witness");
    if (w->is_null()) throw std::invalid_argument("the report carries no witness");
  }
  if (!w->is_object()) throw std::invalid_argument("a witness must be a JSON object");
  const Kernel& k = kernel_of(settings);
  const std::string kind = need(*w, "kind").get<std::string>();

  Quantity lhs;
  Quantity rhs;
  Quantity recorded_lhs;
  Quantity recorded_rhs;
  auto set = [&](auto sides) {
    using T = std::decay_t<decltype(sides.first)>;
    lhs = sides.first;
    rhs = sides.second;
    recorded_lhs = parse_as<T>(need(*w, "lhs"));
    recorded_rhs = parse_as<T>(need(*w, "rhs"));
  };

  if (kind == "boolean_relation") {
    set(boolean_relation_sides(k, need(*w, "f").get<FockVector>(), need(*w, "g").get<FockVector>()));
  } else if (kind == "rank_one_relation") {
    set(rank_one_sides(k, need(*w, "f").get<FockVector>(), need(*w, "g").get<FockVector>(),
                       need(*w, "basis").get<Index>()));
  } else if (kind == "matrix_unit") {
    set(matrix_unit_sides(k, need(*w, "m").get<Index>(), need(*w, "n").get<Index>(), need(*w, "p").get<Index>(),
                          need(*w, "q").get<Index>()));
  } else if (kind == "dictionary") {
    set(dictionary_sides(k, need(*w, "i").get<Site>(), need(*w, "j").get<Index>()));
  } else if (kind == "embedding") {
    set(embedding_sides(k, need(*w, "mode").get<std::string>(), need(*w, "site").get<Site>(),
                        need(*w, "A").get<TestAlgebraElement>(), need(*w, "B").get<TestAlgebraElement>()));
  } else if (kind == "exchangeability") {
    const auto word = need(*w, "word").get<Word>();
    if (word.empty()) throw std::invalid_argument("witness: empty word");
    set(exchange_sides(k, need(*w, "state").get<BooleanState>(), word,
                       need(*w, "permutation").get<FinitePermutation>()));
  } else if (kind == "identical_distribution") {
    set(identical_sides(k, need(*w, "phi").get<PhiState>(), need(*w, "A").get<TestAlgebraElement>(),
                        need(*w, "i").get<Site>(), need(*w, "k").get<Site>()));
  } else if (kind == "independence") {
    set(independence_sides(k, need(*w, "state").get<BooleanState>(), need(*w, "phi").get<PhiState>(),
                           need(*w, "X").get<BooleanElement>(), need(*w, "Y").get<BooleanElement>()));
  } else if (kind == "preservation") {
    set(preservation_sides(k, need(*w, "state").get<BooleanState>(), need(*w, "phi").get<PhiState>(),
                           need(*w, "X").get<BooleanElement>()));
  } else if (kind == "factorization") {
    const auto xs = need(*w, "factors").get<std::vector<BooleanElement>>();
    if (xs.empty()) throw std::invalid_argument("witness: no factors");
    const auto lines = telescoping_lines(k, need(*w, "state").get<BooleanState>(), need(*w, "phi").get<PhiState>(), xs);
    set(Sides{lines.front(), lines.back()});
  } else if (kind == "counterexample") {
    const auto cs = counterexample_sides(k, need(*w, "T").get<TraceClassOperator>(), need(*w, "phi").get<PhiState>(),
                                         kDefaultTolerance);
    set(cs.sides);
  } else {
    throw std::invalid_argument("unknown witness kind '" + kind + "'");
  }

  ReplayResult out;
  out.kind = kind;
  out.lhs = quantity_json(lhs);
  out.rhs = quantity_json(rhs);
  out.gap = distance(lhs, rhs);
  out.reproduced = distance(lhs, recorded_lhs) <= settings.tolerance && distance(rhs, recorded_rhs) <= settings.tolerance;
  return out;
}

}  // namespace boolefock
