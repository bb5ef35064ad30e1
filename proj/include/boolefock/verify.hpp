#ifndef BOOLEFOCK_VERIFY_HPP_
#define BOOLEFOCK_VERIFY_HPP_

// Property checkers for Boolean processes, and the exchangeability versus
// conditional i.i.d. classification built on top of them.
//
// Checkers route their arithmetic through a Kernel; the test tree supplies a
// dense one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "boolefock/algebra.hpp"
#include "boolefock/fock.hpp"
#include "boolefock/states.hpp"
#include "boolefock/tail.hpp"

namespace boolefock {

/// Pass/fail threshold of the checkers.
inline constexpr double kCheckTolerance = 1e-9;

/// Margin by which a counterexample ratio must stay below 1.
inline constexpr double kRatioMargin = 1e-12;

class Kernel {
 public:
  virtual ~Kernel() = default;
  virtual BooleanElement multiply(const BooleanElement& x, const BooleanElement& y) const = 0;
  virtual Complex evaluate(const BooleanState& state, const BooleanElement& x) const = 0;
  virtual TailElement conditional_expectation(const PhiState& phi, const BooleanElement& x) const = 0;
};

/// The sparse implementation from algebra/states/tail.
const Kernel& sparse_kernel();

struct CheckSettings {
  double tolerance = kCheckTolerance;
  const Kernel* kernel = &sparse_kernel();
};

struct CheckReport {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  std::size_t samples_run = 0;
  /// Serialized inputs of the first failing sample, or of the constructed
  /// counterexample for checks that succeed by exhibiting one.
  std::optional<nlohmann::json> witness;
};

nlohmann::json report_to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& j);

// --- algebraic relations ---------------------------------------------------

/// b(f) b+(g) = <g, f> e_{##} and b+(f) b(g) = <., 0+g> 0+f over random pairs
/// with supports of at most 16 sites.
CheckReport check_boolean_relations(std::size_t n_pairs, std::uint64_t seed, const CheckSettings& settings = {});

/// e_{mn} e_{pq} = delta_{np} e_{mq} over {#, 1..max_site}, plus the dictionary
/// e_{##} = b_i b+_i and e_{ij} = b+_i b_j for i, j <= max_site.
CheckReport check_matrix_units(Site max_site, const CheckSettings& settings = {});

/// iota_j as a unital *-homomorphism, on random pairs.
CheckReport check_embedding_homomorphism(std::size_t n_pairs, std::uint64_t seed,
                                         const CheckSettings& settings = {});

// --- process properties ----------------------------------------------------

/// Sites drawn by check_exchangeable: {1..8}, the sites under the density when
/// gamma > 0, and two sites beyond all of them.
std::vector<Site> exchangeability_pool(const BooleanState& state);

/// moment(state, w) = moment(state, g.w) for random words w and random finite
/// permutations g.
CheckReport check_exchangeable(const BooleanState& state, std::size_t n_words, std::size_t max_len,
                               std::uint64_t seed, const CheckSettings& settings = {});

/// F_phi(iota_i(A)) = F_phi(iota_k(A)) for every sampled A and pair (i, k).
CheckReport check_identically_distributed(const PhiState& phi, std::span<const TestAlgebraElement> samples,
                                          std::span<const std::pair<Site, Site>> index_pairs,
                                          const CheckSettings& settings = {});

/// omega(X Y) = omega(F(X) F(Y)) for X, Y drawn from the algebras of disjoint
/// random blocks I, K (each joined with the tail algebra).
CheckReport check_pair_independence(const BooleanState& state, const PhiState& phi, std::size_t n_samples,
                                    std::uint64_t seed, const CheckSettings& settings = {});

/// omega(F_phi(X)) = omega(X) on random elements.
CheckReport check_preservation(const BooleanState& state, const PhiState& phi, std::size_t n_samples,
                               std::uint64_t seed, const CheckSettings& settings = {});

/// For a non-expected T: ratio < 1 - kRatioMargin and
/// psi_T(F_phi(X)) = ratio * psi_T(X) on the witness, for a singular and a normal phi.
CheckReport check_counterexample(const TraceClassOperator& t, const CheckSettings& settings = {});

struct TelescopingStep {
  std::string label;
  /// Largest |line - previous line| over the samples; zero for the first line.
  double deviation = 0.0;
};

struct FactorizationReport {
  CheckReport report;
  std::vector<TelescopingStep> steps;
};

/// omega(X1 ... Xn) = omega(F(X1) ... F(Xn)) for X_k from pairwise disjoint
/// blocks, with each line of the chain
///   omega(X1..Xn) = omega(F(X1) F(X2..Xn)) = omega(F(F(X1) X2..Xn))
///                 = omega(F(F(X1) X2) F(X3..Xn)) = omega(F(X1) F(X2) F(X3..Xn)) = ...
/// checked as its own equality. Requires 2 <= n <= 6.
FactorizationReport check_nfold_factorization(const BooleanState& state, const PhiState& phi,
                                              std::span<const std::vector<Site>> blocks, std::size_t n_samples,
                                              std::uint64_t seed, const CheckSettings& settings = {});

/// As above with random disjoint blocks drawn from {1..8}.
FactorizationReport check_nfold_factorization(const BooleanState& state, const PhiState& phi, std::size_t n,
                                              std::uint64_t seed, std::size_t n_samples = 20,
                                              const CheckSettings& settings = {});

// --- De Finetti classification ---------------------------------------------

struct ClassifyOptions {
  std::size_t n_words = 200;
  std::size_t max_word_len = 5;
  std::size_t n_samples = 50;
  std::uint64_t seed = 0;
  CheckSettings settings;
};

struct Classification {
  bool symmetric = false;
  bool expected = false;
  bool iid = false;
  /// symmetric == iid.
  bool consistent = false;
  /// Largest deviation among the checks that passed.
  double max_deviation = 0.0;
  std::vector<CheckReport> reports;
  std::optional<Counterexample> counterexample;
};

/// gamma == 0: expected, and i.i.d. is checked on the state itself with a
/// singular phi. gamma > 0: the density T decides; i.i.d. is checked on psi_T
/// with the preserving expectation when T is expected, and fails with a
/// counterexample otherwise.
Classification classify_definetti(const BooleanState& state, const ClassifyOptions& options = {});

nlohmann::json classification_to_json(const Classification& c);

struct SweepRow {
  double gamma = 0.0;
  std::size_t rank = 0;
  bool symmetric = false;
  bool expected = false;
  bool iid = false;
  bool consistent = false;
  double max_deviation = 0.0;
};

/// The state classified in row `index` of a sweep: gamma cycles through
/// {0, random in [0.05, 0.95], 1} and the density kind through
/// {vacuum, expected, non-expected}, with rank uniform in [1, max_rank].
BooleanState sweep_state(std::uint64_t seed, std::size_t index, std::size_t max_rank);

std::vector<SweepRow> run_sweep(std::size_t n_states, std::size_t max_rank, const ClassifyOptions& options);

// --- witness replay --------------------------------------------------------

struct ReplayResult {
  std::string kind;
  nlohmann::json lhs;
  nlohmann::json rhs;
  /// Gap between the recomputed sides.
  double gap = 0.0;
  /// Whether the recomputed sides match the recorded ones within tolerance.
  bool reproduced = false;
};

/// Recomputes both sides of a witness emitted by any checker above. Accepts the
/// witness object itself or a whole report carrying one. Throws
/// std::invalid_argument on malformed input.
ReplayResult replay_witness(const nlohmann::json& witness, const CheckSettings& settings = {});

}  // namespace boolefock

#endif  // BOOLEFOCK_VERIFY_HPP_
