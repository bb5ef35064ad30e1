#ifndef BOOLEFOCK_STATES_HPP_
#define BOOLEFOCK_STATES_HPP_

// States on the Boolean algebra, in the unique form
//   omega = gamma * psi_T + (1 - gamma) * omega_inf,
// with psi_T(X) = Tr(T X) for a finite-rank density T and omega_inf the
// character A + aI -> a.

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "boolefock/algebra.hpp"
#include "boolefock/fock.hpp"

namespace boolefock {

struct Eigenpair {
  double weight = 0.0;
  FockVector vector;
};

/// T = sum_k weight_k <., xi_k> xi_k with weights > 0 summing to 1 and the
/// xi_k orthonormal.
class TraceClassOperator {
 public:
  struct Options {
    double tolerance = kDefaultTolerance;
    /// Run a modified Gram-Schmidt pass over the vectors before validating.
    bool reorthonormalize = false;
  };

  /// Validates the invariants and throws std::invalid_argument naming the
  /// first one that fails.
  explicit TraceClassOperator(std::vector<Eigenpair> eigenpairs) : TraceClassOperator(std::move(eigenpairs), Options{}) {}
  TraceClassOperator(std::vector<Eigenpair> eigenpairs, Options options);

  /// P_#, the density of the vacuum state.
  static TraceClassOperator vacuum_projection();

  const std::vector<Eigenpair>& eigenpairs() const noexcept { return pairs_; }
  std::size_t rank() const noexcept { return pairs_.size(); }

  /// <T e_col, e_row>.
  Complex entry(Index row, Index col) const;
  FockVector apply(const FockVector& v) const;

  /// Union of the eigenvector supports; T vanishes outside it.
  std::set<Index> support() const;

  /// omega_#(T) = <T e_#, e_#>.
  double vacuum_weight() const;

  /// Tr(T A) for the compact part A of x; the scalar part is ignored.
  Complex trace_compact(const BooleanElement& x) const;

 private:
  std::vector<Eigenpair> pairs_;
};

class BooleanState {
 public:
  /// Throws std::invalid_argument unless gamma lies in [0, 1].
  BooleanState(double gamma, TraceClassOperator density);

  double gamma() const noexcept { return gamma_; }
  /// Meaningless when gamma == 0; evaluation never reads it then.
  const TraceClassOperator& density() const noexcept { return density_; }

 private:
  double gamma_;
  TraceClassOperator density_;
};

BooleanState vacuum_state();
BooleanState infinity_state();
BooleanState symmetric_state(double gamma);

/// gamma * Tr(T A) + s for x = A + sI.
Complex evaluate(const BooleanState& state, const BooleanElement& x);

/// omega_#(x) = <x e_#, e_#>.
Complex vacuum_expectation(const BooleanElement& x);

struct Letter {
  Site site = 1;
  TestAlgebraElement value;

  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// iota_{j1}(A1) ... iota_{jn}(An).
BooleanElement word_product(std::span<const Letter> word);

/// omega(iota_{j1}(A1) ... iota_{jn}(An)); throws std::invalid_argument on an
/// empty word.
Complex moment(const BooleanState& state, std::span<const Letter> word);

/// The word with every site relabelled by g.
Word permute(const FinitePermutation& g, std::span<const Letter> word);

/// Modified Gram-Schmidt. Throws std::invalid_argument if a vector is
/// (numerically) dependent on its predecessors.
std::vector<FockVector> orthonormalize(std::vector<FockVector> vectors,
                                       double tolerance = kDefaultTolerance);

}  // namespace boolefock

#endif  // BOOLEFOCK_STATES_HPP_
