#ifndef BOOLEFOCK_TAIL_HPP_
#define BOOLEFOCK_TAIL_HPP_

// The tail algebra C P_# (+) C P_#^perp of a Boolean process and the
// conditional expectations onto it,
//   F_phi(X) = omega_#(X) P_# + phi(P_#^perp X P_#^perp) P_#^perp,
// for phi either a finite-rank normal state on B(l2(N)) or a state that
// factors through the Calkin algebra.

#include <cstddef>
#include <stdexcept>
#include <variant>

#include "boolefock/algebra.hpp"
#include "boolefock/states.hpp"

namespace boolefock {

/// Raised when a tail-algebra construction is asked for on a density that
/// does not admit it (e.g. a preserving expectation for a non-expected T).
class DecisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// x P_# + y P_#^perp.
struct TailElement {
  Complex x{}, y{};

  static TailElement unit() { return {1.0, 1.0}; }

  friend bool operator==(const TailElement&, const TailElement&) = default;
};

inline TailElement operator*(const TailElement& p, const TailElement& q) { return {p.x * q.x, p.y * q.y}; }
inline TailElement operator+(const TailElement& p, const TailElement& q) { return {p.x + q.x, p.y + q.y}; }
double max_deviation(const TailElement& p, const TailElement& q);

/// x e_{##} + y (I - e_{##}).
BooleanElement embed_tail(const TailElement& z);

class PhiState {
 public:
  struct Singular {};
  struct Normal {
    TraceClassOperator density;
  };

  static PhiState singular() { return PhiState{Singular{}}; }
  /// Throws std::invalid_argument if any eigenvector of `density` has a
  /// vacuum component.
  static PhiState normal(TraceClassOperator density);

  bool is_singular() const noexcept { return std::holds_alternative<Singular>(kind_); }
  /// Only valid for the normal family.
  const TraceClassOperator& density() const { return std::get<Normal>(kind_).density; }

  /// phi(P_#^perp X P_#^perp), reading P_#^perp X P_#^perp as an operator on l2(N).
  Complex evaluate_compressed(const BooleanElement& x) const;

 private:
  explicit PhiState(std::variant<Singular, Normal> kind) : kind_(std::move(kind)) {}
  std::variant<Singular, Normal> kind_;
};

TailElement cond_expect(const PhiState& phi, const BooleanElement& x);

/// E(X) = omega_#(X) P_# + P_#^perp X P_#^perp. Every F_phi factors through it.
BooleanElement vacuum_block_compression(const BooleanElement& x);

/// Deviation of F_phi(Z X Z2) from Z F_phi(X) Z2.
double module_property_deviation(const PhiState& phi, const TailElement& z, const BooleanElement& x,
                                 const TailElement& z2);
inline bool module_property_check(const PhiState& phi, const TailElement& z, const BooleanElement& x,
                                  const TailElement& z2, double tolerance = kDefaultTolerance) {
  return module_property_deviation(phi, z, x, z2) <= tolerance;
}

/// True iff e_# is an eigenvector of T: T e_# = <T e_#, e_#> e_# within tolerance.
bool is_expected(const TraceClassOperator& t, double tolerance = kDefaultTolerance);

/// The state phi making F_phi preserve psi_T: (T - omega_#(T) P_#) / (1 - omega_#(T))
/// restricted to l2(N). Returns the singular family when T = P_#, where every
/// F_phi preserves psi_T. Throws DecisionError when T is not expected.
PhiState preserving_phi(const TraceClassOperator& t, double tolerance = kDefaultTolerance);

struct Counterexample {
  /// psi_T(F_phi(X)) / psi_T(X), the same for every phi.
  double ratio = 0.0;
  /// X = <., xi_{j0}> e_#.
  BooleanElement witness;
  /// j0: position in T.eigenpairs().
  std::size_t eigen_index = 0;
};

/// For a non-expected T, the witness showing no F_phi preserves psi_T.
/// j0 is the first eigenpair of maximal weight among those with a nonzero
/// vacuum overlap. Throws DecisionError when T is expected.
Counterexample counterexample_ratio(const TraceClassOperator& t, double tolerance = kDefaultTolerance);

/// F(X) = omega_#(X) P_# + [psi_T(X) - omega_#(T) omega_#(X)] / (1 - omega_#(T)) P_#^perp.
/// Requires T expected with omega_#(T) < 1; throws DecisionError otherwise.
TailElement theorem_preserving_F(const TraceClassOperator& t, const BooleanElement& x,
                                 double tolerance = kDefaultTolerance);

}  // namespace boolefock

#endif  // BOOLEFOCK_TAIL_HPP_
