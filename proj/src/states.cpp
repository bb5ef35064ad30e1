#include "boolefock/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace boolefock {

namespace {

[[noreturn]] void invariant_violation(const std::string& what) {
  throw std::invalid_argument("trace-class operator: " + what);
}

}  // namespace

TraceClassOperator::TraceClassOperator(std::vector<Eigenpair> eigenpairs, Options options)
    : pairs_(std::move(eigenpairs)) {
  if (pairs_.empty()) invariant_violation("at least one eigenpair is required");

  if (options.reorthonormalize) {
    std::vector<FockVector> vs;
    vs.reserve(pairs_.size());
    for (const auto& p : pairs_) vs.push_back(p.vector);
    vs = orthonormalize(std::move(vs), options.tolerance);
    for (std::size_t k = 0; k < pairs_.size(); ++k) pairs_[k].vector = std::move(vs[k]);
  }

  double total = 0.0;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const double w = pairs_[k].weight;
    if (!std::isfinite(w) || w <= 0.0) {
      std::ostringstream msg;
      msg << "weights must be positive (weight " << k << " is " << w << ")";
      invariant_violation(msg.str());
    }
    total += w;
  }
  if (std::abs(total - 1.0) > options.tolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "weights must sum to 1 (sum is " << total << ")";
    invariant_violation(msg.str());
  }

  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    for (std::size_t l = k; l < pairs_.size(); ++l) {
      const Complex g = inner(pairs_[k].vector, pairs_[l].vector);
      const double expected = k == l ? 1.0 : 0.0;
      if (std::abs(g - expected) > options.tolerance) {
        std::ostringstream msg;
        msg << "eigenvectors must be orthonormal (<xi_" << k << ", xi_" << l << "> = " << g << ")";
        invariant_violation(msg.str());
      }
    }
  }
}

TraceClassOperator TraceClassOperator::vacuum_projection() {
  return TraceClassOperator{{Eigenpair{1.0, FockVector::basis(Index::vacuum())}}};
}

Complex TraceClassOperator::entry(Index row, Index col) const {
  Complex s{};
  for (const auto& [w, xi] : pairs_) s += w * xi.amplitude(row) * std::conj(xi.amplitude(col));
  return s;
}

FockVector TraceClassOperator::apply(const FockVector& v) const {
  FockVector out;
  for (const auto& [w, xi] : pairs_) out = out + (w * inner(v, xi)) * xi;
  return out;
}

std::set<Index> TraceClassOperator::support() const {
  std::set<Index> out;
  for (const auto& p : pairs_) out.merge(p.vector.support());
  return out;
}

double TraceClassOperator::vacuum_weight() const {
  double s = 0.0;
  for (const auto& [w, xi] : pairs_) s += w * std::norm(xi.vacuum_amplitude());
  return s;
}

// Tr(T A) = sum_k w_k <A xi_k, xi_k> = sum_k w_k sum_{(m,n)} A_mn xi_k(n) conj(xi_k(m))
Complex TraceClassOperator::trace_compact(const BooleanElement& x) const {
  Complex s{};
  for (const auto& [w, xi] : pairs_) {
    Complex term{};
    for (const auto& [rc, amp] : x.compact()) {
      const Complex col = xi.amplitude(rc.second);
      if (col == Complex{}) continue;
      term += amp * col * std::conj(xi.amplitude(rc.first));
    }
    s += w * term;
  }
  return s;
}

BooleanState::BooleanState(double gamma, TraceClassOperator density)
    : gamma_(gamma), density_(std::move(density)) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    std::ostringstream msg;
    msg << "state: gamma must lie in [0, 1] (got " << gamma << ")";
    throw std::invalid_argument(msg.str());
  }
}

BooleanState vacuum_state() { return BooleanState{1.0, TraceClassOperator::vacuum_projection()}; }
BooleanState infinity_state() { return BooleanState{0.0, TraceClassOperator::vacuum_projection()}; }
BooleanState symmetric_state(double gamma) {
  return BooleanState{gamma, TraceClassOperator::vacuum_projection()};
}

Complex evaluate(const BooleanState& state, const BooleanElement& x) {
  if (state.gamma() == 0.0) return x.scalar();
  return state.gamma() * state.density().trace_compact(x) + x.scalar();
}

Complex vacuum_expectation(const BooleanElement& x) {
  return x.entry(Index::vacuum(), Index::vacuum()) + x.scalar();
}

BooleanElement word_product(std::span<const Letter> word) {
  BooleanElement out = BooleanElement::identity();
  for (const auto& letter : word) out = out * embed(letter.site, letter.value);
  return out;
}

Complex moment(const BooleanState& state, std::span<const Letter> word) {
  if (word.empty()) throw std::invalid_argument("moment: the word must be non-empty");
  return evaluate(state, word_product(word));
}

Word permute(const FinitePermutation& g, std::span<const Letter> word) {
  Word out;
  out.reserve(word.size());
  for (const auto& letter : word) out.push_back({g(letter.site), letter.value});
  return out;
}

std::vector<FockVector> orthonormalize(std::vector<FockVector> vectors, double tolerance) {
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    for (std::size_t l = 0; l < k; ++l) {
      vectors[k] = vectors[k] + (-inner(vectors[k], vectors[l])) * vectors[l];
    }
    const double norm = std::sqrt(vectors[k].norm_squared());
    if (norm <= tolerance) {
      throw std::invalid_argument("orthonormalize: vector " + std::to_string(k) +
                                  " is linearly dependent on its predecessors");
    }
    vectors[k] = Complex{1.0 / norm, 0.0} * vectors[k];
  }
  return vectors;
}

}  // namespace boolefock
