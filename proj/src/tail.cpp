#include "boolefock/tail.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace boolefock {

namespace {

// Smallest eigenvalue kept when a degenerate site block has to be re-diagonalised.
constexpr double kEigenvalueFloor = 1e-13;

void require_expected(const TraceClassOperator& t, double tolerance, const char* what) {
  if (!is_expected(t, tolerance)) {
    throw DecisionError(std::string(what) +
                        ": e_# is not an eigenvector of T, so no conditional expectation onto the "
                        "tail algebra preserves psi_T");
  }
}

// Site block of T diagonalised from scratch; used when an eigenspace of T mixes
// e_# with site vectors, so the stored eigenvectors are not vacuum-free.
std::vector<Eigenpair> diagonalise_site_block(const TraceClassOperator& t, double scale) {
  std::vector<Index> sites;
  for (Index i : t.support()) {
    if (!i.is_vacuum()) sites.push_back(i);
  }
  const auto n = static_cast<Eigen::Index>(sites.size());
  Eigen::MatrixXcd block(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) block(r, c) = t.entry(sites[r], sites[c]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);

  std::vector<Eigenpair> out;
  double total = 0.0;
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda <= kEigenvalueFloor) continue;
    FockVector::Amplitudes amps;
    for (Eigen::Index r = 0; r < n; ++r) amps.emplace(sites[r], solver.eigenvectors()(r, k));
    out.push_back({lambda * scale, FockVector{std::move(amps)}});
    total += lambda * scale;
  }
  for (auto& p : out) p.weight /= total;
  return out;
}

}  // namespace

double max_deviation(const TailElement& p, const TailElement& q) {
  return std::max(std::abs(p.x - q.x), std::abs(p.y - q.y));
}

BooleanElement embed_tail(const TailElement& z) {
  const Index vac = Index::vacuum();
  return BooleanElement{BooleanElement::Entries{{{vac, vac}, z.x - z.y}}, z.y};
}

PhiState PhiState::normal(TraceClassOperator density) {
  for (const auto& p : density.eigenpairs()) {
    if (!p.vector.in_one_particle_space()) {
      throw std::invalid_argument("normal phi: the density must not have a vacuum component");
    }
  }
  return PhiState{Normal{std::move(density)}};
}

// P_#^perp X P_#^perp = (site block of A) + s P_#^perp. The density of a normal
// phi has no vacuum component, so Tr(S A) already sees only the site block.
Complex PhiState::evaluate_compressed(const BooleanElement& x) const {
  if (is_singular()) return x.scalar();
  return density().trace_compact(x) + x.scalar();
}

TailElement cond_expect(const PhiState& phi, const BooleanElement& x) {
  return {vacuum_expectation(x), phi.evaluate_compressed(x)};
}

BooleanElement vacuum_block_compression(const BooleanElement& x) {
  BooleanElement::Entries out;
  for (const auto& [rc, amp] : x.compact()) {
    if (!rc.first.is_vacuum() && !rc.second.is_vacuum()) out.emplace(rc, amp);
  }
  const Index vac = Index::vacuum();
  out.emplace(IndexPair{vac, vac}, vacuum_expectation(x) - x.scalar());
  return BooleanElement{std::move(out), x.scalar()};
}

double module_property_deviation(const PhiState& phi, const TailElement& z, const BooleanElement& x,
                                 const TailElement& z2) {
  const TailElement lhs = cond_expect(phi, embed_tail(z) * x * embed_tail(z2));
  const TailElement rhs = z * cond_expect(phi, x) * z2;
  return max_deviation(lhs, rhs);
}

bool is_expected(const TraceClassOperator& t, double tolerance) {
  const FockVector image = t.apply(FockVector::basis(Index::vacuum()));
  const FockVector along = image.vacuum_amplitude() * FockVector::basis(Index::vacuum());
  return max_deviation(image, along) <= tolerance;
}

PhiState preserving_phi(const TraceClassOperator& t, double tolerance) {
  require_expected(t, tolerance, "preserving_phi");
  const double w = t.vacuum_weight();
  if (w >= 1.0 - tolerance) return PhiState::singular();

  // T~ = T - omega_#(T) P_#. When every eigenvector is either vacuum-free or
  // e_# itself, T~ is read off the eigenpairs directly.
  std::vector<Eigenpair> pairs;
  bool split = true;
  for (const auto& [lambda, xi] : t.eigenpairs()) {
    const double vac = std::abs(xi.vacuum_amplitude());
    if (vac <= tolerance) {
      FockVector::Amplitudes sites = xi.amplitudes();
      sites.erase(Index::vacuum());
      pairs.push_back({lambda / (1.0 - w), FockVector{std::move(sites)}});
    } else if (std::abs(vac - 1.0) > tolerance) {
      split = false;
      break;
    }
  }
  if (!split) pairs = diagonalise_site_block(t, 1.0 / (1.0 - w));

  TraceClassOperator::Options options;
  options.tolerance = std::max(tolerance, 1e-9);
  return PhiState::normal(TraceClassOperator{std::move(pairs), options});
}

Counterexample counterexample_ratio(const TraceClassOperator& t, double tolerance) {
  if (is_expected(t, tolerance)) {
    throw DecisionError("counterexample_ratio: e_# is an eigenvector of T, so psi_T is expected");
  }
  const auto& pairs = t.eigenpairs();
  std::size_t j0 = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (std::abs(pairs[k].vector.vacuum_amplitude()) <= tolerance) continue;
    if (j0 == pairs.size() || pairs[k].weight > pairs[j0].weight) j0 = k;
  }
  // A non-expected T has T e_# != 0, so some eigenvector overlaps the vacuum;
  // failing that, the overlaps are all below tolerance.
  if (j0 == pairs.size()) {
    throw DecisionError("counterexample_ratio: no eigenvector has a vacuum overlap above tolerance");
  }
  Counterexample out;
  out.eigen_index = j0;
  out.ratio = t.vacuum_weight() / pairs[j0].weight;

  BooleanElement::Entries entries;
  for (const auto& [i, amp] : pairs[j0].vector.amplitudes()) {
    entries.emplace(IndexPair{Index::vacuum(), i}, std::conj(amp));
  }
  out.witness = BooleanElement{std::move(entries), Complex{}};
  return out;
}

TailElement theorem_preserving_F(const TraceClassOperator& t, const BooleanElement& x, double tolerance) {
  require_expected(t, tolerance, "theorem_preserving_F");
  const double w = t.vacuum_weight();
  if (w >= 1.0 - tolerance) {
    throw DecisionError("theorem_preserving_F: omega_#(T) = 1, the formula needs omega_#(T) < 1");
  }
  const Complex vac = vacuum_expectation(x);
  const Complex psi = t.trace_compact(x) + x.scalar();
  return {vac, (psi - w * vac) / (1.0 - w)};
}

}  // namespace boolefock
