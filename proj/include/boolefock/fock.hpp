#ifndef BOOLEFOCK_FOCK_HPP_
#define BOOLEFOCK_FOCK_HPP_

#include <map>
#include <set>

#include "boolefock/algebra.hpp"

namespace boolefock {

/// An element ((a, b), (c, d)) (+) beta of the sample algebra M2(C) (+) C.
struct TestAlgebraElement {
  Complex a{}, b{}, c{}, d{}, beta{};

  static TestAlgebraElement unit() { return {1.0, 0.0, 0.0, 1.0, 1.0}; }

  friend bool operator==(const TestAlgebraElement&, const TestAlgebraElement&) = default;
};

/// Blockwise product: 2x2 matrix product and product of the beta components.
TestAlgebraElement operator*(const TestAlgebraElement& x, const TestAlgebraElement& y);
TestAlgebraElement adjoint(const TestAlgebraElement& x);
double max_deviation(const TestAlgebraElement& x, const TestAlgebraElement& y);

/// A permutation of the sites moving finitely many of them. Fixed points are
/// not stored.
class FinitePermutation {
 public:
  FinitePermutation() = default;
  /// Throws std::invalid_argument unless `mapping` is a bijection of its key
  /// set onto itself with labels >= 1.
  explicit FinitePermutation(std::map<Site, Site> mapping);

  static FinitePermutation transposition(Site i, Site j);

  Site operator()(Site j) const;
  const std::map<Site, Site>& mapping() const noexcept { return mapping_; }
  std::set<Site> support() const;

  FinitePermutation inverse() const;

  friend bool operator==(const FinitePermutation&, const FinitePermutation&) = default;

 private:
  std::map<Site, Site> mapping_;
};

/// g o h, i.e. j -> g(h(j)).
FinitePermutation compose(const FinitePermutation& g, const FinitePermutation& h);

/// b+(f) = sum_i f_i e_{i#}. `f` must have no vacuum component.
BooleanElement creator(const FockVector& f);

/// b(f) = sum_i conj(f_i) e_{#i}. `f` must have no vacuum component.
BooleanElement annihilator(const FockVector& f);

/// iota_j(A) = a e_{##} + b e_{#j} + c e_{j#} + d e_{jj} + beta P_{N\{j}},
/// with P_{N\{j}} = I - e_{##} - e_{jj}.
BooleanElement embed(Site j, const TestAlgebraElement& x);

/// The *-automorphism alpha_g: relabels every site index by g, fixing the
/// vacuum and the scalar part.
BooleanElement permute(const FinitePermutation& g, const BooleanElement& x);

}  // namespace boolefock

#endif  // BOOLEFOCK_FOCK_HPP_
