#include <gtest/gtest.h>

#include <cmath>

#include "boolefock/sampling.hpp"
#include "boolefock/tail.hpp"
#include "dense_oracle.hpp"
#include "test_support.hpp"

namespace boolefock {
namespace {

const Index kVac = Index::vacuum();
Index s(Site n) { return Index::site(n); }
const double kHalf = std::sqrt(0.5);

using testing::index_pool;
using testing::site_density;

TraceClassOperator projector_on(Site j) { return TraceClassOperator{{Eigenpair{1.0, FockVector::basis(s(j))}}}; }

// 3/4 |xi1><xi1| + 1/4 |xi2><xi2| with xi = (e_# +- e_1) / sqrt 2.
TraceClassOperator two_point_mixture() {
  const FockVector plus{{{kVac, kHalf}, {s(1), kHalf}}};
  const FockVector minus{{{kVac, kHalf}, {s(1), -kHalf}}};
  return TraceClassOperator{{{0.75, plus}, {0.25, minus}}};
}

TEST(CondExpect, SingularOnEmbeddingIsCornerAndBeta) {
  Rng rng = make_rng(41);
  for (Site j = 1; j <= 8; ++j) {
    const TestAlgebraElement a = random_test_element(rng);
    const TailElement z = cond_expect(PhiState::singular(), embed(j, a));
    EXPECT_LE(max_deviation(z, TailElement{a.a, a.beta}), 1e-15);
  }
}

TEST(CondExpect, MatchesDenseOracle) {
  Rng rng = make_rng(42);
  for (int t = 0; t < 200; ++t) {
    const PhiState phi = t % 2 == 0 ? PhiState::singular()
                                    : PhiState::normal(site_density(rng, 1 + t % 4));
    const BooleanElement x = random_element(rng, index_pool(8), 12);
    EXPECT_LE(max_deviation(cond_expect(phi, x), oracle::dense_kernel().conditional_expectation(phi, x)), 1e-12);
  }
}

TEST(CondExpect, FixesTailAndIsUnital) {
  Rng rng = make_rng(43);
  const PhiState phi = PhiState::normal(projector_on(3));
  for (int t = 0; t < 50; ++t) {
    const TailElement z = random_tail_element(rng);
    EXPECT_LE(max_deviation(cond_expect(phi, embed_tail(z)), z), 1e-15);
    EXPECT_LE(max_deviation(cond_expect(PhiState::singular(), embed_tail(z)), z), 1e-15);
  }
  EXPECT_EQ(cond_expect(phi, BooleanElement::identity()), TailElement::unit());
}

TEST(CondExpect, IsIdempotent) {
  Rng rng = make_rng(44);
  const PhiState phi = PhiState::normal(site_density(rng, 2, 5));
  for (int t = 0; t < 50; ++t) {
    const BooleanElement x = random_element(rng, index_pool(6), 10);
    const TailElement once = cond_expect(phi, x);
    EXPECT_LE(max_deviation(cond_expect(phi, embed_tail(once)), once), 1e-14);
  }
}

TEST(CondExpect, ModuleProperty) {
  Rng rng = make_rng(45);
  for (int t = 0; t < 100; ++t) {
    const PhiState phi =
        t % 2 == 0 ? PhiState::singular() : PhiState::normal(site_density(rng, 2, 5));
    const BooleanElement x = random_element(rng, index_pool(6), 10);
    EXPECT_TRUE(module_property_check(phi, random_tail_element(rng), x, random_tail_element(rng)));
  }
}

TEST(CondExpect, FactorsThroughVacuumBlockCompression) {
  Rng rng = make_rng(46);
  const PhiState phi = PhiState::normal(site_density(rng, 3, 5));
  for (int t = 0; t < 50; ++t) {
    const BooleanElement x = random_element(rng, index_pool(6), 10);
    const BooleanElement e = vacuum_block_compression(x);
    EXPECT_EQ(e.entry(kVac, s(1)), Complex{});
    EXPECT_LE(max_deviation(cond_expect(phi, e), cond_expect(phi, x)), 1e-14);
  }
}

TEST(PhiState, NormalRejectsVacuumComponent) {
  EXPECT_THROW(PhiState::normal(TraceClassOperator::vacuum_projection()), std::invalid_argument);
}

TEST(IsExpected, WorkedExamples) {
  const TraceClassOperator mixed{{{0.5, FockVector::basis(kVac)}, {0.5, FockVector::basis(s(3))}}};
  EXPECT_TRUE(is_expected(mixed));
  EXPECT_TRUE(is_expected(TraceClassOperator::vacuum_projection()));
  EXPECT_FALSE(is_expected(TraceClassOperator{{{1.0, FockVector{{{kVac, kHalf}, {s(1), kHalf}}}}}}));
  EXPECT_FALSE(is_expected(two_point_mixture()));
  EXPECT_TRUE(is_expected(projector_on(1)));
}

TEST(IsExpected, DegenerateMixtureWithVacuumInRange) {
  // Equal weights on (e_# +- e_1)/sqrt 2 give T = (P_# + e_11)/2.
  const FockVector plus{{{kVac, kHalf}, {s(1), kHalf}}};
  const FockVector minus{{{kVac, kHalf}, {s(1), -kHalf}}};
  const TraceClassOperator t{{{0.5, plus}, {0.5, minus}}};
  ASSERT_TRUE(is_expected(t));
  const PhiState phi = preserving_phi(t);
  ASSERT_FALSE(phi.is_singular());
  EXPECT_NEAR(std::abs(phi.density().entry(s(1), s(1)) - 1.0), 0.0, 1e-12);
}

TEST(PreservingPhi, WorkedExamples) {
  const TraceClassOperator t{{{0.5, FockVector::basis(kVac)}, {0.5, FockVector::basis(s(2))}}};
  const PhiState phi = preserving_phi(t);
  ASSERT_FALSE(phi.is_singular());
  EXPECT_NEAR(std::abs(phi.density().entry(s(2), s(2)) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(phi.density().rank(), 1u);
  EXPECT_TRUE(preserving_phi(TraceClassOperator::vacuum_projection()).is_singular());
}

TEST(PreservingPhi, RejectsNonExpected) {
  EXPECT_THROW(preserving_phi(two_point_mixture()), DecisionError);
}

TEST(PreservingPhi, PreservesPsiT) {
  Rng rng = make_rng(47);
  for (int t = 0; t < 100; ++t) {
    const TraceClassOperator d = random_density(rng, DensityKind::expected, 1 + t % 5, 6);
    const PhiState phi = preserving_phi(d);
    const BooleanState psi{1.0, d};
    for (int k = 0; k < 20; ++k) {
      const BooleanElement x = random_element(rng, index_pool(8), 10);
      EXPECT_LE(std::abs(evaluate(psi, embed_tail(cond_expect(phi, x))) - evaluate(psi, x)), 1e-10);
    }
  }
}

TEST(TheoremPreservingF, DiagonalUnitsAndAgreement) {
  Rng rng = make_rng(48);
  for (int t = 0; t < 50; ++t) {
    const TraceClassOperator d = random_density(rng, DensityKind::expected, 2 + t % 4, 6);
    const double w = d.vacuum_weight();
    if (w > 1.0 - 1e-9) continue;
    const BooleanState psi{1.0, d};
    for (Site i = 1; i <= 8; ++i) {
      const BooleanElement eii = matrix_unit(s(i), s(i));
      const TailElement expected{0.0, evaluate(psi, eii) / (1.0 - w)};
      EXPECT_LE(max_deviation(theorem_preserving_F(d, eii), expected), 1e-12);
    }
    const PhiState phi = preserving_phi(d);
    for (int k = 0; k < 20; ++k) {
      const BooleanElement x = random_element(rng, index_pool(8), 10);
      EXPECT_LE(max_deviation(theorem_preserving_F(d, x), cond_expect(phi, x)), 1e-10);
    }
  }
  EXPECT_THROW(theorem_preserving_F(TraceClassOperator::vacuum_projection(), BooleanElement::identity()),
               DecisionError);
  EXPECT_THROW(theorem_preserving_F(two_point_mixture(), BooleanElement::identity()), DecisionError);
}

TEST(CounterexampleRatio, HandCheckedMixture) {
  const Counterexample ce = counterexample_ratio(two_point_mixture());
  EXPECT_NEAR(ce.ratio, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(ce.eigen_index, 0u);
  EXPECT_NEAR(std::abs(ce.witness.entry(kVac, kVac) - kHalf), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ce.witness.entry(kVac, s(1)) - kHalf), 0.0, 1e-15);
}

TEST(CounterexampleRatio, ScalesBothSidesForEveryPhi) {
  Rng rng = make_rng(49);
  for (int t = 0; t < 100; ++t) {
    const TraceClassOperator d = random_density(rng, DensityKind::non_expected, 1 + t % 5, 6);
    const Counterexample ce = counterexample_ratio(d);
    EXPECT_LT(ce.ratio, 1.0 - 1e-12);
    EXPECT_GT(ce.ratio, 0.0);
    const BooleanState psi{1.0, d};
    const Complex psi_x = evaluate(psi, ce.witness);
    for (const PhiState& phi : {PhiState::singular(), PhiState::normal(projector_on(1)),
                                PhiState::normal(site_density(rng, 2, 4))}) {
      const Complex lhs = evaluate(psi, embed_tail(cond_expect(phi, ce.witness)));
      EXPECT_LE(std::abs(lhs - ce.ratio * psi_x), 1e-10);
    }
  }
}

TEST(CounterexampleRatio, RejectsExpected) {
  EXPECT_THROW(counterexample_ratio(TraceClassOperator::vacuum_projection()), DecisionError);
  EXPECT_THROW(counterexample_ratio(projector_on(2)), DecisionError);
}

}  // namespace
}  // namespace boolefock
