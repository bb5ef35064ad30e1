#include <gtest/gtest.h>

#include "boolefock/algebra.hpp"
#include "boolefock/sampling.hpp"
#include "dense_oracle.hpp"

namespace boolefock {
namespace {

const Index kVac = Index::vacuum();
Index s(Site n) { return Index::site(n); }

std::vector<Index> index_pool(Site n) {
  std::vector<Index> out{kVac};
  for (Site j = 1; j <= n; ++j) out.push_back(s(j));
  return out;
}

TEST(Index, VacuumSortsFirstAndSiteZeroIsRejected) {
  EXPECT_LT(kVac, s(1));
  EXPECT_LT(s(1), s(2));
  EXPECT_THROW(s(0), std::invalid_argument);
  EXPECT_THROW(kVac.site_label(), std::logic_error);
  EXPECT_EQ(kVac.to_string(), "#");
  EXPECT_EQ(s(12).to_string(), "12");
}

TEST(BooleanElement, ConstructorDropsNegligibleEntries) {
  const BooleanElement x{{{{kVac, s(1)}, 1e-16}, {{s(2), s(2)}, 0.5}}, 0.0};
  EXPECT_EQ(x.compact().size(), 1u);
  EXPECT_EQ(x.entry(s(2), s(2)), Complex(0.5));
  EXPECT_EQ(x.entry(kVac, s(1)), Complex{});
}

TEST(MatrixUnits, ProductTable) {
  const auto pool = index_pool(4);
  for (Index m : pool) {
    for (Index n : pool) {
      for (Index p : pool) {
        for (Index q : pool) {
          const BooleanElement expected = n == p ? matrix_unit(m, q) : BooleanElement{};
          EXPECT_EQ(matrix_unit(m, n) * matrix_unit(p, q), expected);
        }
      }
    }
  }
}

TEST(BooleanElement, ScalarPartsMultiply) {
  const BooleanElement x{{{{s(1), s(2)}, 2.0}}, 3.0};
  const BooleanElement y{{{{s(2), kVac}, 5.0}}, Complex(0.0, 1.0)};
  // (2e12 + 3)(5e2# + i) = 10 e1# + 2i e12 + 15 e2# + 3i
  const BooleanElement expected{{{{s(1), kVac}, 10.0}, {{s(1), s(2)}, Complex(0, 2)}, {{s(2), kVac}, 15.0}},
                                Complex(0, 3)};
  EXPECT_LE(max_deviation(x * y, expected), 1e-15);
}

TEST(BooleanElement, ProductMatchesDenseOracle) {
  Rng rng = make_rng(11);
  const auto pool = index_pool(7);
  for (int t = 0; t < 300; ++t) {
    const BooleanElement x = random_element(rng, pool, 12);
    const BooleanElement y = random_element(rng, pool, 12);
    const Site n = 8;
    const BooleanElement dense = oracle::from_dense(oracle::to_dense(x, n) * oracle::to_dense(y, n));
    EXPECT_LE(max_deviation(x * y, dense), 1e-12);
  }
}

TEST(BooleanElement, SumMatchesDenseOracle) {
  Rng rng = make_rng(12);
  const auto pool = index_pool(7);
  for (int t = 0; t < 200; ++t) {
    const BooleanElement x = random_element(rng, pool, 10);
    const BooleanElement y = random_element(rng, pool, 10);
    const BooleanElement dense = oracle::from_dense(oracle::to_dense(x, 8) + oracle::to_dense(y, 8));
    EXPECT_LE(max_deviation(x + y, dense), 1e-14);
  }
}

TEST(BooleanElement, AdjointIsConjugateTranspose) {
  Rng rng = make_rng(13);
  const auto pool = index_pool(5);
  for (int t = 0; t < 100; ++t) {
    const BooleanElement x = random_element(rng, pool, 8);
    const oracle::Matrix dense = oracle::to_dense(x, 6).adjoint();
    EXPECT_LE(max_deviation(adjoint(x), oracle::from_dense(dense)), 1e-15);
    EXPECT_EQ(adjoint(adjoint(x)), x);
  }
}

TEST(BooleanElement, ProductIsAssociative) {
  Rng rng = make_rng(14);
  const auto pool = index_pool(5);
  for (int t = 0; t < 100; ++t) {
    const BooleanElement x = random_element(rng, pool, 8);
    const BooleanElement y = random_element(rng, pool, 8);
    const BooleanElement z = random_element(rng, pool, 8);
    EXPECT_LE(max_deviation((x * y) * z, x * (y * z)), 1e-12);
    EXPECT_LE(max_deviation(adjoint(x * y), adjoint(y) * adjoint(x)), 1e-14);
  }
}

TEST(BooleanElement, IdentityIsNeutral) {
  Rng rng = make_rng(15);
  const BooleanElement x = random_element(rng, index_pool(4), 6);
  EXPECT_EQ(x * BooleanElement::identity(), x);
  EXPECT_EQ(BooleanElement::identity() * x, x);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(FockVector, ApplyMatchesDenseOracle) {
  Rng rng = make_rng(16);
  const auto pool = index_pool(6);
  for (int t = 0; t < 200; ++t) {
    const BooleanElement x = random_element(rng, pool, 10);
    FockVector::Amplitudes amps;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    for (Index i : pool) {
      if (std::bernoulli_distribution(0.5)(rng)) {
        const Complex c = random_complex(rng);
        amps.emplace(i, c);
        v(oracle::slot(i)) = c;
      }
    }
    const FockVector w = apply(x, FockVector{amps});
    const Eigen::VectorXcd dense = oracle::to_dense(x, 7) * v;
    for (Eigen::Index r = 0; r < dense.size(); ++r) {
      const Index i = r == 0 ? kVac : s(static_cast<Site>(r));
      EXPECT_LE(std::abs(w.amplitude(i) - dense(r)), 1e-13);
    }
  }
}

TEST(FockVector, InnerProductIsLinearInFirstArgument) {
  const FockVector v{{{kVac, 1.0}, {s(1), Complex(0, 1)}}};
  const FockVector w{{{s(1), 2.0}}};
  EXPECT_EQ(inner(v, w), Complex(0, 2));
  EXPECT_EQ(inner(w, v), Complex(0, -2));
  EXPECT_EQ(inner(Complex(0, 1) * v, w), Complex(-2, 0));
  EXPECT_DOUBLE_EQ(v.norm_squared(), 2.0);
  EXPECT_FALSE(v.in_one_particle_space());
  EXPECT_TRUE(w.in_one_particle_space());
}

}  // namespace
}  // namespace boolefock
