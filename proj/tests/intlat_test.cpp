#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cayley/checked.hpp"
#include "cayley/intlat.hpp"
#include "support/naive.hpp"

namespace cayley::intlat {
namespace {

TEST(ColumnHnf, DiagonalIsAlreadyCanonical) {
  const IntMatrix m{{2, 0}, {0, 3}};
  const HnfResult r = column_hnf(m);
  EXPECT_EQ(r.h, m);
  EXPECT_EQ(r.transform.u, IntMatrix::identity(2));
  EXPECT_EQ(r.rank, 2u);
}

TEST(ColumnHnf, UpperUnitriangularReducesToIdentity) {
  const HnfResult r = column_hnf(IntMatrix{{1, 1}, {0, 1}});
  EXPECT_EQ(r.h, (IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_TRUE(is_unimodular(r.transform.u));
}

TEST(ColumnHnf, SingleRowGivesGcd) {
  const IntMatrix m{{4, 6}};
  const HnfResult r = column_hnf(m);
  EXPECT_EQ(r.h, (IntMatrix{{2, 0}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(m * r.transform.u, r.h);
}

TEST(ColumnHnf, ZeroColumnsGoRight) {
  const HnfResult r = column_hnf(IntMatrix{{0, 2, 4}, {0, 1, 2}});
  EXPECT_EQ(r.rank, 1u);
  EXPECT_TRUE(r.h.is_zero_column(1));
  EXPECT_TRUE(r.h.is_zero_column(2));
  EXPECT_EQ(r.h.column(0), (IntVector{2, 1}));
}

TEST(ColumnHnf, ZeroColumnMatrix) {
  const HnfResult r = column_hnf(IntMatrix(3, 0));
  EXPECT_EQ(r.h.rows(), 3u);
  EXPECT_EQ(r.h.cols(), 0u);
  EXPECT_EQ(r.rank, 0u);
}

TEST(ColumnHnf, ShapeIsCanonical) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = rng() % 4;
    const IntMatrix m = naive::random_matrix(rows, cols, 6, rng);
    const HnfResult r = column_hnf(m);
    ASSERT_EQ(m * r.transform.u, r.h);
    ASSERT_TRUE(is_unimodular(r.transform.u));
    ASSERT_EQ(r.rank, rank(m));
    for (std::size_t j = 0; j < r.h.cols(); ++j) {
      if (j >= r.rank) {
        ASSERT_TRUE(r.h.is_zero_column(j));
        continue;
      }
      const std::size_t p = r.pivot_rows[j];
      ASSERT_GT(r.h(p, j), 0);
      for (std::size_t i = 0; i < p; ++i) ASSERT_EQ(r.h(i, j), 0);
      if (j > 0) ASSERT_GT(p, r.pivot_rows[j - 1]);
      for (std::size_t k = 0; k < j; ++k) {
        ASSERT_GE(r.h(p, k), 0);
        ASSERT_LT(r.h(p, k), r.h(p, j));
      }
    }
  }
}

TEST(ColumnHnf, Idempotent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = naive::random_matrix(1 + rng() % 4, rng() % 4, 9, rng);
    const IntMatrix h = column_hnf(m).h;
    ASSERT_EQ(column_hnf(h).h, h) << m;
  }
}

TEST(ColumnHnf, InvariantUnderUnimodularColumnMoves) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t cols = 1 + rng() % 3;
    const IntMatrix m = naive::random_matrix(1 + rng() % 4, cols, 7, rng);
    const IntMatrix v = naive::random_unimodular(cols, rng);
    ASSERT_EQ(naive::det(v) * naive::det(v), 1);
    ASSERT_EQ(column_hnf(m * v).h, column_hnf(m).h) << m << v;
  }
}

TEST(KernelLattice, AllOnesRow) {
  const LatticeBasis k = kernel_lattice(IntMatrix{{1, 1, 1}});
  EXPECT_EQ(k.rank(), 2u);
  EXPECT_EQ(k, LatticeBasis::spanned_by(IntMatrix{{1, 0}, {-1, 1}, {0, -1}}));
}

TEST(KernelLattice, InjectiveMapHasNone) {
  const LatticeBasis k = kernel_lattice(IntMatrix::identity(2));
  EXPECT_EQ(k.rank(), 0u);
  EXPECT_EQ(k.ambient_dim(), 2u);
}

TEST(KernelLattice, PrimitiveGenerator) {
  const LatticeBasis k = kernel_lattice(IntMatrix{{2, -1}});
  ASSERT_EQ(k.rank(), 1u);
  EXPECT_EQ(k.vector(0), (IntVector{1, 2}));
}

TEST(KernelLattice, RankIdentityAndAnnihilation) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t cols = 1 + rng() % 5;
    const IntMatrix a = naive::random_matrix(1 + rng() % 3, cols, 5, rng);
    const LatticeBasis k = kernel_lattice(a);
    ASSERT_EQ(rank(a) + k.rank(), cols) << a;
    for (std::size_t j = 0; j < k.rank(); ++j) {
      const IntVector z = a * k.vector(j);
      for (Int x : z) ASSERT_EQ(x, 0) << a;
    }
  }
}

TEST(KernelLattice, ContainsEverySmallSolution) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = naive::random_matrix(1, 3, 4, rng);
    const LatticeBasis k = kernel_lattice(a);
    for (Int x = -4; x <= 4; ++x) {
      for (Int y = -4; y <= 4; ++y) {
        for (Int z = -4; z <= 4; ++z) {
          const IntVector v{x, y, z};
          const bool solves = (a * v)[0] == 0;
          ASSERT_EQ(k.contains(v), solves) << a;
        }
      }
    }
  }
}

TEST(LatticeContains, Examples) {
  const LatticeBasis b = LatticeBasis::spanned_by(IntMatrix{{1, 0}, {0, 2}});
  EXPECT_TRUE(lattice_contains(b, IntVector{1, 0}));
  EXPECT_FALSE(lattice_contains(b, IntVector{0, 1}));
  const LatticeBasis diag = LatticeBasis::spanned_by(IntMatrix{{1}, {1}});
  EXPECT_TRUE(lattice_contains(diag, IntVector{5, 5}));
  EXPECT_FALSE(lattice_contains(diag, IntVector{5, 4}));
}

TEST(LatticeContains, AgreesWithBruteForce) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Int> coef(-3, 3), noise(-2, 2);
  int members = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t cols = 1 + rng() % 2;
    const IntMatrix m = naive::random_matrix(4, cols, 3, rng);
    const LatticeBasis b = LatticeBasis::spanned_by(m);
    for (int s = 0; s < 10; ++s) {
      IntVector c(cols);
      for (Int& x : c) x = coef(rng);
      IntVector v = m * c;
      if (s % 2) {
        for (Int& x : v) x += noise(rng);
      }
      const bool brute = naive::in_span_bounded(m, v, 10);
      // Brute force only sees coefficients in [-10, 10]; the members built
      // above all have a representation in that box when m has full rank.
      if (rank(m) == cols) {
        ASSERT_EQ(lattice_contains(b, v), brute) << m;
      } else if (brute) {
        ASSERT_TRUE(lattice_contains(b, v)) << m;
      }
      members += brute;
    }
  }
  EXPECT_GT(members, 700);
}

TEST(LatticeContains, SquareAgreesWithAdjugateTest) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<Int> e(-12, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const IntMatrix m = naive::random_matrix(n, n, 4, rng);
    if (naive::det(m) == 0) continue;
    const LatticeBasis b = LatticeBasis::spanned_by(m);
    EXPECT_EQ(*b.index(), std::abs(naive::det(m)));
    for (int s = 0; s < 20; ++s) {
      IntVector v(n);
      for (Int& x : v) x = e(rng);
      ASSERT_EQ(b.contains(v), naive::square_contains(m, v)) << m;
    }
  }
}

TEST(LatticeBasis, CanonicalReductionSeparatesCosets) {
  const IntMatrix m{{9, 21}, {1, 4}};
  const LatticeBasis b = LatticeBasis::spanned_by(m);
  std::set<IntVector> seen;
  for (Int x = -8; x <= 8; ++x) {
    for (Int y = -8; y <= 8; ++y) seen.insert(b.reduce(IntVector{x, y}));
  }
  EXPECT_EQ(static_cast<Int>(seen.size()), std::abs(naive::det(m)));
  for (const IntVector& u : seen) {
    for (const IntVector& v : seen) {
      if (u == v) continue;
      ASSERT_FALSE(naive::square_contains(m, IntVector{u[0] - v[0], u[1] - v[1]}));
    }
  }
}

TEST(LatticeBasis, CoordinatesRebuildVector) {
  const LatticeBasis b = LatticeBasis::spanned_by(IntMatrix{{1, 0}, {1, 1}, {1, 2}, {0, 1}});
  const IntVector v{3, 1, -1, -2};
  const auto c = b.coordinates(v);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(b.basis() * *c, v);
  EXPECT_FALSE(b.coordinates(IntVector{1, 0, 0, 0}).has_value());
}

TEST(SignedPermutations, Counts) {
  EXPECT_EQ(signed_permutations(1).size(), 2u);
  EXPECT_EQ(signed_permutations(2).size(), 8u);
  EXPECT_EQ(signed_permutations(3).size(), 48u);
  EXPECT_EQ(signed_permutations(4).size(), 384u);
  EXPECT_EQ(signed_permutations(1)[0], (IntMatrix{{1}}));
  EXPECT_EQ(signed_permutations(1)[1], (IntMatrix{{-1}}));
}

TEST(SignedPermutations, DistinctAndValid) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<Int>> seen;
    for (const IntMatrix& p : signed_permutations(n)) {
      ASSERT_TRUE(is_signed_permutation(p));
      ASSERT_EQ(std::abs(naive::det(p)), 1);
      seen.insert(std::vector<Int>(p.data().begin(), p.data().end()));
    }
    EXPECT_EQ(seen.size(), signed_permutations(n).size());
  }
  EXPECT_THROW(signed_permutations(0), PreconditionError);
  EXPECT_THROW(signed_permutations(5), PreconditionError);
}

TEST(TransformRecord, WitnessesAndComposes) {
  const IntMatrix m{{1, 0}, {1, 1}, {1, 2}, {0, 1}};
  TransformRecord t{IntMatrix{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, -1, 0}, {1, 0, 0, 0}},
                    IntMatrix{{1, 1}, {0, 1}}};
  const IntMatrix out = t.apply(m);
  EXPECT_EQ(out, (IntMatrix{{0, 1}, {1, 2}, {-1, -3}, {1, 1}}));
  EXPECT_TRUE(t.witnesses(m, out));
  EXPECT_FALSE(t.witnesses(m, m));
  const TransformRecord twice = t.then(t);
  EXPECT_EQ(twice.apply(m), t.apply(t.apply(m)));
  EXPECT_FALSE((TransformRecord{IntMatrix{{2}}, IntMatrix{{1}}}).is_valid());
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = naive::random_matrix(n, n, 6, rng);
    ASSERT_EQ(determinant(m), naive::det(m)) << m;
  }
}

TEST(Checked, OverflowIsReported) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(checked::add(big, 1, "test"), OverflowError);
  EXPECT_THROW(checked::mul(big, 2, "test"), OverflowError);
  EXPECT_THROW(checked::neg(std::numeric_limits<Int>::min(), "test"), OverflowError);
  EXPECT_THROW(column_hnf(IntMatrix{{big, 1}, {big, -big}}) , OverflowError);
}

TEST(Checked, FloorDivision) {
  EXPECT_EQ(checked::floor_div(-7, 2), -4);
  EXPECT_EQ(checked::floor_mod(-7, 3), 2);
  EXPECT_EQ(checked::floor_mod(7, 3), 1);
  EXPECT_EQ(checked::gcd(-12, 18, "test"), 6);
}

TEST(IntMatrix, TextRoundTrip) {
  const IntMatrix m{{9, 21}, {1, 4}};
  EXPECT_EQ(to_text(m), "9 21; 1 4");
  EXPECT_EQ(m.y(1, 2), 21);
  EXPECT_EQ(m.transposed(), (IntMatrix{{9, 1}, {21, 4}}));
}

}  // namespace
}  // namespace cayley::intlat
