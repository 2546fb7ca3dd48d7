#include <random>

#include <gtest/gtest.h>

#include "cayley/classify.hpp"
#include "cayley/sacg.hpp"
#include "support/naive.hpp"

namespace cayley::sacg {
namespace {

// Direct e_j membership, bypassing has_loops.
bool loops_by_brute_force(const IntMatrix& m) {
  for (std::size_t j = 0; j < m.rows(); ++j) {
    IntVector e(m.rows(), 0);
    e[j] = 1;
    if (naive::in_span_bounded(m, e, 8)) return true;
  }
  return false;
}

TEST(DropZeroColumns, Examples) {
  EXPECT_EQ(drop_zero_columns(HeubergerMatrix{{1, 0}, {2, 0}}).matrix(),
            (IntMatrix{{1}, {2}}));
  const HeubergerMatrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(drop_zero_columns(m).matrix(), m.matrix());
  const HeubergerMatrix zero{{0, 0}, {0, 0}};
  const IntMatrix out = drop_zero_columns(zero).matrix();
  EXPECT_EQ(out.rows(), 2u);
  EXPECT_EQ(out.cols(), 0u);
}

TEST(DropZeroRows, Examples) {
  DroppedRows d = drop_zero_rows(HeubergerMatrix{{0}, {1}, {1}, {1}});
  EXPECT_EQ(d.matrix.matrix(), (IntMatrix{{1}, {1}, {1}}));
  EXPECT_EQ(d.removed, (std::vector<std::size_t>{1}));

  d = drop_zero_rows(HeubergerMatrix{{1, 2}, {3, 4}});
  EXPECT_EQ(d.matrix.matrix(), (IntMatrix{{1, 2}, {3, 4}}));
  EXPECT_TRUE(d.removed.empty());

  d = drop_zero_rows(HeubergerMatrix{{0, 0}, {1, 2}});
  EXPECT_EQ(d.matrix.matrix(), (IntMatrix{{1, 2}}));
  EXPECT_EQ(d.removed, (std::vector<std::size_t>{1}));
}

TEST(DropZeroRows, PreservesChromaticNumber) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix m = naive::random_matrix(3, 1 + rng() % 2, 3, rng);
    for (std::size_t j = 0; j < m.cols(); ++j) m(rng() % 3, j) = m(rng() % 3, j);
    // Insert a zero row at a random position.
    const std::size_t at = rng() % 4;
    std::vector<IntVector> rows = m.to_rows();
    rows.insert(rows.begin() + static_cast<long>(at), IntVector(m.cols(), 0));
    const HeubergerMatrix with_zero(IntMatrix::from_rows(rows, m.cols()));
    const DroppedRows d = drop_zero_rows(with_zero);
    if (d.matrix.generators() == 0) continue;
    ChromaticResult a, b;
    try {
      a = classify::chromatic_number(with_zero);
      b = classify::chromatic_number(d.matrix);
    } catch (const UnsupportedShape&) {
      continue;
    }
    ASSERT_TRUE(a.same_outcome(b)) << with_zero.matrix();
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(HasLoops, Examples) {
  const LoopCheck a = has_loops(HeubergerMatrix{{1}, {0}, {0}, {0}});
  EXPECT_TRUE(a.loops);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.witness->j, 1u);
  EXPECT_EQ(a.witness->coefficients, (IntVector{1}));

  EXPECT_FALSE(has_loops(HeubergerMatrix{{1, 0}, {1, 1}, {1, 2}, {0, 1}}).loops);

  const LoopCheck c = has_loops(HeubergerMatrix{{1, 0}, {0, 1}, {0, 4}});
  EXPECT_TRUE(c.loops);
  EXPECT_EQ(c.witness->j, 1u);
}

TEST(HasLoops, WitnessMultipliesOut) {
  std::mt19937_64 rng(6);
  int with_loops = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMatrix m = naive::random_matrix(1 + rng() % 4, 1 + rng() % 2, 2, rng);
    const LoopCheck lc = has_loops(HeubergerMatrix(m));
    ASSERT_EQ(lc.loops, loops_by_brute_force(m)) << m;
    if (!lc.loops) continue;
    ++with_loops;
    const IntVector v = m * lc.witness->coefficients;
    for (std::size_t i = 0; i < v.size(); ++i) {
      ASSERT_EQ(v[i], i + 1 == lc.witness->j ? 1 : 0) << m;
    }
  }
  EXPECT_GT(with_loops, 50);
}

TEST(IsBipartite, Examples) {
  EXPECT_TRUE(is_bipartite(HeubergerMatrix{{2, 0}, {0, 2}}));
  EXPECT_FALSE(is_bipartite(HeubergerMatrix{{9, 21}, {1, 4}}));
  EXPECT_TRUE(is_bipartite(HeubergerMatrix{{3, 0}, {0, 2}, {-1, 4}}));
  EXPECT_EQ(column_sums(IntMatrix{{9, 21}, {1, 4}}), (IntVector{10, 25}));
}

TEST(CollapseRows, Examples) {
  EXPECT_EQ(collapse_rows(HeubergerMatrix{{9, 21}, {1, 4}}, 1, 2).matrix(),
            (IntMatrix{{10, 25}}));
  EXPECT_EQ(collapse_rows(HeubergerMatrix{{1, 0}, {1, 1}, {1, 2}, {0, 1}}, 3, 4).matrix(),
            (IntMatrix{{1, 0}, {1, 1}, {1, 3}}));
  EXPECT_EQ(collapse_rows(HeubergerMatrix{{0, 0}, {2, 5}, {1, 1}}, 2, 1).matrix(),
            (IntMatrix{{2, 5}, {1, 1}}));
  EXPECT_THROW(collapse_rows(HeubergerMatrix{{1}, {2}}, 1, 1), PreconditionError);
}

TEST(CollapseRows, NeverLowersChromaticNumber) {
  std::mt19937_64 rng(8);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = naive::random_matrix(4, 2, 2, rng);
    const std::size_t i = 1 + rng() % 4, j = 1 + (i + rng() % 3) % 4;
    ChromaticResult a, b;
    try {
      a = classify::chromatic_number(HeubergerMatrix(m));
      b = classify::chromatic_number(collapse_rows(HeubergerMatrix(m), i, j));
    } catch (const Error&) {
      continue;
    }
    if (a.has_loops()) continue;
    // A homomorphism into a looped graph is allowed; otherwise chi grows.
    if (!b.has_loops()) ASSERT_LE(a.chi, b.chi) << m << " collapse " << i << "," << j;
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(ApplyTransform, Examples) {
  const HeubergerMatrix m{{1, 0}, {1, 1}, {1, 2}, {0, 1}};
  EXPECT_EQ(apply_transform(m, TransformRecord::identity(4, 2)).matrix(), m.matrix());

  const TransformRecord t{
      IntMatrix{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, -1, 0}, {1, 0, 0, 0}},
      IntMatrix{{1, 1}, {0, 1}}};
  const HeubergerMatrix out = apply_transform(m, t);
  EXPECT_EQ(out.matrix(), (IntMatrix{{0, 1}, {1, 2}, {-1, -3}, {1, 1}}));
  ASSERT_EQ(out.provenance().size(), 1u);
  EXPECT_EQ(out.provenance()[0], t);

  const TransformRecord neg{IntMatrix::identity(4), IntMatrix{{1, 0}, {0, -1}}};
  EXPECT_EQ(intlat::column_hnf(apply_transform(m, neg).matrix()).h,
            intlat::column_hnf(m.matrix()).h);
  EXPECT_THROW(apply_transform(m, TransformRecord::identity(3, 2)), ShapeError);
}

TEST(ApplyTransform, LoopsAndBipartitenessInvariant) {
  std::mt19937_64 rng(9);
  for (int draw = 0; draw < 500; ++draw) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 2;
    const IntMatrix m = naive::random_matrix(rows, cols, 3, rng);
    const TransformRecord t{naive::random_signed_permutation(rows, rng),
                            naive::random_unimodular(cols, rng)};
    const HeubergerMatrix a(m);
    const HeubergerMatrix b = apply_transform(a, t);
    ASSERT_EQ(has_loops(a).loops, has_loops(b).loops) << m;
    ASSERT_EQ(is_bipartite(a), is_bipartite(b)) << m;
  }
}

TEST(ChromaticResult, DescribeAndCompare) {
  const ChromaticResult a = ChromaticResult::chromatic(3, OtherwiseThree{}, IntMatrix{{5}});
  const ChromaticResult b = ChromaticResult::chromatic(3, TomatoCage{5}, IntMatrix{{5}});
  EXPECT_TRUE(a.same_outcome(b));
  EXPECT_FALSE(a == b);
  EXPECT_EQ(certificate_name(b.certificate), "TomatoCage");
  EXPECT_NE(a.describe().find("3"), std::string::npos);
  const ChromaticResult l = ChromaticResult::loops({{1}, 1}, IntMatrix{{1}});
  EXPECT_TRUE(l.has_loops());
  EXPECT_FALSE(l.same_outcome(a));
}

}  // namespace
}  // namespace cayley::sacg
