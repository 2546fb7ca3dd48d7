#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "cayley/planar.hpp"
#include "support/unit_vectors.hpp"

namespace cayley::planar {
namespace {

using unit_vectors::rat;
using unit_vectors::surd;

TEST(QuadArithmetic, Basics) {
  EXPECT_TRUE(is_square_free(0));
  EXPECT_TRUE(is_square_free(1));
  EXPECT_TRUE(is_square_free(30));
  EXPECT_FALSE(is_square_free(12));
  EXPECT_FALSE(is_square_free(-3));
  // (1 + sqrt3)^2 = 4 + 2 sqrt3
  EXPECT_EQ(mul({1, 1}, {1, 1}, 3), (QuadNumber{4, 2}));
  EXPECT_EQ(fold({1, 2}, 1), (QuadNumber{3, 0}));
  EXPECT_TRUE(is_zero({2, -2}, 1));
  EXPECT_FALSE(is_zero({2, -2}, 3));
  EXPECT_EQ(to_string(QuadNumber{Rational(-1, 2), Rational(1, 2)}, 3), "-1/2 + 1/2*sqrt(3)");
}

TEST(QuadArithmetic, UnitNorm) {
  for (const QuadVec& v : unit_vectors::triangular_triple()) EXPECT_TRUE(is_unit(v));
  EXPECT_TRUE(is_unit({0, rat(3, 5), rat(4, 5)}));
  EXPECT_FALSE(is_unit({0, rat(3, 5), rat(3, 5)}));
  EXPECT_FALSE(is_unit({3, rat(1, 2), rat(1, 2)}));
  for (Int d : {2, 3, 5}) EXPECT_TRUE(is_unit(unit_vectors::base_unit(d)));
}

TEST(RelationLattice, TriangularTriple) {
  const sacg::HeubergerMatrix h = relation_lattice(unit_vectors::triangular_triple());
  EXPECT_EQ(h.matrix(), (intlat::IntMatrix{{1}, {1}, {1}}));
}

TEST(RelationLattice, OrthogonalPairHasNone) {
  const sacg::HeubergerMatrix h = relation_lattice({{0, rat(1), rat(0)}, {0, rat(0), rat(1)}});
  EXPECT_EQ(h.generators(), 2u);
  EXPECT_EQ(h.relations(), 0u);
}

TEST(RelationLattice, Pythagorean) {
  const std::vector<QuadVec> vs{{0, rat(3, 5), rat(4, 5)}, {0, rat(-3, 5), rat(4, 5)},
                                {0, rat(1), rat(0)}};
  const sacg::HeubergerMatrix h = relation_lattice(vs);
  EXPECT_EQ(h.matrix(), (intlat::IntMatrix{{5}, {-5}, {-6}}));
  EXPECT_TRUE(is_relation(vs, {5, -5, -6}));
}

TEST(RelationLattice, Validation) {
  EXPECT_THROW(relation_lattice({}), ValidationError);
  EXPECT_THROW(relation_lattice({{0, rat(1), rat(1)}}), ValidationError);
  EXPECT_THROW(relation_lattice({{3, rat(1), rat(0)}, {2, rat(1), rat(0)}}), ValidationError);
  EXPECT_THROW(relation_lattice({{4, rat(1), rat(0)}}), ValidationError);
  std::vector<QuadVec> five(5, QuadVec{0, rat(1), rat(0)});
  EXPECT_THROW(relation_lattice(five), UnsupportedShape);
}

TEST(ChiOfUnitVectors, Examples) {
  EXPECT_EQ(chi_of_unit_vectors(unit_vectors::triangular_triple()).chi, 3);
  EXPECT_EQ(chi_of_unit_vectors({{0, rat(1), rat(0)}}).chi, 2);
  auto four = unit_vectors::triangular_triple();
  four.push_back(four[2]);
  EXPECT_EQ(chi_of_unit_vectors(four).chi, 3);
  EXPECT_EQ(chi_of_unit_vectors({{0, rat(1), rat(0)}, {0, rat(0), rat(1)}}).chi, 2);
}

TEST(ChiOfUnitVectors, CollinearQuadrupleFallsBackToDistinctVectors) {
  const std::vector<QuadVec> vs{{0, rat(1), rat(0)}, {0, rat(-1), rat(0)},
                                {0, rat(1), rat(0)}, {0, rat(-1), rat(0)}};
  const PlanarResult r = classify_unit_vectors(vs);
  EXPECT_TRUE(r.deduplicated);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.result.chi, 2);
  EXPECT_EQ(r.relations.relations(), 3u);
}

void check_cover(const std::vector<QuadVec>& vs) {
  const sacg::HeubergerMatrix h = relation_lattice(vs);
  for (std::size_t j = 0; j < h.relations(); ++j) {
    ASSERT_TRUE(is_relation(vs, h.matrix().column(j)));
  }
  const PlanarResult r = classify_unit_vectors(vs);
  ASSERT_FALSE(r.result.has_loops());
  ASSERT_GE(r.result.chi, 2);
  ASSERT_LE(r.result.chi, 3);
}

TEST(ChiOfUnitVectors, PythagoreanQuadruplesAreAtMostThree) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 150; ++t) {
    std::vector<QuadVec> vs;
    const std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vectors::pythagorean(rng));
    check_cover(vs);
  }
}

TEST(ChiOfUnitVectors, QuadraticFieldsAreAtMostThree) {
  std::mt19937_64 rng(62);
  for (Int d : {2, 3, 5}) {
    for (int t = 0; t < 40; ++t) {
      std::vector<QuadVec> vs;
      const std::size_t n = 1 + rng() % 4;
      for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vectors::quadratic(rng, d));
      for (const QuadVec& v : vs) ASSERT_TRUE(is_unit(v));
      check_cover(vs);
    }
  }
}

TEST(ChiOfUnitVectors, PermutingVectorsPermutesRows) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 60; ++t) {
    std::vector<QuadVec> vs;
    for (int i = 0; i < 3; ++i) vs.push_back(unit_vectors::quadratic(rng, 3));
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<QuadVec> ws;
    for (std::size_t i : perm) ws.push_back(vs[i]);

    const intlat::IntMatrix a = relation_lattice(vs).matrix();
    const intlat::IntMatrix b = relation_lattice(ws).matrix();
    intlat::IntMatrix p(3, 3);
    for (std::size_t i = 0; i < 3; ++i) p(i, perm[i]) = 1;
    ASSERT_EQ(intlat::LatticeBasis::spanned_by(p * a), intlat::LatticeBasis::spanned_by(b));
    ASSERT_TRUE(chi_of_unit_vectors(vs).same_outcome(chi_of_unit_vectors(ws)));
  }
}

}  // namespace
}  // namespace cayley::planar
