#pragma once

// Plane unit vectors with coordinates in Q(sqrt d), their integer relation
// lattice, and the chromatic number of the Cayley graph they generate.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley/classify.hpp"
#include "cayley/intlat.hpp"
#include "cayley/sacg.hpp"

namespace cayley::planar {

using intlat::Int;
using intlat::IntVector;
using Rational = boost::multiprecision::cpp_rational;

// a + b * sqrt(d); d lives with the vector.
struct QuadNumber {
  Rational a;
  Rational b;
  friend bool operator==(const QuadNumber&, const QuadNumber&) = default;
};

struct QuadVec {
  Int d = 0;
  QuadNumber x;
  QuadNumber y;
  friend bool operator==(const QuadVec&, const QuadVec&) = default;
};

bool is_square_free(Int d);

// Field arithmetic in Q(sqrt d).
QuadNumber add(const QuadNumber& u, const QuadNumber& v);
QuadNumber mul(const QuadNumber& u, const QuadNumber& v, Int d);
QuadNumber scale(const QuadNumber& u, Int k);
// For d in {0, 1} the sqrt part is folded into the rational part.
QuadNumber fold(const QuadNumber& u, Int d);
bool is_zero(const QuadNumber& u, Int d);

// x^2 + y^2 == 1 exactly.
bool is_unit(const QuadVec& v);

std::string to_string(const QuadNumber& u, Int d);
std::string to_string(const QuadVec& v);

// Shared d, square-free d >= 0, unit norm, 1 <= n <= 4. Throws
// ValidationError, or UnsupportedShape for n >= 5.
void validate(const std::vector<QuadVec>& vs);

// sum_i a_i v_i == 0 exactly.
bool is_relation(const std::vector<QuadVec>& vs, const IntVector& a);

// Columns generate {a in Z^n : sum a_i v_i = 0}; n x 0 when there are none.
sacg::HeubergerMatrix relation_lattice(const std::vector<QuadVec>& vs);

struct PlanarResult {
  sacg::HeubergerMatrix relations;
  sacg::ChromaticResult result;
  // Set when +-duplicate vectors were merged before classification.
  std::vector<std::size_t> kept;  // zero-based indices into the input
  bool deduplicated = false;
};

PlanarResult classify_unit_vectors(const std::vector<QuadVec>& vs,
                                   const classify::ClassifyOptions& options = {});
sacg::ChromaticResult chi_of_unit_vectors(const std::vector<QuadVec>& vs,
                                          const classify::ClassifyOptions& options = {});

}  // namespace cayley::planar
