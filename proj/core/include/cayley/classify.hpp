#pragma once

// Decision procedures for the chromatic number of SACGs: the single-column
// parity rule, the 1 x r gcd reduction, modified Hermite normal form for
// 3 x 2 matrices, the three-divisible-row bound, the tri-triangle form, the
// 4 x 2 dichotomy, and a dispatcher over all of them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/intlat.hpp"
#include "cayley/sacg.hpp"

namespace cayley::classify {

using intlat::Int;
using intlat::IntMatrix;
using intlat::TransformRecord;
using sacg::ChromaticResult;
using sacg::HeubergerMatrix;

// A 3 x 2 matrix meeting all six mHNF conditions, with the transform from
// the matrix it was derived from.
struct MHNFMatrix {
  IntMatrix matrix;
  TransformRecord transform;
};

// 0 when m is in mHNF, otherwise the (one-based) first condition it fails.
// Shape problems, zero rows and zero columns report -1.
int first_failed_mhnf_condition(const IntMatrix& m);
inline bool is_mhnf(const IntMatrix& m) {
  return first_failed_mhnf_condition(m) == 0;
}

// Single column: loops when M = +-e_i, else 2 or 3 by the parity of the
// entry sum.
ChromaticResult tomato_cage(const HeubergerMatrix& m);

struct Reduced1xr {
  HeubergerMatrix matrix;     // (g), g = gcd of the entries, g >= 0
  TransformRecord transform;  // M * U == (g 0 ... 0)
};
Reduced1xr reduce_1xr(const HeubergerMatrix& m);

// Bounded exhaustive search over the 48 signed row permutations and the
// column normalizations. The first mHNF form in enumeration order is
// returned; an input already in mHNF is returned unchanged with the
// identity transform.
MHNFMatrix canonicalize_mhnf(const HeubergerMatrix& m);

// Every mHNF form reachable from m (deduplicated by matrix), in
// enumeration order: permutations, then column-2 sign +1 before -1.
std::vector<MHNFMatrix> all_mhnf_forms(const HeubergerMatrix& m);

// Exceptional 4-chromatic family membership, k >= 0 and 3 does not divide a.
// Callers rule out loops and bipartite matrices first.
std::optional<sacg::MHNFException> match_exceptional(const IntMatrix& m);
// A note when m matches a family only with k == 0. Diagnostic only.
std::optional<std::string> near_miss_k0(const IntMatrix& m);

ChromaticResult classify_mhnf(const MHNFMatrix& m);

// Some row divisible by 3 (both entries) on a loop-free, zero-row-free
// 3 x 2 or 4 x 2 matrix bounds the chromatic number by 3.
std::optional<int> three_div_row_bound(const HeubergerMatrix& m);

// Matrices of shape [[1,y12],[1,y22],[1,y32],[0,y42]].
bool has_tri_triangle_shape(const IntMatrix& m);
ChromaticResult tri_triangle_direct(const HeubergerMatrix& m);

// Every signed permutation P (in enumeration order) admitting a unimodular U
// with P * M * U == [[1,a],[1,b],[1,c],[0,1]] and 3 | a+b+c.
std::vector<sacg::TriTriangle> tri_triangle_decompositions(const IntMatrix& m);

// Rank-2, zero-row-free, loop-free, nonbipartite 4 x 2 matrices: 4 with a
// tri-triangle certificate, else 3.
ChromaticResult classify_4x2(const HeubergerMatrix& m);

struct ClassifyOptions {
  // Finite case (square full-rank) graphs larger than this are refused.
  std::size_t max_finite_vertices = 1'000'000;
  std::uint64_t node_budget = 0;  // 0: oracle default
  // Cross-check the 4 x 2 answer against the tri-triangle and
  // three-divisible-row shortcuts when they apply.
  bool fast_path_checks = true;
};

// Full pipeline: drop zero columns, loop check, 1 x r reduction, full-rank
// column HNF, drop zero rows, then dispatch on the shape.
ChromaticResult chromatic_number(const HeubergerMatrix& m,
                                 const ClassifyOptions& options = {});

// Re-derives the certificate's claim from result.normalized. Returns an
// empty string when it holds, else a reason.
std::string check_certificate(const ChromaticResult& result);
inline bool verify_certificate(const ChromaticResult& result) {
  return check_certificate(result).empty();
}

}  // namespace cayley::classify
