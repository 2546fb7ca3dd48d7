#pragma once

// Standardized abelian Cayley graphs (SACGs) presented by Heuberger
// matrices. Row i is generator x_i; the columns generate the relation
// lattice H in Z^m. The graph itself is Cay(Z^m / H, {H +- e_i}).

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cayley/intlat.hpp"

namespace cayley::sacg {

using intlat::Int;
using intlat::IntMatrix;
using intlat::IntVector;
using intlat::TransformRecord;

// Generators are an ordered tuple; duplicate rows are kept as given.
class HeubergerMatrix {
 public:
  explicit HeubergerMatrix(IntMatrix m);
  HeubergerMatrix(std::initializer_list<std::initializer_list<Int>> rows)
      : HeubergerMatrix(IntMatrix(rows)) {}

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t generators() const { return matrix_.rows(); }
  std::size_t relations() const { return matrix_.cols(); }

  // Transforms applied since construction, oldest first.
  const std::vector<TransformRecord>& provenance() const { return provenance_; }

  HeubergerMatrix with_step(IntMatrix next, TransformRecord step) const;

  friend bool operator==(const HeubergerMatrix& a, const HeubergerMatrix& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  IntMatrix matrix_;
  std::vector<TransformRecord> provenance_;
};

// --- certificates -----------------------------------------------------------

// sum_k coefficients[k] * column_k == e_j (j one-based).
struct LoopWitness {
  IntVector coefficients;
  std::size_t j = 0;
  friend bool operator==(const LoopWitness&, const LoopWitness&) = default;
};

struct BipartiteEvenSums {
  friend bool operator==(const BipartiteEvenSums&,
                         const BipartiteEvenSums&) = default;
};

struct TomatoCage {
  Int s = 0;  // entry sum of the single column
  friend bool operator==(const TomatoCage&, const TomatoCage&) = default;
};

// One of the six exceptional 4-chromatic mHNF families, case 1..6 = (i)..(vi).
struct MHNFException {
  int case_id = 0;
  Int k = 0;
  Int a = 0;   // only meaningful for case (vi)
  int sign = 1;  // the +- in the bottom-left entry, cases (i)..(v)
  IntMatrix mhnf;
  TransformRecord transform;  // normalized -> mhnf
  friend bool operator==(const MHNFException&, const MHNFException&) = default;
};

// P * normalized * U == [[1,a],[1,b],[1,c],[0,1]] with 3 | a+b+c.
struct TriTriangle {
  TransformRecord transform;
  Int a = 0;
  Int b = 0;
  Int c = 0;
  friend bool operator==(const TriTriangle&, const TriTriangle&) = default;
};

// mHNF with no exceptional pattern, or a 4x2 failing the tri-triangle test.
struct OtherwiseThree {
  std::optional<IntMatrix> mhnf;
  friend bool operator==(const OtherwiseThree&, const OtherwiseThree&) = default;
};

// Exact coloring of the finite graph Z^m / H; vertex v is the coset with
// canonical label labels[v].
struct FiniteExact {
  std::vector<IntVector> labels;
  std::vector<int> coloring;
  friend bool operator==(const FiniteExact&, const FiniteExact&) = default;
};

using Certificate = std::variant<LoopWitness, BipartiteEvenSums, TomatoCage,
                                 MHNFException, TriTriangle, OtherwiseThree,
                                 FiniteExact>;

enum class Outcome { kHasLoops, kChi };

struct ChromaticResult {
  Outcome outcome = Outcome::kChi;
  int chi = 0;  // 2, 3 or 4 when outcome == kChi
  Certificate certificate;
  // Matrix the certificate refers to, after zero column/row removal.
  IntMatrix normalized;
  // One-based indices of zero rows removed from the input.
  std::vector<std::size_t> removed_rows;
  std::vector<std::string> notes;

  static ChromaticResult loops(LoopWitness w, IntMatrix normalized);
  static ChromaticResult chromatic(int chi, Certificate cert,
                                   IntMatrix normalized);

  bool has_loops() const { return outcome == Outcome::kHasLoops; }
  // Outcome only; certificates may legitimately differ between equivalent
  // presentations.
  bool same_outcome(const ChromaticResult& other) const {
    return outcome == other.outcome && (has_loops() || chi == other.chi);
  }
  std::string describe() const;

  friend bool operator==(const ChromaticResult&,
                         const ChromaticResult&) = default;
};

std::string certificate_name(const Certificate& c);

// --- operations -------------------------------------------------------------

HeubergerMatrix drop_zero_columns(const HeubergerMatrix& m);

struct DroppedRows {
  HeubergerMatrix matrix;
  std::vector<std::size_t> removed;  // one-based
};
// Chromatic number is preserved; the graphs need not be isomorphic. A matrix
// with no columns, or with every row zero, is returned unchanged.
DroppedRows drop_zero_rows(const HeubergerMatrix& m);

struct LoopCheck {
  bool loops = false;
  std::optional<LoopWitness> witness;
};
LoopCheck has_loops(const HeubergerMatrix& m);

bool is_bipartite(const HeubergerMatrix& m);

// Rows i and j (one-based) replaced by their sum, placed at min(i, j).
HeubergerMatrix collapse_rows(const HeubergerMatrix& m, std::size_t i,
                              std::size_t j);

// P * M * U.
HeubergerMatrix apply_transform(const HeubergerMatrix& m,
                                const TransformRecord& t);

// Column sums of a matrix.
IntVector column_sums(const IntMatrix& m);

}  // namespace cayley::sacg
