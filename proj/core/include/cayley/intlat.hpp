#pragma once

// Exact integer linear algebra over Z: small dense matrices, the canonical
// column Hermite normal form, kernel lattices and membership tests.
//
// All arithmetic is 64-bit and overflow-checked; an overflow surfaces as
// OverflowError naming the operation.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/error.hpp"

namespace cayley::intlat {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Row-major literal, e.g. {{9, 21}, {1, 4}}.
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols_if_empty = 0);
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  // One-based accessor matching the y_ij notation for Heuberger matrices.
  Int y(std::size_t i, std::size_t j) const { return (*this)(i - 1, j - 1); }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> to_rows() const;

  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  void negate_column(std::size_t c);
  void negate_row(std::size_t r);
  // column[dst] += factor * column[src]
  void add_column_multiple(std::size_t dst, std::size_t src, Int factor);

  bool is_zero_column(std::size_t c) const;
  bool is_zero_row(std::size_t r) const;

  IntMatrix transposed() const;
  IntMatrix without_columns(const std::vector<std::size_t>& drop) const;
  IntMatrix without_rows(const std::vector<std::size_t>& drop) const;

  std::span<const Int> data() const { return data_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
// "9 21; 1 4" style, the same syntax the CLI accepts.
std::string to_text(const IntMatrix& m);

// Determinant of a square matrix by fraction-free elimination.
Int determinant(const IntMatrix& m);
// Rank over Q.
std::size_t rank(const IntMatrix& m);

bool is_signed_permutation(const IntMatrix& p);
bool is_unimodular(const IntMatrix& u);

// Signed permutation P and unimodular U witnessing P * in * U == out.
struct TransformRecord {
  IntMatrix p;
  IntMatrix u;

  static TransformRecord identity(std::size_t rows, std::size_t cols);

  // Structural checks on P and U only.
  bool is_valid() const;
  // Structural checks plus P * in * U == out.
  bool witnesses(const IntMatrix& in, const IntMatrix& out) const;
  IntMatrix apply(const IntMatrix& m) const;

  // (this then next): next.p * (p * M * u) * next.u
  TransformRecord then(const TransformRecord& next) const;

  friend bool operator==(const TransformRecord&,
                         const TransformRecord&) = default;
};

struct HnfResult {
  IntMatrix h;          // canonical column HNF, zero columns rightmost
  TransformRecord transform;  // identity P; h == m * transform.u
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of column j, j < rank
};

// Canonical column Hermite normal form. Lower staircase, positive pivots,
// entries to the right of a pivot zero, entries left of a pivot in its row
// reduced into [0, pivot).
HnfResult column_hnf(const IntMatrix& m);

// A sublattice of Z^m held in canonical column HNF; equal lattices compare
// equal.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t ambient_dim);
  // Lattice spanned by the columns of a generating matrix.
  static LatticeBasis spanned_by(const IntMatrix& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return pivot_rows_.size(); }
  // ambient_dim x rank, canonical.
  const IntMatrix& basis() const { return basis_; }
  IntVector vector(std::size_t j) const { return basis_.column(j); }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

  // Coefficients c with basis() * c == v, if v is in the lattice.
  std::optional<IntVector> coordinates(std::span<const Int> v) const;
  bool contains(std::span<const Int> v) const;

  // Canonical representative of the coset v + L: every pivot-row entry
  // lands in [0, pivot). Two vectors share a coset iff their reductions match.
  IntVector reduce(std::span<const Int> v) const;

  // Order of Z^m / L when rank == ambient_dim (product of pivots).
  std::optional<Int> index() const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_;
  IntMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

// Basis of { x in Z^cols : a * x == 0 }.
LatticeBasis kernel_lattice(const IntMatrix& a);

bool lattice_contains(const LatticeBasis& b, std::span<const Int> v);

// All 2^n * n! signed permutation matrices, 1 <= n <= 4, in a fixed order:
// permutations lexicographically, then sign masks in increasing order.
std::vector<IntMatrix> signed_permutations(std::size_t n);

}  // namespace cayley::intlat
