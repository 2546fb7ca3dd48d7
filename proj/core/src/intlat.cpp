#include "cayley/intlat.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "cayley/checked.hpp"

namespace cayley::intlat {

namespace {

constexpr const char* kColumnOp = "column operation";

template <typename F>
auto named_overflow(const char* op, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const OverflowError& e) {
    throw OverflowError(std::string(op) + ": " + e.what());
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, c) = checked::neg((*this)(i, c), kColumnOp);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(r, j) = checked::neg((*this)(r, j), "row operation");
  }
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src,
                                    Int factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, dst) =
        checked::fma((*this)(i, dst), factor, (*this)(i, src), kColumnOp);
  }
}

bool IntMatrix::is_zero_column(std::size_t c) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, c) != 0) return false;
  }
  return true;
}

bool IntMatrix::is_zero_row(std::size_t r) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(r, j) != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::without_columns(const std::vector<std::size_t>& drop) const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (std::find(drop.begin(), drop.end(), j) == drop.end()) keep.push_back(j);
  }
  IntMatrix out(rows_, keep.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < keep.size(); ++k) out(i, k) = (*this)(i, keep[k]);
  }
  return out;
}

IntMatrix IntMatrix::without_rows(const std::vector<std::size_t>& drop) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  }
  IntMatrix out(keep.size(), cols_);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(keep[k], j);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = checked::fma(acc, a(i, k), b(k, j), "matrix product");
      }
      c(i, j) = acc;
    }
  }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector product");
  IntVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      out[i] = checked::fma(out[i], a(i, k), x[k], "matrix-vector product");
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

std::string to_text(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os.str();
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
  return named_overflow("determinant", [&]() -> Int {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t swap_with = k + 1;
        while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
        if (swap_with == n) return 0;
        a.swap_rows(k, swap_with);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          const Int num = checked::sub(checked::mul(a(i, j), a(k, k), "det"),
                                       checked::mul(a(i, k), a(k, j), "det"),
                                       "det");
          a(i, j) = num / prev;
        }
      }
      prev = a(k, k);
    }
    return checked::mul(sign, a(n - 1, n - 1), "det");
  });
}

std::size_t rank(const IntMatrix& m) { return column_hnf(m).rank; }

bool is_signed_permutation(const IntMatrix& p) {
  if (p.rows() != p.cols()) return false;
  const std::size_t n = p.rows();
  std::vector<int> col_hits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Int v = p(i, j);
      if (v == 0) continue;
      if (v != 1 && v != -1) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(),
                     [](int h) { return h == 1; });
}

bool is_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) return false;
  const Int d = determinant(u);
  return d == 1 || d == -1;
}

TransformRecord TransformRecord::identity(std::size_t rows, std::size_t cols) {
  return {IntMatrix::identity(rows), IntMatrix::identity(cols)};
}

bool TransformRecord::is_valid() const {
  return is_signed_permutation(p) && is_unimodular(u);
}

bool TransformRecord::witnesses(const IntMatrix& in, const IntMatrix& out) const {
  if (!is_valid()) return false;
  if (p.cols() != in.rows() || u.rows() != in.cols()) return false;
  return apply(in) == out;
}

IntMatrix TransformRecord::apply(const IntMatrix& m) const {
  if (p.cols() != m.rows() || u.rows() != m.cols()) {
    throw ShapeError("transform does not fit a " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + " matrix");
  }
  return p * m * u;
}

TransformRecord TransformRecord::then(const TransformRecord& next) const {
  return {next.p * p, u * next.u};
}

HnfResult column_hnf(const IntMatrix& m) {
  return named_overflow("column_hnf", [&] {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.cols());
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_rows;
    std::size_t p = 0;

    auto col_swap = [&](std::size_t a, std::size_t b) {
      h.swap_columns(a, b);
      u.swap_columns(a, b);
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, Int f) {
      h.add_column_multiple(dst, src, f);
      u.add_column_multiple(dst, src, f);
    };

    for (std::size_t i = 0; i < m.rows() && p < cols; ++i) {
      // Euclid across the row until at most one nonzero remains at column p.
      while (true) {
        std::size_t best = cols;
        for (std::size_t j = p; j < cols; ++j) {
          if (h(i, j) == 0) continue;
          if (best == cols ||
              checked::abs(h(i, j), "hnf") < checked::abs(h(i, best), "hnf")) {
            best = j;
          }
        }
        if (best == cols) break;
        col_swap(p, best);
        bool done = true;
        for (std::size_t j = p + 1; j < cols; ++j) {
          if (h(i, j) == 0) continue;
          col_addmul(j, p, -(h(i, j) / h(i, p)));
          if (h(i, j) != 0) done = false;
        }
        if (done) break;
      }
      if (h(i, p) == 0) continue;
      if (h(i, p) < 0) {
        h.negate_column(p);
        u.negate_column(p);
      }
      const Int pivot = h(i, p);
      for (std::size_t j = 0; j < p; ++j) {
        const Int q = checked::floor_div(h(i, j), pivot);
        col_addmul(j, p, checked::neg(q, "hnf"));
      }
      pivot_rows.push_back(i);
      ++p;
    }

    HnfResult out;
    out.h = std::move(h);
    out.transform = {IntMatrix::identity(m.rows()), std::move(u)};
    out.rank = pivot_rows.size();
    out.pivot_rows = std::move(pivot_rows);
    return out;
  });
}

LatticeBasis::LatticeBasis(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

LatticeBasis LatticeBasis::spanned_by(const IntMatrix& generators) {
  HnfResult hnf = column_hnf(generators);
  LatticeBasis b(generators.rows());
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = hnf.rank; j < generators.cols(); ++j) zero_cols.push_back(j);
  b.basis_ = hnf.h.without_columns(zero_cols);
  b.pivot_rows_ = std::move(hnf.pivot_rows);
  return b;
}

std::optional<IntVector> LatticeBasis::coordinates(std::span<const Int> v) const {
  if (v.size() != ambient_dim_) throw ShapeError("lattice vector length mismatch");
  return named_overflow("lattice_contains", [&]() -> std::optional<IntVector> {
    IntVector residual(v.begin(), v.end());
    IntVector coeffs(rank(), 0);
    for (std::size_t j = 0; j < rank(); ++j) {
      const std::size_t pr = pivot_rows_[j];
      const Int pivot = basis_(pr, j);
      if (residual[pr] % pivot != 0) return std::nullopt;
      const Int c = residual[pr] / pivot;
      coeffs[j] = c;
      if (c == 0) continue;
      for (std::size_t i = pr; i < ambient_dim_; ++i) {
        residual[i] = checked::sub(residual[i], checked::mul(c, basis_(i, j), "mul"),
                                   "sub");
      }
    }
    for (Int r : residual) {
      if (r != 0) return std::nullopt;
    }
    return coeffs;
  });
}

bool LatticeBasis::contains(std::span<const Int> v) const {
  return coordinates(v).has_value();
}

IntVector LatticeBasis::reduce(std::span<const Int> v) const {
  if (v.size() != ambient_dim_) throw ShapeError("lattice vector length mismatch");
  return named_overflow("coset reduction", [&] {
    IntVector residual(v.begin(), v.end());
    for (std::size_t j = 0; j < rank(); ++j) {
      const std::size_t pr = pivot_rows_[j];
      const Int q = checked::floor_div(residual[pr], basis_(pr, j));
      if (q == 0) continue;
      for (std::size_t i = pr; i < ambient_dim_; ++i) {
        residual[i] = checked::sub(residual[i], checked::mul(q, basis_(i, j), "mul"),
                                   "sub");
      }
    }
    return residual;
  });
}

std::optional<Int> LatticeBasis::index() const {
  if (rank() != ambient_dim_) return std::nullopt;
  Int prod = 1;
  for (std::size_t j = 0; j < rank(); ++j) {
    prod = checked::mul(prod, basis_(pivot_rows_[j], j), "lattice index");
  }
  return prod;
}

LatticeBasis kernel_lattice(const IntMatrix& a) {
  const HnfResult hnf = column_hnf(a);
  std::vector<IntVector> kernel_cols;
  for (std::size_t j = hnf.rank; j < a.cols(); ++j) {
    kernel_cols.push_back(hnf.transform.u.column(j));
  }
  if (kernel_cols.empty()) return LatticeBasis(a.cols());
  return LatticeBasis::spanned_by(IntMatrix::from_columns(a.cols(), kernel_cols));
}

bool lattice_contains(const LatticeBasis& b, std::span<const Int> v) {
  return b.contains(v);
}

std::vector<IntMatrix> signed_permutations(std::size_t n) {
  if (n < 1 || n > 4) {
    throw PreconditionError("signed_permutations: n must be in [1, 4], got " +
                            std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<IntMatrix> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      IntMatrix p(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        p(i, perm[i]) = (mask >> i) & 1u ? -1 : 1;
      }
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace cayley::intlat
