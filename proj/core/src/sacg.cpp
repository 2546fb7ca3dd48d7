#include "cayley/sacg.hpp"

#include <sstream>

#include "cayley/checked.hpp"

namespace cayley::sacg {

HeubergerMatrix::HeubergerMatrix(IntMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() < 1) {
    throw ShapeError("a Heuberger matrix needs at least one generator row");
  }
}

HeubergerMatrix HeubergerMatrix::with_step(IntMatrix next,
                                           TransformRecord step) const {
  HeubergerMatrix out(std::move(next));
  out.provenance_ = provenance_;
  out.provenance_.push_back(std::move(step));
  return out;
}

ChromaticResult ChromaticResult::loops(LoopWitness w, IntMatrix normalized) {
  ChromaticResult r;
  r.outcome = Outcome::kHasLoops;
  r.chi = 0;
  r.certificate = std::move(w);
  r.normalized = std::move(normalized);
  return r;
}

ChromaticResult ChromaticResult::chromatic(int chi, Certificate cert,
                                           IntMatrix normalized) {
  ChromaticResult r;
  r.outcome = Outcome::kChi;
  r.chi = chi;
  r.certificate = std::move(cert);
  r.normalized = std::move(normalized);
  return r;
}

std::string certificate_name(const Certificate& c) {
  struct Visitor {
    std::string operator()(const LoopWitness&) const { return "LoopWitness"; }
    std::string operator()(const BipartiteEvenSums&) const {
      return "BipartiteEvenSums";
    }
    std::string operator()(const TomatoCage&) const { return "TomatoCage"; }
    std::string operator()(const MHNFException&) const {
      return "MHNFException";
    }
    std::string operator()(const TriTriangle&) const { return "TriTriangle"; }
    std::string operator()(const OtherwiseThree&) const {
      return "OtherwiseThree";
    }
    std::string operator()(const FiniteExact&) const { return "FiniteExact"; }
  };
  return std::visit(Visitor{}, c);
}

std::string ChromaticResult::describe() const {
  std::ostringstream os;
  if (has_loops()) {
    os << "HasLoops";
  } else {
    os << "Chi(" << chi << ")";
  }
  os << " via " << certificate_name(certificate);
  return os.str();
}

HeubergerMatrix drop_zero_columns(const HeubergerMatrix& m) {
  const IntMatrix& a = m.matrix();
  std::vector<std::size_t> zero;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.is_zero_column(j)) zero.push_back(j);
  }
  if (zero.empty()) return m;
  // Dropping a zero column is a column selection, not a unimodular move, so
  // it is not recorded as a TransformRecord.
  HeubergerMatrix out(a.without_columns(zero));
  return out;
}

DroppedRows drop_zero_rows(const HeubergerMatrix& m) {
  const IntMatrix& a = m.matrix();
  if (a.cols() == 0) return {m, {}};
  std::vector<std::size_t> zero;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.is_zero_row(i)) zero.push_back(i);
  }
  if (zero.empty() || zero.size() == a.rows()) return {m, {}};
  std::vector<std::size_t> removed;
  for (std::size_t i : zero) removed.push_back(i + 1);
  return {HeubergerMatrix(a.without_rows(zero)), std::move(removed)};
}

LoopCheck has_loops(const HeubergerMatrix& m) {
  const IntMatrix& a = m.matrix();
  const std::size_t rows = a.rows();
  if (a.cols() == 0) return {};
  const intlat::HnfResult hnf = intlat::column_hnf(a);
  const intlat::LatticeBasis lattice = intlat::LatticeBasis::spanned_by(a);
  for (std::size_t j = 0; j < rows; ++j) {
    IntVector e(rows, 0);
    e[j] = 1;
    auto coords = lattice.coordinates(e);
    if (!coords) continue;
    // The lattice basis is the leading rank columns of the HNF, which is
    // a * U; pull the coefficients back through U.
    IntVector padded(a.cols(), 0);
    for (std::size_t k = 0; k < coords->size(); ++k) padded[k] = (*coords)[k];
    return {true, LoopWitness{hnf.transform.u * padded, j + 1}};
  }
  return {};
}

IntVector column_sums(const IntMatrix& m) {
  IntVector sums(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      sums[j] = checked::add(sums[j], m(i, j), "column_sums");
    }
  }
  return sums;
}

bool is_bipartite(const HeubergerMatrix& m) {
  const IntMatrix& a = m.matrix();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    // Parity only; avoids overflow on huge entries.
    unsigned parity = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      parity ^= static_cast<unsigned>(a(i, j) & 1);
    }
    if (parity) return false;
  }
  return true;
}

HeubergerMatrix collapse_rows(const HeubergerMatrix& m, std::size_t i,
                              std::size_t j) {
  const IntMatrix& a = m.matrix();
  if (i == j || i < 1 || j < 1 || i > a.rows() || j > a.rows()) {
    throw PreconditionError("collapse_rows: need two distinct rows in [1, " +
                            std::to_string(a.rows()) + "]");
  }
  const std::size_t keep = std::min(i, j) - 1;
  const std::size_t gone = std::max(i, j) - 1;
  IntMatrix out(a.rows() - 1, a.cols());
  std::size_t r = 0;
  for (std::size_t src = 0; src < a.rows(); ++src) {
    if (src == gone) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) = src == keep ? checked::add(a(keep, c), a(gone, c), "collapse_rows")
                              : a(src, c);
    }
    ++r;
  }
  if (out.rows() == 0) {
    throw PreconditionError("collapse_rows: result has no generators");
  }
  return HeubergerMatrix(std::move(out));
}

HeubergerMatrix apply_transform(const HeubergerMatrix& m,
                                const TransformRecord& t) {
  if (!intlat::is_signed_permutation(t.p)) {
    throw PreconditionError("apply_transform: P is not a signed permutation");
  }
  if (!intlat::is_unimodular(t.u)) {
    throw PreconditionError("apply_transform: U is not unimodular");
  }
  return m.with_step(t.apply(m.matrix()), t);
}

}  // namespace cayley::sacg
