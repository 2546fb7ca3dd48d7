#include "cayley/classify.hpp"

#include <algorithm>

#include "cayley/checked.hpp"
#include "cayley/oracle.hpp"

namespace cayley::classify {

namespace {

using intlat::IntVector;

bool is_plus_minus_unit(const IntMatrix& column_matrix) {
  int nonzero = 0;
  for (std::size_t i = 0; i < column_matrix.rows(); ++i) {
    const Int v = column_matrix(i, 0);
    if (v == 0) continue;
    if (v != 1 && v != -1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

IntMatrix tri_triangle_form(Int a, Int b, Int c) {
  return IntMatrix{{1, a}, {1, b}, {1, c}, {0, 1}};
}

void require_no_zero_rows(const IntMatrix& m, const char* op) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.is_zero_row(i)) {
      throw PreconditionError(std::string(op) + ": row " + std::to_string(i + 1) +
                              " is a zero row");
    }
  }
}

void require_no_loops(const HeubergerMatrix& m, const char* op) {
  if (sacg::has_loops(m).loops) {
    throw PreconditionError(std::string(op) + ": graph has loops");
  }
}

}  // namespace

ChromaticResult tomato_cage(const HeubergerMatrix& hm) {
  const IntMatrix& m = hm.matrix();
  if (m.cols() != 1) {
    throw ShapeError("tomato_cage: expected one column, got " + std::to_string(m.cols()));
  }
  if (is_plus_minus_unit(m)) {
    std::size_t j = 0;
    while (m(j, 0) == 0) ++j;
    return ChromaticResult::loops({{m(j, 0)}, j + 1}, m);
  }
  const Int s = sacg::column_sums(m)[0];
  return ChromaticResult::chromatic(s % 2 == 0 ? 2 : 3, sacg::TomatoCage{s}, m);
}

Reduced1xr reduce_1xr(const HeubergerMatrix& hm) {
  const IntMatrix& m = hm.matrix();
  if (m.rows() != 1) throw ShapeError("reduce_1xr: expected a single row");
  const intlat::HnfResult hnf = intlat::column_hnf(m);
  const Int g = m.cols() == 0 ? 0 : hnf.h(0, 0);
  return {HeubergerMatrix(IntMatrix{{g}}), hnf.transform};
}

std::optional<int> three_div_row_bound(const HeubergerMatrix& hm) {
  const IntMatrix& m = hm.matrix();
  if (m.cols() != 2 || (m.rows() != 3 && m.rows() != 4)) {
    throw PreconditionError("three_div_row_bound: expected a 3x2 or 4x2 matrix");
  }
  require_no_zero_rows(m, "three_div_row_bound");
  require_no_loops(hm, "three_div_row_bound");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, 0) % 3 == 0 && m(i, 1) % 3 == 0) return 3;
  }
  return std::nullopt;
}

bool has_tri_triangle_shape(const IntMatrix& m) {
  return m.rows() == 4 && m.cols() == 2 && m(0, 0) == 1 && m(1, 0) == 1 &&
         m(2, 0) == 1 && m(3, 0) == 0;
}

ChromaticResult tri_triangle_direct(const HeubergerMatrix& hm) {
  const IntMatrix& m = hm.matrix();
  if (!has_tri_triangle_shape(m)) {
    throw ShapeError("tri_triangle_direct: expected [[1,a],[1,b],[1,c],[0,d]]");
  }
  require_no_loops(hm, "tri_triangle_direct");
  const Int y42 = m(3, 1);
  const Int sum = checked::add(checked::add(m(0, 1), m(1, 1), "tri_triangle"),
                               m(2, 1), "tri_triangle");
  if ((y42 == 1 || y42 == -1) && sum % 3 == 0) {
    TransformRecord t = TransformRecord::identity(4, 2);
    t.p(3, 3) = y42;
    return ChromaticResult::chromatic(
        4, sacg::TriTriangle{std::move(t), m(0, 1), m(1, 1), m(2, 1)}, m);
  }
  return ChromaticResult::chromatic(3, sacg::OtherwiseThree{}, m);
}

std::vector<sacg::TriTriangle> tri_triangle_decompositions(const IntMatrix& m) {
  if (m.rows() != 4 || m.cols() != 2) {
    throw ShapeError("tri_triangle_decompositions: expected a 4x2 matrix");
  }
  constexpr const char* kOp = "classify_4x2";
  std::vector<sacg::TriTriangle> out;
  for (const IntMatrix& p : intlat::signed_permutations(4)) {
    const IntMatrix pm = p * m;
    const Int s = pm(3, 0), t = pm(3, 1);
    // (a) fourth coordinates of the lattice exhaust Z.
    const auto eg = checked::extended_gcd(s, t, kOp);
    if (eg.g != 1) continue;
    // (b) the rank-one sublattice with fourth coordinate 0 is generated by
    // +-(1,1,1,0).
    IntVector kernel_coeffs{t, checked::neg(s, kOp)};
    IntVector w = pm * kernel_coeffs;
    if (w[0] == -1) {
      for (Int& x : kernel_coeffs) x = checked::neg(x, kOp);
      for (Int& x : w) x = checked::neg(x, kOp);
    }
    if (!(w[0] == 1 && w[1] == 1 && w[2] == 1 && w[3] == 0)) continue;
    // (c) any lattice vector with fourth coordinate 1 has 3 | v1+v2+v3.
    const IntVector lift_coeffs{eg.x, eg.y};
    const IntVector v0 = pm * lift_coeffs;
    const Int sum = checked::add(checked::add(v0[0], v0[1], kOp), v0[2], kOp);
    if (checked::floor_mod(sum, 3) != 0) continue;

    IntMatrix u = IntMatrix::from_columns(2, {kernel_coeffs, lift_coeffs});
    TransformRecord tr{p, std::move(u)};
    out.push_back({std::move(tr), v0[0], v0[1], v0[2]});
  }
  return out;
}

ChromaticResult classify_4x2(const HeubergerMatrix& hm) {
  const IntMatrix& m = hm.matrix();
  if (m.rows() != 4 || m.cols() != 2) {
    throw ShapeError("classify_4x2: expected a 4x2 matrix");
  }
  if (intlat::rank(m) != 2) {
    throw PreconditionError("classify_4x2: matrix is not of rank 2");
  }
  require_no_zero_rows(m, "classify_4x2");
  require_no_loops(hm, "classify_4x2");
  if (sacg::is_bipartite(hm)) {
    throw PreconditionError("classify_4x2: graph is bipartite (all column sums even)");
  }
  // First accepting P in enumeration order wins.
  std::vector<sacg::TriTriangle> found = tri_triangle_decompositions(m);
  if (!found.empty()) {
    return ChromaticResult::chromatic(4, std::move(found.front()), m);
  }
  return ChromaticResult::chromatic(3, sacg::OtherwiseThree{}, m);
}

ChromaticResult chromatic_number(const HeubergerMatrix& input,
                                 const ClassifyOptions& options) {
  const HeubergerMatrix x = sacg::drop_zero_columns(input);

  if (x.relations() == 0) {
    // No relations: the grid Z^m, bipartite.
    return ChromaticResult::chromatic(2, sacg::BipartiteEvenSums{}, x.matrix());
  }
  if (auto lc = sacg::has_loops(x); lc.loops) {
    return ChromaticResult::loops(*lc.witness, x.matrix());
  }

  auto via_1xr = [&](const HeubergerMatrix& one_row,
                     std::vector<std::size_t> removed) {
    const Reduced1xr reduced = reduce_1xr(one_row);
    ChromaticResult r = tomato_cage(reduced.matrix);
    r.removed_rows = std::move(removed);
    if (!(reduced.matrix == one_row)) {
      r.notes.push_back("1 x r reduction " + intlat::to_text(one_row.matrix()) + " -> " +
                        intlat::to_text(reduced.matrix.matrix()));
    }
    return r;
  };
  if (x.generators() == 1) return via_1xr(x, {});

  // Full column rank: keep the matrix itself when it already is, so that
  // certificates refer to the caller's presentation where possible.
  const intlat::HnfResult hnf = intlat::column_hnf(x.matrix());
  HeubergerMatrix w = x;
  if (hnf.rank < x.relations()) {
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = hnf.rank; j < x.relations(); ++j) zero_cols.push_back(j);
    w = HeubergerMatrix(hnf.h.without_columns(zero_cols));
  }

  sacg::DroppedRows dropped = sacg::drop_zero_rows(w);
  const HeubergerMatrix& y = dropped.matrix;
  const std::size_t m = y.generators();
  const std::size_t r = y.relations();

  auto finish = [&](ChromaticResult res) {
    res.removed_rows = dropped.removed;
    return res;
  };

  if (m == 1) return via_1xr(y, dropped.removed);
  if (r == 1) return finish(tomato_cage(y));

  if (r == m) {
    oracle::OracleLimits limits;
    limits.max_vertices = options.max_finite_vertices;
    limits.node_budget = options.node_budget;
    const oracle::FiniteGraph g = oracle::finite_group_graph(y, limits);
    const oracle::ExactChromatic chi =
        oracle::exact_chromatic(g, 2 * static_cast<int>(m) + 1, limits.budget());
    if (!chi.chi) {
      throw InternalViolation("finite case: no coloring within the degree bound");
    }
    ChromaticResult res = ChromaticResult::chromatic(
        *chi.chi, sacg::FiniteExact{g.labels(), chi.coloring}, y.matrix());
    res.notes.push_back("finite group of order " + std::to_string(g.size()));
    return finish(std::move(res));
  }

  if (m == 3 && r == 2) {
    const MHNFMatrix canon = canonicalize_mhnf(y);
    ChromaticResult res = classify_mhnf(canon);
    // Re-anchor the certificate on the normalized matrix.
    if (auto* ex = std::get_if<sacg::MHNFException>(&res.certificate)) {
      ex->transform = canon.transform;
    }
    if (res.has_loops()) {
      // Loops were excluded above; mHNF must agree.
      throw InternalViolation("mHNF of a loop-free matrix reports loops: " +
                              intlat::to_text(canon.matrix));
    }
    res.normalized = y.matrix();
    res.notes.push_back("mHNF " + intlat::to_text(canon.matrix));
    return finish(std::move(res));
  }

  if (m == 4 && r == 2) {
    if (sacg::is_bipartite(y)) {
      return finish(ChromaticResult::chromatic(2, sacg::BipartiteEvenSums{}, y.matrix()));
    }
    ChromaticResult res = classify_4x2(y);
    if (options.fast_path_checks) {
      if (three_div_row_bound(y) && res.chi != 3) {
        throw InternalViolation("three-divisible row bound contradicts chi = " +
                                std::to_string(res.chi) + " for " +
                                intlat::to_text(y.matrix()));
      }
      if (has_tri_triangle_shape(y.matrix())) {
        const ChromaticResult direct = tri_triangle_direct(y);
        if (!direct.same_outcome(res)) {
          throw InternalViolation("tri-triangle form disagrees with the 4x2 test for " +
                                  intlat::to_text(y.matrix()));
        }
      }
    }
    return finish(std::move(res));
  }

  throw UnsupportedShape("no decision procedure for a " + std::to_string(m) + "x" +
                         std::to_string(r) +
                         " Heuberger matrix (after normalization); supported: m x 1, "
                         "1 x r, square, 3 x 2, 4 x 2");
}

std::string check_certificate(const ChromaticResult& res) {
  const IntMatrix& n = res.normalized;
  struct Checker {
    const ChromaticResult& res;
    const IntMatrix& n;

    std::string operator()(const sacg::LoopWitness& w) const {
      if (!res.has_loops()) return "loop witness attached to a colorable outcome";
      if (w.coefficients.size() != n.cols() || w.j < 1 || w.j > n.rows()) {
        return "loop witness has the wrong shape";
      }
      IntVector e(n.rows(), 0);
      e[w.j - 1] = 1;
      return n * w.coefficients == e ? "" : "loop witness does not multiply to e_j";
    }
    std::string operator()(const sacg::BipartiteEvenSums&) const {
      if (res.chi != 2) return "even column sums certify chi = 2 only";
      for (Int s : sacg::column_sums(n)) {
        if (s % 2 != 0) return "odd column sum";
      }
      return "";
    }
    std::string operator()(const sacg::TomatoCage& t) const {
      if (n.cols() != 1) return "tomato cage needs a single column";
      if (sacg::column_sums(n)[0] != t.s) return "recorded entry sum is wrong";
      if (is_plus_minus_unit(n)) return "column is +-e_i";
      return res.chi == (t.s % 2 == 0 ? 2 : 3) ? "" : "parity does not match chi";
    }
    std::string operator()(const sacg::MHNFException& e) const {
      if (res.chi != 4) return "exceptional mHNF certifies chi = 4 only";
      if (!e.transform.witnesses(n, e.mhnf)) return "transform does not reach the mHNF";
      if (!is_mhnf(e.mhnf)) return "recorded matrix is not in mHNF";
      const auto again = match_exceptional(e.mhnf);
      if (!again || again->case_id != e.case_id || again->k != e.k ||
          again->a != e.a || again->sign != e.sign) {
        return "mHNF does not re-match the recorded family";
      }
      return "";
    }
    std::string operator()(const sacg::TriTriangle& t) const {
      if (res.chi != 4) return "tri-triangle certifies chi = 4 only";
      if (!t.transform.witnesses(n, tri_triangle_form(t.a, t.b, t.c))) {
        return "P * M * U is not the recorded tri-triangle";
      }
      return checked::floor_mod(t.a + t.b + t.c, 3) == 0 ? "" : "3 does not divide a+b+c";
    }
    std::string operator()(const sacg::OtherwiseThree& o) const {
      if (res.chi != 3) return "fallback certifies chi = 3 only";
      if (!o.mhnf) return "";
      if (!is_mhnf(*o.mhnf)) return "recorded matrix is not in mHNF";
      if (match_exceptional(*o.mhnf)) return "mHNF matches an exceptional family";
      if (sacg::is_bipartite(HeubergerMatrix(*o.mhnf))) return "mHNF is bipartite";
      return "";
    }
    std::string operator()(const sacg::FiniteExact& f) const {
      oracle::FiniteGraph g = oracle::finite_group_graph(HeubergerMatrix(n));
      if (g.labels() != f.labels) return "finite graph labels differ";
      if (!oracle::is_proper_coloring(g, f.coloring)) return "coloring is not proper";
      const int used = f.coloring.empty()
                           ? 0
                           : *std::max_element(f.coloring.begin(), f.coloring.end()) + 1;
      return used <= res.chi ? "" : "coloring uses more than chi colors";
    }
  };
  return std::visit(Checker{res, n}, res.certificate);
}

}  // namespace cayley::classify
