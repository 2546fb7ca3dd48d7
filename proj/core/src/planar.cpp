#include "cayley/planar.hpp"

#include <limits>

#include "cayley/error.hpp"

namespace cayley::planar {

namespace {

using boost::multiprecision::cpp_int;

Int to_int(const cpp_int& v, const char* op) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw OverflowError(std::string(op) + ": cleared coefficient " + v.str() +
                        " exceeds 64 bits");
  }
  return static_cast<Int>(v);
}

cpp_int lcm(const cpp_int& a, const cpp_int& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

std::string rational_text(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

bool plus_minus_equal(const QuadVec& u, const QuadVec& v) {
  const QuadNumber ux = fold(u.x, u.d), uy = fold(u.y, u.d);
  const QuadNumber vx = fold(v.x, v.d), vy = fold(v.y, v.d);
  if (ux == vx && uy == vy) return true;
  return ux == scale(vx, -1) && uy == scale(vy, -1);
}

}  // namespace

bool is_square_free(Int d) {
  if (d < 0) return false;
  for (Int p = 2; p <= d / p; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadNumber add(const QuadNumber& u, const QuadNumber& v) {
  return {u.a + v.a, u.b + v.b};
}

QuadNumber mul(const QuadNumber& u, const QuadNumber& v, Int d) {
  return {u.a * v.a + Rational(d) * u.b * v.b, u.a * v.b + u.b * v.a};
}

QuadNumber scale(const QuadNumber& u, Int k) { return {u.a * k, u.b * k}; }

QuadNumber fold(const QuadNumber& u, Int d) {
  if (d == 0) return {u.a, 0};
  if (d == 1) return {u.a + u.b, 0};
  return u;
}

bool is_zero(const QuadNumber& u, Int d) {
  const QuadNumber f = fold(u, d);
  return f.a == 0 && f.b == 0;
}

bool is_unit(const QuadVec& v) {
  QuadNumber n = add(mul(v.x, v.x, v.d), mul(v.y, v.y, v.d));
  n.a -= 1;
  return is_zero(n, v.d);
}

std::string to_string(const QuadNumber& u, Int d) {
  const QuadNumber f = fold(u, d);
  if (f.b == 0) return rational_text(f.a);
  std::string s = f.a == 0 ? "" : rational_text(f.a) + (f.b > 0 ? " + " : " - ");
  const Rational mag = f.a == 0 ? f.b : abs(f.b);
  s += rational_text(mag) + "*sqrt(" + std::to_string(d) + ")";
  return s;
}

std::string to_string(const QuadVec& v) {
  return "(" + to_string(v.x, v.d) + ", " + to_string(v.y, v.d) + ")";
}

void validate(const std::vector<QuadVec>& vs) {
  if (vs.empty()) throw ValidationError("no vectors given");
  if (vs.size() >= 5) {
    throw UnsupportedShape("chi_max(n) is open for n >= 5; got " +
                           std::to_string(vs.size()) + " vectors");
  }
  const Int d = vs.front().d;
  if (!is_square_free(d)) {
    throw ValidationError("d = " + std::to_string(d) + " is not a square-free integer >= 0");
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].d != d) {
      throw ValidationError("vector " + std::to_string(i + 1) + " uses d = " +
                            std::to_string(vs[i].d) + ", expected " + std::to_string(d));
    }
    if (!is_unit(vs[i])) {
      throw ValidationError("vector " + std::to_string(i + 1) + " " + to_string(vs[i]) +
                            " is not a unit vector");
    }
  }
}

bool is_relation(const std::vector<QuadVec>& vs, const IntVector& a) {
  if (a.size() != vs.size()) return false;
  QuadNumber sx, sy;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    sx = add(sx, scale(vs[i].x, a[i]));
    sy = add(sy, scale(vs[i].y, a[i]));
  }
  const Int d = vs.empty() ? 0 : vs.front().d;
  return is_zero(sx, d) && is_zero(sy, d);
}

sacg::HeubergerMatrix relation_lattice(const std::vector<QuadVec>& vs) {
  validate(vs);
  const Int d = vs.front().d;
  const std::size_t n = vs.size();

  // One equation per rational / sqrt(d) component of each coordinate.
  std::vector<std::vector<Rational>> rows;
  auto push = [&](auto part) {
    std::vector<Rational> row;
    for (const QuadVec& v : vs) row.push_back(part(v));
    rows.push_back(std::move(row));
  };
  push([&](const QuadVec& v) { return fold(v.x, d).a; });
  push([&](const QuadVec& v) { return fold(v.y, d).a; });
  if (d >= 2) {
    push([](const QuadVec& v) { return v.x.b; });
    push([](const QuadVec& v) { return v.y.b; });
  }

  intlat::IntMatrix system(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    cpp_int common = 1;
    for (const Rational& q : rows[i]) common = lcm(common, denominator(q));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational cleared = rows[i][j] * Rational(common);
      system(i, j) = to_int(numerator(cleared), "relation_lattice");
    }
  }
  const intlat::LatticeBasis kernel = intlat::kernel_lattice(system);
  return sacg::HeubergerMatrix(kernel.basis());
}

PlanarResult classify_unit_vectors(const std::vector<QuadVec>& vs,
                                   const classify::ClassifyOptions& options) {
  sacg::HeubergerMatrix h = relation_lattice(vs);
  try {
    sacg::ChromaticResult r = classify::chromatic_number(h, options);
    return {std::move(h), std::move(r), {}, false};
  } catch (const UnsupportedShape&) {
    // Four collinear vectors leave a 4 x 3 lattice. Merging +-duplicates
    // leaves the generating set, and so the graph, unchanged.
  }
  std::vector<std::size_t> kept;
  std::vector<QuadVec> reduced;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool dup = false;
    for (const QuadVec& k : reduced) dup = dup || plus_minus_equal(vs[i], k);
    if (!dup) {
      kept.push_back(i);
      reduced.push_back(vs[i]);
    }
  }
  if (reduced.size() == vs.size()) {
    throw UnsupportedShape("relation lattice " + intlat::to_text(h.matrix()) +
                           " has no decision procedure");
  }
  PlanarResult out = classify_unit_vectors(reduced, options);
  out.result.notes.push_back("merged +- duplicate vectors; " +
                             std::to_string(reduced.size()) + " of " +
                             std::to_string(vs.size()) + " kept");
  out.relations = std::move(h);
  std::vector<std::size_t> original;
  for (std::size_t i : out.deduplicated ? out.kept : std::vector<std::size_t>{}) {
    original.push_back(kept[i]);
  }
  out.kept = out.deduplicated ? std::move(original) : std::move(kept);
  out.deduplicated = true;
  return out;
}

sacg::ChromaticResult chi_of_unit_vectors(const std::vector<QuadVec>& vs,
                                          const classify::ClassifyOptions& options) {
  return classify_unit_vectors(vs, options).result;
}

}  // namespace cayley::planar
