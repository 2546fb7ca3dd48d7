#pragma once

// Random exact unit vectors for planar tests.

#include <random>
#include <vector>

#include "cayley/planar.hpp"

namespace unit_vectors {

using cayley::planar::QuadNumber;
using cayley::planar::QuadVec;
using cayley::planar::Rational;
using Int = cayley::planar::Int;

inline QuadNumber rat(Int p, Int q = 1) { return {Rational(p, q), 0}; }
inline QuadNumber surd(Int p, Int q = 1) { return {0, Rational(p, q)}; }

// (x1 + i y1)(x2 + i y2); keeps coordinates in Q(sqrt d).
inline QuadVec rotate(const QuadVec& u, const QuadVec& v) {
  using cayley::planar::add;
  using cayley::planar::mul;
  using cayley::planar::scale;
  const Int d = u.d ? u.d : v.d;
  return {d, add(mul(u.x, v.x, d), scale(mul(u.y, v.y, d), -1)),
          add(mul(u.x, v.y, d), mul(u.y, v.x, d))};
}

// ((a^2 - b^2) / n, 2ab / n), n = a^2 + b^2, with random signs and swap.
inline QuadVec pythagorean(std::mt19937_64& rng, Int d = 0) {
  std::uniform_int_distribution<Int> e(0, 6);
  Int a = 0, b = 0;
  while (a == 0 && b == 0) {
    a = e(rng);
    b = e(rng);
  }
  const Int n = a * a + b * b;
  QuadNumber x = rat(a * a - b * b, n), y = rat(2 * a * b, n);
  if (rng() % 2) std::swap(x, y);
  if (rng() % 2) x = cayley::planar::scale(x, -1);
  if (rng() % 2) y = cayley::planar::scale(y, -1);
  return {d, x, y};
}

// A unit vector with a genuine sqrt(d) part, for d in {2, 3, 5}.
inline QuadVec base_unit(Int d) {
  switch (d) {
    case 2: return {2, surd(1, 2), surd(1, 2)};
    case 3: return {3, rat(1, 2), surd(1, 2)};
    default: return {5, surd(1, 5), surd(2, 5)};
  }
}

// Pythagorean vector rotated by base_unit(d)^k, k in [0, 3].
inline QuadVec quadratic(std::mt19937_64& rng, Int d) {
  QuadVec v = pythagorean(rng, d);
  const int k = static_cast<int>(rng() % 4);
  for (int i = 0; i < k; ++i) v = rotate(v, base_unit(d));
  return v;
}

inline std::vector<QuadVec> triangular_triple() {
  return {{3, rat(1), rat(0)}, {3, rat(-1, 2), surd(1, 2)}, {3, rat(-1, 2), surd(-1, 2)}};
}

}  // namespace unit_vectors
