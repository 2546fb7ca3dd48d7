#pragma once

// Text and JSON input formats for matrices and plane vectors.

#include <string>
#include <string_view>
#include <vector>

#include "cayley/intlat.hpp"
#include "cayley/planar.hpp"

namespace cayley::cli {

// "9 21; 1 4", or JSON {"rows": [[9, 21], [1, 4]]}. Throws ParseError.
intlat::IntMatrix parse_matrix(std::string_view text);

// "x = p/q + r/s*sqrt(d)" style input, one vector per line with the two
// components separated by ';' or ','; an optional "d = k" line; '#' starts
// a comment. Or JSON {"d": k, "vectors": [{"x": [p,q,r,s], "y": [...]}]}.
// Throws ParseError; unit norm is not checked here.
std::vector<planar::QuadVec> parse_vectors(std::string_view text);

// Reads a whole file; "-" is stdin. Throws ParseError when unreadable.
std::string read_input(const std::string& path);

}  // namespace cayley::cli
