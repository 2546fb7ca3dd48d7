#include "cayley_cli/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "cayley/error.hpp"

namespace cayley::cli {

namespace {

using intlat::Int;
using planar::QuadNumber;
using planar::QuadVec;
using planar::Rational;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool looks_like_json(std::string_view text) {
  text = trim(text);
  return !text.empty() && text.front() == '{';
}

Int parse_int(std::string_view token, std::string_view context) {
  Int v = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of 64-bit range in " + std::string(context) + ": '" +
                     std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != end || begin == end) {
    throw ParseError("expected an integer in " + std::string(context) + ", got '" +
                     std::string(token) + "'");
  }
  return v;
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

intlat::IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw ParseError("matrix JSON needs a \"rows\" array");
  }
  std::vector<intlat::IntVector> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    intlat::IntVector r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw ParseError("matrix entries must be integers");
      r.push_back(e.get<Int>());
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ParseError("matrix has no rows");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("ragged matrix rows");
  }
  return intlat::IntMatrix::from_rows(rows);
}

// Recursive descent over one component expression.
class QuadParser {
 public:
  QuadParser(std::string_view text, std::optional<Int>& d)
      : text_(text), d_(d) {}

  QuadNumber parse() {
    QuadNumber out;
    skip();
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      QuadNumber term = parse_term();
      if (sign < 0) term = planar::scale(term, -1);
      out = planar::add(out, term);
      first = false;
      skip();
    }
    if (first) fail("empty component");
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " of '" +
                     std::string(text_) + "'");
  }
  bool accept(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      skip();
      return true;
    }
    return false;
  }
  Int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected a number");
    const Int v = parse_int(text_.substr(start, pos_ - start), "vector component");
    skip();
    return v;
  }
  Rational rational() {
    const Int p = integer();
    if (accept("/")) {
      const Int q = integer();
      if (q == 0) fail("zero denominator");
      return Rational(p, q);
    }
    return Rational(p);
  }
  void sqrt_root() {
    if (!accept("sqrt")) fail("expected sqrt(d)");
    if (!accept("(")) fail("expected '('");
    const Int d = integer();
    if (!accept(")")) fail("expected ')'");
    if (d_ && *d_ != d) {
      fail("sqrt(" + std::to_string(d) + ") conflicts with d = " + std::to_string(*d_));
    }
    d_ = d;
  }
  QuadNumber parse_term() {
    skip();
    if (text_.substr(pos_, 4) == "sqrt") {
      sqrt_root();
      Rational coeff(1);
      if (accept("/")) {
        const Int q = integer();
        if (q == 0) fail("zero denominator");
        coeff = Rational(1, q);
      }
      return {0, coeff};
    }
    const Rational r = rational();
    if (accept("*")) {
      sqrt_root();
      return {0, r};
    }
    return {r, 0};
  }

  std::string_view text_;
  std::optional<Int>& d_;
  std::size_t pos_ = 0;
};

QuadNumber quad_from_json(const nlohmann::json& j, const char* name) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 4)) {
    throw ParseError(std::string("\"") + name + "\" must be [p, q] or [p, q, r, s]");
  }
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("vector entries must be integers");
  }
  auto frac = [](Int p, Int q) {
    if (q == 0) throw ParseError("zero denominator");
    return Rational(p, q);
  };
  QuadNumber out{frac(j[0].get<Int>(), j[1].get<Int>()), 0};
  if (j.size() == 4) out.b = frac(j[2].get<Int>(), j[3].get<Int>());
  return out;
}

std::vector<QuadVec> vectors_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vectors") || !j["vectors"].is_array()) {
    throw ParseError("vector JSON needs a \"vectors\" array");
  }
  Int d = 0;
  if (j.contains("d")) {
    if (!j["d"].is_number_integer()) throw ParseError("\"d\" must be an integer");
    d = j["d"].get<Int>();
  }
  std::vector<QuadVec> out;
  for (const auto& v : j["vectors"]) {
    if (!v.is_object() || !v.contains("x") || !v.contains("y")) {
      throw ParseError("each vector needs \"x\" and \"y\"");
    }
    out.push_back({d, quad_from_json(v["x"], "x"), quad_from_json(v["y"], "y")});
  }
  return out;
}

}  // namespace

intlat::IntMatrix parse_matrix(std::string_view text) {
  if (looks_like_json(text)) return matrix_from_json(parse_json(text));
  std::vector<intlat::IntVector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view row_text = trim(text.substr(start, end - start));
    start = end + 1;
    if (row_text.empty()) {
      if (end >= text.size()) break;
      throw ParseError("empty matrix row");
    }
    intlat::IntVector row;
    std::istringstream is{std::string(row_text)};
    std::string token;
    while (is >> token) row.push_back(parse_int(token, "matrix"));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row " + std::to_string(rows.size() + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  return intlat::IntMatrix::from_rows(rows);
}

std::vector<planar::QuadVec> parse_vectors(std::string_view text) {
  if (looks_like_json(text)) return vectors_from_json(parse_json(text));
  std::optional<Int> d;
  std::vector<std::pair<QuadNumber, QuadNumber>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (body.substr(0, 1) == "d" && trim(body.substr(1)).substr(0, 1) == "=") {
      const Int value = parse_int(trim(trim(body.substr(1)).substr(1)), where);
      if (d && *d != value) throw ParseError(where + ": d redefined");
      d = value;
      continue;
    }
    const auto sep = body.find_first_of(";,");
    if (sep == std::string_view::npos) {
      throw ParseError(where + ": expected 'x = ...; y = ...'");
    }
    auto component = [&](std::string_view part, char name) {
      part = trim(part);
      if (part.empty() || part.front() != name) {
        throw ParseError(where + ": expected '" + std::string(1, name) + " = ...'");
      }
      part = trim(part.substr(1));
      if (part.empty() || part.front() != '=') {
        throw ParseError(where + ": expected '=' after " + std::string(1, name));
      }
      return QuadParser(part.substr(1), d).parse();
    };
    const QuadNumber x = component(body.substr(0, sep), 'x');
    const QuadNumber y = component(body.substr(sep + 1), 'y');
    pairs.emplace_back(x, y);
  }
  if (pairs.empty()) throw ParseError("no vectors found");
  std::vector<QuadVec> out;
  for (auto& [x, y] : pairs) out.push_back({d.value_or(0), x, y});
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace cayley::cli
