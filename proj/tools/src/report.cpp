#include "cayley_cli/report.hpp"

#include <sstream>

#include "cayley/error.hpp"

namespace cayley::cli {

namespace {

using nlohmann::json;
using intlat::Int;
using intlat::IntMatrix;
using intlat::IntVector;
using intlat::TransformRecord;

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("report is missing \"") + name + "\"");
  }
  return j.at(name);
}

template <typename T>
T get(const json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad \"") + name + "\": " + e.what());
  }
}

template <typename T>
std::optional<T> get_optional(const json& j, const char* name) {
  if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
  return get<T>(j, name);
}

json transform_to_json(const TransformRecord& t) {
  return {{"p", matrix_to_json(t.p)}, {"u", matrix_to_json(t.u)}};
}

TransformRecord transform_from_json(const json& j) {
  return {matrix_from_json(field(j, "p")), matrix_from_json(field(j, "u"))};
}

}  // namespace

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return {{"rows", rows}, {"cols", m.cols()}};
}

IntMatrix matrix_from_json(const json& j) {
  const auto rows = get<std::vector<IntVector>>(j, "rows");
  const auto cols = get<std::size_t>(j, "cols");
  for (const auto& r : rows) {
    if (r.size() != cols) throw ParseError("matrix row length does not match \"cols\"");
  }
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
  }
  return m;
}

json to_json(const sacg::Certificate& c) {
  struct Visitor {
    json operator()(const sacg::LoopWitness& w) const {
      return {{"coefficients", w.coefficients}, {"j", w.j}};
    }
    json operator()(const sacg::BipartiteEvenSums&) const { return json::object(); }
    json operator()(const sacg::TomatoCage& t) const { return {{"s", t.s}}; }
    json operator()(const sacg::MHNFException& e) const {
      return {{"case", e.case_id}, {"k", e.k},         {"a", e.a},
              {"sign", e.sign},    {"mhnf", matrix_to_json(e.mhnf)},
              {"transform", transform_to_json(e.transform)}};
    }
    json operator()(const sacg::TriTriangle& t) const {
      return {{"a", t.a}, {"b", t.b}, {"c", t.c},
              {"transform", transform_to_json(t.transform)}};
    }
    json operator()(const sacg::OtherwiseThree& o) const {
      return {{"mhnf", o.mhnf ? matrix_to_json(*o.mhnf) : json(nullptr)}};
    }
    json operator()(const sacg::FiniteExact& f) const {
      return {{"labels", f.labels}, {"coloring", f.coloring}};
    }
  };
  json out = std::visit(Visitor{}, c);
  out["type"] = sacg::certificate_name(c);
  return out;
}

sacg::Certificate certificate_from_json(const json& j) {
  const auto type = get<std::string>(j, "type");
  if (type == "LoopWitness") {
    return sacg::LoopWitness{get<IntVector>(j, "coefficients"), get<std::size_t>(j, "j")};
  }
  if (type == "BipartiteEvenSums") return sacg::BipartiteEvenSums{};
  if (type == "TomatoCage") return sacg::TomatoCage{get<Int>(j, "s")};
  if (type == "MHNFException") {
    sacg::MHNFException e;
    e.case_id = get<int>(j, "case");
    e.k = get<Int>(j, "k");
    e.a = get<Int>(j, "a");
    e.sign = get<int>(j, "sign");
    e.mhnf = matrix_from_json(field(j, "mhnf"));
    e.transform = transform_from_json(field(j, "transform"));
    return e;
  }
  if (type == "TriTriangle") {
    return sacg::TriTriangle{transform_from_json(field(j, "transform")), get<Int>(j, "a"),
                             get<Int>(j, "b"), get<Int>(j, "c")};
  }
  if (type == "OtherwiseThree") {
    sacg::OtherwiseThree o;
    if (j.contains("mhnf") && !j["mhnf"].is_null()) o.mhnf = matrix_from_json(j["mhnf"]);
    return o;
  }
  if (type == "FiniteExact") {
    return sacg::FiniteExact{get<std::vector<IntVector>>(j, "labels"),
                             get<std::vector<int>>(j, "coloring")};
  }
  throw ParseError("unknown certificate type '" + type + "'");
}

json to_json(const sacg::ChromaticResult& r) {
  json out = {{"outcome", r.has_loops() ? "HasLoops" : "Chi"},
              {"certificate", to_json(r.certificate)},
              {"normalized", matrix_to_json(r.normalized)},
              {"removed_rows", r.removed_rows},
              {"notes", r.notes}};
  out["chi"] = r.has_loops() ? json(nullptr) : json(r.chi);
  return out;
}

sacg::ChromaticResult result_from_json(const json& j) {
  sacg::ChromaticResult r;
  const auto outcome = get<std::string>(j, "outcome");
  if (outcome == "HasLoops") {
    r.outcome = sacg::Outcome::kHasLoops;
  } else if (outcome == "Chi") {
    r.outcome = sacg::Outcome::kChi;
    r.chi = get<int>(j, "chi");
  } else {
    throw ParseError("unknown outcome '" + outcome + "'");
  }
  r.certificate = certificate_from_json(field(j, "certificate"));
  r.normalized = matrix_from_json(field(j, "normalized"));
  r.removed_rows = get<std::vector<std::size_t>>(j, "removed_rows");
  r.notes = get<std::vector<std::string>>(j, "notes");
  return r;
}

json to_json(const oracle::ChiBounds& b) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  return {{"loops", b.loops},
          {"lower", opt(b.lower)},
          {"lower_radius", opt(b.lower_radius)},
          {"lower_vertices", b.lower_vertices},
          {"ball_chi", b.ball_chi},
          {"upper", opt(b.upper)},
          {"upper_modulus", opt(b.upper_modulus)},
          {"upper_coloring", b.upper_coloring},
          {"partial", b.partial},
          {"notes", b.notes}};
}

oracle::ChiBounds bounds_from_json(const json& j) {
  oracle::ChiBounds b;
  b.loops = get<bool>(j, "loops");
  b.lower = get_optional<int>(j, "lower");
  b.lower_radius = get_optional<int>(j, "lower_radius");
  b.lower_vertices = get<std::size_t>(j, "lower_vertices");
  b.ball_chi = get<std::vector<int>>(j, "ball_chi");
  b.upper = get_optional<int>(j, "upper");
  b.upper_modulus = get_optional<Int>(j, "upper_modulus");
  b.upper_coloring = get<std::vector<int>>(j, "upper_coloring");
  b.partial = get<bool>(j, "partial");
  b.notes = get<std::vector<std::string>>(j, "notes");
  return b;
}

json to_json(const Report& r) {
  json out = {{"command", r.command},
              {"input", r.input},
              {"detail", r.detail},
              {"exit_code", r.exit_code}};
  out["relations"] = r.relations ? matrix_to_json(*r.relations) : json(nullptr);
  out["result"] = r.result ? to_json(*r.result) : json(nullptr);
  out["normalized"] = r.result ? matrix_to_json(r.result->normalized) : json(nullptr);
  out["oracle"] = r.bounds ? to_json(*r.bounds) : json(nullptr);
  out["status"] = r.status ? json(*r.status) : json(nullptr);
  out["error"] = r.error ? json{{"kind", r.error->kind}, {"message", r.error->message}}
                         : json(nullptr);
  if (!r.timings.empty()) out["timings"] = r.timings;
  return out;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = get<std::string>(j, "command");
  r.input = field(j, "input");
  r.detail = get<std::string>(j, "detail");
  r.exit_code = get<int>(j, "exit_code");
  if (!j.value("relations", json()).is_null()) r.relations = matrix_from_json(j["relations"]);
  if (!j.value("result", json()).is_null()) r.result = result_from_json(j["result"]);
  if (!j.value("oracle", json()).is_null()) r.bounds = bounds_from_json(j["oracle"]);
  r.status = get_optional<std::string>(j, "status");
  if (!j.value("error", json()).is_null()) {
    r.error = ErrorInfo{get<std::string>(j["error"], "kind"),
                        get<std::string>(j["error"], "message")};
  }
  if (j.contains("timings")) r.timings = get<std::map<std::string, double>>(j, "timings");
  return r;
}

std::string emit(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  if (r.input.contains("matrix")) os << "input:      " << r.input["matrix"].get<std::string>() << "\n";
  if (r.input.contains("vectors")) {
    for (const auto& v : r.input["vectors"]) os << "vector:     " << v.get<std::string>() << "\n";
  }
  if (r.relations) os << "relations:  " << intlat::to_text(*r.relations) << "\n";
  if (r.result) {
    os << "normalized: " << intlat::to_text(r.result->normalized) << "\n";
    if (r.result->has_loops()) {
      os << "result:     has loops (no proper coloring)\n";
    } else {
      os << "result:     chi = " << r.result->chi << "\n";
    }
    os << "certificate: " << sacg::certificate_name(r.result->certificate) << "\n";
    for (const auto& n : r.result->notes) os << "note:       " << n << "\n";
  }
  if (r.bounds) {
    const auto& b = *r.bounds;
    auto show = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
    os << "oracle:     lower " << show(b.lower) << " (radius " << show(b.lower_radius)
       << "), upper " << show(b.upper) << " (N = " << show(b.upper_modulus) << ")"
       << (b.loops ? ", self-loop" : "") << (b.partial ? ", partial" : "") << "\n";
  }
  if (r.status) os << "status:     " << *r.status << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
  if (r.error) os << "error:      " << r.error->kind << ": " << r.error->message << "\n";
  for (const auto& [k, v] : r.timings) os << "time " << k << ": " << v << " s\n";
  return os.str();
}

}  // namespace cayley::cli
