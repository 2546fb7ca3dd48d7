#include "cayley/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "cayley/checked.hpp"
#include "cayley/classify.hpp"

namespace cayley::oracle {

std::size_t VectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

FiniteGraph::FiniteGraph(LatticeBasis coset_lattice)
    : lattice_(std::move(coset_lattice)) {}

bool FiniteGraph::has_self_loops() const {
  return std::any_of(self_loop_.begin(), self_loop_.end(), [](bool b) { return b; });
}

std::size_t FiniteGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

std::optional<std::size_t> FiniteGraph::locate(std::span<const Int> v) const {
  return find(lattice_.reduce(v));
}

std::optional<std::size_t> FiniteGraph::find(const IntVector& canonical) const {
  auto it = index_.find(canonical);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGraph::add_vertex(IntVector label) {
  const std::size_t id = labels_.size();
  index_.emplace(label, id);
  labels_.push_back(std::move(label));
  adjacency_.emplace_back().reserve(2 * lattice_.ambient_dim());
  self_loop_.push_back(false);
  return id;
}

void FiniteGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) {
    self_loop_[a] = true;
    return;
  }
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

void FiniteGraph::finalize() {
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

FiniteGraph FiniteGraph::induced(const std::vector<std::size_t>& vertices) const {
  FiniteGraph out(lattice_);
  std::vector<std::size_t> remap(size(), SIZE_MAX);
  for (std::size_t v : vertices) {
    remap[v] = out.add_vertex(labels_[v]);
    if (self_loop_[v]) out.mark_self_loop(remap[v]);
  }
  for (std::size_t v : vertices) {
    for (std::size_t w : adjacency_[v]) {
      if (remap[w] != SIZE_MAX && v < w) out.add_edge(remap[v], remap[w]);
    }
  }
  out.finalize();
  return out;
}

std::uint64_t default_node_budget() {
  constexpr std::uint64_t kDefault = 1'000'000;
  const char* env = std::getenv("CAYLEY_ORACLE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return v;
}

namespace {

IntVector step(const IntVector& v, std::size_t i, Int delta) {
  IntVector w = v;
  w[i] = checked::add(w[i], delta, "oracle step");
  return w;
}

// All cosets of a full-rank lattice, connected by +-e_i.
FiniteGraph enumerate_full_rank(LatticeBasis lattice, const OracleLimits& limits) {
  const std::size_t m = lattice.ambient_dim();
  const std::optional<Int> order = lattice.index();
  if (!order) throw PreconditionError("lattice is not of full rank");
  if (static_cast<std::uint64_t>(*order) > limits.max_vertices) {
    throw BudgetExceeded("finite graph would have " + std::to_string(*order) +
                         " vertices; cap is " + std::to_string(limits.max_vertices));
  }
  std::vector<Int> radix(m);
  for (std::size_t i = 0; i < m; ++i) radix[i] = lattice.basis()(i, i);

  FiniteGraph g(lattice);
  IntVector label(m, 0);
  for (Int count = 0; count < *order; ++count) {
    g.add_vertex(label);
    for (std::size_t i = m; i-- > 0;) {
      if (++label[i] < radix[i]) break;
      label[i] = 0;
    }
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto w = g.locate(step(g.label(v), i, 1));
      g.add_edge(v, *w);
    }
  }
  g.finalize();
  return g;
}

}  // namespace

FiniteGraph quotient_graph(const HeubergerMatrix& m, Int modulus,
                           const OracleLimits& limits) {
  if (modulus < 1) throw PreconditionError("quotient_graph: modulus must be >= 1");
  const auto& a = m.matrix();
  const std::size_t rows = a.rows();
  intlat::IntMatrix gens(rows, a.cols() + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) gens(i, j) = a(i, j);
    gens(i, a.cols() + i) = modulus;
  }
  return enumerate_full_rank(LatticeBasis::spanned_by(gens), limits);
}

FiniteGraph finite_group_graph(const HeubergerMatrix& m, const OracleLimits& limits) {
  LatticeBasis lattice = LatticeBasis::spanned_by(m.matrix());
  if (lattice.rank() != lattice.ambient_dim()) {
    throw PreconditionError("finite_group_graph: relation lattice has rank " +
                            std::to_string(lattice.rank()) + " < " +
                            std::to_string(lattice.ambient_dim()));
  }
  return enumerate_full_rank(std::move(lattice), limits);
}

Ball ball_subgraph(const HeubergerMatrix& m, int radius, const OracleLimits& limits) {
  if (radius < 0) throw PreconditionError("ball_subgraph: radius must be >= 0");
  const std::size_t dim = m.generators();
  Ball ball{FiniteGraph(LatticeBasis::spanned_by(m.matrix())), {}};
  FiniteGraph& g = ball.graph;

  g.add_vertex(IntVector(dim, 0));
  ball.distance.push_back(0);
  IntVector next(dim);
  for (std::size_t head = 0; head < g.size(); ++head) {
    const bool frontier = ball.distance[head] >= radius;
    for (std::size_t i = 0; i < dim; ++i) {
      for (Int delta : {Int{1}, Int{-1}}) {
        next = g.label(head);
        next[i] = checked::add(next[i], delta, "oracle step");
        IntVector w = g.coset_lattice().reduce(next);
        if (auto known = g.find(w)) {
          g.add_edge(head, *known);
          continue;
        }
        if (frontier) continue;
        if (g.size() >= limits.max_vertices) {
          throw BudgetExceeded("ball_subgraph: more than " +
                               std::to_string(limits.max_vertices) + " vertices");
        }
        const std::size_t id = g.add_vertex(std::move(w));
        ball.distance.push_back(ball.distance[head] + 1);
        g.add_edge(head, id);
      }
    }
  }
  g.finalize();
  return ball;
}

FiniteGraph ball_prefix(const Ball& ball, int radius) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < ball.graph.size(); ++v) {
    // BFS order: distances are nondecreasing.
    if (ball.distance[v] > radius) break;
    keep.push_back(v);
  }
  return ball.graph.induced(keep);
}

ChiBounds chi_bounds(const HeubergerMatrix& m, const OracleOptions& options) {
  ChiBounds out;
  const std::uint64_t budget = options.limits.budget();
  const int k_max = 2 * static_cast<int>(m.generators()) + 1;

  // Lower bounds from balls.
  Ball ball{FiniteGraph(LatticeBasis(m.generators())), {}};
  try {
    ball = ball_subgraph(m, options.r_max, options.limits);
  } catch (const BudgetExceeded& e) {
    out.partial = true;
    out.notes.push_back(std::string("ball: ") + e.what());
  }
  if (ball.graph.size() > 0 && ball.graph.self_loop(0)) {
    out.loops = true;
    return out;
  }
  auto within = [&](int r) {
    return static_cast<std::size_t>(std::count_if(
        ball.distance.begin(), ball.distance.end(), [r](int d) { return d <= r; }));
  };
  int best_lower = 0;
  for (int r = 0; r <= options.r_max && ball.graph.size() > 0; ++r) {
    const std::size_t size = within(r);
    try {
      const ExactChromatic chi = exact_chromatic(ball.graph, k_max, budget, best_lower, size);
      if (!chi.chi) break;
      out.ball_chi.push_back(*chi.chi);
      if (*chi.chi > best_lower) {
        best_lower = *chi.chi;
        out.lower_radius = r;
        out.lower_vertices = size;
      }
    } catch (const BudgetExceeded& e) {
      out.partial = true;
      out.notes.push_back("ball(" + std::to_string(r) + "): " + e.what());
      break;
    }
    // The ball stopped growing: the whole (finite) group is covered.
    if (r < options.r_max && within(r + 1) == size) break;
  }
  if (best_lower > 0) out.lower = best_lower;
  if (out.lower_radius) {
    out.notes.push_back("lower bound " + std::to_string(best_lower) +
                        " first reached at radius " +
                        std::to_string(*out.lower_radius));
  }

  // Upper bounds from quotient colorings. A cheap pass looks for a
  // coloring with exactly `lower` colors first; the exhaustive pass only
  // runs when that does not pin the bounds.
  std::vector<std::optional<FiniteGraph>> quotients(
      static_cast<std::size_t>(std::max<Int>(options.n_max + 1, 0)));
  auto quotient = [&](Int n) -> const FiniteGraph* {
    auto& slot = quotients[static_cast<std::size_t>(n)];
    if (!slot) {
      try {
        slot = quotient_graph(m, n, options.limits);
      } catch (const BudgetExceeded& e) {
        out.partial = true;
        out.notes.push_back("quotient N=" + std::to_string(n) + ": " + e.what());
        return nullptr;
      }
    }
    return slot->has_self_loops() ? nullptr : &*slot;
  };
  auto accept = [&](const FiniteGraph& q, Int n, int k, KColoring& attempt) {
    if (!is_proper_coloring(q, attempt.coloring)) {
      throw InternalViolation("chi_bounds: improper quotient coloring");
    }
    out.upper = k;
    out.upper_modulus = n;
    out.upper_coloring = std::move(attempt.coloring);
  };

  if (best_lower > 0) {
    constexpr std::uint64_t kQuickBudget = 20'000;
    for (Int n = 2; n <= options.n_max && !out.upper; ++n) {
      const FiniteGraph* q = quotient(n);
      if (!q) continue;
      KColoring attempt = k_colorable(*q, best_lower, std::min(budget, kQuickBudget));
      if (attempt.status == SearchStatus::kColorable) accept(*q, n, best_lower, attempt);
    }
    if (out.pinned()) return out;
  }
  for (Int n = 2; n <= options.n_max; ++n) {
    const FiniteGraph* q = quotient(n);
    if (!q) continue;
    const int first = std::max(best_lower, 1);
    const int last = out.upper ? *out.upper - 1 : k_max;
    for (int k = first; k <= last; ++k) {
      KColoring attempt = k_colorable(*q, k, budget);
      if (attempt.status == SearchStatus::kBudgetExceeded) {
        out.partial = true;
        out.notes.push_back("quotient N=" + std::to_string(n) + ", k=" +
                            std::to_string(k) + ": node budget exhausted");
        break;
      }
      if (attempt.status == SearchStatus::kColorable) {
        accept(*q, n, k, attempt);
        break;
      }
    }
    if (out.pinned()) break;
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kConsistent: return "CONSISTENT";
    case CheckStatus::kPinned: return "PINNED";
    case CheckStatus::kViolation: return "VIOLATION";
    case CheckStatus::kUnsupported: return "UNSUPPORTED";
  }
  return "UNKNOWN";
}

CheckStatus judge(const sacg::ChromaticResult& result, const ChiBounds& bounds,
                  std::string* detail) {
  auto say = [&](std::string text) {
    if (detail) *detail = std::move(text);
  };
  if (result.has_loops()) {
    if (bounds.loops) {
      say("loops confirmed at the identity");
      return CheckStatus::kPinned;
    }
    say("classifier reports loops but the identity has no self-loop");
    return CheckStatus::kViolation;
  }
  if (bounds.loops) {
    say("oracle found a self-loop but the classifier reports chi = " +
        std::to_string(result.chi));
    return CheckStatus::kViolation;
  }
  if (bounds.lower && *bounds.lower > result.chi) {
    say("ball lower bound " + std::to_string(*bounds.lower) + " exceeds chi = " +
        std::to_string(result.chi));
    return CheckStatus::kViolation;
  }
  if (bounds.upper && *bounds.upper < result.chi) {
    say("quotient upper bound " + std::to_string(*bounds.upper) +
        " is below chi = " + std::to_string(result.chi));
    return CheckStatus::kViolation;
  }
  if (bounds.lower && bounds.upper && *bounds.lower == result.chi &&
      *bounds.upper == result.chi) {
    say("lower = upper = " + std::to_string(result.chi));
    return CheckStatus::kPinned;
  }
  say("chi = " + std::to_string(result.chi) + " within oracle bounds");
  return CheckStatus::kConsistent;
}

CrossCheck cross_check(const HeubergerMatrix& m, const OracleOptions& options) {
  CrossCheck out;
  try {
    out.classifier = classify::chromatic_number(m);
  } catch (const UnsupportedShape& e) {
    out.classifier_error = e.what();
  }
  out.bounds = chi_bounds(m, options);
  if (!out.classifier) {
    out.status = CheckStatus::kUnsupported;
    out.detail = out.classifier_error;
    return out;
  }
  out.status = judge(*out.classifier, out.bounds, &out.detail);
  return out;
}

}  // namespace cayley::oracle
