#pragma once

// Ground truth for the classifier. Finite balls of the infinite Cayley graph
// give lower bounds; finite quotients Z^m / (H + N Z^m) give upper bounds,
// since the quotient map is a graph homomorphism. The two directions are
// never mixed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/intlat.hpp"
#include "cayley/sacg.hpp"

namespace cayley::oracle {

using intlat::Int;
using intlat::IntVector;
using intlat::LatticeBasis;
using sacg::HeubergerMatrix;

struct VectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

// Undirected simple graph whose vertices are cosets of a lattice in Z^m,
// labelled by canonical representatives. Self-loops are flags, not edges.
class FiniteGraph {
 public:
  explicit FiniteGraph(LatticeBasis coset_lattice);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adjacency_[v];
  }
  bool self_loop(std::size_t v) const { return self_loop_[v]; }
  bool has_self_loops() const;
  std::size_t edge_count() const;
  const IntVector& label(std::size_t v) const { return labels_[v]; }
  const std::vector<IntVector>& labels() const { return labels_; }
  const LatticeBasis& coset_lattice() const { return lattice_; }

  // Vertex holding the coset of v, if present.
  std::optional<std::size_t> locate(std::span<const Int> v) const;
  // Same, for a label that is already canonical.
  std::optional<std::size_t> find(const IntVector& canonical) const;

  // Label must already be canonical.
  std::size_t add_vertex(IntVector label);
  void add_edge(std::size_t a, std::size_t b);
  void mark_self_loop(std::size_t v) { self_loop_[v] = true; }
  // Sorts and deduplicates adjacency lists.
  void finalize();

  // Induced subgraph on the given vertices (in that order).
  FiniteGraph induced(const std::vector<std::size_t>& vertices) const;

 private:
  LatticeBasis lattice_;
  std::vector<IntVector> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> self_loop_;
  std::unordered_map<IntVector, std::size_t, VectorHash> index_;
};

// Node budget for a single exact search: CAYLEY_ORACLE_BUDGET if set and
// valid, else 10^6.
std::uint64_t default_node_budget();

struct OracleLimits {
  std::size_t max_vertices = 1'000'000;
  std::uint64_t node_budget = 0;  // 0: default_node_budget()
  std::uint64_t budget() const {
    return node_budget ? node_budget : default_node_budget();
  }
};

// Cayley graph of Z^m / (H + N Z^m) with connection set {+-e_i}.
FiniteGraph quotient_graph(const HeubergerMatrix& m, Int modulus,
                           const OracleLimits& limits = {});

// Cayley graph of Z^m / H when H has full rank m (finite group).
FiniteGraph finite_group_graph(const HeubergerMatrix& m,
                               const OracleLimits& limits = {});

struct Ball {
  FiniteGraph graph;
  std::vector<int> distance;  // word distance from the identity
};
// Induced subgraph on all elements within word distance r of the identity.
Ball ball_subgraph(const HeubergerMatrix& m, int radius,
                   const OracleLimits& limits = {});
FiniteGraph ball_prefix(const Ball& ball, int radius);

// --- exact coloring -------------------------------------------------------

enum class SearchStatus { kColorable, kNotColorable, kBudgetExceeded };

struct KColoring {
  SearchStatus status = SearchStatus::kNotColorable;
  std::vector<int> coloring;  // set when kColorable
  std::uint64_t nodes = 0;
};

// Complete backtracking search for a proper k-coloring: saturation ordering,
// a greedy clique pre-colored to break color symmetry, and new colors opened
// in order only.
// `prefix` restricts everything to the induced subgraph on vertices
// [0, prefix), e.g. a ball of smaller radius in BFS order.
KColoring k_colorable(const FiniteGraph& g, int k, std::uint64_t node_budget,
                      std::size_t prefix = SIZE_MAX);

struct ExactChromatic {
  std::optional<int> chi;  // nullopt: above k_max
  std::vector<int> coloring;
  std::uint64_t nodes = 0;
};

// Throws NoProperColoring on self-loops and BudgetExceeded when the node
// budget runs out. `start` is a known lower bound to begin the search at.
ExactChromatic exact_chromatic(const FiniteGraph& g, int k_max,
                               std::uint64_t node_budget = 0, int start = 1,
                               std::size_t prefix = SIZE_MAX);

bool is_proper_coloring(const FiniteGraph& g, std::span<const int> coloring,
                        std::size_t prefix = SIZE_MAX);

// Size of a greedily grown clique through the highest-degree vertices.
std::vector<std::size_t> greedy_clique(const FiniteGraph& g);

// --- bounds and cross-checking --------------------------------------------

struct OracleOptions {
  int r_max = 4;
  Int n_max = 8;
  OracleLimits limits;
};

struct ChiBounds {
  bool loops = false;  // a self-loop sits at the identity
  std::optional<int> lower;
  std::optional<int> lower_radius;  // first radius reaching `lower`
  std::size_t lower_vertices = 0;
  std::vector<int> ball_chi;        // chi(ball(r)) for r = 0.., as computed
  std::optional<int> upper;
  std::optional<Int> upper_modulus;
  std::vector<int> upper_coloring;  // proper coloring of that quotient
  bool partial = false;             // some search hit a cap
  std::vector<std::string> notes;

  bool pinned() const { return lower && upper && *lower == *upper; }
  friend bool operator==(const ChiBounds&, const ChiBounds&) = default;
};

ChiBounds chi_bounds(const HeubergerMatrix& m, const OracleOptions& options = {});

enum class CheckStatus { kConsistent, kPinned, kViolation, kUnsupported };
std::string to_string(CheckStatus s);

struct CrossCheck {
  std::optional<sacg::ChromaticResult> classifier;
  std::string classifier_error;  // set when the classifier threw
  ChiBounds bounds;
  CheckStatus status = CheckStatus::kConsistent;
  std::string detail;
};

// Compare a classifier answer with oracle bounds.
CheckStatus judge(const sacg::ChromaticResult& result, const ChiBounds& bounds,
                  std::string* detail = nullptr);

CrossCheck cross_check(const HeubergerMatrix& m,
                       const OracleOptions& options = {});

}  // namespace cayley::oracle
