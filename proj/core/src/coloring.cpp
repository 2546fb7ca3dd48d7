#include <algorithm>
#include <queue>
#include <tuple>

#include "cayley/oracle.hpp"

namespace cayley::oracle {

namespace {

// Induced subgraph on vertices [0, n) without copying: adjacency lists are
// sorted, so the neighbors below n form a prefix of each list.
class View {
 public:
  View(const FiniteGraph& g, std::size_t n) : g_(g), n_(std::min(n, g.size())), deg_(n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      const auto& nb = g.neighbors(v);
      deg_[v] = static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), n_) - nb.begin());
    }
  }
  std::size_t size() const { return n_; }
  std::span<const std::size_t> neighbors(std::size_t v) const {
    return {g_.neighbors(v).data(), deg_[v]};
  }
  bool self_loop(std::size_t v) const { return g_.self_loop(v); }
  bool adjacent(std::size_t a, std::size_t b) const {
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

 private:
  const FiniteGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> deg_;
};

std::vector<std::size_t> clique_in(const View& g) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.neighbors(a).size() > g.neighbors(b).size();
  });

  auto adjacent = [&](std::size_t a, std::size_t b) { return g.adjacent(a, b); };

  // Grow a clique from each of the first few candidates; keep the largest.
  std::vector<std::size_t> best;
  const std::size_t seeds = std::min<std::size_t>(n, 64);
  for (std::size_t s = 0; s < seeds; ++s) {
    std::vector<std::size_t> clique{order[s]};
    const auto first = g.neighbors(order[s]);
    std::vector<std::size_t> candidates(first.begin(), first.end());
    while (!candidates.empty()) {
      // Pick the candidate adjacent to the most other candidates.
      std::size_t pick = candidates.front();
      std::size_t pick_score = 0;
      for (std::size_t c : candidates) {
        std::size_t score = 0;
        for (std::size_t d : candidates) {
          if (c != d && adjacent(c, d)) ++score;
        }
        if (score > pick_score || (score == pick_score && c < pick)) {
          pick = c;
          pick_score = score;
        }
      }
      clique.push_back(pick);
      std::vector<std::size_t> next;
      for (std::size_t c : candidates) {
        if (c != pick && adjacent(c, pick)) next.push_back(c);
      }
      candidates = std::move(next);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

}  // namespace

std::vector<std::size_t> greedy_clique(const FiniteGraph& g) {
  return clique_in(View(g, g.size()));
}

bool is_proper_coloring(const FiniteGraph& g, std::span<const int> coloring,
                        std::size_t prefix) {
  const std::size_t n = std::min(prefix, g.size());
  if (coloring.size() != n) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.self_loop(v) || coloring[v] < 0) return false;
    for (std::size_t w : g.neighbors(v)) {
      if (w < n && coloring[v] == coloring[w]) return false;
    }
  }
  return true;
}

namespace {

class Search {
 public:
  Search(const View& g, int k)
      : g_(g),
        k_(k),
        n_(g.size()),
        color_(n_, -1),
        conflicts_(n_ * static_cast<std::size_t>(k), 0),
        saturation_(n_, 0),
        used_(static_cast<std::size_t>(k), 0) {
    for (std::size_t v = 0; v < n_; ++v) queue_.push(key(v));
  }

  KColoring run(std::uint64_t budget) {
    KColoring out;
    const std::vector<std::size_t> clique = clique_in(g_);
    if (clique.size() > static_cast<std::size_t>(k_)) return out;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      assign(clique[i], static_cast<int>(i));
    }

    struct Frame {
      std::size_t vertex;
      int next_color;
    };
    std::vector<Frame> frames;
    while (colored_ < n_) {
      frames.push_back({pick(), 0});
      bool placed = false;
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (color_[f.vertex] >= 0) unassign(f.vertex);
        const int limit = std::min(k_, highest_used() + 2);
        int c = f.next_color;
        const std::size_t base = f.vertex * static_cast<std::size_t>(k_);
        while (c < limit && conflicts_[base + static_cast<std::size_t>(c)] != 0) ++c;
        if (c < limit) {
          assign(f.vertex, c);
          f.next_color = c + 1;
          if (++out.nodes > budget) {
            out.status = SearchStatus::kBudgetExceeded;
            return out;
          }
          placed = true;
          break;
        }
        frames.pop_back();
      }
      if (!placed) {
        out.status = SearchStatus::kNotColorable;
        return out;
      }
    }
    out.status = SearchStatus::kColorable;
    out.coloring = color_;
    return out;
  }

 private:
  // Max-heap on (saturation, degree, -index); stale entries are skipped.
  using Key = std::tuple<int, int, std::ptrdiff_t>;

  Key key(std::size_t v) const {
    return {saturation_[v], static_cast<int>(g_.neighbors(v).size()),
            -static_cast<std::ptrdiff_t>(v)};
  }

  std::size_t pick() {
    for (;;) {
      const Key top = queue_.top();
      const auto v = static_cast<std::size_t>(-std::get<2>(top));
      if (color_[v] < 0 && std::get<0>(top) == saturation_[v]) return v;
      queue_.pop();
    }
  }

  int highest_used() const {
    for (int c = k_ - 1; c >= 0; --c) {
      if (used_[static_cast<std::size_t>(c)] > 0) return c;
    }
    return -1;
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    ++used_[static_cast<std::size_t>(c)];
    ++colored_;
    for (std::size_t w : g_.neighbors(v)) {
      auto& slot = conflicts_[w * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
      if (slot++ == 0) bump(w, +1);
    }
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    for (std::size_t w : g_.neighbors(v)) {
      auto& slot = conflicts_[w * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
      if (--slot == 0) bump(w, -1);
    }
    color_[v] = -1;
    --used_[static_cast<std::size_t>(c)];
    --colored_;
    queue_.push(key(v));
  }

  void bump(std::size_t w, int delta) {
    saturation_[w] += delta;
    if (color_[w] < 0) queue_.push(key(w));
  }

  const View& g_;
  int k_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<int> conflicts_;  // n x k: colored neighbors per color
  std::vector<int> saturation_;
  std::vector<int> used_;
  std::size_t colored_ = 0;
  std::priority_queue<Key> queue_;
};

bool has_loop_in(const View& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.self_loop(i)) return true;
  }
  return false;
}

KColoring colorable_view(const View& view, int k, std::uint64_t node_budget) {
  if (has_loop_in(view)) {
    throw NoProperColoring("graph has a self-loop; no proper coloring exists");
  }
  KColoring out;
  if (view.size() == 0) {
    out.status = SearchStatus::kColorable;
    return out;
  }
  if (k <= 0) return out;
  return Search(view, k).run(node_budget);
}

}  // namespace

KColoring k_colorable(const FiniteGraph& g, int k, std::uint64_t node_budget,
                      std::size_t prefix) {
  return colorable_view(View(g, prefix), k, node_budget);
}

ExactChromatic exact_chromatic(const FiniteGraph& g, int k_max,
                               std::uint64_t node_budget, int start, std::size_t prefix) {
  const View view(g, prefix);
  if (has_loop_in(view)) {
    throw NoProperColoring("graph has a self-loop; no proper coloring exists");
  }
  const std::uint64_t budget = node_budget ? node_budget : default_node_budget();
  ExactChromatic out;
  if (view.size() == 0) {
    out.chi = 0;
    return out;
  }
  bool has_edge = false;
  for (std::size_t v = 0; v < view.size() && !has_edge; ++v) has_edge = !view.neighbors(v).empty();
  int k = std::max(start, 1);
  if (has_edge) k = std::max(k, 2);
  k = std::max(k, static_cast<int>(clique_in(view).size()));
  std::uint64_t spent = 0;
  for (; k <= k_max; ++k) {
    KColoring attempt = colorable_view(view, k, budget - spent);
    spent += attempt.nodes;
    out.nodes = spent;
    if (attempt.status == SearchStatus::kBudgetExceeded) {
      throw BudgetExceeded("exact_chromatic: node budget of " +
                           std::to_string(budget) + " exhausted at k = " +
                           std::to_string(k));
    }
    if (attempt.status == SearchStatus::kColorable) {
      if (!is_proper_coloring(g, attempt.coloring, prefix)) {
        throw InternalViolation("exact_chromatic: search returned an improper coloring");
      }
      out.chi = k;
      out.coloring = std::move(attempt.coloring);
      return out;
    }
  }
  return out;
}

}  // namespace cayley::oracle
