#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "scramblegraph/features.hpp"
#include "scramblegraph/graph.hpp"

namespace scramblegraph {
namespace {

// Leaves explored before the exact search gives up and falls back to the
// invariant hash.
constexpr std::size_t kLeafBudget = 200'000;

using LabelMatrix = std::vector<std::vector<int>>;
using Partition = std::vector<std::vector<std::size_t>>;

LabelMatrix label_matrix(const SegmentGraph& g) {
  LabelMatrix m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) m[g.index_of(e.src)][g.index_of(e.dst)] = e.label.code();
  return m;
}

// Splits cells by the labelled adjacency into every cell until stable.
// Sub-cells are ordered by signature, so the result depends only on the
// input partition, never on vertex ids.
Partition refine(Partition cells, const LabelMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (const auto v : cells[c]) cell_of[v] = c;
    }
    using Signature = std::vector<std::tuple<std::size_t, int, int>>;
    Partition next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<Signature, std::vector<std::size_t>> split;
      for (const auto v : cell) {
        Signature sig;
        for (std::size_t u = 0; u < n; ++u) {
          if (u != v && (m[v][u] || m[u][v])) sig.emplace_back(cell_of[u], m[v][u], m[u][v]);
        }
        std::sort(sig.begin(), sig.end());
        split[sig].push_back(v);
      }
      for (auto& [sig, part] : split) next.push_back(std::move(part));
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

// Twin classes: u ~ v when swapping u and v is an automorphism.
std::vector<std::size_t> twin_representative(const LabelMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (rep[u] != u) continue;
      bool twins = m[u][v] == m[v][u];
      for (std::size_t x = 0; twins && x < n; ++x) {
        if (x == u || x == v) continue;
        twins = m[u][x] == m[v][x] && m[x][u] == m[x][v];
      }
      if (twins) {
        rep[v] = u;
        break;
      }
    }
  }
  return rep;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const LabelMatrix& m) : m_(m), twin_(twin_representative(m)) {}

  // Empty optional-like result (exhausted = true) when over budget.
  bool run(const Partition& initial) {
    search(refine(initial, m_));
    return !exhausted_;
  }
  const std::string& best() const { return best_; }

 private:
  void search(const Partition& cells) {
    if (exhausted_) return;
    const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<std::size_t> tried;
    for (const auto v : cells[t]) {
      if (std::find(tried.begin(), tried.end(), twin_[v]) != tried.end()) continue;
      tried.push_back(twin_[v]);
      Partition child(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
      child.push_back({v});
      std::vector<std::size_t> rest;
      for (const auto u : cells[t]) {
        if (u != v) rest.push_back(u);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
      search(refine(std::move(child), m_));
      if (exhausted_) return;
    }
  }

  void leaf(const Partition& cells) {
    if (++leaves_ > kLeafBudget) {
      exhausted_ = true;
      return;
    }
    std::string code;
    code.reserve(cells.size() * cells.size());
    for (const auto& a : cells) {
      for (const auto& b : cells) code += static_cast<char>('0' + m_[a.front()][b.front()]);
    }
    if (best_.empty() || code < best_) best_ = std::move(code);
  }

  const LabelMatrix& m_;
  std::vector<std::size_t> twin_;
  std::string best_;
  std::size_t leaves_ = 0;
  bool exhausted_ = false;
};

std::string invariant_hash(const SegmentGraph& g, const LabelMatrix& m) {
  const auto stats = vertex_stats(g);
  std::vector<std::string> sigs;
  for (std::size_t v = 0; v < m.size(); ++v) {
    std::string out_labels, in_labels;
    for (std::size_t u = 0; u < m.size(); ++u) {
      if (m[v][u]) out_labels += static_cast<char>('0' + m[v][u]);
      if (m[u][v]) in_labels += static_cast<char>('0' + m[u][v]);
    }
    std::sort(out_labels.begin(), out_labels.end());
    std::sort(in_labels.begin(), in_labels.end());
    sigs.push_back(out_labels + "/" + in_labels + "/" + std::to_string(stats[v].clique_count));
  }
  std::sort(sigs.begin(), sigs.end());
  std::string code = "H" + std::to_string(g.vertex_count()) + ":" + std::to_string(g.edge_count());
  for (const auto& s : sigs) code += "|" + s;
  return code;
}

}  // namespace

CanonicalCode canonical_code(const SegmentGraph& g, std::size_t max_exact) {
  const auto m = label_matrix(g);
  if (g.vertex_count() <= max_exact) {
    // Initial cells by (valency, clique count), larger first.
    const auto ordered = vertex_order(vertex_stats(g));
    Partition cells;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      const bool same = i > 0 && ordered[i].valency == ordered[i - 1].valency &&
                        ordered[i].clique_count == ordered[i - 1].clique_count;
      if (!same) cells.emplace_back();
      cells.back().push_back(g.index_of(ordered[i].id));
    }
    CanonicalSearch search(m);
    if (search.run(cells)) {
      return {"E" + std::to_string(g.vertex_count()) + ":" + search.best(), true};
    }
  }
  return {invariant_hash(g, m), false};
}

}  // namespace scramblegraph
