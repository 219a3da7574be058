#include "wiring/hasse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wiring/enumerate.hpp"

namespace wiring {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  return r;
}

// Applies the deletions in descending label order so remaining labels are stable.
AllowableSequence delete_subset(const AllowableSequence& seq, const std::vector<int>& labels) {
  AllowableSequence cur = seq;
  std::vector<int> sorted = labels;
  std::sort(sorted.rbegin(), sorted.rend());
  for (int label : sorted) cur = delete_line(cur, label);
  return cur;
}

}  // namespace

std::vector<HasseEdge> hasse_edges(const std::vector<std::vector<ArrangementRecord>>& catalogues,
                                   const HasseOptions& opts) {
  struct Node {
    int n;
    std::string cert_hex;
    const ArrangementRecord* rec;
  };
  std::vector<Node> nodes;
  std::map<std::pair<int, std::string>, int> node_index;
  for (const auto& level : catalogues) {
    for (const auto& rec : level) {
      Node node{rec.representative.n, rec.certificate_hex(), &rec};
      const auto key = std::make_pair(node.n, node.cert_hex);
      if (node_index.count(key)) throw std::invalid_argument("hasse_edges: duplicate class");
      node_index[key] = static_cast<int>(nodes.size());
      nodes.push_back(std::move(node));
    }
  }

  std::set<int> levels;
  for (const Node& node : nodes) levels.insert(node.n);

  // contains[i] = set of node indices strictly below i in the deletion order
  std::vector<std::set<int>> contains(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& upper = nodes[i];
    for (int lower_n : levels) {
      if (lower_n >= upper.n) continue;
      const int k = upper.n - lower_n;
      const std::uint64_t combos = binomial(upper.n, k);
      if (combos > opts.subset_budget) {
        throw ResourceGuardError("hasse_edges: deletion subset count exceeds budget");
      }
      // iterate k-subsets of {1..n}
      std::vector<int> subset(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) subset[static_cast<std::size_t>(j)] = j + 1;
      for (;;) {
        AllowableSequence reduced = delete_subset(upper.rec->representative, subset);
        const CellComplex complex = cell_complex(reduced);
        if (is_simplicial(complex)) {
          const std::string cert = to_hex(canonical_certificate(triangulation_graph(complex)));
          auto it = node_index.find({lower_n, cert});
          if (it != node_index.end()) contains[i].insert(it->second);
        }
        // next subset
        int pos = k - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == upper.n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
          subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  // Transitive reduction: drop (i, b) when some c sits strictly between.
  std::vector<HasseEdge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (int b : contains[i]) {
      bool covered = true;
      for (int c : contains[i]) {
        if (c != b && contains[static_cast<std::size_t>(c)].count(b)) {
          covered = false;
          break;
        }
      }
      if (covered) {
        edges.push_back({nodes[i].n, nodes[i].cert_hex, nodes[static_cast<std::size_t>(b)].n,
                         nodes[static_cast<std::size_t>(b)].cert_hex});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
    return std::tie(a.n_upper, a.cert_upper, a.n_lower, a.cert_lower) <
           std::tie(b.n_upper, b.cert_upper, b.n_lower, b.cert_lower);
  });
  return edges;
}

std::string print_hasse(const std::vector<HasseEdge>& edges) {
  std::ostringstream out;
  for (const HasseEdge& e : edges) {
    out << e.n_upper << ':' << e.cert_upper << " -> " << e.n_lower << ':' << e.cert_lower << '\n';
  }
  return out.str();
}

}  // namespace wiring
