#ifndef CONGLAT_DIGRAPH_HPP_
#define CONGLAT_DIGRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

namespace conglat {

// Strongly connected components (iterative Tarjan).  Returns the component
// id per node; ids are canonical: components are numbered by their minimum
// node, in ascending order.
struct SccResult {
  std::vector<int> comp_of;
  int num_comps;
};

inline SccResult strongly_connected_components(
    int n, std::vector<std::vector<int>> const& adj) {
  std::vector<int> index(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<std::uint8_t> on_stack(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  int next_index = 0;
  int next_comp = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<size_t>(root)] != -1) {
      continue;
    }
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& f = call.back();
      int v = f.v;
      if (f.edge == 0) {
        index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] =
            next_index++;
        stack.push_back(v);
        on_stack[static_cast<size_t>(v)] = 1;
      }
      bool descended = false;
      while (f.edge < adj[static_cast<size_t>(v)].size()) {
        int w = adj[static_cast<size_t>(v)][f.edge++];
        if (index[static_cast<size_t>(w)] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(v)] =
              std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
        }
      }
      if (descended) {
        continue;
      }
      if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = 0;
          comp[static_cast<size_t>(w)] = next_comp;
          if (w == v) {
            break;
          }
        }
        ++next_comp;
      }
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().v;
        low[static_cast<size_t>(parent)] =
            std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
      }
    }
  }

  // canonical renumbering by minimum member
  std::vector<int> min_member(static_cast<size_t>(next_comp), n);
  for (int v = 0; v < n; ++v) {
    auto& m = min_member[static_cast<size_t>(comp[static_cast<size_t>(v)])];
    m = std::min(m, v);
  }
  std::vector<int> order(static_cast<size_t>(next_comp));
  for (int c = 0; c < next_comp; ++c) {
    order[static_cast<size_t>(c)] = c;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return min_member[static_cast<size_t>(a)] < min_member[static_cast<size_t>(b)];
  });
  std::vector<int> rank(static_cast<size_t>(next_comp));
  for (int i = 0; i < next_comp; ++i) {
    rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  }
  for (int v = 0; v < n; ++v) {
    comp[static_cast<size_t>(v)] = rank[static_cast<size_t>(comp[static_cast<size_t>(v)])];
  }
  return {std::move(comp), next_comp};
}

// Reachability closure on a condensation: leq[a * k + b] = 1 iff component b
// reaches component a, i.e. a <= b in the divisibility-style order.  Edges
// are given on component ids (b -> a meaning a is reachable one step from b).
inline std::vector<std::uint8_t> condensation_order(
    int k, std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::vector<int>> out(static_cast<size_t>(k));
  for (auto const& [from, to] : edges) {
    if (from != to) {
      out[static_cast<size_t>(from)].push_back(to);
    }
  }
  // DAG: process by DFS with memoised descendant sets
  std::vector<std::uint8_t> leq(static_cast<size_t>(k) * static_cast<size_t>(k), 0);
  std::vector<std::uint8_t> done(static_cast<size_t>(k), 0);
  std::vector<int> stack;
  for (int start = 0; start < k; ++start) {
    if (done[static_cast<size_t>(start)]) {
      continue;
    }
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      bool ready = true;
      for (int w : out[static_cast<size_t>(v)]) {
        if (!done[static_cast<size_t>(w)] && w != v) {
          stack.push_back(w);
          ready = false;
        }
      }
      if (!ready) {
        continue;
      }
      stack.pop_back();
      if (done[static_cast<size_t>(v)]) {
        continue;
      }
      auto* row = &leq[static_cast<size_t>(v) * static_cast<size_t>(k)];
      row[v] = 1;  // reflexive: v <= v
      for (int w : out[static_cast<size_t>(v)]) {
        auto const* wrow = &leq[static_cast<size_t>(w) * static_cast<size_t>(k)];
        for (int i = 0; i < k; ++i) {
          row[i] |= wrow[i];
        }
      }
      done[static_cast<size_t>(v)] = 1;
    }
  }
  // transpose into "a <= b" indexing: result[a * k + b] = leq[b * k + a]
  std::vector<std::uint8_t> result(static_cast<size_t>(k) * static_cast<size_t>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      result[static_cast<size_t>(a) * static_cast<size_t>(k) + static_cast<size_t>(b)] =
          leq[static_cast<size_t>(b) * static_cast<size_t>(k) + static_cast<size_t>(a)];
    }
  }
  return result;
}

}  // namespace conglat

#endif  // CONGLAT_DIGRAPH_HPP_
