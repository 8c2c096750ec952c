#include "conglat/green.hpp"

#include <algorithm>
#include <map>

#include "conglat/digraph.hpp"

namespace conglat {

namespace {

// edges x -> s*x (left) or x -> x*s (right) over the generators
std::vector<std::vector<int>> cayley_graph(FiniteSemigroup const& s,
                                           bool left) {
  int n = s.size();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int g : s.generators()) {
      adj[static_cast<size_t>(x)].push_back(left ? s.product(g, x)
                                                 : s.product(x, g));
    }
  }
  return adj;
}

}  // namespace

GreenStructure::GreenStructure(FiniteSemigroup const& s) {
  int n = s.size();
  auto left_adj = cayley_graph(s, true);
  auto right_adj = cayley_graph(s, false);

  auto l_scc = strongly_connected_components(n, left_adj);
  auto r_scc = strongly_connected_components(n, right_adj);
  l_of_ = l_scc.comp_of;
  r_of_ = r_scc.comp_of;
  num_l_ = l_scc.num_comps;
  num_r_ = r_scc.num_comps;

  // class-level orders: an edge x -> sx projects to C_{sx} <= C_x
  {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x) {
      for (int y : left_adj[static_cast<size_t>(x)]) {
        edges.emplace_back(l_of_[static_cast<size_t>(x)],
                           l_of_[static_cast<size_t>(y)]);
      }
    }
    l_leq_ = condensation_order(num_l_, std::move(edges));
  }
  {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x) {
      for (int y : right_adj[static_cast<size_t>(x)]) {
        edges.emplace_back(r_of_[static_cast<size_t>(x)],
                           r_of_[static_cast<size_t>(y)]);
      }
    }
    r_leq_ = condensation_order(num_r_, std::move(edges));
  }

  // D = join of L and R, as a union-find over elements
  {
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      parent[static_cast<size_t>(i)] = i;
    }
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] =
            parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
      }
    };
    std::vector<int> l_first(static_cast<size_t>(num_l_), -1);
    std::vector<int> r_first(static_cast<size_t>(num_r_), -1);
    for (int x = 0; x < n; ++x) {
      int& lf = l_first[static_cast<size_t>(l_of_[static_cast<size_t>(x)])];
      if (lf < 0) {
        lf = x;
      } else {
        unite(lf, x);
      }
      int& rf = r_first[static_cast<size_t>(r_of_[static_cast<size_t>(x)])];
      if (rf < 0) {
        rf = x;
      } else {
        unite(rf, x);
      }
    }
    d_of_.resize(static_cast<size_t>(n));
    std::map<int, int> root_to_id;
    for (int x = 0; x < n; ++x) {
      int root = find(x);
      auto [it, fresh] =
          root_to_id.emplace(root, static_cast<int>(root_to_id.size()));
      (void) fresh;
      d_of_[static_cast<size_t>(x)] = it->second;
    }
    num_d_ = static_cast<int>(root_to_id.size());
    // roots are minimal members and appear in element order, so ids are
    // already canonical
  }

  // J order on D-classes: transitive closure of the projected L and R edges
  {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x) {
      for (int y : left_adj[static_cast<size_t>(x)]) {
        edges.emplace_back(d_of_[static_cast<size_t>(x)],
                           d_of_[static_cast<size_t>(y)]);
      }
      for (int y : right_adj[static_cast<size_t>(x)]) {
        edges.emplace_back(d_of_[static_cast<size_t>(x)],
                           d_of_[static_cast<size_t>(y)]);
      }
    }
    d_leq_ = condensation_order(num_d_, std::move(edges));
  }

  // H = L intersect R
  {
    std::map<std::pair<int, int>, int> pair_ids;
    std::vector<std::pair<int, int>> keys(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      keys[static_cast<size_t>(x)] = {l_of_[static_cast<size_t>(x)],
                                      r_of_[static_cast<size_t>(x)]};
    }
    h_of_.resize(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      auto [it, fresh] = pair_ids.emplace(keys[static_cast<size_t>(x)],
                                          static_cast<int>(pair_ids.size()));
      (void) fresh;
      h_of_[static_cast<size_t>(x)] = it->second;
    }
    num_h_ = static_cast<int>(pair_ids.size());
  }

  // per-D-class summaries
  d_classes_.resize(static_cast<size_t>(num_d_));
  {
    std::vector<std::vector<int>> l_in_d(static_cast<size_t>(num_d_));
    std::vector<std::vector<int>> r_in_d(static_cast<size_t>(num_d_));
    std::vector<int> l_seen(static_cast<size_t>(num_l_), -1);
    std::vector<int> r_seen(static_cast<size_t>(num_r_), -1);
    for (int x = 0; x < n; ++x) {
      int d = d_of_[static_cast<size_t>(x)];
      int l = l_of_[static_cast<size_t>(x)];
      int r = r_of_[static_cast<size_t>(x)];
      if (l_seen[static_cast<size_t>(l)] != d) {
        l_seen[static_cast<size_t>(l)] = d;
        l_in_d[static_cast<size_t>(d)].push_back(l);
      }
      if (r_seen[static_cast<size_t>(r)] != d) {
        r_seen[static_cast<size_t>(r)] = d;
        r_in_d[static_cast<size_t>(d)].push_back(r);
      }
    }
    for (int d = 0; d < num_d_; ++d) {
      auto& summary = d_classes_[static_cast<size_t>(d)];
      summary.id = d;
      summary.l_ids = l_in_d[static_cast<size_t>(d)];
      summary.r_ids = r_in_d[static_cast<size_t>(d)];
      std::sort(summary.l_ids.begin(), summary.l_ids.end());
      std::sort(summary.r_ids.begin(), summary.r_ids.end());
      summary.idempotent_matrix.assign(
          summary.r_ids.size(),
          std::vector<std::uint8_t>(summary.l_ids.size(), 0));
      summary.is_minimal = true;
      for (int e = 0; e < num_d_; ++e) {
        if (e != d && d_leq(e, d)) {
          summary.is_minimal = false;
          break;
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      if (s.product(x, x) != x) {
        continue;
      }
      auto& summary = d_classes_[static_cast<size_t>(d_of_[static_cast<size_t>(x)])];
      auto row = std::lower_bound(summary.r_ids.begin(), summary.r_ids.end(),
                                  r_of_[static_cast<size_t>(x)])
                 - summary.r_ids.begin();
      auto col = std::lower_bound(summary.l_ids.begin(), summary.l_ids.end(),
                                  l_of_[static_cast<size_t>(x)])
                 - summary.l_ids.begin();
      summary.idempotent_matrix[static_cast<size_t>(row)][static_cast<size_t>(col)] = 1;
    }
    std::vector<Int> h_size(static_cast<size_t>(num_h_), 0);
    std::vector<int> d_min_elem(static_cast<size_t>(num_d_), -1);
    for (int x = 0; x < n; ++x) {
      ++h_size[static_cast<size_t>(h_of_[static_cast<size_t>(x)])];
      int& m = d_min_elem[static_cast<size_t>(d_of_[static_cast<size_t>(x)])];
      if (m < 0) {
        m = x;
      }
    }
    for (int d = 0; d < num_d_; ++d) {
      auto& summary = d_classes_[static_cast<size_t>(d)];
      bool regular = false;
      for (auto const& row : summary.idempotent_matrix) {
        for (auto cell : row) {
          regular = regular || cell != 0;
        }
      }
      summary.is_regular = regular;
      int rep = d_min_elem[static_cast<size_t>(d)];
      summary.rep_h_class = h_of_[static_cast<size_t>(rep)];
      summary.group_order = h_size[static_cast<size_t>(summary.rep_h_class)];
    }
  }
}

std::vector<int> GreenStructure::l_class_elements(int lid) const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(l_of_.size()); ++x) {
    if (l_of_[static_cast<size_t>(x)] == lid) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> GreenStructure::r_class_elements(int rid) const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(r_of_.size()); ++x) {
    if (r_of_[static_cast<size_t>(x)] == rid) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> GreenStructure::d_class_elements(int did) const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(d_of_.size()); ++x) {
    if (d_of_[static_cast<size_t>(x)] == did) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> GreenStructure::h_class_elements(int hid) const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(h_of_.size()); ++x) {
    if (h_of_[static_cast<size_t>(x)] == hid) {
      out.push_back(x);
    }
  }
  return out;
}

bool row_faithful(std::vector<std::vector<std::uint8_t>> const& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = i + 1; j < m.size(); ++j) {
      if (m[i] == m[j]) {
        return false;
      }
    }
  }
  return true;
}

bool column_faithful(std::vector<std::vector<std::uint8_t>> const& m) {
  if (m.empty()) {
    return true;
  }
  size_t cols = m[0].size();
  for (size_t i = 0; i < cols; ++i) {
    for (size_t j = i + 1; j < cols; ++j) {
      bool equal = true;
      for (auto const& row : m) {
        if (row[i] != row[j]) {
          equal = false;
          break;
        }
      }
      if (equal) {
        return false;
      }
    }
  }
  return true;
}

SchutzGroup schutzenberger(FiniteSemigroup const& s, GreenStructure const& g,
                           int hid) {
  SchutzGroup result;
  result.h_class = g.h_class_elements(hid);
  result.base_point = result.h_class[0];
  int m = static_cast<int>(result.h_class.size());

  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) {
    pos[result.h_class[static_cast<size_t>(i)]] = i;
  }

  std::map<std::vector<int>, bool> seen;
  std::vector<std::vector<int>> perms;
  auto consider = [&](std::vector<int> p) {
    if (seen.emplace(p, true).second) {
      perms.push_back(std::move(p));
    }
  };
  {
    std::vector<int> id(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      id[static_cast<size_t>(i)] = i;  // the adjoined identity of S^1
    }
    consider(std::move(id));
  }
  for (int t = 0; t < s.size(); ++t) {
    if (!pos.count(s.product(result.base_point, t))) {
      continue;
    }
    std::vector<int> p(static_cast<size_t>(m));
    bool total = true;
    for (int i = 0; i < m; ++i) {
      auto it = pos.find(s.product(result.h_class[static_cast<size_t>(i)], t));
      if (it == pos.end()) {
        total = false;
        break;
      }
      p[static_cast<size_t>(i)] = it->second;
    }
    if (!total) {
      throw Error("H-class is not stabilised by a right translation");
    }
    consider(std::move(p));
  }

  result.right_translations =
      PermutationGroup(m, std::vector<std::vector<int>>(perms));

  // star product relative to the base point h0 = position 0:
  // h_i * h_j = h_i applied to the unique translation sending h0 to h_j
  std::vector<int> perm_sending_base(static_cast<size_t>(m), -1);
  for (size_t k = 0; k < perms.size(); ++k) {
    int target = perms[k][0];
    if (perm_sending_base[static_cast<size_t>(target)] != -1) {
      throw Error("right translations are not simply transitive");
    }
    perm_sending_base[static_cast<size_t>(target)] = static_cast<int>(k);
  }
  result.star.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int j = 0; j < m; ++j) {
    int k = perm_sending_base[static_cast<size_t>(j)];
    if (k < 0) {
      throw Error("right translations are not transitive on the H-class");
    }
    for (int i = 0; i < m; ++i) {
      result.star[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          perms[static_cast<size_t>(k)][static_cast<size_t>(i)];
    }
  }
  return result;
}

bool is_h_separable(FiniteSemigroup const& s, GreenStructure const& g,
                    ClassKind kind, int class_id) {
  std::vector<int> members = kind == ClassKind::l_class
                                 ? g.l_class_elements(class_id)
                                 : g.r_class_elements(class_id);
  auto in_class = [&](int z) {
    return kind == ClassKind::l_class ? g.l_class(z) == class_id
                                      : g.r_class(z) == class_id;
  };
  for (size_t a = 0; a < members.size(); ++a) {
    for (size_t b = a + 1; b < members.size(); ++b) {
      int x = members[a], y = members[b];
      if (g.h_class(x) == g.h_class(y)) {
        continue;
      }
      bool separated = false;
      for (int t = 0; t < s.size() && !separated; ++t) {
        int sx = kind == ClassKind::l_class ? s.product(t, x) : s.product(x, t);
        int sy = kind == ClassKind::l_class ? s.product(t, y) : s.product(y, t);
        separated = in_class(sx) != in_class(sy);
      }
      if (!separated) {
        return false;
      }
    }
  }
  return true;
}

bool check_stability(FiniteSemigroup const& s, GreenStructure const& g) {
  int n = s.size();
  for (int x = 0; x < n; ++x) {
    for (int t = 0; t < n; ++t) {
      int tx = s.product(t, x);
      if (g.d_class(tx) == g.d_class(x) && g.l_class(tx) != g.l_class(x)) {
        return false;
      }
      int xt = s.product(x, t);
      if (g.d_class(xt) == g.d_class(x) && g.r_class(xt) != g.r_class(x)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace conglat
