#include "conglat/unary.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "conglat/digraph.hpp"

namespace conglat {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) {
      parent[static_cast<size_t>(i)] = i;
    }
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

EqPartition partition_from_dsu(Dsu& d, int n) {
  std::vector<int> labels(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels[static_cast<size_t>(i)] = d.find(i);
  }
  return EqPartition::from_labels(labels);
}

struct PartitionHash {
  size_t operator()(std::vector<std::uint16_t> const& v) const {
    size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

EqPartition EqPartition::diagonal(int n) {
  EqPartition p;
  p.cls.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    p.cls[static_cast<size_t>(i)] = static_cast<std::uint16_t>(i);
  }
  p.num_classes = n;
  return p;
}

EqPartition EqPartition::universal(int n) {
  EqPartition p;
  p.cls.assign(static_cast<size_t>(n), 0);
  p.num_classes = n > 0 ? 1 : 0;
  return p;
}

EqPartition EqPartition::from_labels(std::vector<int> const& labels) {
  EqPartition p;
  p.cls.resize(labels.size());
  std::map<int, std::uint16_t> remap;
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = remap.emplace(
        labels[i], static_cast<std::uint16_t>(remap.size()));
    (void) fresh;
    p.cls[i] = it->second;
  }
  p.num_classes = static_cast<int>(remap.size());
  return p;
}

bool refines(EqPartition const& sigma, EqPartition const& tau) {
  if (sigma.num_classes < tau.num_classes) {
    return false;
  }
  // each sigma-class must land in a single tau-class
  std::vector<int> image(static_cast<size_t>(sigma.num_classes), -1);
  for (size_t i = 0; i < sigma.cls.size(); ++i) {
    int& m = image[sigma.cls[i]];
    if (m < 0) {
      m = tau.cls[i];
    } else if (m != tau.cls[i]) {
      return false;
    }
  }
  return true;
}

EqPartition meet(EqPartition const& a, EqPartition const& b) {
  std::map<std::pair<int, int>, int> remap;
  std::vector<int> labels(a.cls.size());
  for (size_t i = 0; i < a.cls.size(); ++i) {
    auto [it, fresh] = remap.emplace(std::pair<int, int>{a.cls[i], b.cls[i]},
                                     static_cast<int>(remap.size()));
    (void) fresh;
    labels[i] = it->second;
  }
  return EqPartition::from_labels(labels);
}

EqPartition cong_closure(UnaryAlgebra const& a,
                         std::vector<std::pair<int, int>> const& pairs,
                         EqPartition const* base) {
  Dsu dsu(a.size);
  std::deque<std::pair<int, int>> pending(pairs.begin(), pairs.end());
  if (base != nullptr) {
    std::vector<int> first(static_cast<size_t>(base->num_classes), -1);
    for (int x = 0; x < a.size; ++x) {
      int& f = first[base->cls[static_cast<size_t>(x)]];
      if (f < 0) {
        f = x;
      } else {
        pending.emplace_back(f, x);
      }
    }
  }
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    if (!dsu.unite(x, y)) {
      continue;
    }
    for (auto const& f : a.ops) {
      int fx = f[static_cast<size_t>(x)];
      int fy = f[static_cast<size_t>(y)];
      if (dsu.find(fx) != dsu.find(fy)) {
        pending.emplace_back(fx, fy);
      }
    }
  }
  return partition_from_dsu(dsu, a.size);
}

EqPartition join(UnaryAlgebra const& a, EqPartition const& x,
                 EqPartition const& y) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> first(static_cast<size_t>(y.num_classes), -1);
  for (int i = 0; i < y.size(); ++i) {
    int& f = first[y.cls[static_cast<size_t>(i)]];
    if (f < 0) {
      f = i;
    } else {
      pairs.emplace_back(f, i);
    }
  }
  return cong_closure(a, pairs, &x);
}

bool is_congruence(UnaryAlgebra const& a, EqPartition const& p) {
  for (auto const& f : a.ops) {
    std::vector<int> image(static_cast<size_t>(p.num_classes), -1);
    for (int x = 0; x < a.size; ++x) {
      int c = p.cls[static_cast<size_t>(x)];
      int fc = p.cls[static_cast<size_t>(f[static_cast<size_t>(x)])];
      if (image[static_cast<size_t>(c)] < 0) {
        image[static_cast<size_t>(c)] = fc;
      } else if (image[static_cast<size_t>(c)] != fc) {
        return false;
      }
    }
  }
  return true;
}

int CongLattice::find(EqPartition const& p) const {
  for (size_t i = 0; i < congs.size(); ++i) {
    if (congs[i] == p) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

CongLattice congruence_lattice(UnaryAlgebra const& a, Int max_size) {
  CongLattice lat;
  lat.carrier = a.size;
  std::unordered_map<std::vector<std::uint16_t>, int, PartitionHash> index;
  auto add = [&](EqPartition p) {
    auto [it, fresh] = index.emplace(p.cls, static_cast<int>(lat.congs.size()));
    if (fresh) {
      if (static_cast<Int>(lat.congs.size()) >= max_size) {
        throw LatticeTooLargeError("congruence lattice exceeds the limit "
                                   + std::to_string(max_size));
      }
      lat.congs.push_back(std::move(p));
      return true;
    }
    return false;
  };

  add(EqPartition::diagonal(a.size));

  // principal congruences, in pair order
  std::vector<EqPartition> principals;
  for (int x = 0; x < a.size; ++x) {
    for (int y = x + 1; y < a.size; ++y) {
      EqPartition p = cong_closure(a, {{x, y}});
      if (add(p)) {
        principals.push_back(std::move(p));
      }
    }
  }

  // closure under joins: every congruence is a join of principals, so
  // joining against principals only reaches everything
  for (size_t head = 1; head < lat.congs.size(); ++head) {
    for (auto const& p : principals) {
      if (refines(p, lat.congs[head])) {
        continue;
      }
      add(join(a, lat.congs[head], p));
    }
  }

  lat.bottom = 0;
  lat.top = 0;
  for (size_t i = 0; i < lat.congs.size(); ++i) {
    if (lat.congs[i].num_classes < lat.congs[static_cast<size_t>(lat.top)].num_classes) {
      lat.top = static_cast<int>(i);
    }
  }
  return lat;
}

Int lattice_height(std::vector<EqPartition> const& congs) {
  size_t m = congs.size();
  if (m == 0) {
    return 0;
  }
  std::vector<size_t> order(m);
  for (size_t i = 0; i < m; ++i) {
    order[i] = i;
  }
  // process from finest to coarsest; a lower neighbour always has strictly
  // more classes
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return congs[x].num_classes > congs[y].num_classes;
  });
  std::vector<Int> height(m, 1);
  Int best = 1;
  // buckets of processed elements keyed by height, scanned downwards so the
  // first refinement hit gives the maximum
  std::vector<std::vector<size_t>> by_height(2);
  for (size_t idx : order) {
    Int h = 1;
    bool found = false;
    for (Int level = static_cast<Int>(by_height.size()) - 1;
         level >= 1 && !found; --level) {
      for (size_t j : by_height[static_cast<size_t>(level)]) {
        if (congs[j].num_classes > congs[idx].num_classes
            && refines(congs[j], congs[idx])) {
          h = level + 1;
          found = true;
          break;
        }
      }
    }
    height[idx] = h;
    if (static_cast<size_t>(h) >= by_height.size()) {
      by_height.resize(static_cast<size_t>(h) + 1);
    }
    by_height[static_cast<size_t>(h)].push_back(idx);
    best = std::max(best, h);
  }
  return best;
}

bool is_modular_element(UnaryAlgebra const& alg, CongLattice const& l, int x) {
  auto const& congs = l.congs;
  auto const& cx = congs[static_cast<size_t>(x)];
  size_t m = congs.size();
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      if (!refines(congs[a], congs[b])) {
        continue;  // need a <= b
      }
      EqPartition lhs = join(alg, congs[a], meet(cx, congs[b]));
      EqPartition rhs = meet(join(alg, congs[a], cx), congs[b]);
      if (!(lhs == rhs)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// deterministic display order: coarser last, ties broken lexicographically
std::vector<int> dot_node_order(CongLattice const& l) {
  std::vector<int> order(l.congs.size());
  for (size_t i = 0; i < order.size(); ++i) {
    order[i] = static_cast<int>(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto const& pa = l.congs[static_cast<size_t>(a)];
    auto const& pb = l.congs[static_cast<size_t>(b)];
    if (pa.num_classes != pb.num_classes) {
      return pa.num_classes > pb.num_classes;
    }
    return pa.cls < pb.cls;
  });
  return order;
}

}  // namespace

std::vector<std::pair<int, int>> lattice_covers(CongLattice const& l) {
  auto order = dot_node_order(l);
  size_t m = order.size();
  // less[i][j] = 1 iff node i < node j (in display indices)
  std::vector<std::vector<std::uint8_t>> less(
      m, std::vector<std::uint8_t>(m, 0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (i != j
          && refines(l.congs[static_cast<size_t>(order[i])],
                     l.congs[static_cast<size_t>(order[j])])) {
        less[i][j] = 1;
      }
    }
  }
  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (!less[i][j]) {
        continue;
      }
      bool direct = true;
      for (size_t k = 0; k < m && direct; ++k) {
        if (less[i][k] && less[k][j]) {
          direct = false;
        }
      }
      if (direct) {
        covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return covers;
}

std::string lattice_to_dot(CongLattice const& l) {
  auto order = dot_node_order(l);
  auto covers = lattice_covers(l);
  std::string out = "digraph conglattice {\n  rankdir=\"BT\";\n";
  for (size_t i = 0; i < order.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\""
           + std::to_string(l.congs[static_cast<size_t>(order[i])].num_classes)
           + "\"];\n";
  }
  for (auto const& [lo, hi] : covers) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

std::vector<int> GClasses::members(int c) const {
  std::vector<int> out;
  for (size_t i = 0; i < comp_of.size(); ++i) {
    if (comp_of[i] == c) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

GClasses g_classes(UnaryAlgebra const& a) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(a.size));
  for (auto const& f : a.ops) {
    for (int x = 0; x < a.size; ++x) {
      adj[static_cast<size_t>(x)].push_back(f[static_cast<size_t>(x)]);
    }
  }
  auto scc = strongly_connected_components(a.size, adj);
  GClasses g;
  g.comp_of = scc.comp_of;
  g.count = scc.num_comps;
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < a.size; ++x) {
    for (int y : adj[static_cast<size_t>(x)]) {
      edges.emplace_back(g.comp_of[static_cast<size_t>(x)],
                         g.comp_of[static_cast<size_t>(y)]);
    }
  }
  g.leq = condensation_order(g.count, std::move(edges));
  return g;
}

UnaryAlgebra principal_factor(UnaryAlgebra const& a,
                              std::vector<int> const& members) {
  int k = static_cast<int>(members.size());
  int zero = k;
  std::vector<int> local(static_cast<size_t>(a.size), -1);
  for (int i = 0; i < k; ++i) {
    local[static_cast<size_t>(members[static_cast<size_t>(i)])] = i;
  }
  UnaryAlgebra factor;
  factor.size = k + 1;
  for (auto const& f : a.ops) {
    std::vector<int> g(static_cast<size_t>(k + 1), zero);
    for (int i = 0; i < k; ++i) {
      int y = f[static_cast<size_t>(members[static_cast<size_t>(i)])];
      g[static_cast<size_t>(i)] = local[static_cast<size_t>(y)] >= 0
                                      ? local[static_cast<size_t>(y)]
                                      : zero;
    }
    factor.ops.push_back(std::move(g));
  }
  return factor;
}

EqPartition rees_congruence(UnaryAlgebra const& a, std::vector<int> const& b) {
  std::vector<std::uint8_t> in_b(static_cast<size_t>(a.size), 0);
  for (int x : b) {
    in_b[static_cast<size_t>(x)] = 1;
  }
  for (auto const& f : a.ops) {
    for (int x : b) {
      if (!in_b[static_cast<size_t>(f[static_cast<size_t>(x)])]) {
        throw NotASubalgebraError("set is not closed under the operations");
      }
    }
  }
  std::vector<int> labels(static_cast<size_t>(a.size));
  int block = b.empty() ? -1 : b[0];
  for (int x = 0; x < a.size; ++x) {
    labels[static_cast<size_t>(x)] = in_b[static_cast<size_t>(x)] ? block : x;
  }
  return EqPartition::from_labels(labels);
}

bool is_delta_cep(UnaryAlgebra const& a, std::vector<int> const& b,
                  Int max_size) {
  rees_congruence(a, b);  // validates that b is a subuniverse
  std::vector<int> members = b;
  std::sort(members.begin(), members.end());
  std::vector<int> local(static_cast<size_t>(a.size), -1);
  for (size_t i = 0; i < members.size(); ++i) {
    local[static_cast<size_t>(members[i])] = static_cast<int>(i);
  }
  UnaryAlgebra sub;
  sub.size = static_cast<int>(members.size());
  for (auto const& f : a.ops) {
    std::vector<int> g(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
      g[i] = local[static_cast<size_t>(f[static_cast<size_t>(members[i])])];
    }
    sub.ops.push_back(std::move(g));
  }
  auto sub_lattice = congruence_lattice(sub, max_size);
  for (auto const& sigma : sub_lattice.congs) {
    std::vector<int> labels(static_cast<size_t>(a.size));
    for (int x = 0; x < a.size; ++x) {
      labels[static_cast<size_t>(x)] =
          local[static_cast<size_t>(x)] >= 0
              ? a.size + sigma.cls[static_cast<size_t>(local[static_cast<size_t>(x)])]
              : x;
    }
    if (!is_congruence(a, EqPartition::from_labels(labels))) {
      return false;
    }
  }
  return true;
}

std::pair<Int, Int> theorem_g_check(UnaryAlgebra const& a, Int max_size) {
  Int lhs = lattice_height(congruence_lattice(a, max_size));
  auto g = g_classes(a);
  Int rhs = -static_cast<Int>(g.count);
  for (int c = 0; c < g.count; ++c) {
    auto factor = principal_factor(a, g.members(c));
    rhs += lattice_height(congruence_lattice(factor, max_size));
  }
  return {lhs, rhs};
}

bool unique_max_congruence_is(UnaryAlgebra const& a, EqPartition const& ref,
                              Int max_size) {
  if (ref.num_classes <= 1 && a.size > 0) {
    return false;  // ref is Nabla
  }
  auto lattice = congruence_lattice(a, max_size);
  for (auto const& sigma : lattice.congs) {
    if (sigma.num_classes == 1) {
      continue;  // Nabla itself
    }
    if (!refines(sigma, ref)) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<int> acting_elements(FiniteSemigroup const& s, ActOps ops) {
  bool gens = ops == ActOps::generators
              || (ops == ActOps::automatic && s.size() > 200);
  if (gens) {
    return s.generators();
  }
  std::vector<int> all(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    all[static_cast<size_t>(i)] = i;
  }
  return all;
}

}  // namespace

UnaryAlgebra class_act(FiniteSemigroup const& s, std::vector<int> const& members,
                       bool left_ops, bool right_ops, bool with_zero,
                       ActOps ops) {
  int k = static_cast<int>(members.size());
  int zero = k;
  std::vector<int> local(static_cast<size_t>(s.size()), -1);
  for (int i = 0; i < k; ++i) {
    local[static_cast<size_t>(members[static_cast<size_t>(i)])] = i;
  }
  UnaryAlgebra act;
  act.size = with_zero ? k + 1 : k;
  auto add_op = [&](int t, bool left) {
    std::vector<int> f(static_cast<size_t>(act.size));
    for (int i = 0; i < k; ++i) {
      int x = members[static_cast<size_t>(i)];
      int y = left ? s.product(t, x) : s.product(x, t);
      int ly = local[static_cast<size_t>(y)];
      if (ly < 0) {
        if (!with_zero) {
          throw Error("action leaves the carrier and no zero was adjoined");
        }
        ly = zero;
      }
      f[static_cast<size_t>(i)] = ly;
    }
    if (with_zero) {
      f[static_cast<size_t>(zero)] = zero;
    }
    act.ops.push_back(std::move(f));
  };
  for (int t : acting_elements(s, ops)) {
    if (left_ops) {
      add_op(t, true);
    }
    if (right_ops) {
      add_op(t, false);
    }
  }
  return act;
}

UnaryAlgebra left_act(FiniteSemigroup const& s, ActOps ops) {
  std::vector<int> all(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    all[static_cast<size_t>(i)] = i;
  }
  return class_act(s, all, true, false, false, ops);
}

UnaryAlgebra right_act(FiniteSemigroup const& s, ActOps ops) {
  std::vector<int> all(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    all[static_cast<size_t>(i)] = i;
  }
  return class_act(s, all, false, true, false, ops);
}

UnaryAlgebra biact(FiniteSemigroup const& s, ActOps ops) {
  std::vector<int> all(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    all[static_cast<size_t>(i)] = i;
  }
  return class_act(s, all, true, true, false, ops);
}

}  // namespace conglat
