#include "conglat/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "conglat/gf.hpp"

namespace conglat {

namespace {

using Perm = PermutationGroup::Perm;

Perm identity_perm(int degree) {
  Perm p(static_cast<size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// apply a first, then b
Perm compose(Perm const& a, Perm const& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    c[i] = b[static_cast<size_t>(a[i])];
  }
  return c;
}

}  // namespace

PermutationGroup::PermutationGroup() : degree_(1) {}

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (auto const& g : generators_) {
    if (static_cast<int>(g.size()) != degree_) {
      throw Error("generator degree mismatch");
    }
    std::vector<bool> seen(static_cast<size_t>(degree_), false);
    for (int x : g) {
      if (x < 0 || x >= degree_ || seen[static_cast<size_t>(x)]) {
        throw Error("generator is not a bijection on the point set");
      }
      seen[static_cast<size_t>(x)] = true;
    }
  }
}

PermutationGroup PermutationGroup::trivial(int degree) {
  return PermutationGroup(degree, {});
}

PermutationGroup PermutationGroup::symmetric(int r) {
  if (r <= 1) {
    return trivial(std::max(r, 1));
  }
  std::vector<Perm> gens;
  Perm t = identity_perm(r);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  if (r >= 3) {
    Perm c(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
      c[static_cast<size_t>(i)] = (i + 1) % r;
    }
    gens.push_back(c);
  }
  return PermutationGroup(r, gens);
}

PermutationGroup PermutationGroup::alternating(int r) {
  if (r <= 2) {
    return trivial(std::max(r, 1));
  }
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < r; ++i) {
    Perm c = identity_perm(r);
    c[static_cast<size_t>(i)] = i + 1;
    c[static_cast<size_t>(i + 1)] = i + 2;
    c[static_cast<size_t>(i + 2)] = i;
    gens.push_back(c);
  }
  return PermutationGroup(r, gens);
}

PermutationGroup PermutationGroup::cyclic(int m) {
  if (m <= 1) {
    return trivial(1);
  }
  Perm c(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    c[static_cast<size_t>(i)] = (i + 1) % m;
  }
  return PermutationGroup(m, {c});
}

PermutationGroup PermutationGroup::direct_product(PermutationGroup const& g,
                                                  PermutationGroup const& h) {
  int degree = g.degree() + h.degree();
  std::vector<Perm> gens;
  for (auto const& a : g.generators()) {
    Perm p = identity_perm(degree);
    std::copy(a.begin(), a.end(), p.begin());
    gens.push_back(p);
  }
  for (auto const& b : h.generators()) {
    Perm p = identity_perm(degree);
    for (int i = 0; i < h.degree(); ++i) {
      p[static_cast<size_t>(g.degree() + i)] =
          g.degree() + b[static_cast<size_t>(i)];
    }
    gens.push_back(p);
  }
  return PermutationGroup(degree, gens);
}

PermutationGroup PermutationGroup::young_subgroup(IntegerPartition const& mu) {
  PermutationGroup result = trivial(1);
  bool first = true;
  for (int m : mu.multiplicities()) {
    if (m == 0) {
      continue;
    }
    PermutationGroup factor = symmetric(m);
    result = first ? factor : direct_product(result, factor);
    first = false;
  }
  return result;
}

Int gl_order(int r, int q) {
  Int qr = checked_pow(q, r);
  Int order = 1;
  for (int i = 0; i < r; ++i) {
    order = checked_mul(order, checked_sub(qr, checked_pow(q, i)));
  }
  return order;
}

PermutationGroup PermutationGroup::general_linear(int r, int q) {
  if (r == 0) {
    return trivial(1);
  }
  Int order = gl_order(r, q);
  Int num_vectors = checked_pow(q, r);
  Int num_matrices = checked_pow(q, r * r);
  if (order > 250000 || num_vectors > 4096 || num_matrices > 2000000) {
    throw GroupTooLargeError("GL(" + std::to_string(r) + ", "
                             + std::to_string(q) + ") is too large to build");
  }
  GaloisField f(q);

  auto decode_vec = [&](Int x) {
    std::vector<int> v(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
      v[static_cast<size_t>(i)] = static_cast<int>(x % q);
      x /= q;
    }
    return v;
  };
  auto encode_vec = [&](std::vector<int> const& v) {
    Int x = 0;
    for (size_t i = v.size(); i-- > 0;) {
      x = x * q + v[i];
    }
    return x;
  };

  // exact rank by Gaussian elimination over GF(q)
  auto is_invertible = [&](std::vector<int> m /* row-major r x r */) {
    int rank = 0;
    for (int col = 0; col < r && rank < r; ++col) {
      int pivot = -1;
      for (int row = rank; row < r; ++row) {
        if (m[static_cast<size_t>(row * r + col)] != 0) {
          pivot = row;
          break;
        }
      }
      if (pivot < 0) {
        continue;
      }
      for (int j = 0; j < r; ++j) {
        std::swap(m[static_cast<size_t>(rank * r + j)],
                  m[static_cast<size_t>(pivot * r + j)]);
      }
      int piv_inv = f.inv(m[static_cast<size_t>(rank * r + col)]);
      for (int row = rank + 1; row < r; ++row) {
        int factor = f.mul(m[static_cast<size_t>(row * r + col)], piv_inv);
        for (int j = 0; j < r; ++j) {
          m[static_cast<size_t>(row * r + j)] =
              f.sub(m[static_cast<size_t>(row * r + j)],
                    f.mul(factor, m[static_cast<size_t>(rank * r + j)]));
        }
      }
      ++rank;
    }
    return rank == r;
  };

  std::vector<Perm> perms;
  std::vector<int> mat(static_cast<size_t>(r * r));
  for (Int code = 0; code < num_matrices; ++code) {
    Int x = code;
    for (auto& e : mat) {
      e = static_cast<int>(x % q);
      x /= q;
    }
    if (!is_invertible(mat)) {
      continue;
    }
    Perm p(static_cast<size_t>(num_vectors));
    for (Int vi = 0; vi < num_vectors; ++vi) {
      auto v = decode_vec(vi);
      std::vector<int> w(static_cast<size_t>(r), 0);
      for (int j = 0; j < r; ++j) {
        int acc = 0;
        for (int i = 0; i < r; ++i) {
          acc = f.add(acc, f.mul(v[static_cast<size_t>(i)],
                                 mat[static_cast<size_t>(i * r + j)]));
        }
        w[static_cast<size_t>(j)] = acc;
      }
      p[static_cast<size_t>(vi)] = static_cast<int>(encode_vec(w));
    }
    perms.push_back(std::move(p));
  }
  return PermutationGroup(static_cast<int>(num_vectors), perms);
}

PermutationGroup::Table const& PermutationGroup::table(Int max_order) const {
  if (table_ && static_cast<Int>(table_->elems.size()) <= max_order) {
    return *table_;
  }
  auto t = std::make_shared<Table>();
  std::map<Perm, int> index;
  Perm id = identity_perm(degree_);
  t->elems.push_back(id);
  index[id] = 0;
  for (size_t head = 0; head < t->elems.size(); ++head) {
    for (auto const& g : generators_) {
      Perm next = compose(t->elems[head], g);
      if (index.emplace(next, static_cast<int>(t->elems.size())).second) {
        if (static_cast<Int>(t->elems.size()) >= max_order) {
          throw GroupTooLargeError("group order exceeds the limit "
                                   + std::to_string(max_order));
        }
        t->elems.push_back(std::move(next));
      }
    }
  }
  size_t n = t->elems.size();
  t->mult.resize(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      t->mult[i * n + j] = static_cast<std::uint16_t>(
          index.at(compose(t->elems[i], t->elems[j])));
    }
  }
  table_ = t;
  return *table_;
}

Int PermutationGroup::order(Int max_order) const {
  return static_cast<Int>(table(max_order).elems.size());
}

namespace {

// Subgroups are bitsets over the element indices of a group table.
using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(size_t n) {
  return Bitset((n + 63) / 64, 0);
}

void bs_set(Bitset& b, int i) {
  b[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

bool bs_test(Bitset const& b, int i) {
  return (b[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
}

bool bs_subset(Bitset const& a, Bitset const& b) {
  for (size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) {
      return false;
    }
  }
  return true;
}

int bs_popcount(Bitset const& b) {
  int c = 0;
  for (auto w : b) {
    c += std::popcount(w);
  }
  return c;
}

// Closure of a set of element indices under the group product.
Bitset close_subgroup(PermutationGroup::Table const& t,
                      std::vector<int> seed) {
  size_t n = t.elems.size();
  Bitset member = make_bitset(n);
  std::vector<int> list;
  std::vector<int> stack;
  auto add = [&](int x) {
    if (!bs_test(member, x)) {
      bs_set(member, x);
      list.push_back(x);
      stack.push_back(x);
    }
  };
  add(0);  // identity
  for (int s : seed) {
    add(s);
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    // products with everything currently known, in both orders
    for (size_t k = 0; k < list.size(); ++k) {
      int v = list[k];
      add(t.mul(u, v));
      add(t.mul(v, u));
    }
  }
  return member;
}

std::vector<int> bs_members(Bitset const& b, size_t n) {
  std::vector<int> out;
  for (size_t i = 0; i < n; ++i) {
    if (bs_test(b, static_cast<int>(i))) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

// Close a seed family of subgroups under pairwise join.  Every subgroup in
// the closure is a join of seeds, so joining against seeds only suffices.
std::vector<Bitset> join_closure(PermutationGroup::Table const& t,
                                 std::vector<Bitset> seeds) {
  size_t n = t.elems.size();
  std::map<Bitset, int> index;
  std::vector<Bitset> subs;
  std::vector<size_t> work;
  auto add = [&](Bitset const& b) {
    if (index.emplace(b, static_cast<int>(subs.size())).second) {
      subs.push_back(b);
      work.push_back(subs.size() - 1);
    }
  };
  for (auto const& s : seeds) {
    add(s);
  }
  while (!work.empty()) {
    size_t i = work.back();
    work.pop_back();
    for (auto const& s : seeds) {
      if (bs_subset(s, subs[i])) {
        continue;
      }
      Bitset merged = subs[i];
      for (size_t w = 0; w < merged.size(); ++w) {
        merged[w] |= s[w];
      }
      add(close_subgroup(t, bs_members(merged, n)));
    }
  }
  return subs;
}

// Longest chain (in elements) through the containment order of a subgroup
// family, by DP over sizes.
Int longest_chain(std::vector<Bitset> const& subs) {
  size_t m = subs.size();
  std::vector<int> sizes(m);
  std::vector<size_t> order(m);
  for (size_t i = 0; i < m; ++i) {
    sizes[i] = bs_popcount(subs[i]);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return sizes[a] < sizes[b]; });
  std::vector<Int> h(m, 1);
  Int best = 1;
  for (size_t a = 0; a < m; ++a) {
    size_t i = order[a];
    for (size_t b = 0; b < a; ++b) {
      size_t j = order[b];
      if (sizes[j] < sizes[i] && sizes[i] % sizes[j] == 0
          && bs_subset(subs[j], subs[i])) {
        h[i] = std::max(h[i], h[j] + 1);
      }
    }
    best = std::max(best, h[i]);
  }
  return best;
}

}  // namespace

Int brute_sub_height(PermutationGroup const& g, Int max_order) {
  auto const& t = g.table(max_order);
  size_t n = t.elems.size();
  // seed with every cyclic subgroup
  std::map<Bitset, bool> seen;
  std::vector<Bitset> seeds;
  for (size_t x = 0; x < n; ++x) {
    Bitset b = close_subgroup(t, {static_cast<int>(x)});
    if (!seen.emplace(b, true).second) {
      continue;
    }
    seeds.push_back(std::move(b));
  }
  return longest_chain(join_closure(t, seeds));
}

Int brute_nsub_height(PermutationGroup const& g, Int max_order) {
  auto const& t = g.table(max_order);
  size_t n = t.elems.size();
  std::vector<int> inverse(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (t.mul(static_cast<int>(i), static_cast<int>(j)) == 0) {
        inverse[i] = static_cast<int>(j);
        break;
      }
    }
  }
  std::vector<int> gen_ids;
  {
    std::map<Perm, int> index;
    for (size_t i = 0; i < n; ++i) {
      index[t.elems[i]] = static_cast<int>(i);
    }
    for (auto const& gp : g.generators()) {
      gen_ids.push_back(index.at(gp));
    }
  }
  // normal closure of each element: conjugation orbit, then subgroup closure
  std::map<Bitset, bool> seen;
  std::vector<Bitset> seeds;
  for (size_t x = 0; x < n; ++x) {
    std::vector<int> orbit{static_cast<int>(x)};
    Bitset in_orbit = make_bitset(n);
    bs_set(in_orbit, static_cast<int>(x));
    for (size_t head = 0; head < orbit.size(); ++head) {
      for (int c : gen_ids) {
        int y = t.mul(t.mul(inverse[static_cast<size_t>(c)], orbit[head]), c);
        if (!bs_test(in_orbit, y)) {
          bs_set(in_orbit, y);
          orbit.push_back(y);
        }
      }
    }
    Bitset b = close_subgroup(t, orbit);
    if (seen.emplace(b, true).second) {
      seeds.push_back(std::move(b));
    }
  }
  return longest_chain(join_closure(t, seeds));
}

Int ht_sub_symmetric(Int r) {
  if (r < 0) {
    throw Error("ht_sub_symmetric requires r >= 0");
  }
  if (r == 0) {
    return 1;
  }
  return (3 * r + 1) / 2 - binary_ones(r);
}

Int ht_nsub_symmetric(Int r) {
  if (r < 0) {
    throw Error("ht_nsub_symmetric requires r >= 0");
  }
  if (r <= 1) {
    return 1;
  }
  return r <= 4 ? r : 3;
}

Int ht_sub_young(IntegerPartition const& mu) {
  Int total = 1;
  for (int m : mu.multiplicities()) {
    total += ht_sub_symmetric(m) - 1;
  }
  return total;
}

}  // namespace conglat
