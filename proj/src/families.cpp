#include "conglat/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <type_traits>

namespace conglat {

// --- Transformation --------------------------------------------------------

Transformation Transformation::identity(int n) {
  Transformation t;
  t.images.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    t.images[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
  }
  return t;
}

Transformation Transformation::compose(Transformation const& other) const {
  Transformation t;
  t.images.resize(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    t.images[i] = images[i] == kUndefined ? kUndefined
                                          : other.images[images[i]];
  }
  return t;
}

int Transformation::rank() const {
  std::vector<bool> seen(images.size() + 1, false);
  int r = 0;
  for (auto v : images) {
    if (v != kUndefined && !seen[v]) {
      seen[v] = true;
      ++r;
    }
  }
  return r;
}

bool Transformation::is_total() const {
  return std::none_of(images.begin(), images.end(),
                      [](std::uint8_t v) { return v == kUndefined; });
}

bool Transformation::is_injective() const {
  std::vector<bool> seen(images.size() + 1, false);
  for (auto v : images) {
    if (v == kUndefined) {
      continue;
    }
    if (seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

bool Transformation::is_monotone() const {
  for (size_t i = 1; i < images.size(); ++i) {
    if (images[i - 1] > images[i]) {
      return false;
    }
  }
  return true;
}

std::string Transformation::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < images.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += images[i] == kUndefined ? std::string("-")
                                 : std::to_string(images[i] + 1);
  }
  return s + "]";
}

// --- PartitionDiagram ------------------------------------------------------

PartitionDiagram PartitionDiagram::identity(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    blocks.push_back({i, n + i});
  }
  return from_blocks(n, std::move(blocks));
}

PartitionDiagram PartitionDiagram::from_blocks(
    int n, std::vector<std::vector<int>> blocks) {
  PartitionDiagram d;
  d.n = n;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  d.blocks = std::move(blocks);
  return d;
}

PartitionDiagram compose_diagrams(PartitionDiagram const& a,
                                  PartitionDiagram const& b) {
  return a.compose(b);
}

PartitionDiagram PartitionDiagram::compose(PartitionDiagram const& other) const {
  int const m = n;
  // layers: 0..m-1 outer top, m..2m-1 middle, 2m..3m-1 outer bottom
  std::vector<int> parent(static_cast<size_t>(3 * m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    }
  };
  // this diagram joins top to middle: its lower point m+i is middle m+i
  for (auto const& block : blocks) {
    for (size_t i = 1; i < block.size(); ++i) {
      unite(block[0], block[i]);
    }
  }
  // other joins middle to bottom: upper i -> middle m+i, lower m+i -> 2m+i
  for (auto const& block : other.blocks) {
    for (size_t i = 1; i < block.size(); ++i) {
      unite(block[0] + m, block[i] + m);
    }
  }
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < m; ++i) {
    comps[find(i)].push_back(i);
  }
  for (int i = 0; i < m; ++i) {
    comps[find(2 * m + i)].push_back(m + i);  // relabel bottom to lower row
  }
  std::vector<std::vector<int>> result_blocks;
  for (auto& [root, members] : comps) {
    result_blocks.push_back(std::move(members));
  }
  return from_blocks(m, std::move(result_blocks));
}

int PartitionDiagram::rank() const {
  int r = 0;
  for (auto const& block : blocks) {
    bool upper = false, lower = false;
    for (int p : block) {
      (p < n ? upper : lower) = true;
    }
    if (upper && lower) {
      ++r;
    }
  }
  return r;
}

bool PartitionDiagram::all_blocks_size_at_most(int k) const {
  return std::all_of(blocks.begin(), blocks.end(), [&](auto const& b) {
    return static_cast<int>(b.size()) <= k;
  });
}

bool PartitionDiagram::all_blocks_size_exactly(int k) const {
  return std::all_of(blocks.begin(), blocks.end(), [&](auto const& b) {
    return static_cast<int>(b.size()) == k;
  });
}

bool PartitionDiagram::is_planar() const {
  // positions around the rectangle: 1..n across the top, then n'..1' back,
  // i.e. upper i at i and lower i' at 2n-1-i; two blocks cross iff their
  // positions interleave (alternate at least three times)
  auto positions = [&](std::vector<int> const& block) {
    std::vector<int> pos;
    for (int p : block) {
      pos.push_back(p < n ? p : 2 * n - 1 - (p - n));
    }
    std::sort(pos.begin(), pos.end());
    return pos;
  };
  std::vector<std::vector<int>> pos;
  for (auto const& b : blocks) {
    pos.push_back(positions(b));
  }
  for (size_t i = 0; i < pos.size(); ++i) {
    for (size_t j = i + 1; j < pos.size(); ++j) {
      size_t a = 0, b = 0;
      int alternations = 0;
      int last = -1;  // 0 = from block i, 1 = from block j
      while (a < pos[i].size() || b < pos[j].size()) {
        int origin;
        if (b >= pos[j].size()
            || (a < pos[i].size() && pos[i][a] < pos[j][b])) {
          origin = 0;
          ++a;
        } else {
          origin = 1;
          ++b;
        }
        if (origin != last) {
          ++alternations;
          last = origin;
        }
      }
      if (alternations >= 4) {  // pattern i j i j (or j i j i)
        return false;
      }
    }
  }
  return true;
}

bool PartitionDiagram::is_block_bijection() const {
  for (auto const& block : blocks) {
    bool upper = false, lower = false;
    for (int p : block) {
      (p < n ? upper : lower) = true;
    }
    if (!upper || !lower) {
      return false;
    }
  }
  return true;
}

bool PartitionDiagram::is_uniform() const {
  for (auto const& block : blocks) {
    int upper = 0, lower = 0;
    for (int p : block) {
      ++(p < n ? upper : lower);
    }
    if (upper != lower) {
      return false;
    }
  }
  return true;
}

std::string PartitionDiagram::to_string() const {
  std::string s = "{";
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) {
      s += "|";
    }
    for (size_t i = 0; i < blocks[b].size(); ++i) {
      if (i > 0) {
        s += ",";
      }
      int p = blocks[b][i];
      s += p < n ? std::to_string(p + 1) : std::to_string(p - n + 1) + "'";
    }
  }
  return s + "}";
}

std::vector<int> PartitionDiagram::key() const {
  std::vector<int> block_of(static_cast<size_t>(2 * n), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int p : blocks[b]) {
      block_of[static_cast<size_t>(p)] = static_cast<int>(b);
    }
  }
  // blocks are already ordered by minimum, so this is a restricted growth
  // string
  return block_of;
}

// --- MatrixFq ---------------------------------------------------------------

MatrixFq MatrixFq::identity(int n, std::shared_ptr<GaloisField const> f) {
  MatrixFq m;
  m.n = n;
  m.field = std::move(f);
  m.entries.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    m.entries[static_cast<size_t>(i * n + i)] = 1;
  }
  return m;
}

MatrixFq MatrixFq::multiply(MatrixFq const& other) const {
  MatrixFq out;
  out.n = n;
  out.field = field;
  out.entries.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      int aik = entries[static_cast<size_t>(i * n + k)];
      if (aik == 0) {
        continue;
      }
      for (int j = 0; j < n; ++j) {
        auto& cell = out.entries[static_cast<size_t>(i * n + j)];
        cell = static_cast<std::uint8_t>(field->add(
            cell, field->mul(aik, other.entries[static_cast<size_t>(k * n + j)])));
      }
    }
  }
  return out;
}

int MatrixFq::rank() const {
  std::vector<int> m(entries.begin(), entries.end());
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int row = rank; row < n; ++row) {
      if (m[static_cast<size_t>(row * n + col)] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    for (int j = 0; j < n; ++j) {
      std::swap(m[static_cast<size_t>(rank * n + j)],
                m[static_cast<size_t>(pivot * n + j)]);
    }
    int inv = field->inv(m[static_cast<size_t>(rank * n + col)]);
    for (int row = rank + 1; row < n; ++row) {
      int factor = field->mul(m[static_cast<size_t>(row * n + col)], inv);
      if (factor == 0) {
        continue;
      }
      for (int j = 0; j < n; ++j) {
        m[static_cast<size_t>(row * n + j)] =
            field->sub(m[static_cast<size_t>(row * n + j)],
                       field->mul(factor, m[static_cast<size_t>(rank * n + j)]));
      }
    }
    ++rank;
  }
  return rank;
}

std::string MatrixFq::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    s += i > 0 ? ",[" : "[";
    for (int j = 0; j < n; ++j) {
      if (j > 0) {
        s += ",";
      }
      s += std::to_string(entries[static_cast<size_t>(i * n + j)]);
    }
    s += "]";
  }
  return s + "]";
}

// --- family registry ---------------------------------------------------------

namespace {
struct FamilyName {
  Family family;
  char const* name;
};
constexpr FamilyName kFamilyNames[] = {
    {Family::tn, "tn"},       {Family::ptn, "ptn"},
    {Family::in, "in"},       {Family::on, "on"},
    {Family::mnq, "mnq"},     {Family::pn, "pn"},
    {Family::bn, "bn"},       {Family::tln, "tln"},
    {Family::pbn, "pbn"},     {Family::instar, "instar"},
    {Family::fnstar, "fnstar"},
};
}  // namespace

Family family_from_string(std::string const& name) {
  for (auto const& e : kFamilyNames) {
    if (name == e.name) {
      return e.family;
    }
  }
  throw Error("unknown family: " + name);
}

std::string family_to_string(Family f) {
  for (auto const& e : kFamilyNames) {
    if (f == e.family) {
      return e.name;
    }
  }
  throw Error("unknown family");
}

std::vector<Family> const& all_families() {
  static std::vector<Family> const families = [] {
    std::vector<Family> out;
    for (auto const& e : kFamilyNames) {
      out.push_back(e.family);
    }
    return out;
  }();
  return families;
}

// --- enumeration -------------------------------------------------------------

namespace {

template <typename T>
void push_limited(std::vector<T>& v, T x, Int limit) {
  if (static_cast<Int>(v.size()) >= limit) {
    throw TooLargeError("family exceeds the element limit "
                        + std::to_string(limit));
  }
  v.push_back(std::move(x));
}

// all maps [n] -> [n] or [n] -> [n] u {undefined}, filtered
std::vector<Transformation> enumerate_maps(int n, bool partial,
                                           bool injective, Int limit) {
  std::vector<Transformation> out;
  int base = partial ? n + 1 : n;  // digit n encodes undefined
  std::vector<int> digits(static_cast<size_t>(n), 0);
  while (true) {
    Transformation t;
    t.images.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      t.images[static_cast<size_t>(i)] =
          digits[static_cast<size_t>(i)] == n
              ? Transformation::kUndefined
              : static_cast<std::uint8_t>(digits[static_cast<size_t>(i)]);
    }
    if (!injective || t.is_injective()) {
      push_limited(out, std::move(t), limit);
    }
    int pos = n - 1;
    while (pos >= 0 && digits[static_cast<size_t>(pos)] == base - 1) {
      digits[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++digits[static_cast<size_t>(pos)];
  }
  return out;
}

// weakly increasing total maps, enumerated directly
std::vector<Transformation> enumerate_monotone(int n, Int limit) {
  std::vector<Transformation> out;
  std::vector<int> digits(static_cast<size_t>(n), 0);
  while (true) {
    Transformation t;
    t.images.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      t.images[static_cast<size_t>(i)] =
          static_cast<std::uint8_t>(digits[static_cast<size_t>(i)]);
    }
    push_limited(out, std::move(t), limit);
    int pos = n - 1;
    while (pos >= 0 && digits[static_cast<size_t>(pos)] == n - 1) {
      --pos;
    }
    if (pos < 0) {
      break;
    }
    int v = digits[static_cast<size_t>(pos)] + 1;
    for (int i = pos; i < n; ++i) {
      digits[static_cast<size_t>(i)] = v;
    }
  }
  return out;
}

// all set partitions of 2n points via restricted growth strings
void rgs_rec(std::vector<int>& rgs, size_t i, int max_used,
             std::vector<PartitionDiagram>& out, int n, Int limit,
             bool (*keep)(PartitionDiagram const&)) {
  if (i == rgs.size()) {
    std::vector<std::vector<int>> blocks(static_cast<size_t>(max_used + 1));
    for (size_t p = 0; p < rgs.size(); ++p) {
      blocks[static_cast<size_t>(rgs[p])].push_back(static_cast<int>(p));
    }
    auto d = PartitionDiagram::from_blocks(n, std::move(blocks));
    if (keep == nullptr || keep(d)) {
      push_limited(out, std::move(d), limit);
    }
    return;
  }
  for (int c = 0; c <= max_used + 1; ++c) {
    rgs[i] = c;
    rgs_rec(rgs, i + 1, std::max(max_used, c), out, n, limit, keep);
  }
}

std::vector<PartitionDiagram> enumerate_partitions(
    int n, Int limit, bool (*keep)(PartitionDiagram const&) = nullptr) {
  std::vector<PartitionDiagram> out;
  if (n == 0) {
    push_limited(out, PartitionDiagram::from_blocks(0, {}), limit);
    return out;
  }
  if (bell(2 * n) > 10000000) {
    throw TooLargeError("diagram enumeration space is too large at n = "
                        + std::to_string(n));
  }
  std::vector<int> rgs(static_cast<size_t>(2 * n), 0);
  rgs_rec(rgs, 1, 0, out, n, limit, keep);
  return out;
}

// matchings (all blocks of size exactly 2) and partial matchings (size <= 2)
void matchings_rec(int n, std::vector<int>& partner, int allow_singletons,
                   std::vector<PartitionDiagram>& out, Int limit) {
  int first = -1;
  for (int p = 0; p < 2 * n; ++p) {
    if (partner[static_cast<size_t>(p)] == -1) {
      first = p;
      break;
    }
  }
  if (first < 0) {
    std::vector<std::vector<int>> blocks;
    std::vector<bool> used(static_cast<size_t>(2 * n), false);
    for (int p = 0; p < 2 * n; ++p) {
      if (used[static_cast<size_t>(p)]) {
        continue;
      }
      int q = partner[static_cast<size_t>(p)];
      used[static_cast<size_t>(p)] = true;
      if (q == p) {
        blocks.push_back({p});
      } else {
        used[static_cast<size_t>(q)] = true;
        blocks.push_back({p, q});
      }
    }
    push_limited(out, PartitionDiagram::from_blocks(n, std::move(blocks)),
                 limit);
    return;
  }
  if (allow_singletons) {
    partner[static_cast<size_t>(first)] = first;
    matchings_rec(n, partner, allow_singletons, out, limit);
    partner[static_cast<size_t>(first)] = -1;
  }
  for (int q = first + 1; q < 2 * n; ++q) {
    if (partner[static_cast<size_t>(q)] != -1) {
      continue;
    }
    partner[static_cast<size_t>(first)] = q;
    partner[static_cast<size_t>(q)] = first;
    matchings_rec(n, partner, allow_singletons, out, limit);
    partner[static_cast<size_t>(first)] = -1;
    partner[static_cast<size_t>(q)] = -1;
  }
}

std::vector<PartitionDiagram> enumerate_matchings(int n, bool partial,
                                                  Int limit) {
  std::vector<PartitionDiagram> out;
  if (n == 0) {
    push_limited(out, PartitionDiagram::from_blocks(0, {}), limit);
    return out;
  }
  std::vector<int> partner(static_cast<size_t>(2 * n), -1);
  matchings_rec(n, partner, partial, out, limit);
  return out;
}

// noncrossing perfect matchings, generated directly on the boundary
// positions 0..2n-1 (position -> point: i for i < n, else 3n-1-i)
void planar_rec(std::vector<int> const& segment,
                std::vector<std::pair<int, int>>& arcs,
                std::vector<std::vector<std::pair<int, int>>>& out) {
  if (segment.empty()) {
    out.push_back(arcs);
    return;
  }
  for (size_t i = 1; i < segment.size(); i += 2) {
    arcs.emplace_back(segment[0], segment[i]);
    std::vector<int> inside(segment.begin() + 1,
                            segment.begin() + static_cast<long>(i));
    std::vector<int> outside(segment.begin() + static_cast<long>(i) + 1,
                             segment.end());
    size_t mark = out.size();
    (void) mark;
    // enumerate inside, then for each completion enumerate outside
    std::vector<std::vector<std::pair<int, int>>> inner;
    {
      std::vector<std::pair<int, int>> acc;
      planar_rec(inside, acc, inner);
    }
    for (auto const& in_arcs : inner) {
      auto saved = arcs;
      arcs.insert(arcs.end(), in_arcs.begin(), in_arcs.end());
      planar_rec(outside, arcs, out);
      arcs = std::move(saved);
    }
    arcs.pop_back();
  }
}

std::vector<PartitionDiagram> enumerate_planar_matchings(int n, Int limit) {
  std::vector<PartitionDiagram> out;
  if (n == 0) {
    push_limited(out, PartitionDiagram::from_blocks(0, {}), limit);
    return out;
  }
  if (catalan(n) > limit) {
    throw TooLargeError("family exceeds the element limit " + std::to_string(limit));
  }
  std::vector<int> positions(static_cast<size_t>(2 * n));
  std::iota(positions.begin(), positions.end(), 0);
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> acc;
  planar_rec(positions, acc, matchings);
  auto to_point = [&](int pos) { return pos < n ? pos : 3 * n - 1 - pos; };
  for (auto const& arcs : matchings) {
    std::vector<std::vector<int>> blocks;
    for (auto const& [p, q] : arcs) {
      blocks.push_back({to_point(p), to_point(q)});
    }
    push_limited(out, PartitionDiagram::from_blocks(n, std::move(blocks)),
                 limit);
  }
  return out;
}

std::vector<MatrixFq> enumerate_matrices(int n, std::shared_ptr<GaloisField const> f,
                                         Int limit) {
  std::vector<MatrixFq> out;
  int q = f->q();
  size_t cells = static_cast<size_t>(n) * static_cast<size_t>(n);
  std::vector<int> digits(cells, 0);
  while (true) {
    MatrixFq m;
    m.n = n;
    m.field = f;
    m.entries.assign(digits.begin(), digits.end());
    push_limited(out, std::move(m), limit);
    size_t pos = cells;
    while (pos > 0 && digits[pos - 1] == q - 1) {
      digits[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) {
      break;
    }
    ++digits[pos - 1];
    if (cells == 0) {
      break;
    }
  }
  return out;
}

template <typename Elem, typename KeyFn, typename ComposeFn, typename RankFn,
          typename LabelFn>
BuiltFamily assemble(Family family, int n, int q, std::vector<Elem> elems,
                     KeyFn key, ComposeFn compose, RankFn rank_fn,
                     LabelFn label) {
  std::sort(elems.begin(), elems.end(),
            [&](Elem const& a, Elem const& b) { return key(a) < key(b); });
  std::map<decltype(key(elems[0])), int> index;
  for (size_t i = 0; i < elems.size(); ++i) {
    index[key(elems[i])] = static_cast<int>(i);
  }
  if (index.size() != elems.size()) {
    throw Error("duplicate elements in family enumeration");
  }
  int size = static_cast<int>(elems.size());
  std::vector<std::uint16_t> table(static_cast<size_t>(size)
                                   * static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      auto prod = compose(elems[static_cast<size_t>(i)],
                          elems[static_cast<size_t>(j)]);
      auto it = index.find(key(prod));
      if (it == index.end()) {
        throw Error("family is not closed under its product");
      }
      table[static_cast<size_t>(i) * static_cast<size_t>(size)
            + static_cast<size_t>(j)] = static_cast<std::uint16_t>(it->second);
    }
  }
  BuiltFamily built{family, n, q, FiniteSemigroup(size, std::move(table)),
                    {}, {}, {}};
  for (auto const& e : elems) {
    built.rank.push_back(rank_fn(e));
    built.labels.push_back(label(e));
  }
  if constexpr (std::is_same_v<Elem, PartitionDiagram>) {
    if (family == Family::fnstar) {
      for (auto const& e : elems) {
        std::vector<int> parts;
        for (auto const& block : e.blocks) {
          parts.push_back(static_cast<int>(block.size()) / 2);
        }
        std::sort(parts.rbegin(), parts.rend());
        built.shape.push_back(IntegerPartition{parts});
      }
    }
  }
  return built;
}

BuiltFamily assemble_transformations(Family family, int n,
                                     std::vector<Transformation> elems) {
  return assemble(
      family, n, 0, std::move(elems),
      [](Transformation const& t) { return t.images; },
      [](Transformation const& a, Transformation const& b) {
        return a.compose(b);
      },
      [](Transformation const& t) { return static_cast<Int>(t.rank()); },
      [](Transformation const& t) { return t.to_string(); });
}

BuiltFamily assemble_diagrams(Family family, int n,
                              std::vector<PartitionDiagram> elems) {
  return assemble(
      family, n, 0, std::move(elems),
      [](PartitionDiagram const& d) { return d.key(); },
      [](PartitionDiagram const& a, PartitionDiagram const& b) {
        return a.compose(b);
      },
      [](PartitionDiagram const& d) { return static_cast<Int>(d.rank()); },
      [](PartitionDiagram const& d) { return d.to_string(); });
}

bool keep_block_bijection(PartitionDiagram const& d) {
  return d.is_block_bijection();
}

bool keep_uniform_block_bijection(PartitionDiagram const& d) {
  return d.is_block_bijection() && d.is_uniform();
}

}  // namespace

BuiltFamily build(Family family, int n, std::optional<int> q_opt,
                  Int max_elements) {
  if (n < 0) {
    throw Error("family degree must be nonnegative");
  }
  if (family == Family::mnq && !q_opt.has_value()) {
    throw MissingQError("family mnq requires q");
  }
  if (family != Family::mnq && q_opt.has_value()) {
    throw Error("q is only meaningful for family mnq");
  }
  Int limit = max_elements;
  switch (family) {
    case Family::tn:
      return assemble_transformations(family, n,
                                      enumerate_maps(n, false, false, limit));
    case Family::ptn:
      return assemble_transformations(family, n,
                                      enumerate_maps(n, true, false, limit));
    case Family::in:
      return assemble_transformations(family, n,
                                      enumerate_maps(n, true, true, limit));
    case Family::on:
      return assemble_transformations(family, n, enumerate_monotone(n, limit));
    case Family::pn:
      return assemble_diagrams(family, n, enumerate_partitions(n, limit));
    case Family::bn:
      return assemble_diagrams(family, n, enumerate_matchings(n, false, limit));
    case Family::pbn:
      return assemble_diagrams(family, n, enumerate_matchings(n, true, limit));
    case Family::tln:
      return assemble_diagrams(family, n, enumerate_planar_matchings(n, limit));
    case Family::instar:
      return assemble_diagrams(
          family, n, enumerate_partitions(n, limit, keep_block_bijection));
    case Family::fnstar:
      return assemble_diagrams(
          family, n,
          enumerate_partitions(n, limit, keep_uniform_block_bijection));
    case Family::mnq: {
      int q = *q_opt;
      if (!is_prime_power(q)) {
        throw QNotPrimePowerError("q = " + std::to_string(q)
                                  + " is not a prime power");
      }
      auto f = std::make_shared<GaloisField const>(q);
      auto elems = enumerate_matrices(n, f, limit);
      return assemble(
          family, n, q, std::move(elems),
          [](MatrixFq const& m) { return m.entries; },
          [](MatrixFq const& a, MatrixFq const& b) { return a.multiply(b); },
          [](MatrixFq const& m) { return static_cast<Int>(m.rank()); },
          [](MatrixFq const& m) { return m.to_string(); });
    }
  }
  throw Error("unhandled family");
}

}  // namespace conglat
