#include "conglat/semigroup.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>

namespace conglat {

FiniteSemigroup::FiniteSemigroup(int size, std::vector<std::uint16_t> table)
    : size_(size), table_(std::move(table)) {
  if (size_ <= 0) {
    throw Error("semigroup must have at least one element");
  }
  if (size_ > 65535) {
    throw TooLargeError("element indices must fit in 16 bits");
  }
  if (table_.size() != static_cast<size_t>(size_) * static_cast<size_t>(size_)) {
    throw Error("product table has the wrong shape");
  }
  for (auto e : table_) {
    if (e >= size_) {
      throw IndexOutOfRangeError("product table entry out of range");
    }
  }
  check_associativity();
  compute_identity();
  compute_generators();
}

FiniteSemigroup FiniteSemigroup::from_cayley_table(
    std::vector<std::vector<int>> const& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<std::uint16_t> table;
  table.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (auto const& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw Error("ragged Cayley table row");
    }
    for (int e : row) {
      if (e < 0 || e >= n) {
        throw IndexOutOfRangeError("Cayley table entry out of range");
      }
      table.push_back(static_cast<std::uint16_t>(e));
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

FiniteSemigroup FiniteSemigroup::parse_cayley_table(std::istream& in) {
  std::string line;
  int n = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (ls >> n) {
      break;
    }
  }
  if (n <= 0) {
    throw Error("Cayley table input: missing or invalid size line");
  }
  std::vector<std::vector<int>> rows;
  while (static_cast<int>(rows.size()) < n && std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) {
      row.push_back(v);
    }
    if (row.empty()) {
      continue;  // blank line
    }
    if (static_cast<int>(row.size()) != n) {
      throw Error("Cayley table input: ragged row "
                  + std::to_string(rows.size()));
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != n) {
    throw Error("Cayley table input: expected " + std::to_string(n)
                + " rows");
  }
  return from_cayley_table(rows);
}

void FiniteSemigroup::check_associativity() const {
  int n = size_;
  if (n <= 500) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int ab = product(a, b);
        for (int c = 0; c < n; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            throw NotAssociativeError(a, b, c);
          }
        }
      }
    }
  } else {
    std::mt19937 rng(0x1f2e3d4c);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 200000; ++trial) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (product(product(a, b), c) != product(a, product(b, c))) {
        throw NotAssociativeError(a, b, c);
      }
    }
  }
}

void FiniteSemigroup::compute_identity() {
  for (int e = 0; e < size_; ++e) {
    bool ok = true;
    for (int x = 0; x < size_; ++x) {
      if (product(e, x) != x || product(x, e) != x) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity_ = e;
      return;
    }
  }
}

void FiniteSemigroup::compute_generators() {
  // Greedy: consider elements with large cyclic subsemigroups first, adding
  // each one not yet generated and extending the generated subsemigroup
  // incrementally.  Minimality is not required, only that the set generates.
  std::vector<int> order(static_cast<size_t>(size_));
  {
    std::vector<int> cyclic_size(static_cast<size_t>(size_), 0);
    std::vector<int> seen(static_cast<size_t>(size_), -1);
    for (int x = 0; x < size_; ++x) {
      int count = 0;
      for (int p = x; seen[static_cast<size_t>(p)] != x;
           p = product(p, x)) {
        seen[static_cast<size_t>(p)] = x;
        ++count;
      }
      cyclic_size[static_cast<size_t>(x)] = count;
    }
    for (int x = 0; x < size_; ++x) {
      order[static_cast<size_t>(x)] = x;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return cyclic_size[static_cast<size_t>(a)]
             > cyclic_size[static_cast<size_t>(b)];
    });
  }
  std::vector<bool> generated(static_cast<size_t>(size_), false);
  std::vector<int> members;
  std::vector<int> stack;
  auto add = [&](int x) {
    if (!generated[static_cast<size_t>(x)]) {
      generated[static_cast<size_t>(x)] = true;
      members.push_back(x);
      stack.push_back(x);
    }
  };
  for (int x : order) {
    if (generated[static_cast<size_t>(x)]) {
      continue;
    }
    generators_.push_back(x);
    add(x);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (size_t k = 0; k < members.size(); ++k) {
        int v = members[k];
        add(product(u, v));
        add(product(v, u));
      }
    }
  }
  std::sort(generators_.begin(), generators_.end());
}

}  // namespace conglat
