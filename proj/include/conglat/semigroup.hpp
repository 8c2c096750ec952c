#ifndef CONGLAT_SEMIGROUP_HPP_
#define CONGLAT_SEMIGROUP_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "base.hpp"

namespace conglat {

constexpr Int kDefaultElementLimit = 20000;

// A finite semigroup as a total product table on element indices 0..size-1.
// Associativity is verified fully up to size 500 and on seeded random
// triples above that.  A small generating set is computed greedily at
// construction.  Immutable afterwards.
class FiniteSemigroup {
 public:
  FiniteSemigroup(int size, std::vector<std::uint16_t> table);

  static FiniteSemigroup from_cayley_table(
      std::vector<std::vector<int>> const& rows);

  // Text format: line 1 is n, then n lines of n whitespace-separated 0-based
  // indices, row = left factor.  Rejects ragged rows.
  static FiniteSemigroup parse_cayley_table(std::istream& in);

  int size() const { return size_; }
  int product(int a, int b) const {
    return table_[static_cast<size_t>(a) * static_cast<size_t>(size_)
                  + static_cast<size_t>(b)];
  }
  std::optional<int> identity() const { return identity_; }
  std::vector<int> const& generators() const { return generators_; }

 private:
  void check_associativity() const;
  void compute_identity();
  void compute_generators();

  int size_;
  std::vector<std::uint16_t> table_;
  std::optional<int> identity_;
  std::vector<int> generators_;
};

}  // namespace conglat

#endif  // CONGLAT_SEMIGROUP_HPP_
