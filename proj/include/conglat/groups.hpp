#ifndef CONGLAT_GROUPS_HPP_
#define CONGLAT_GROUPS_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "base.hpp"
#include "combinatorics.hpp"

namespace conglat {

constexpr Int kDefaultGroupOrderLimit = 1000;

// A finite permutation group on the points 0..degree-1, given by generators.
// The full element set and multiplication table are enumerated on demand and
// cached; enumeration refuses to grow past an order limit.  Immutable after
// construction.
class PermutationGroup {
 public:
  using Perm = std::vector<int>;

  PermutationGroup();  // trivial group on one point
  PermutationGroup(int degree, std::vector<Perm> generators);

  static PermutationGroup trivial(int degree = 1);
  static PermutationGroup symmetric(int r);
  static PermutationGroup alternating(int r);
  static PermutationGroup cyclic(int m);
  static PermutationGroup direct_product(PermutationGroup const& g,
                                         PermutationGroup const& h);
  // Young subgroup: the direct product over i of the symmetric group on
  // mult_i points, where mult_i is the multiplicity of part size i in mu.
  static PermutationGroup young_subgroup(IntegerPartition const& mu);
  // GL(r, q) acting on the q^r row vectors.
  static PermutationGroup general_linear(int r, int q);

  int degree() const { return degree_; }
  std::vector<Perm> const& generators() const { return generators_; }

  Int order(Int max_order = kDefaultGroupOrderLimit) const;

  // Element list (identity first, then BFS order over the generators) and
  // the index multiplication table for elems[i] * elems[j] ("apply i, then
  // apply j").
  struct Table {
    std::vector<Perm> elems;
    std::vector<std::uint16_t> mult;
    int mul(int i, int j) const {
      return mult[static_cast<size_t>(i) * elems.size()
                  + static_cast<size_t>(j)];
    }
  };
  Table const& table(Int max_order = kDefaultGroupOrderLimit) const;

 private:
  int degree_;
  std::vector<Perm> generators_;
  mutable std::shared_ptr<Table> table_;
};

// |GL(r, q)| = prod_{i=0}^{r-1} (q^r - q^i), without materialising the group.
Int gl_order(int r, int q);

// Cardinality of the longest chain in the subgroup lattice of g, counted in
// elements.  All subgroups are enumerated: cyclic subgroups, closed under
// pairwise join to a fixpoint.  Throws GroupTooLargeError above the limit.
Int brute_sub_height(PermutationGroup const& g,
                     Int max_order = kDefaultGroupOrderLimit);

// Longest chain in the lattice of normal subgroups (subgroups invariant
// under conjugation by the generators).
Int brute_nsub_height(PermutationGroup const& g,
                      Int max_order = kDefaultGroupOrderLimit);

// ceil(3r/2) - (number of 1s in binary r) for r >= 1; 1 for r = 0.
Int ht_sub_symmetric(Int r);

// 1, 1, 2, 3, 4, 3, 3, 3, ... indexed from r = 0.
Int ht_nsub_symmetric(Int r);

// Subgroup-lattice height of the Young subgroup S_mu, via the product rule
// Ht(Sub(G x H)) = Ht(Sub(G)) + Ht(Sub(H)) - 1 applied across the factors.
Int ht_sub_young(IntegerPartition const& mu);

}  // namespace conglat

#endif  // CONGLAT_GROUPS_HPP_
