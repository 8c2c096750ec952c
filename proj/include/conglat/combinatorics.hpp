#ifndef CONGLAT_COMBINATORICS_HPP_
#define CONGLAT_COMBINATORICS_HPP_

#include <string>
#include <vector>

#include "base.hpp"

namespace conglat {

// Exact integer sequences used to parameterise the Green's structure of the
// supported monoid families.  No floating point anywhere; every function
// throws OverflowError rather than wrapping.

Int factorial(Int n);
Int binomial(Int n, Int r);

// Stirling number of the second kind: partitions of an n-set into r nonempty
// blocks.  S(0,0) = 1, S(n,0) = 0 for n > 0, S(n,r) = 0 for r > n.
Int stirling2(Int n, Int r);

// Bell number B(n) = sum over r of S(n,r).
Int bell(Int n);

Int catalan(Int n);

// k(k-2)(k-4)...; (-1)!! = 0!! = 1 by the empty-product convention.
// Rejects k < -1.
Int double_factorial(Int k);

// Number of r-dimensional subspaces of an n-dimensional vector space over
// the q-element field; 0 when r > n.  Rejects q that is not a prime power.
Int gaussian_binomial(Int n, Int r, Int q);

// Number of 1s in the binary expansion of n.
Int binary_ones(Int n);

// Number of self-inverse permutations of a k-set:
// a(0) = a(1) = 1, a(k) = a(k-1) + (k-1) a(k-2).
Int involutions(Int k);

// q = p^k with p prime, k >= 1.  Optionally reports p and k.
bool is_prime_power(Int q, Int* p = nullptr, Int* k = nullptr);

// An integer partition mu of n, stored as its weakly decreasing part list.
struct IntegerPartition {
  std::vector<int> parts;

  int n() const;
  // multiplicities()[i] = number of parts equal to i, for i = 1..n
  // (index 0 is unused and zero).
  std::vector<int> multiplicities() const;
  std::string to_string() const;  // "(2,1)"

  bool operator==(IntegerPartition const&) const = default;
};

// All partitions of n, each exactly once, ordered lexicographically
// decreasing on the part lists: (n) first, (1,...,1) last.  Requires n >= 1.
std::vector<IntegerPartition> integer_partitions(int n);

// Number of set partitions of an n-set whose block sizes are the parts of
// mu: n! / prod_i mu_i! (i!)^{mu_i}.
Int shape_count(IntegerPartition const& mu);

}  // namespace conglat

#endif  // CONGLAT_COMBINATORICS_HPP_
