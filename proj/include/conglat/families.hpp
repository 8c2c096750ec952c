#ifndef CONGLAT_FAMILIES_HPP_
#define CONGLAT_FAMILIES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "base.hpp"
#include "combinatorics.hpp"
#include "gf.hpp"
#include "semigroup.hpp"

namespace conglat {

// A total or partial map on n points; images[i] is the image of point i, or
// kUndefined.  Maps compose left to right: x(ab) = (xa)b.
struct Transformation {
  static constexpr std::uint8_t kUndefined = 0xFF;
  std::vector<std::uint8_t> images;

  static Transformation identity(int n);
  Transformation compose(Transformation const& other) const;
  int rank() const;  // number of distinct defined images
  bool is_total() const;
  bool is_injective() const;   // where defined
  bool is_monotone() const;    // order-preserving, total maps only
  std::string to_string() const;
  auto operator<=>(Transformation const&) const = default;
};

// A set partition of the 2n points {0..n-1} (upper row) and {n..2n-1}
// (lower, "primed" row), held in canonical form: each block ascending,
// blocks ordered by their minimum.
struct PartitionDiagram {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static PartitionDiagram identity(int n);
  static PartitionDiagram from_blocks(int n, std::vector<std::vector<int>> blocks);

  // Three-layer stacking: identify this diagram's lower row with other's
  // upper row, take connected components, keep the outer 2n points.
  PartitionDiagram compose(PartitionDiagram const& other) const;

  int rank() const;  // number of transversal blocks
  bool all_blocks_size_at_most(int k) const;
  bool all_blocks_size_exactly(int k) const;
  bool is_planar() const;       // no two blocks cross in the order 1..n,n'..1'
  bool is_block_bijection() const;  // every block meets both rows
  bool is_uniform() const;      // equal numbers of upper and lower points per block
  std::string to_string() const;

  // canonical encoding (block index per point, numbered by first occurrence)
  std::vector<int> key() const;
  auto operator<=>(PartitionDiagram const&) const = default;
};

PartitionDiagram compose_diagrams(PartitionDiagram const& a,
                                  PartitionDiagram const& b);

// A square matrix over GF(q); entries row-major.
struct MatrixFq {
  int n = 0;
  std::shared_ptr<GaloisField const> field;
  std::vector<std::uint8_t> entries;

  static MatrixFq identity(int n, std::shared_ptr<GaloisField const> f);
  MatrixFq multiply(MatrixFq const& other) const;
  int rank() const;  // exact Gaussian elimination
  std::string to_string() const;
};

enum class Family {
  tn,      // full transformation monoid
  ptn,     // partial transformation monoid
  in,      // symmetric inverse monoid
  on,      // order-preserving transformations
  mnq,     // full matrix monoid over GF(q)
  pn,      // partition monoid
  bn,      // Brauer monoid
  tln,     // Temperley-Lieb monoid
  pbn,     // partial Brauer monoid
  instar,  // dual symmetric inverse monoid (block bijections)
  fnstar,  // uniform block bijections
};

Family family_from_string(std::string const& name);
std::string family_to_string(Family f);
std::vector<Family> const& all_families();

// A built family instance: the abstract semigroup plus per-element data.
struct BuiltFamily {
  Family family;
  int n = 0;
  int q = 0;  // 0 unless family == mnq
  FiniteSemigroup s;
  std::vector<Int> rank;            // per element
  std::vector<std::string> labels;  // per element, display form
  // fnstar only: the partition of n given by the block sizes of each element
  std::vector<IntegerPartition> shape;
};

// Enumerates all elements (canonically ordered), fills the product table and
// labels.  q is required exactly when family == mnq.  Throws TooLargeError
// when the element count exceeds the limit.
BuiltFamily build(Family family, int n, std::optional<int> q = std::nullopt,
                  Int max_elements = kDefaultElementLimit);

}  // namespace conglat

#endif  // CONGLAT_FAMILIES_HPP_
