#ifndef CONGLAT_HEIGHTS_HPP_
#define CONGLAT_HEIGHTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "base.hpp"
#include "families.hpp"
#include "green.hpp"
#include "unary.hpp"

namespace conglat {

// An exact integer plus a (possibly empty) bag of named symbolic terms, for
// heights that involve groups whose chain heights are only known
// symbolically (large general linear or Young groups).
struct HeightValue {
  Int exact = 0;
  std::vector<std::string> symbolic;

  bool is_exact() const { return symbolic.empty(); }
  std::string to_string() const;

  static HeightValue of(Int v) { return HeightValue{v, {}}; }
  static HeightValue symbol(std::string s) { return HeightValue{0, {std::move(s)}}; }

  HeightValue& operator+=(HeightValue const& other);
  HeightValue times(Int m) const;  // m copies of every term
};

// Per-D-class input to the height formulas.
struct DClassData {
  std::string label;    // "r=2" or "mu=(2,1)"
  Int index = 0;        // rank, when the class is rank-indexed
  Int m_l = 0;          // number of L-classes
  Int m_r = 0;          // number of R-classes
  HeightValue ht_sub;   // Ht(Sub(Gamma))
  HeightValue ht_nsub;  // Ht(NSub(Gamma))
  bool is_minimal = false;
  Int group_order = 0;  // |Gamma| = |H|
  std::string group_name;
};

struct Corrections {
  Int left = 0, right = 0, two = 0;
};

struct HeightReport {
  std::string family;
  int n = 0;
  std::optional<int> q;
  std::string mode;  // formula | acts | brute
  HeightValue lcong, rcong, cong;
  std::vector<DClassData> terms;
  Corrections corrections;
  std::vector<std::string> assumptions;
  // brute mode only: number of congruences per side (left, right, two)
  std::optional<Int> count_left, count_right, count_two;
};

// The general formula over D-class data:
//   lcong = sum m_l * ht_sub  (+ m_l(min) when the minimal L-class splits
//           into several H-classes, i.e. m_r(min) > 1)
//   rcong = dual
//   cong  = sum ht_nsub + [m_r(min) > 1] + [m_l(min) > 1]
// Assumes every non-minimal class is H-separable and the minimal class
// satisfies the unique-maximal-congruence conditions; the assumptions are
// recorded in the report.
HeightReport general_heights(std::vector<DClassData> data);

// The Green's-structure data of a family instance, one DClassData per
// D-class.  Symmetric-group heights use the closed forms; GL(r, q) and
// Young-group heights are brute-forced within max_group_order and reported
// symbolically beyond it.
std::vector<DClassData> family_dclass_data(
    Family family, int n, std::optional<int> q = std::nullopt,
    Int max_group_order = kDefaultGroupOrderLimit);

// general_heights over family_dclass_data, with family/n/q filled in.
HeightReport formula_heights(Family family, int n,
                             std::optional<int> q = std::nullopt,
                             Int max_group_order = kDefaultGroupOrderLimit);

// Heights of the uniform-block-bijection monoid, one D-class per partition
// of n.
HeightReport fstar_heights(int n, Int max_group_order = kDefaultGroupOrderLimit);

struct OutOfValidityRangeError : Error {
  HeightReport general;  // the general_heights value, attached
  OutOfValidityRangeError(std::string const& what, HeightReport g)
      : Error(what), general(std::move(g)) {}
};

enum class CongSide { left, right, two };
CongSide side_from_string(std::string const& s);
std::string side_to_string(CongSide s);

// Literal evaluation of the published closed form for the family and side.
// The closed forms are stated for n >= 4; below that the call throws
// OutOfValidityRangeError carrying the general_heights report.
HeightValue closed_form(Family family, int n, std::optional<int> q,
                        CongSide side,
                        Int max_group_order = kDefaultGroupOrderLimit);

// Decomposition tier: per-D-class principal-factor acts, full congruence
// lattice of each, summed over class counts.
HeightReport acts_heights(BuiltFamily const& built,
                          Int max_lattice = kDefaultLatticeLimit);
HeightReport acts_heights(FiniteSemigroup const& s,
                          Int max_lattice = kDefaultLatticeLimit);

// Brute-force tier: full enumeration of the one- and two-sided congruence
// lattices, with element counts.
HeightReport brute_heights(BuiltFamily const& built,
                           Int max_lattice = kDefaultLatticeLimit);
HeightReport brute_heights(FiniteSemigroup const& s,
                           Int max_lattice = kDefaultLatticeLimit);

}  // namespace conglat

#endif  // CONGLAT_HEIGHTS_HPP_
