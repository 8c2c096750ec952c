#ifndef CONGLAT_UNARY_HPP_
#define CONGLAT_UNARY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "base.hpp"
#include "semigroup.hpp"

namespace conglat {

constexpr Int kDefaultLatticeLimit = 100000;

// An algebra whose basic operations are all unary: a carrier 0..size-1 and a
// list of total maps on it.  The operations are a generating set; closure
// under composition is not required.
struct UnaryAlgebra {
  int size;
  std::vector<std::vector<int>> ops;
};

// A partition of 0..size-1 in canonical form: classes are numbered by first
// occurrence, so equal partitions have equal representations.
struct EqPartition {
  std::vector<std::uint16_t> cls;
  int num_classes = 0;

  static EqPartition diagonal(int n);
  static EqPartition universal(int n);
  // canonicalise an arbitrary labelling
  static EqPartition from_labels(std::vector<int> const& labels);

  int size() const { return static_cast<int>(cls.size()); }
  bool operator==(EqPartition const&) const = default;
};

// sigma <= tau: every sigma-class is contained in a tau-class
bool refines(EqPartition const& sigma, EqPartition const& tau);

// meet in the congruence lattice = common refinement
EqPartition meet(EqPartition const& a, EqPartition const& b);

// Smallest equivalence containing `base` (Delta if null) and the given
// pairs, closed under every operation of the algebra.  Disjoint-set fixpoint
// over a pending-pair queue.
EqPartition cong_closure(UnaryAlgebra const& a,
                         std::vector<std::pair<int, int>> const& pairs,
                         EqPartition const* base = nullptr);

// join in the congruence lattice: merge blocks, then re-close under the
// operations
EqPartition join(UnaryAlgebra const& a, EqPartition const& x,
                 EqPartition const& y);

bool is_congruence(UnaryAlgebra const& a, EqPartition const& p);

// The complete lattice of congruences: principal congruences closed under
// pairwise join, plus Delta.  congs[0] is Delta; the order of the rest is
// deterministic.  Throws LatticeTooLargeError above max_size.
struct CongLattice {
  int carrier = 0;
  std::vector<EqPartition> congs;
  int bottom = 0;  // Delta
  int top = 0;     // Nabla

  int find(EqPartition const& p) const;  // -1 if absent
};

CongLattice congruence_lattice(UnaryAlgebra const& a,
                               Int max_size = kDefaultLatticeLimit);

// Maximum number of elements in a chain, by DP over the refinement order.
Int lattice_height(std::vector<EqPartition> const& congs);
inline Int lattice_height(CongLattice const& l) {
  return lattice_height(l.congs);
}

// x is modular iff a v (x ^ b) = (a v x) ^ b for all a <= b in the lattice.
bool is_modular_element(UnaryAlgebra const& a, CongLattice const& l, int x);

// Hasse diagram of the lattice, bottom = Delta, nodes labelled by their
// number of classes; edges are covering pairs (by transitive reduction).
std::string lattice_to_dot(CongLattice const& l);

// cover pairs (lower index, upper index) under the deterministic node order
// used by lattice_to_dot
std::vector<std::pair<int, int>> lattice_covers(CongLattice const& l);

// --- G-classes and principal factors -------------------------------------

struct GClasses {
  std::vector<int> comp_of;  // canonical ids (by minimum member)
  int count = 0;
  std::vector<std::uint8_t> leq;  // leq[a * count + b]: a <= b in the order

  bool less_eq(int a, int b) const {
    return leq[static_cast<size_t>(a) * static_cast<size_t>(count)
               + static_cast<size_t>(b)]
           != 0;
  }
  std::vector<int> members(int c) const;
};

// strongly connected components of x -> f(x) over all operations, ordered by
// reachability
GClasses g_classes(UnaryAlgebra const& a);

// Carrier = members + adjoined zero (the last index); operations send x to
// f(x) when both lie in the class and to zero otherwise.  `members` must be
// sorted ascending.
UnaryAlgebra principal_factor(UnaryAlgebra const& a,
                              std::vector<int> const& members);

// the partition with the single block B and singletons elsewhere; B must be
// a subuniverse
EqPartition rees_congruence(UnaryAlgebra const& a, std::vector<int> const& b);

// every congruence of the subalgebra on B extends to A by adding the
// diagonal (always true for unary algebras; verified directly)
bool is_delta_cep(UnaryAlgebra const& a, std::vector<int> const& b,
                  Int max_size = kDefaultLatticeLimit);

// lhs = Ht(Cong(A)); rhs = sum over G-classes of Ht(Cong(class factor)),
// minus the number of classes
std::pair<Int, Int> theorem_g_check(UnaryAlgebra const& a,
                                    Int max_size = kDefaultLatticeLimit);

// ref != Nabla and every congruence other than Nabla is contained in ref
bool unique_max_congruence_is(UnaryAlgebra const& a, EqPartition const& ref,
                              Int max_size = kDefaultLatticeLimit);

// --- acts of a semigroup on itself ----------------------------------------

enum class ActOps {
  automatic,  // generators when |S| > 200, all elements otherwise
  all_elements,
  generators,
};

// The left act of S on itself: one operation per acting element, x -> s*x.
// Congruences of this algebra are exactly the left congruences of S.
UnaryAlgebra left_act(FiniteSemigroup const& s, ActOps ops = ActOps::automatic);
UnaryAlgebra right_act(FiniteSemigroup const& s, ActOps ops = ActOps::automatic);
UnaryAlgebra biact(FiniteSemigroup const& s, ActOps ops = ActOps::automatic);

// Act of S on `members` (sorted ascending) with a zero adjoined when
// with_zero; products landing outside the set go to zero.  Without a zero
// the set must be closed under the chosen actions.
UnaryAlgebra class_act(FiniteSemigroup const& s, std::vector<int> const& members,
                       bool left_ops, bool right_ops, bool with_zero,
                       ActOps ops = ActOps::automatic);

}  // namespace conglat

#endif  // CONGLAT_UNARY_HPP_
