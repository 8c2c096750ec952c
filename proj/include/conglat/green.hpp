#ifndef CONGLAT_GREEN_HPP_
#define CONGLAT_GREEN_HPP_

#include <cstdint>
#include <vector>

#include "base.hpp"
#include "groups.hpp"
#include "semigroup.hpp"

namespace conglat {

// The group structure carried by an H-class: the right translations that
// stabilise it, and the induced star product on H itself with respect to the
// canonical base point (the smallest element of H).
struct SchutzGroup {
  std::vector<int> h_class;  // element indices, ascending
  int base_point;            // h_class[0]
  PermutationGroup right_translations;  // acting on positions in h_class
  // star[i][j] = position of h_class[i] * h_class[j] under the star product
  std::vector<std::vector<int>> star;
};

struct DClassSummary {
  int id;
  std::vector<int> l_ids;  // canonical (ascending) L-class ids in this D-class
  std::vector<int> r_ids;
  int num_l() const { return static_cast<int>(l_ids.size()); }
  int num_r() const { return static_cast<int>(r_ids.size()); }
  // rows indexed by r_ids, columns by l_ids, 1 iff the H-class contains an
  // idempotent
  std::vector<std::vector<std::uint8_t>> idempotent_matrix;
  bool is_regular;
  bool is_minimal;
  Int group_order;  // |H| = |Schutzenberger group|, from a representative
  int rep_h_class;  // the H-class used as representative
};

// L/R/D/H partitions of a finite semigroup, the partial orders on the class
// ids, and the per-D-class summary data.  Class ids are canonical: ordered
// by the minimum element index of the class.  D-classes are computed as the
// join of L and R, and the D order as the transitive closure of the L and R
// orders; for finite semigroups these agree with the J relation.
class GreenStructure {
 public:
  explicit GreenStructure(FiniteSemigroup const& s);

  int num_l_classes() const { return num_l_; }
  int num_r_classes() const { return num_r_; }
  int num_d_classes() const { return num_d_; }
  int num_h_classes() const { return num_h_; }

  int l_class(int x) const { return l_of_[static_cast<size_t>(x)]; }
  int r_class(int x) const { return r_of_[static_cast<size_t>(x)]; }
  int d_class(int x) const { return d_of_[static_cast<size_t>(x)]; }
  int h_class(int x) const { return h_of_[static_cast<size_t>(x)]; }

  // class order predicates: a <= b in the L/R/D preorder on class ids
  bool l_leq(int a, int b) const { return l_leq_[at(a, b, num_l_)]; }
  bool r_leq(int a, int b) const { return r_leq_[at(a, b, num_r_)]; }
  bool d_leq(int a, int b) const { return d_leq_[at(a, b, num_d_)]; }

  std::vector<int> l_class_elements(int lid) const;
  std::vector<int> r_class_elements(int rid) const;
  std::vector<int> d_class_elements(int did) const;
  std::vector<int> h_class_elements(int hid) const;

  std::vector<DClassSummary> const& d_classes() const { return d_classes_; }

 private:
  static size_t at(int a, int b, int n) {
    return static_cast<size_t>(a) * static_cast<size_t>(n)
           + static_cast<size_t>(b);
  }

  int num_l_ = 0, num_r_ = 0, num_d_ = 0, num_h_ = 0;
  std::vector<int> l_of_, r_of_, d_of_, h_of_;
  std::vector<std::uint8_t> l_leq_, r_leq_, d_leq_;
  std::vector<DClassSummary> d_classes_;
};

bool row_faithful(std::vector<std::vector<std::uint8_t>> const& m);
bool column_faithful(std::vector<std::vector<std::uint8_t>> const& m);

// The right Schutzenberger group of the H-class hid, with the star product.
SchutzGroup schutzenberger(FiniteSemigroup const& s, GreenStructure const& g,
                           int hid);

enum class ClassKind { l_class, r_class };

// Direct test of the separation condition: for every pair x, y in the class
// that is not H-related there is some s with exactly one of sx, sy (resp.
// xs, ys) inside the class.
bool is_h_separable(FiniteSemigroup const& s, GreenStructure const& g,
                    ClassKind kind, int class_id);

// Verifies both stability implications for all elements and multipliers.
// True for every finite semigroup; exercised as a sanity check.
bool check_stability(FiniteSemigroup const& s, GreenStructure const& g);

}  // namespace conglat

#endif  // CONGLAT_GREEN_HPP_
