#ifndef CONGLAT_GF_HPP_
#define CONGLAT_GF_HPP_

#include <cstdint>
#include <vector>

#include "base.hpp"

namespace conglat {

// The q-element field for a prime power q <= 16, with arithmetic realised by
// precomputed tables.  Elements are 0..q-1; for q = p^k an element encodes a
// polynomial over F_p in base p, reduced modulo a fixed irreducible monic
// polynomial of degree k.  0 and 1 are the additive and multiplicative
// identities.
class GaloisField {
 public:
  explicit GaloisField(int q);

  int q() const { return q_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg_[static_cast<size_t>(b)]); }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
  int inv(int a) const;  // throws on a == 0

 private:
  size_t idx(int a, int b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(q_)
           + static_cast<size_t>(b);
  }
  int q_, p_, k_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace conglat

#endif  // CONGLAT_GF_HPP_
