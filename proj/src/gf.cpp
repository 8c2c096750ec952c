#include "conglat/gf.hpp"

#include "conglat/combinatorics.hpp"

namespace conglat {

namespace {

using Poly = std::vector<int>;  // coefficients, index = degree, over F_p

Poly decode(int x, int p, int k) {
  Poly c(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    c[static_cast<size_t>(i)] = x % p;
    x /= p;
  }
  return c;
}

int encode(Poly const& c, int p) {
  int x = 0;
  for (size_t i = c.size(); i-- > 0;) {
    x = x * p + c[i];
  }
  return x;
}

Poly poly_mul_mod(Poly const& a, Poly const& b, Poly const& modulus, int p) {
  std::vector<int> prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  // reduce by the monic modulus of degree k
  size_t k = modulus.size() - 1;
  for (size_t d = prod.size(); d-- > k;) {
    int c = prod[d];
    if (c == 0) {
      continue;
    }
    prod[d] = 0;
    for (size_t i = 0; i < k; ++i) {
      prod[d - k + i] = ((prod[d - k + i] - c * modulus[i]) % p + p * p) % p;
    }
  }
  prod.resize(k);
  return prod;
}

// Plain trial division: does the monic poly `a` have a monic divisor of
// degree d with 1 <= d <= deg(a)/2?
bool is_irreducible(Poly const& a, int p) {
  int deg = static_cast<int>(a.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) {
      count *= p;
    }
    for (int lo = 0; lo < count; ++lo) {
      Poly div = decode(lo, p, d);
      div.push_back(1);  // monic of degree d
      // remainder of a / div
      Poly rem = a;
      for (size_t t = rem.size(); t-- > div.size() - 1;) {
        if (t + 1 < div.size()) {
          break;
        }
        int c = rem[t];
        if (c == 0) {
          continue;
        }
        size_t shift = t - (div.size() - 1);
        for (size_t i = 0; i < div.size(); ++i) {
          rem[shift + i] = ((rem[shift + i] - c * div[i]) % p + p * p) % p;
        }
      }
      bool zero = true;
      for (size_t i = 0; i + 1 < div.size(); ++i) {
        if (rem[i] != 0) {
          zero = false;
          break;
        }
      }
      if (zero) {
        return false;
      }
    }
  }
  return true;
}

Poly find_irreducible(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) {
    count *= p;
  }
  for (int lo = 0; lo < count; ++lo) {
    Poly cand = decode(lo, p, k);
    cand.push_back(1);  // monic
    if (is_irreducible(cand, p)) {
      return cand;
    }
  }
  throw Error("no irreducible polynomial found");  // unreachable for valid p,k
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  Int p, k;
  if (!is_prime_power(q, &p, &k)) {
    throw QNotPrimePowerError("q = " + std::to_string(q)
                              + " is not a prime power");
  }
  if (q > 16) {
    throw TooLargeError("fields with q > 16 are not supported");
  }
  p_ = static_cast<int>(p);
  k_ = static_cast<int>(k);

  size_t n = static_cast<size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);

  Poly modulus = (k_ == 1) ? Poly{0, 1} : find_irreducible(p_, k_);

  for (int a = 0; a < q_; ++a) {
    Poly pa = decode(a, p_, k_);
    for (int b = 0; b < q_; ++b) {
      Poly pb = decode(b, p_, k_);
      Poly sum(static_cast<size_t>(k_));
      for (int i = 0; i < k_; ++i) {
        sum[static_cast<size_t>(i)] =
            (pa[static_cast<size_t>(i)] + pb[static_cast<size_t>(i)]) % p_;
      }
      add_[idx(a, b)] = static_cast<std::uint8_t>(encode(sum, p_));
      mul_[idx(a, b)] =
          static_cast<std::uint8_t>(encode(poly_mul_mod(pa, pb, modulus, p_), p_));
    }
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) == 0) {
        neg_[static_cast<size_t>(a)] = static_cast<std::uint8_t>(b);
      }
      if (mul(a, b) == 1) {
        inv_[static_cast<size_t>(a)] = static_cast<std::uint8_t>(b);
      }
    }
  }
}

int GaloisField::inv(int a) const {
  if (a == 0) {
    throw Error("division by zero in GF(" + std::to_string(q_) + ")");
  }
  return inv_[static_cast<size_t>(a)];
}

}  // namespace conglat
