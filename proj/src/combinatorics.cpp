#include "conglat/combinatorics.hpp"

#include <algorithm>
#include <bit>

namespace conglat {

Int factorial(Int n) {
  if (n < 0) {
    throw Error("factorial of a negative integer");
  }
  Int r = 1;
  for (Int i = 2; i <= n; ++i) {
    r = checked_mul(r, i);
  }
  return r;
}

Int binomial(Int n, Int r) {
  if (r < 0 || r > n) {
    return 0;
  }
  r = std::min(r, n - r);
  Int result = 1;
  for (Int i = 1; i <= r; ++i) {
    // exact at every step: result * (n - r + i) is divisible by i here
    result = checked_mul(result, n - r + i) / i;
  }
  return result;
}

Int stirling2(Int n, Int r) {
  if (n < 0 || r < 0) {
    throw Error("stirling2 requires n, r >= 0");
  }
  if (r > n) {
    return 0;
  }
  if (n == 0) {
    return 1;  // S(0,0)
  }
  if (r == 0) {
    return 0;
  }
  // row-by-row DP on S(m, j) for j = 0..r
  std::vector<Int> row(static_cast<size_t>(r) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (Int m = 1; m <= n; ++m) {
    for (Int j = std::min(m, r); j >= 1; --j) {
      row[j] = checked_add(checked_mul(j, row[j]), row[j - 1]);
    }
    row[0] = 0;
  }
  return row[r];
}

Int bell(Int n) {
  Int total = 0;
  for (Int r = 0; r <= n; ++r) {
    total = checked_add(total, stirling2(n, r));
  }
  return total;
}

Int catalan(Int n) {
  if (n < 0) {
    throw Error("catalan requires n >= 0");
  }
  return binomial(2 * n, n) / (n + 1);
}

Int double_factorial(Int k) {
  if (k < -1) {
    throw Error("double_factorial requires k >= -1");
  }
  Int r = 1;
  for (Int i = k; i >= 2; i -= 2) {
    r = checked_mul(r, i);
  }
  return r;
}

bool is_prime_power(Int q, Int* p_out, Int* k_out) {
  if (q < 2) {
    return false;
  }
  Int p = 0;
  for (Int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) {
    p = q;  // q itself is prime
  }
  Int m = q;
  Int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) {
    return false;
  }
  if (p_out) {
    *p_out = p;
  }
  if (k_out) {
    *k_out = k;
  }
  return true;
}

Int gaussian_binomial(Int n, Int r, Int q) {
  if (n < 0 || r < 0) {
    throw Error("gaussian_binomial requires n, r >= 0");
  }
  if (!is_prime_power(q)) {
    throw QNotPrimePowerError("q = " + std::to_string(q)
                              + " is not a prime power");
  }
  if (r > n) {
    return 0;
  }
  // [n r]_q = [n-1 r-1]_q + q^r [n-1 r]_q, computed row by row
  std::vector<Int> row(static_cast<size_t>(r) + 1, 0);
  row[0] = 1;
  for (Int m = 1; m <= n; ++m) {
    for (Int j = std::min(m, r); j >= 1; --j) {
      row[j] = checked_add(row[j - 1], checked_mul(checked_pow(q, j), row[j]));
    }
  }
  return row[r];
}

Int binary_ones(Int n) {
  if (n < 0) {
    throw Error("binary_ones requires n >= 0");
  }
  return std::popcount(static_cast<std::uint64_t>(n));
}

Int involutions(Int k) {
  if (k < 0) {
    throw Error("involutions requires k >= 0");
  }
  Int prev = 1, cur = 1;  // a(0), a(1)
  if (k <= 1) {
    return 1;
  }
  for (Int i = 2; i <= k; ++i) {
    Int next = checked_add(cur, checked_mul(i - 1, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

int IntegerPartition::n() const {
  int total = 0;
  for (int p : parts) {
    total += p;
  }
  return total;
}

std::vector<int> IntegerPartition::multiplicities() const {
  std::vector<int> mu(static_cast<size_t>(n()) + 1, 0);
  for (int p : parts) {
    ++mu[static_cast<size_t>(p)];
  }
  return mu;
}

std::string IntegerPartition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& acc,
                    std::vector<IntegerPartition>& out) {
  if (n == 0) {
    out.push_back(IntegerPartition{acc});
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(n - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<IntegerPartition> integer_partitions(int n) {
  if (n < 1) {
    throw Error("integer_partitions requires n >= 1");
  }
  std::vector<IntegerPartition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

Int shape_count(IntegerPartition const& mu) {
  Int num = factorial(mu.n());
  Int den = 1;
  auto mult = mu.multiplicities();
  for (size_t i = 1; i < mult.size(); ++i) {
    den = checked_mul(den, factorial(mult[i]));
    for (int j = 0; j < mult[i]; ++j) {
      den = checked_mul(den, factorial(static_cast<Int>(i)));
    }
  }
  return num / den;
}

}  // namespace conglat
