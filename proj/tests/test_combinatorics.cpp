#include "conglat/combinatorics.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace conglat;

TEST_SUITE_BEGIN("combinatorics");

TEST_CASE("stirling2 basics and enumeration oracle") {
  CHECK(stirling2(3, 3) == 1);
  // frozen from the set-partition enumeration oracle
  CHECK(oracles::count_set_partitions(3, 2) == 3);
  CHECK(stirling2(3, 2) == 3);
  CHECK(oracles::count_set_partitions(4, 2) == 7);
  CHECK(stirling2(4, 2) == 7);

  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(3, 5) == 0);

  for (int n = 0; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      CHECK(stirling2(n, r) == oracles::count_set_partitions(n, r));
    }
  }
}

TEST_CASE("bell numbers") {
  CHECK(bell(0) == 1);
  CHECK(bell(2) == 2);
  CHECK(bell(4) == 15);
  CHECK(bell(4) == static_cast<Int>(oracles::set_partitions(4).size()));
  // sum identity, n <= 12
  for (int n = 0; n <= 12; ++n) {
    Int total = 0;
    for (int r = 0; r <= n; ++r) {
      total += stirling2(n, r);
    }
    CHECK(total == bell(n));
  }
}

TEST_CASE("catalan numbers count planar matchings") {
  CHECK(catalan(0) == 1);
  CHECK(oracles::count_noncrossing_matchings(4) == 2);
  CHECK(catalan(2) == 2);
  CHECK(oracles::count_noncrossing_matchings(8) == 14);
  CHECK(catalan(4) == 14);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(3) == 3);
  CHECK(double_factorial(5) == 15);
  CHECK_THROWS_AS(double_factorial(-2), Error);
  // (2k-1)!! counts perfect matchings on 2k points
  for (int k = 1; k <= 6; ++k) {
    CHECK(double_factorial(2 * k - 1)
          == static_cast<Int>(oracles::perfect_matchings(2 * k).size()));
  }
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(5, 0, 2) == 1);
  CHECK(oracles::count_subspaces(2, 1, 2) == 3);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(oracles::count_subspaces(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 6), QNotPrimePowerError);
  // symmetry
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int q : {2, 3, 4, 5}) {
        CHECK(gaussian_binomial(n, r, q) == gaussian_binomial(n, n - r, q));
      }
    }
  }
  CHECK(gaussian_binomial(3, 1, 9) == 91);  // 1 + 9 + 81
}

TEST_CASE("binary ones") {
  CHECK(binary_ones(0) == 0);
  CHECK(binary_ones(4) == 1);
  CHECK(binary_ones(7) == 3);
}

TEST_CASE("involutions") {
  CHECK(involutions(0) == 1);
  CHECK(oracles::count_involutions(3) == 4);
  CHECK(involutions(3) == 4);
  CHECK(oracles::count_involutions(4) == 10);
  CHECK(involutions(4) == 10);
  for (int k = 0; k <= 7; ++k) {
    CHECK(involutions(k) == oracles::count_involutions(k));
  }
}

TEST_CASE("integer partitions") {
  auto p1 = integer_partitions(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].parts == std::vector<int>{1});

  auto p3 = integer_partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].parts == std::vector<int>{3});
  CHECK(p3[1].parts == std::vector<int>{2, 1});
  CHECK(p3[2].parts == std::vector<int>{1, 1, 1});

  CHECK(integer_partitions(5).size() == 7);

  auto mu = IntegerPartition{{2, 1}};
  CHECK(mu.n() == 3);
  auto mult = mu.multiplicities();
  CHECK(mult[1] == 1);
  CHECK(mult[2] == 1);
  CHECK(mu.to_string() == "(2,1)");
}

TEST_CASE("shape count") {
  CHECK(shape_count(IntegerPartition{{1, 1, 1}}) == 1);
  // set partitions of {1,2,3} with block sizes {2,1}: frozen from the
  // enumeration oracle below
  {
    long long count = 0;
    for (auto const& p : oracles::set_partitions(3)) {
      std::vector<int> sizes(3, 0);
      for (int c : p) {
        ++sizes[static_cast<size_t>(c)];
      }
      std::vector<int> nonzero;
      for (int s : sizes) {
        if (s > 0) {
          nonzero.push_back(s);
        }
      }
      std::sort(nonzero.rbegin(), nonzero.rend());
      if (nonzero == std::vector<int>{2, 1}) {
        ++count;
      }
    }
    CHECK(count == 3);
  }
  CHECK(shape_count(IntegerPartition{{2, 1}}) == 3);
  CHECK(shape_count(IntegerPartition{{2, 2}}) == 3);
  // sum over shapes = Bell, n <= 10
  for (int n = 1; n <= 10; ++n) {
    Int total = 0;
    for (auto const& mu : integer_partitions(n)) {
      total += shape_count(mu);
    }
    CHECK(total == bell(n));
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  CHECK_THROWS_AS(factorial(30), OverflowError);
  CHECK_THROWS_AS(checked_pow(10, 25), OverflowError);
}

TEST_CASE("prime powers") {
  Int p = 0, k = 0;
  CHECK(is_prime_power(8, &p, &k));
  CHECK(p == 2);
  CHECK(k == 3);
  CHECK(is_prime_power(9));
  CHECK(is_prime_power(7));
  CHECK(!is_prime_power(6));
  CHECK(!is_prime_power(1));
  CHECK(!is_prime_power(12));
}

TEST_SUITE_END();
