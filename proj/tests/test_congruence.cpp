#include "conglat/unary.hpp"

#include <random>

#include "conglat/families.hpp"
#include "conglat/green.hpp"
#include "doctest.h"

using namespace conglat;

namespace {

FiniteSemigroup left_zero(int m) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(m),
                                     std::vector<int>(static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      rows[static_cast<size_t>(a)][static_cast<size_t>(b)] = a;
    }
  }
  return FiniteSemigroup::from_cayley_table(rows);
}

UnaryAlgebra m_cycle(int m) {
  UnaryAlgebra a;
  a.size = m;
  std::vector<int> f(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    f[static_cast<size_t>(i)] = (i + 1) % m;
  }
  a.ops.push_back(std::move(f));
  return a;
}

UnaryAlgebra random_algebra(std::mt19937& rng) {
  UnaryAlgebra a;
  a.size = 1 + static_cast<int>(rng() % 8);
  int num_ops = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < num_ops; ++i) {
    std::vector<int> f(static_cast<size_t>(a.size));
    for (auto& v : f) {
      v = static_cast<int>(rng() % static_cast<unsigned>(a.size));
    }
    a.ops.push_back(std::move(f));
  }
  return a;
}

}  // namespace

TEST_SUITE_BEGIN("congruence");

TEST_CASE("partitions") {
  auto d = EqPartition::diagonal(4);
  CHECK(d.num_classes == 4);
  auto u = EqPartition::universal(4);
  CHECK(u.num_classes == 1);
  CHECK(refines(d, u));
  CHECK(!refines(u, d));
  auto p = EqPartition::from_labels({5, 5, 7, 5});
  CHECK(p.num_classes == 2);
  CHECK(p.cls == std::vector<std::uint16_t>{0, 0, 1, 0});
  CHECK(meet(p, EqPartition::from_labels({0, 1, 1, 1})).num_classes == 3);
}

TEST_CASE("closure with no pairs is the diagonal") {
  auto t2 = build(Family::tn, 2);
  auto act = left_act(t2.s);
  CHECK(cong_closure(act, {}) == EqPartition::diagonal(act.size));
}

TEST_CASE("closure of the two constants of T2 merges exactly them") {
  auto t2 = build(Family::tn, 2);
  auto act = left_act(t2.s);
  // locate the two constant maps (rank 1)
  std::vector<int> constants;
  for (int x = 0; x < t2.s.size(); ++x) {
    if (t2.rank[static_cast<size_t>(x)] == 1) {
      constants.push_back(x);
    }
  }
  REQUIRE(constants.size() == 2);
  auto p = cong_closure(act, {{constants[0], constants[1]}});
  CHECK(p.num_classes == act.size - 1);
  CHECK(p.cls[static_cast<size_t>(constants[0])]
        == p.cls[static_cast<size_t>(constants[1])]);
}

TEST_CASE("merging a class element with zero collapses a principal factor") {
  auto t3 = build(Family::tn, 3);
  auto act = left_act(t3.s);
  auto g = g_classes(act);
  // any non-singleton class: merge one member with the adjoined zero
  for (int c = 0; c < g.count; ++c) {
    auto members = g.members(c);
    auto factor = principal_factor(act, members);
    int zero = factor.size - 1;
    auto p = cong_closure(factor, {{0, zero}});
    CHECK(p.num_classes == 1);
  }
}

TEST_CASE("G-classes of acts are Green classes") {
  auto t3 = build(Family::tn, 3);
  GreenStructure green(t3.s);
  auto gl = g_classes(left_act(t3.s));
  CHECK(gl.count == 7);  // 3 + 3 + 1 L-classes
  CHECK(gl.count == green.num_l_classes());
  for (int x = 0; x < t3.s.size(); ++x) {
    for (int y = 0; y < t3.s.size(); ++y) {
      CHECK((gl.comp_of[static_cast<size_t>(x)] == gl.comp_of[static_cast<size_t>(y)])
            == (green.l_class(x) == green.l_class(y)));
    }
  }
  auto gj = g_classes(biact(t3.s));
  CHECK(gj.count == 3);
  auto cyc = g_classes(m_cycle(4));
  CHECK(cyc.count == 1);
}

TEST_CASE("congruence lattice sizes and heights for T2 and T3") {
  auto t2 = build(Family::tn, 2);
  auto lat2 = congruence_lattice(left_act(t2.s));
  CHECK(lattice_height(lat2) == 4);

  auto t3 = build(Family::tn, 3);
  auto left3 = congruence_lattice(left_act(t3.s));
  CHECK(left3.congs.size() == 120);
  CHECK(lattice_height(left3) == 12);
  auto right3 = congruence_lattice(right_act(t3.s));
  CHECK(right3.congs.size() == 287);
  CHECK(lattice_height(right3) == 11);
  auto two3 = congruence_lattice(biact(t3.s));
  CHECK(lattice_height(two3) == 7);

  // every member is an actual congruence, and joins stay inside
  for (auto const& c : left3.congs) {
    CHECK(is_congruence(left_act(t3.s), c));
  }
}

TEST_CASE("biact of the trivial monoid") {
  auto trivial = FiniteSemigroup::from_cayley_table({{0}});
  auto lat = congruence_lattice(biact(trivial));
  CHECK(lat.congs.size() == 1);
  CHECK(lattice_height(lat) == 1);
}

TEST_CASE("left act of a left-zero semigroup accepts every equivalence") {
  auto lz = left_zero(3);
  auto lat = congruence_lattice(left_act(lz));
  CHECK(lat.congs.size() == 5);  // B(3)
  CHECK(lattice_height(lat) == 3);
}

TEST_CASE("lattice limit is enforced") {
  auto lz = left_zero(5);
  CHECK_THROWS_AS(congruence_lattice(left_act(lz), 10), LatticeTooLargeError);
}

TEST_CASE("generator-set closure equals full closure") {
  for (auto family : {Family::tn, Family::bn}) {
    auto built = build(family, 2);
    auto act_all = left_act(built.s, ActOps::all_elements);
    auto act_gen = left_act(built.s, ActOps::generators);
    for (int x = 0; x < built.s.size(); ++x) {
      for (int y = x + 1; y < built.s.size(); ++y) {
        CHECK(cong_closure(act_all, {{x, y}}) == cong_closure(act_gen, {{x, y}}));
      }
    }
    auto l1 = congruence_lattice(act_all);
    auto l2 = congruence_lattice(act_gen);
    CHECK(l1.congs.size() == l2.congs.size());
  }
}

TEST_CASE("theorem on G-class decomposition") {
  // an m-cycle: congruences correspond to divisors; chain 1 | 2 | 4
  auto cyc = m_cycle(4);
  auto [lhs, rhs] = theorem_g_check(cyc);
  CHECK(lhs == 3);
  CHECK(rhs == 3);

  auto t2 = build(Family::tn, 2);
  auto [l2, r2] = theorem_g_check(left_act(t2.s));
  CHECK(l2 == 4);
  CHECK(r2 == 4);

  // single-G-class algebra: height is the factor height minus one
  auto single = m_cycle(6);
  auto g = g_classes(single);
  REQUIRE(g.count == 1);
  auto factor = principal_factor(single, g.members(0));
  CHECK(lattice_height(congruence_lattice(single))
        == lattice_height(congruence_lattice(factor)) - 1);

  std::mt19937 rng(0xc0ffee);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_algebra(rng);
    auto [gl, gr] = theorem_g_check(a);
    CHECK(gl == gr);
  }
}

TEST_CASE("rees congruences and modularity") {
  auto trivial_ok = [](UnaryAlgebra const& a, std::vector<int> const& b) {
    auto rho = rees_congruence(a, b);
    auto lat = congruence_lattice(a);
    int idx = lat.find(rho);
    REQUIRE(idx >= 0);
    CHECK(is_modular_element(a, lat, idx));
    // the height splits through any modular element
    Int below = 0, above = 0;
    std::vector<EqPartition> down, up;
    for (auto const& c : lat.congs) {
      if (refines(c, rho)) {
        down.push_back(c);
      }
      if (refines(rho, c)) {
        up.push_back(c);
      }
    }
    below = lattice_height(down);
    above = lattice_height(up);
    CHECK(lattice_height(lat) == below + above - 1);
  };

  std::mt19937 rng(0xfeedbeef);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 25; ++trial) {
    auto a = random_algebra(rng);
    CongLattice lat;
    try {
      lat = congruence_lattice(a, 500);
    } catch (LatticeTooLargeError const&) {
      continue;
    }
    // subalgebra generated by element 0
    std::vector<int> b{0};
    std::vector<bool> in_b(static_cast<size_t>(a.size), false);
    in_b[0] = true;
    for (size_t head = 0; head < b.size(); ++head) {
      for (auto const& f : a.ops) {
        int y = f[static_cast<size_t>(b[head])];
        if (!in_b[static_cast<size_t>(y)]) {
          in_b[static_cast<size_t>(y)] = true;
          b.push_back(y);
        }
      }
    }
    std::sort(b.begin(), b.end());
    trivial_ok(a, b);
    ++tested;
  }
  CHECK(tested >= 25);
}

TEST_CASE("whole algebra and singleton fixed points as rees subalgebras") {
  auto t2 = build(Family::tn, 2);
  auto act = left_act(t2.s);
  std::vector<int> all(static_cast<size_t>(act.size));
  for (int i = 0; i < act.size; ++i) {
    all[static_cast<size_t>(i)] = i;
  }
  CHECK(rees_congruence(act, all) == EqPartition::universal(act.size));
  // a constant map is a fixed point of every left translation
  std::vector<int> constants;
  for (int x = 0; x < t2.s.size(); ++x) {
    if (t2.rank[static_cast<size_t>(x)] == 1) {
      constants.push_back(x);
    }
  }
  CHECK(rees_congruence(act, {constants[0]}) == EqPartition::diagonal(act.size));
  CHECK_THROWS_AS(rees_congruence(act, {*t2.s.identity()}), NotASubalgebraError);
}

TEST_CASE("delta extension property holds for unary subalgebras") {
  std::mt19937 rng(0xabcdef);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_algebra(rng);
    std::vector<int> b{static_cast<int>(rng() % static_cast<unsigned>(a.size))};
    std::vector<bool> in_b(static_cast<size_t>(a.size), false);
    in_b[static_cast<size_t>(b[0])] = true;
    for (size_t head = 0; head < b.size(); ++head) {
      for (auto const& f : a.ops) {
        int y = f[static_cast<size_t>(b[head])];
        if (!in_b[static_cast<size_t>(y)]) {
          in_b[static_cast<size_t>(y)] = true;
          b.push_back(y);
        }
      }
    }
    std::sort(b.begin(), b.end());
    CHECK(is_delta_cep(a, b));
  }
}

TEST_CASE("unique maximal congruence") {
  // simple act with lattice {Delta, Nabla}: ref = Delta
  auto cyc = m_cycle(3);
  CHECK(unique_max_congruence_is(cyc, EqPartition::diagonal(3)));

  // left-zero semigroup of size 2: the minimal L-class act has the proper
  // congruence collapsing L above H, so H is not the unique maximal one
  auto lz = left_zero(2);
  GreenStructure g(lz);
  auto act = class_act(lz, {0, 1}, true, false, true);
  std::vector<int> labels{0, 1, 2};  // H restricted: singletons plus zero
  CHECK(!unique_max_congruence_is(act, EqPartition::from_labels(labels)));

  // minimal R-class act of T_n: H (= Delta there) is the unique maximal
  auto t3 = build(Family::tn, 3);
  GreenStructure gt(t3.s);
  for (auto const& d : gt.d_classes()) {
    if (!d.is_minimal) {
      continue;
    }
    auto members = gt.r_class_elements(d.r_ids[0]);
    auto ract = class_act(t3.s, members, false, true, false);
    std::vector<int> h_labels;
    for (int x : members) {
      h_labels.push_back(gt.h_class(x));
    }
    CHECK(unique_max_congruence_is(ract, EqPartition::from_labels(h_labels)));
  }
}

TEST_CASE("H bar is a congruence of every L-class factor act") {
  for (auto family : {Family::tn, Family::bn}) {
    auto built = build(family, 3);
    GreenStructure g(built.s);
    for (int lid = 0; lid < g.num_l_classes(); ++lid) {
      auto members = g.l_class_elements(lid);
      auto act = class_act(built.s, members, true, false, true);
      std::vector<int> labels;
      for (int x : members) {
        labels.push_back(g.h_class(x));
      }
      labels.push_back(g.num_h_classes());  // zero alone
      CHECK(is_congruence(act, EqPartition::from_labels(labels)));
    }
  }
}

TEST_CASE("minimal L-class factors split as a topped lattice") {
  // when a G-class is a subalgebra, the factor height is one more
  for (auto family : {Family::tn, Family::pn}) {
    auto built = build(family, 2);
    GreenStructure g(built.s);
    for (auto const& d : g.d_classes()) {
      if (!d.is_minimal) {
        continue;
      }
      auto members = g.l_class_elements(d.l_ids[0]);
      auto with_zero = class_act(built.s, members, true, false, true);
      auto without = class_act(built.s, members, true, false, false);
      CHECK(lattice_height(congruence_lattice(with_zero))
            == lattice_height(congruence_lattice(without)) + 1);
    }
  }
}

TEST_CASE("dot export shape") {
  auto lz = left_zero(2);
  auto lat = congruence_lattice(left_act(lz));
  REQUIRE(lat.congs.size() == 2);
  auto dot = lattice_to_dot(lat);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
  auto covers = lattice_covers(lat);
  REQUIRE(covers.size() == 1);
}

TEST_SUITE_END();
