#include "conglat/heights.hpp"

#include <algorithm>
#include <map>

namespace conglat {

std::string HeightValue::to_string() const {
  if (is_exact()) {
    return std::to_string(exact);
  }
  std::string s;
  for (auto const& term : symbolic) {
    if (!s.empty()) {
      s += " + ";
    }
    s += term;
  }
  if (exact != 0) {
    s += " + " + std::to_string(exact);
  }
  return s;
}

HeightValue& HeightValue::operator+=(HeightValue const& other) {
  exact = checked_add(exact, other.exact);
  symbolic.insert(symbolic.end(), other.symbolic.begin(), other.symbolic.end());
  return *this;
}

HeightValue HeightValue::times(Int m) const {
  HeightValue out;
  out.exact = checked_mul(exact, m);
  for (auto const& term : symbolic) {
    out.symbolic.push_back(m == 1 ? term : std::to_string(m) + "*" + term);
  }
  return out;
}

CongSide side_from_string(std::string const& s) {
  if (s == "left") {
    return CongSide::left;
  }
  if (s == "right") {
    return CongSide::right;
  }
  if (s == "two") {
    return CongSide::two;
  }
  throw Error("unknown side: " + s);
}

std::string side_to_string(CongSide s) {
  switch (s) {
    case CongSide::left: return "left";
    case CongSide::right: return "right";
    case CongSide::two: return "two";
  }
  throw Error("unknown side");
}

HeightReport general_heights(std::vector<DClassData> data) {
  if (data.empty()) {
    throw Error("general_heights requires at least one D-class");
  }
  int min_index = -1;
  for (size_t i = 0; i < data.size(); ++i) {
    if (data[i].is_minimal) {
      if (min_index >= 0) {
        throw Error("more than one D-class is marked minimal");
      }
      min_index = static_cast<int>(i);
    }
  }
  if (min_index < 0) {
    throw Error("no D-class is marked minimal");
  }
  auto const& minimal = data[static_cast<size_t>(min_index)];

  HeightReport report;
  report.mode = "formula";
  for (auto const& d : data) {
    report.lcong += d.ht_sub.times(d.m_l);
    report.rcong += d.ht_sub.times(d.m_r);
    report.cong += d.ht_nsub;
  }
  // The minimal L-class is a single H-class exactly when the minimal D-class
  // has a single R-class; in that case no correction is needed on the left.
  report.corrections.left = minimal.m_r > 1 ? minimal.m_l : 0;
  report.corrections.right = minimal.m_l > 1 ? minimal.m_r : 0;
  report.corrections.two = (minimal.m_r > 1 ? 1 : 0) + (minimal.m_l > 1 ? 1 : 0);
  report.lcong += HeightValue::of(report.corrections.left);
  report.rcong += HeightValue::of(report.corrections.right);
  report.cong += HeightValue::of(report.corrections.two);

  report.assumptions.push_back("all non-minimal D-classes are H-separable");
  report.assumptions.push_back(
      minimal.m_r > 1
          ? "H restricted to a minimal L-class is the unique maximal "
            "congruence of its act"
          : "each minimal L-class is a single H-class");
  report.assumptions.push_back(
      minimal.m_l > 1
          ? "H restricted to a minimal R-class is the unique maximal "
            "congruence of its act"
          : "each minimal R-class is a single H-class");
  report.terms = std::move(data);
  return report;
}

namespace {

DClassData symmetric_class(Int r, Int m_l, Int m_r) {
  DClassData d;
  d.label = "r=" + std::to_string(r);
  d.index = r;
  d.m_l = m_l;
  d.m_r = m_r;
  d.ht_sub = HeightValue::of(ht_sub_symmetric(r));
  d.ht_nsub = HeightValue::of(ht_nsub_symmetric(r));
  d.group_order = factorial(r);
  d.group_name = r >= 2 ? "S_" + std::to_string(r) : "1";
  return d;
}

DClassData trivial_group_class(Int r, Int m_l, Int m_r) {
  DClassData d;
  d.label = "r=" + std::to_string(r);
  d.index = r;
  d.m_l = m_l;
  d.m_r = m_r;
  d.ht_sub = HeightValue::of(1);
  d.ht_nsub = HeightValue::of(1);
  d.group_order = 1;
  d.group_name = "1";
  return d;
}

std::vector<DClassData> trivial_monoid_data() {
  auto d = trivial_group_class(0, 1, 1);
  d.is_minimal = true;
  return {d};
}

}  // namespace

std::vector<DClassData> family_dclass_data(Family family, int n,
                                           std::optional<int> q_opt,
                                           Int max_group_order) {
  if (family == Family::mnq) {
    if (!q_opt.has_value()) {
      throw MissingQError("family mnq requires q");
    }
    if (!is_prime_power(*q_opt)) {
      throw QNotPrimePowerError("q = " + std::to_string(*q_opt)
                                + " is not a prime power");
    }
  }
  if (n == 0) {
    return trivial_monoid_data();
  }
  std::vector<DClassData> data;
  switch (family) {
    case Family::tn:
      for (Int r = 1; r <= n; ++r) {
        data.push_back(symmetric_class(r, binomial(n, r), stirling2(n, r)));
      }
      break;
    case Family::ptn:
      for (Int r = 0; r <= n; ++r) {
        data.push_back(
            symmetric_class(r, binomial(n, r), stirling2(n + 1, r + 1)));
      }
      break;
    case Family::in:
      for (Int r = 0; r <= n; ++r) {
        data.push_back(symmetric_class(r, binomial(n, r), binomial(n, r)));
      }
      break;
    case Family::on:
      for (Int r = 1; r <= n; ++r) {
        data.push_back(
            trivial_group_class(r, binomial(n, r), binomial(n - 1, r - 1)));
      }
      break;
    case Family::pn:
      for (Int r = 0; r <= n; ++r) {
        Int m = 0;
        for (Int k = r; k <= n; ++k) {
          m = checked_add(m, checked_mul(stirling2(n, k), binomial(k, r)));
        }
        data.push_back(symmetric_class(r, m, m));
      }
      break;
    case Family::bn:
      for (Int r = n % 2; r <= n; r += 2) {
        Int m = checked_mul(binomial(n, r), double_factorial(n - r - 1));
        data.push_back(symmetric_class(r, m, m));
      }
      break;
    case Family::tln:
      for (Int r = n % 2; r <= n; r += 2) {
        Int m = checked_mul(r + 1, binomial(n + 1, (n - r) / 2)) / (n + 1);
        data.push_back(trivial_group_class(r, m, m));
      }
      break;
    case Family::pbn:
      for (Int r = 0; r <= n; ++r) {
        Int m = checked_mul(binomial(n, r), involutions(n - r));
        data.push_back(symmetric_class(r, m, m));
      }
      break;
    case Family::instar:
      for (Int r = 1; r <= n; ++r) {
        data.push_back(symmetric_class(r, stirling2(n, r), stirling2(n, r)));
      }
      break;
    case Family::mnq: {
      int q = *q_opt;
      for (Int r = 0; r <= n; ++r) {
        DClassData d;
        d.label = "r=" + std::to_string(r);
        d.index = r;
        d.m_l = d.m_r = gaussian_binomial(n, r, q);
        d.group_order = gl_order(static_cast<int>(r), q);
        d.group_name =
            "GL(" + std::to_string(r) + "," + std::to_string(q) + ")";
        if (d.group_order <= max_group_order) {
          auto gl = PermutationGroup::general_linear(static_cast<int>(r), q);
          d.ht_sub = HeightValue::of(brute_sub_height(gl, max_group_order));
          d.ht_nsub = HeightValue::of(brute_nsub_height(gl, max_group_order));
        } else {
          d.ht_sub = HeightValue::symbol("Ht(Sub(" + d.group_name + "))");
          d.ht_nsub = HeightValue::symbol("Ht(NSub(" + d.group_name + "))");
        }
        data.push_back(std::move(d));
      }
      break;
    }
    case Family::fnstar: {
      for (auto const& mu : integer_partitions(n)) {
        DClassData d;
        d.label = "mu=" + mu.to_string();
        d.index = static_cast<Int>(mu.parts.size());
        d.m_l = d.m_r = shape_count(mu);
        d.group_name = "S_" + mu.to_string();
        d.group_order = 1;
        for (int m : mu.multiplicities()) {
          d.group_order = checked_mul(d.group_order, factorial(m));
        }
        d.ht_sub = HeightValue::of(ht_sub_young(mu));
        if (d.group_order <= max_group_order) {
          d.ht_nsub = HeightValue::of(brute_nsub_height(
              PermutationGroup::young_subgroup(mu), max_group_order));
        } else {
          d.ht_nsub = HeightValue::symbol("Ht(NSub(" + d.group_name + "))");
        }
        d.is_minimal = mu.parts.size() == 1;  // mu = (n)
        data.push_back(std::move(d));
      }
      return data;  // minimal flag already set
    }
  }
  data.front().is_minimal = true;  // smallest rank is the minimal D-class
  return data;
}

HeightReport formula_heights(Family family, int n, std::optional<int> q,
                             Int max_group_order) {
  auto report =
      general_heights(family_dclass_data(family, n, q, max_group_order));
  report.family = family_to_string(family);
  report.n = n;
  report.q = q;
  return report;
}

HeightReport fstar_heights(int n, Int max_group_order) {
  if (n < 1) {
    throw Error("fstar_heights requires n >= 1");
  }
  return formula_heights(Family::fnstar, n, std::nullopt, max_group_order);
}

HeightValue closed_form(Family family, int n, std::optional<int> q,
                        CongSide side, Int max_group_order) {
  if (family == Family::pbn || family == Family::fnstar) {
    throw Error("no published closed form for family "
                + family_to_string(family));
  }
  if (family == Family::mnq && !q.has_value()) {
    throw MissingQError("family mnq requires q");
  }
  if (n < 4) {
    throw OutOfValidityRangeError(
        "closed forms are stated for n >= 4; use the general formula",
        formula_heights(family, n, q, max_group_order));
  }
  auto hts = [](Int r) { return ht_sub_symmetric(r); };
  bool one_sided = side != CongSide::two;
  switch (family) {
    case Family::tn: {
      if (!one_sided) {
        return HeightValue::of(3 * static_cast<Int>(n) - 1);
      }
      Int total = side == CongSide::right ? 1 : 0;
      for (Int r = 1; r <= n; ++r) {
        Int m = side == CongSide::left ? binomial(n, r) : stirling2(n, r);
        total = checked_add(total, checked_mul(m, hts(r)));
      }
      return HeightValue::of(total);
    }
    case Family::ptn: {
      if (!one_sided) {
        return HeightValue::of(3 * static_cast<Int>(n) - 1);
      }
      Int total = 0;
      for (Int r = 0; r <= n; ++r) {
        Int m = side == CongSide::left ? binomial(n, r)
                                       : stirling2(n + 1, r + 1);
        total = checked_add(total, checked_mul(m, hts(r)));
      }
      return HeightValue::of(total);
    }
    case Family::in: {
      if (!one_sided) {
        return HeightValue::of(3 * static_cast<Int>(n) - 1);
      }
      Int total = 0;
      for (Int r = 0; r <= n; ++r) {
        total = checked_add(total, checked_mul(binomial(n, r), hts(r)));
      }
      return HeightValue::of(total);
    }
    case Family::on:
      switch (side) {
        case CongSide::left: return HeightValue::of(checked_pow(2, n) - 1);
        case CongSide::right: return HeightValue::of(checked_pow(2, n - 1) + 1);
        case CongSide::two: return HeightValue::of(static_cast<Int>(n) + 1);
      }
      break;
    case Family::mnq: {
      HeightValue total;
      for (Int r = 0; r <= n; ++r) {
        std::string name =
            "GL(" + std::to_string(r) + "," + std::to_string(*q) + ")";
        Int order = gl_order(static_cast<int>(r), *q);
        HeightValue h;
        if (order <= max_group_order) {
          auto gl = PermutationGroup::general_linear(static_cast<int>(r), *q);
          h = HeightValue::of(one_sided ? brute_sub_height(gl, max_group_order)
                                        : brute_nsub_height(gl, max_group_order));
        } else {
          h = HeightValue::symbol(one_sided ? "Ht(Sub(" + name + "))"
                                            : "Ht(NSub(" + name + "))");
        }
        total += one_sided ? h.times(gaussian_binomial(n, r, *q)) : h;
      }
      return total;
    }
    case Family::pn: {
      if (!one_sided) {
        return HeightValue::of(3 * static_cast<Int>(n) + 1);
      }
      Int total = bell(n);
      for (Int r = 0; r <= n; ++r) {
        Int m = 0;
        for (Int k = r; k <= n; ++k) {
          m = checked_add(m, checked_mul(stirling2(n, k), binomial(k, r)));
        }
        total = checked_add(total, checked_mul(m, hts(r)));
      }
      return HeightValue::of(total);
    }
    case Family::bn: {
      if (!one_sided) {
        return HeightValue::of(3 * (static_cast<Int>(n) / 2) + 3);
      }
      Int total = double_factorial(2 * ((static_cast<Int>(n) - 1) / 2) + 1);
      for (Int k = 0; k <= n / 2; ++k) {
        total = checked_add(
            total, checked_mul(checked_mul(binomial(n, 2 * k),
                                           double_factorial(2 * k - 1)),
                               hts(n - 2 * k)));
      }
      return HeightValue::of(total);
    }
    case Family::tln: {
      if (!one_sided) {
        return HeightValue::of(static_cast<Int>(n) / 2 + 3);
      }
      return HeightValue::of(checked_add(catalan((n + 1) / 2),
                                         binomial(n, n / 2)));
    }
    case Family::instar: {
      if (!one_sided) {
        return HeightValue::of(3 * static_cast<Int>(n) - 2);
      }
      Int total = 0;
      for (Int r = 1; r <= n; ++r) {
        total = checked_add(total, checked_mul(stirling2(n, r), hts(r)));
      }
      return HeightValue::of(total);
    }
    case Family::pbn:
    case Family::fnstar:
      throw Error("no published closed form for family "
                  + family_to_string(family));
  }
  throw Error("unhandled family in closed_form");
}

namespace {

HeightReport make_report(BuiltFamily const* built, FiniteSemigroup const* s) {
  HeightReport report;
  if (built != nullptr) {
    report.family = family_to_string(built->family);
    report.n = built->n;
    if (built->family == Family::mnq) {
      report.q = built->q;
    }
  } else {
    report.family = "cayley";
    report.n = s->size();
  }
  return report;
}

HeightReport acts_heights_impl(BuiltFamily const* built,
                               FiniteSemigroup const& s, Int max_lattice) {
  GreenStructure green(s);
  HeightReport report = make_report(built, &s);
  report.mode = "acts";
  Int lcong = 0, rcong = 0, cong = 0;
  // generator operations give the same congruences (composition law) and
  // keep the closures cheap
  for (auto const& d : green.d_classes()) {
    {
      auto act = class_act(s, green.l_class_elements(d.l_ids.front()), true,
                           false, true, ActOps::generators);
      Int h = lattice_height(congruence_lattice(act, max_lattice));
      lcong = checked_add(lcong, checked_mul(d.num_l(), h - 1));
    }
    {
      auto act = class_act(s, green.r_class_elements(d.r_ids.front()), false,
                           true, true, ActOps::generators);
      Int h = lattice_height(congruence_lattice(act, max_lattice));
      rcong = checked_add(rcong, checked_mul(d.num_r(), h - 1));
    }
    {
      auto act = class_act(s, green.d_class_elements(d.id), true, true, true,
                           ActOps::generators);
      Int h = lattice_height(congruence_lattice(act, max_lattice));
      cong = checked_add(cong, h);
    }
  }
  cong -= green.num_d_classes();
  report.lcong = HeightValue::of(lcong);
  report.rcong = HeightValue::of(rcong);
  report.cong = HeightValue::of(cong);
  return report;
}

HeightReport brute_heights_impl(BuiltFamily const* built,
                                FiniteSemigroup const& s, Int max_lattice) {
  HeightReport report = make_report(built, &s);
  report.mode = "brute";
  {
    auto lattice = congruence_lattice(left_act(s, ActOps::generators), max_lattice);
    report.count_left = static_cast<Int>(lattice.congs.size());
    report.lcong = HeightValue::of(lattice_height(lattice));
  }
  {
    auto lattice = congruence_lattice(right_act(s, ActOps::generators), max_lattice);
    report.count_right = static_cast<Int>(lattice.congs.size());
    report.rcong = HeightValue::of(lattice_height(lattice));
  }
  {
    auto lattice = congruence_lattice(biact(s, ActOps::generators), max_lattice);
    report.count_two = static_cast<Int>(lattice.congs.size());
    report.cong = HeightValue::of(lattice_height(lattice));
  }
  return report;
}

}  // namespace

HeightReport acts_heights(BuiltFamily const& built, Int max_lattice) {
  return acts_heights_impl(&built, built.s, max_lattice);
}

HeightReport acts_heights(FiniteSemigroup const& s, Int max_lattice) {
  return acts_heights_impl(nullptr, s, max_lattice);
}

HeightReport brute_heights(BuiltFamily const& built, Int max_lattice) {
  return brute_heights_impl(&built, built.s, max_lattice);
}

HeightReport brute_heights(FiniteSemigroup const& s, Int max_lattice) {
  return brute_heights_impl(nullptr, s, max_lattice);
}

}  // namespace conglat
