// conglat: compute heights of left, right and two-sided congruence lattices
// of finite semigroups, three independent ways, and cross-check them.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "conglat/families.hpp"
#include "conglat/green.hpp"
#include "conglat/heights.hpp"
#include "conglat/report_json.hpp"
#include "conglat/semigroup.hpp"
#include "conglat/unary.hpp"

using namespace conglat;

namespace {

struct Limits {
  Int max_group_order = kDefaultGroupOrderLimit;
  Int max_lattice = kDefaultLatticeLimit;
  Int max_elements = kDefaultElementLimit;
  Int brute_limit = 60;  // largest |S| the verify verb brute-forces
  int threads = 0;       // 0 = hardware
};

std::pair<int, int> parse_range(std::string const& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = std::stoi(text);
    return {n, n};
  }
  int lo = std::stoi(text.substr(0, dots));
  int hi = std::stoi(text.substr(dots + 2));
  if (hi < lo) {
    throw Error("empty range: " + text);
  }
  return {lo, hi};
}

std::vector<CongSide> parse_sides(std::string const& side) {
  if (side == "all") {
    return {CongSide::left, CongSide::right, CongSide::two};
  }
  return {side_from_string(side)};
}

HeightValue const& side_value(HeightReport const& r, CongSide s) {
  switch (s) {
    case CongSide::left: return r.lcong;
    case CongSide::right: return r.rcong;
    case CongSide::two: return r.cong;
  }
  throw Error("unknown side");
}

std::optional<Int> side_count(HeightReport const& r, CongSide s) {
  switch (s) {
    case CongSide::left: return r.count_left;
    case CongSide::right: return r.count_right;
    case CongSide::two: return r.count_two;
  }
  return std::nullopt;
}

void emit_report(HeightReport const& report, std::vector<CongSide> const& sides,
                 std::string const& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(report).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    out << "family,n,side,height,mode\n";
    for (auto s : sides) {
      out << report.family << "," << report.n << "," << side_to_string(s)
          << "," << side_value(report, s).to_string() << "," << report.mode
          << "\n";
    }
    return;
  }
  for (auto s : sides) {
    if (auto count = side_count(report, s)) {
      if (sides.size() > 1) {
        out << side_to_string(s) << " ";
      }
      out << "congruences: " << *count
          << ", height: " << side_value(report, s).to_string() << "\n";
    } else {
      out << (s == CongSide::left    ? "lcong"
              : s == CongSide::right ? "rcong"
                                     : "cong")
          << ": " << side_value(report, s).to_string() << "\n";
    }
  }
}

// run fn(i) for i in [0, count) on up to `threads` workers; results are
// collected by index so output order is independent of scheduling
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= count) {
          return;
        }
        fn(i);
      }
    });
  }
  for (auto& worker : pool) {
    worker.join();
  }
}

std::vector<Family> const kTable3Families = {
    Family::tn, Family::ptn, Family::in,  Family::on,
    Family::pn, Family::bn,  Family::tln, Family::instar};

std::string table3_csv(Limits const& limits) {
  struct Cell {
    Family family;
    int n;
  };
  std::vector<Cell> cells;
  for (auto family : kTable3Families) {
    for (int n = 0; n <= 10; ++n) {
      cells.push_back({family, n});
    }
  }
  std::vector<std::string> rows(cells.size());
  parallel_for(static_cast<int>(cells.size()), limits.threads, [&](int i) {
    auto const& cell = cells[static_cast<size_t>(i)];
    auto report = formula_heights(cell.family, cell.n, std::nullopt,
                                  limits.max_group_order);
    std::ostringstream line;
    for (auto side : {CongSide::left, CongSide::right, CongSide::two}) {
      line << report.family << "," << report.n << "," << side_to_string(side)
           << "," << side_value(report, side).to_string() << ",formula\n";
    }
    rows[static_cast<size_t>(i)] = line.str();
  });
  std::string out = "family,n,side,height,mode\n";
  for (auto const& row : rows) {
    out += row;
  }
  return out;
}

struct VerifyOutcome {
  std::string text;
  bool ok;
};

VerifyOutcome verify_cell(Family family, int n, std::optional<int> q,
                          std::vector<CongSide> const& sides,
                          Limits const& limits) {
  auto formula = formula_heights(family, n, q, limits.max_group_order);
  auto built = build(family, n, q, limits.max_elements);
  auto acts = acts_heights(built, limits.max_lattice);
  std::optional<HeightReport> brute;
  if (built.s.size() <= limits.brute_limit) {
    brute = brute_heights(built, limits.max_lattice);
  }
  std::ostringstream out;
  bool ok = true;
  for (auto side : sides) {
    auto const& f = side_value(formula, side);
    auto const& a = side_value(acts, side);
    out << family_to_string(family) << " n=" << n;
    if (q) {
      out << " q=" << *q;
    }
    out << " " << side_to_string(side) << ": formula=" << f.to_string()
        << " acts=" << a.to_string();
    std::vector<Int> values{a.exact};
    if (f.is_exact()) {
      values.push_back(f.exact);
    }
    if (brute) {
      auto const& b = side_value(*brute, side);
      values.push_back(b.exact);
      out << " brute=" << b.to_string();
      if (auto count = side_count(*brute, side)) {
        out << " congruences=" << *count;
      }
    }
    bool match = values.size() >= 2
                 && std::all_of(values.begin(), values.end(),
                                [&](Int v) { return v == values[0]; });
    out << (match ? " OK" : " MISMATCH") << "\n";
    ok = ok && match;
  }
  return {out.str(), ok};
}

int run(int argc, char** argv) {
  CLI::App app{
      "conglat: heights of one- and two-sided congruence lattices of finite "
      "semigroups"};
  app.require_subcommand(1);

  Limits limits;
  if (char const* env = std::getenv("CONGLAT_MAX_LATTICE")) {
    limits.max_lattice = std::stoll(env);
  }
  app.add_option("--max-group-order", limits.max_group_order,
                 "largest group order brute-forced for chain heights");
  app.add_option("--max-lattice", limits.max_lattice,
                 "largest congruence lattice enumerated");
  app.add_option("--max-elements", limits.max_elements,
                 "largest semigroup built");
  app.add_option("--brute-limit", limits.brute_limit,
                 "largest |S| the verify command brute-forces");
  app.add_option("--threads", limits.threads,
                 "worker threads for grid evaluation (0 = hardware)");

  std::string family_name, n_text = "1", side = "all", format = "text";
  std::optional<int> q;
  std::string input_path, then_verb = "green";

  auto add_common = [&](CLI::App* cmd, bool with_family = true) {
    cmd->fallthrough();  // global limit/thread flags may follow the verb
    if (with_family) {
      cmd->add_option("--family", family_name, "family identifier")
          ->required();
      cmd->add_option("--n", n_text, "degree, or a range lo..hi")->required();
      cmd->add_option("--q", q, "field size (family mnq only)");
    }
    cmd->add_option("--side", side, "left | right | two | all");
    cmd->add_option("--format", format, "output format");
  };

  auto* formula_cmd =
      app.add_subcommand("formula", "closed formulas over the D-class data");
  add_common(formula_cmd);
  auto* acts_cmd = app.add_subcommand(
      "acts", "per-class act decomposition with lattice enumeration");
  add_common(acts_cmd);
  auto* brute_cmd =
      app.add_subcommand("brute", "full congruence-lattice enumeration");
  add_common(brute_cmd);
  auto* verify_cmd =
      app.add_subcommand("verify", "run the tiers and compare them");
  add_common(verify_cmd);
  auto* green_cmd =
      app.add_subcommand("green", "Green's structure of a built family");
  add_common(green_cmd);
  auto* table3_cmd =
      app.add_subcommand("table3", "the full formula-tier height grid as CSV");
  table3_cmd->fallthrough();
  table3_cmd->add_option("--format", format, "output format (csv)");
  auto* cayley_cmd = app.add_subcommand(
      "cayley", "ingest a Cayley-table file, then run another verb on it");
  cayley_cmd->add_option("--input", input_path, "Cayley table file")
      ->required();
  cayley_cmd->add_option("--then", then_verb, "green | brute | acts");
  add_common(cayley_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    std::cout << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto sides = parse_sides(side);

  auto print_green = [&](FiniteSemigroup const& s,
                         std::vector<Int> const* ranks) {
    GreenStructure green(s);
    if (format == "json") {
      nlohmann::json j;
      j["size"] = s.size();
      j["num_l_classes"] = green.num_l_classes();
      j["num_r_classes"] = green.num_r_classes();
      j["num_d_classes"] = green.num_d_classes();
      j["num_h_classes"] = green.num_h_classes();
      j["d_classes"] = nlohmann::json::array();
      for (auto const& d : green.d_classes()) {
        nlohmann::json dj;
        dj["id"] = d.id;
        dj["size"] = green.d_class_elements(d.id).size();
        if (ranks) {
          dj["rank"] =
              (*ranks)[static_cast<size_t>(green.d_class_elements(d.id)[0])];
        }
        dj["num_L"] = d.num_l();
        dj["num_R"] = d.num_r();
        dj["group_order"] = d.group_order;
        dj["regular"] = d.is_regular;
        dj["minimal"] = d.is_minimal;
        dj["row_faithful"] = row_faithful(d.idempotent_matrix);
        dj["column_faithful"] = column_faithful(d.idempotent_matrix);
        dj["separable_L"] =
            is_h_separable(s, green, ClassKind::l_class, d.l_ids.front());
        dj["separable_R"] =
            is_h_separable(s, green, ClassKind::r_class, d.r_ids.front());
        dj["idempotent_matrix"] = d.idempotent_matrix;
        j["d_classes"].push_back(std::move(dj));
      }
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "size " << s.size() << ": " << green.num_d_classes()
              << " D-classes, " << green.num_l_classes() << " L-classes, "
              << green.num_r_classes() << " R-classes, "
              << green.num_h_classes() << " H-classes\n";
    for (auto const& d : green.d_classes()) {
      std::cout << "D" << d.id << ":";
      if (ranks) {
        std::cout << " rank="
                  << (*ranks)[static_cast<size_t>(
                         green.d_class_elements(d.id)[0])];
      }
      std::cout << " size=" << green.d_class_elements(d.id).size()
                << " numL=" << d.num_l() << " numR=" << d.num_r()
                << " |H|=" << d.group_order
                << (d.is_regular ? " regular" : " null")
                << (d.is_minimal ? " minimal" : "")
                << (row_faithful(d.idempotent_matrix) ? " row-faithful" : "")
                << (column_faithful(d.idempotent_matrix) ? " column-faithful"
                                                         : "")
                << "\n";
    }
  };

  auto emit_brute_dot = [&](FiniteSemigroup const& s) {
    if (sides.size() != 1) {
      throw Error("dot output requires a single --side");
    }
    UnaryAlgebra act = sides[0] == CongSide::left
                           ? left_act(s, ActOps::generators)
                       : sides[0] == CongSide::right
                           ? right_act(s, ActOps::generators)
                           : biact(s, ActOps::generators);
    auto lattice = congruence_lattice(act, limits.max_lattice);
    std::cout << lattice_to_dot(lattice);
  };

  if (formula_cmd->parsed() || acts_cmd->parsed() || brute_cmd->parsed()
      || verify_cmd->parsed() || green_cmd->parsed()) {
    Family family = family_from_string(family_name);
    auto [lo, hi] = parse_range(n_text);
    bool all_ok = true;
    bool first = true;
    for (int n = lo; n <= hi; ++n) {
      if (formula_cmd->parsed()) {
        auto report =
            formula_heights(family, n, q, limits.max_group_order);
        if (format == "csv" && !first) {
          // print the header only once across a range
          std::ostringstream buffer;
          emit_report(report, sides, format, buffer);
          auto text = buffer.str();
          std::cout << text.substr(text.find('\n') + 1);
        } else {
          emit_report(report, sides, format, std::cout);
        }
      } else if (acts_cmd->parsed() || brute_cmd->parsed()) {
        auto built = build(family, n, q, limits.max_elements);
        if (brute_cmd->parsed() && format == "dot") {
          emit_brute_dot(built.s);
        } else {
          auto report = brute_cmd->parsed()
                            ? brute_heights(built, limits.max_lattice)
                            : acts_heights(built, limits.max_lattice);
          emit_report(report, sides, format, std::cout);
        }
      } else if (verify_cmd->parsed()) {
        auto outcome = verify_cell(family, n, q, sides, limits);
        std::cout << outcome.text;
        all_ok = all_ok && outcome.ok;
      } else if (green_cmd->parsed()) {
        auto built = build(family, n, q, limits.max_elements);
        print_green(built.s, &built.rank);
      }
      first = false;
    }
    return all_ok ? 0 : 1;
  }

  if (table3_cmd->parsed()) {
    if (format != "csv" && format != "text") {
      throw Error("table3 emits csv");
    }
    std::cout << table3_csv(limits);
    return 0;
  }

  if (cayley_cmd->parsed()) {
    std::ifstream in(input_path);
    if (!in) {
      throw Error("cannot open " + input_path);
    }
    auto s = FiniteSemigroup::parse_cayley_table(in);
    if (then_verb == "green") {
      print_green(s, nullptr);
    } else if (then_verb == "brute") {
      if (format == "dot") {
        emit_brute_dot(s);
      } else {
        emit_report(brute_heights(s, limits.max_lattice), sides, format,
                    std::cout);
      }
    } else if (then_verb == "acts") {
      emit_report(acts_heights(s, limits.max_lattice), sides, format,
                  std::cout);
    } else {
      throw Error("unknown --then verb: " + then_verb);
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (CLI::ParseError const& e) {
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
