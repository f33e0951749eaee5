// kanren-cli: demo programs and the benchmark suite.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bench.hpp"
#include "json.hpp"
#include "kanren.hpp"

using namespace kanren;

namespace {

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size() || v < 0) throw CLI::ValidationError("--list", "expected comma-separated naturals");
    out.push_back(v);
  }
  return out;
}

std::string show_ints(const std::vector<int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "]";
}

int demo_append(const std::optional<std::vector<int>>& list, std::size_t count) {
  if (!list) {
    run(
        q, [](List<int> q) { return appendo(q, list_of({3, 4}), list_of({1, 2, 3, 4})); },
        [&](auto a) {
          for (const auto& x : a.take(count)) std::cout << "q = " << show(x.reify()) << '\n';
          return 0;
        });
    return 0;
  }
  // Every split of the given list.
  run(
      qr, [&](List<int> q, List<int> r) { return appendo(q, r, list_of(*list)); },
      [&](auto qs, auto rs) {
        auto a = qs.take(count);
        auto b = rs.take(count);
        for (std::size_t i = 0; i < a.size(); ++i)
          std::cout << "q = " << show(a[i].reify()) << ", r = " << show(b[i].reify()) << '\n';
        return 0;
      });
  return 0;
}

int demo_reverse(const std::vector<int>& list, std::size_t count) {
  run(
      q, [&](List<int> q) { return reverso(list_of(list), q); },
      [&](auto a) {
        for (const auto& x : a.take(count)) std::cout << "q = " << show(x.reify()) << '\n';
        return 0;
      });
  return 0;
}

int demo_sort(const std::vector<int>& list, std::size_t count) {
  run(
      q, [&](List<Nat> q) { return sorto(inj_nat_list(list), q); },
      [&](auto a) {
        for (const auto& x : a.take(count)) std::cout << "q = " << show_ints(from_nat_list(x.prj())) << '\n';
        return 0;
      });
  return 0;
}

int demo_perm(const std::vector<int>& list, std::size_t count) {
  run(
      q, [&](List<Nat> q) { return permo(inj_nat_list(list), q); },
      [&](auto a) {
        for (const auto& x : a.take(count)) std::cout << "q = " << show_ints(from_nat_list(x.prj())) << '\n';
        return 0;
      });
  return 0;
}

int demo_stlc(std::size_t count) {
  using namespace stlc;
  NameH x = lit("x");
  NameH y = lit("y");
  std::vector<std::pair<std::string, LamH>> terms{
      {"\\x. x", abs(x, v(x))},
      {"(\\x. x) (\\y. y)", app(abs(x, v(x)), abs(y, v(y)))},
      {"\\x. \\y. x", abs(x, abs(y, v(x)))},
      {"\\x. \\x. x", abs(x, abs(x, v(x)))},
      {"\\x. x x", abs(x, app(v(x), v(x)))},
  };
  for (const auto& [text, term] : terms) {
    run(
        q, [t = term](TypeH q) { return infero(t, q); },
        [&](auto a) {
          auto got = a.take(1);
          std::cout << text << " : " << (got.empty() ? "untypable" : show(got[0].reify())) << '\n';
          return 0;
        });
  }
  // Inhabitants of a -> a.
  run(
      q, [](LamH q) { return infero(q, arr(p(lit("a")), p(lit("a")))); },
      [&](auto a) {
        for (const auto& e : a.take(count)) std::cout << "inhabitant of a -> a: " << show(e.reify()) << '\n';
        return 0;
      });
  return 0;
}

int demo_diseq() {
  run(
      q, [](Prim<int> q) { return eq(q, lit(5)) && neq(q, lit(5)); },
      [](auto a) {
        std::cout << "(q === 5) &&& (q =/= 5): " << a.take(1).size() << " answers\n";
        return 0;
      });
  run(
      q, [](Prim<int> q) { return neq(q, lit(5)) && eq(q, lit(5)); },
      [](auto a) {
        std::cout << "(q =/= 5) &&& (q === 5): " << a.take(1).size() << " answers\n";
        return 0;
      });
  run(
      q, [](Prim<int> q) { return neq(q, lit(5)); },
      [](auto a) {
        std::cout << "q =/= 5: q = " << show(a.take(1).at(0).reify()) << '\n';
        return 0;
      });
  run(
      q,
      [](Val<OptionF<int>> q) {
        return fresh([=](Prim<int> r, Prim<int> s) { return eq(q, some<int>(r)) && neq(r, s) && neq(s, r); });
      },
      [](auto a) {
        std::cout << "foo: q = " << show(a.take(1).at(0).reify()) << '\n';
        return 0;
      });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relational programming demos and benchmarks"};
  app.require_subcommand(1);

  auto* demo = app.add_subcommand("demo", "Run one of the example programs");
  std::string demo_name;
  std::string list_text;
  std::size_t count = 0;
  demo->add_option("name", demo_name, "Example to run")
      ->required()
      ->check(CLI::IsMember({"append", "reverse", "sort", "perm", "stlc", "diseq"}));
  demo->add_option("--list", list_text, "Input list, comma-separated naturals");
  demo->add_option("--count", count, "Number of answers to request");

  auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark suite");
  std::string suite = "pow,logo,sort,perm";
  std::size_t repeats = 10;
  double timeout_s = 60;
  std::string format = "table";
  bench_cmd->add_option("--suite", suite, "Comma-separated benchmark names");
  bench_cmd->add_option("--repeats", repeats, "Timed runs after one warmup")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--timeout-s", timeout_s, "Per-run timeout in seconds")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (*demo) {
    std::optional<std::vector<int>> list;
    try {
      if (demo->count("--list")) list = parse_list(list_text);
    } catch (const std::exception&) {
      std::cerr << "--list: expected comma-separated naturals\n";
      return 2;
    }
    if (demo_name == "append") return demo_append(list, count ? count : (list ? list->size() + 1 : 1));
    if (demo_name == "reverse") return demo_reverse(list.value_or(std::vector<int>{1, 2, 3}), count ? count : 1);
    if (demo_name == "sort") return demo_sort(list.value_or(std::vector<int>{2, 1, 3}), count ? count : 1);
    if (demo_name == "perm") {
      std::vector<int> xs = list.value_or(std::vector<int>{1, 2, 3});
      return demo_perm(xs, count ? count : bench::factorial(xs.size()));
    }
    if (demo_name == "stlc") return demo_stlc(count ? count : 3);
    return demo_diseq();
  }

  std::vector<bench::Benchmark> chosen;
  std::vector<std::string> missing;
  std::stringstream ss(suite);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (bench::is_unimplemented(name)) {
      missing.push_back(name);
    } else if (auto b = bench::find_benchmark(name)) {
      chosen.push_back(*b);
    } else {
      std::cerr << "unknown benchmark: " << name << '\n';
      return 2;
    }
  }
  std::vector<bench::BenchResult> results;
  for (const auto& b : chosen) results.push_back(bench::measure(b, repeats, timeout_s));
  if (format == "json") {
    std::cout << nlohmann::json(results).dump(2) << '\n';
  } else if (!results.empty()) {
    bench::print_table(std::cout, results);
  }
  for (const auto& m : missing) std::cerr << m << ": not implemented\n";
  bool ok = missing.empty();
  for (const auto& r : results) ok = ok && r.correct;
  return ok ? 0 : 1;
}
