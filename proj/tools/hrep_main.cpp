#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hrep/suites/acceptance.hpp"
#include "hrep/suites/commands.hpp"
#include "hrep/suites/schema.hpp"

namespace {

using namespace hrep::suites;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::string json_out;
  bool quiet = false;
};

void print(const SuiteResult& r, bool quiet) {
  std::cout << summary_line(r) << "\n";
  if (quiet) return;
  for (const auto& c : r.checks) std::cout << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
  if (r.data.contains("cohomology")) {
    std::cout << "   ";
    for (const auto& e : r.data["cohomology"]) std::cout << " H^" << e["degree"] << " = " << e["H"];
    std::cout << "\n";
  }
}

int finish(const std::string& command, const std::vector<SuiteResult>& results, const Options& opt) {
  bool all = !results.empty();
  Json list = Json::array();
  for (const auto& r : results) {
    print(r, opt.quiet);
    all = all && r.pass;
    list.push_back(to_json(r));
  }
  if (!opt.json_out.empty()) {
    const Json doc{{"command", command}, {"seed", opt.seed}, {"pass", all}, {"results", list}};
    std::ofstream out(opt.json_out, std::ios::binary);
    if (!out) throw InputError(opt.json_out + ": cannot write");
    out << dump(doc);
  }
  std::cout << (all ? "PASS" : "FAIL") << "\n";
  return all ? EXIT_SUCCESS : kExitFail;
}

/// Runs without timing; suites without a time limit always count as within it.
SuiteResult untimed(SuiteResult r) {
  r.pass = !r.checks.empty();
  for (const auto& c : r.checks) r.pass = r.pass && c.pass;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for representations up to homotopy of Lie groupoids and algebroids"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--json", opt.json_out, "write a machine-readable report");
  app.add_flag("-q,--quiet", opt.quiet, "one line per suite");

  std::function<int()> action;

  auto* coh = app.add_subcommand("cohomology", "cohomology of a Lie algebra");
  std::string algebra_file, coeff = "adjoint";
  int max_degree = 3;
  coh->add_option("--algebra", algebra_file, "algebra JSON")->required();
  coh->add_option("--coeff", coeff, "adjoint or trivial")
      ->check(CLI::IsMember({"adjoint", "trivial"}))
      ->capture_default_str();
  coh->add_option("--max-degree", max_degree, "highest degree")->check(CLI::Range(0, kMaxDegree))->capture_default_str();
  coh->callback([&] {
    action = [&] {
      const auto a = algebra_from_json(load_json_file(algebra_file));
      return finish("cohomology",
                    {untimed(cohomology_command(a, coeff == "adjoint" ? Coefficients::kAdjoint : Coefficients::kTrivial,
                                                max_degree))},
                    opt);
    };
  });

  auto* ve = app.add_subcommand("van-est-verify", "Psi(Ad_sigma) against ad_nabla on a smooth model");
  std::string model_file, conn_file;
  int points = 5;
  ve->add_option("--model", model_file, "smooth groupoid JSON")->required();
  ve->add_option("--conn", conn_file, "splitting JSON (pair charts)");
  ve->add_option("--points", points, "random chart points")->check(CLI::Range(1, kMaxPoints))->capture_default_str();
  ve->callback([&] {
    action = [&] {
      const auto g = smooth_model_from_json(load_json_file(model_file));
      const auto sigma = connection_from_json(conn_file.empty() ? Json::object() : load_json_file(conn_file), g);
      return finish("van-est-verify", {untimed(van_est_verify_command(g, sigma, points, opt.seed))}, opt);
    };
  });

  auto* cg = app.add_subcommand("check-groupoid-rep", "structure equations on a finite groupoid");
  std::string groupoid_file, rep_file;
  int bound = 4;
  cg->add_option("--groupoid", groupoid_file, "groupoid JSON")->required();
  cg->add_option("--rep", rep_file, "representation JSON")->required();
  cg->add_option("--bound", bound, "highest arity checked")->check(CLI::Range(1, kMaxBound))->capture_default_str();
  cg->callback([&] {
    action = [&] {
      const auto g = groupoid_from_json(load_json_file(groupoid_file));
      return finish("check-groupoid-rep", {untimed(check_groupoid_rep_command(g, load_json_file(rep_file), bound))},
                    opt);
    };
  });

  auto* gen = app.add_subcommand("generate", "write example inputs");
  std::string kind, out_dir = ".";
  gen->add_option("kind", kind, "sl2, abelian-<n>, heisenberg, pair-finite-<n>, pair-chart-<n>, "
                                "matrix-heisenberg, lambda-quadratic, gauge-demo-<n>")
      ->required();
  gen->add_option("--out", out_dir, "output directory")->capture_default_str();
  gen->callback([&] {
    action = [&] {
      std::filesystem::create_directories(out_dir);
      for (const auto& [name, doc] : generate_example(kind, opt.seed)) {
        const auto path = std::filesystem::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InputError(path.string() + ": cannot write");
        out << dump(doc);
        std::cout << path.string() << "\n";
      }
      return EXIT_SUCCESS;
    };
  });

  auto* acc = app.add_subcommand("acceptance", "run every acceptance criterion");
  acc->callback([&] {
    action = [&] {
      std::vector<SuiteResult> results;
      for (const auto& c : criteria()) results.push_back(run_criterion(c, opt.seed));
      return finish("acceptance", results, opt);
    };
  });
  for (const auto& c : criteria()) {
    auto* sub = app.add_subcommand(c.key, std::to_string(c.id) + ". " + c.title);
    sub->callback([&, key = c.key] {
      action = [&, key] { return finish(key, {run_criterion(*find_criterion(key), opt.seed)}, opt); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? EXIT_SUCCESS : kExitInput;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
