// Command-line front end: compute twist-knot invariants, their Jones
// specializations, grids of invariants, and run the verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 internal
// invariant violation (a NotDivisible escaping the pipeline).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "twistknot/invariants.hpp"
#include "twistknot/serialize.hpp"
#include "twistknot/verify.hpp"

namespace {

using twistknot::LaurentPoly1;
using twistknot::LaurentPoly2;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  if (r.lo > r.hi) std::swap(r.lo, r.hi);
  return r;
}

void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << body << "\n";
}

std::string jones_text(const LaurentPoly1& p) { return p.str("q"); }

int run(int argc, char** argv) {
  CLI::App app{"Exact colored HOMFLY-PT invariants of twist knots"};
  app.require_subcommand(1);

  // twist
  auto* twist = app.add_subcommand(
      "twist", "Colored HOMFLY-PT polynomial of the twist knot K_p");
  int t_p = 0, t_n = 0;
  std::string t_format = "text", t_out;
  twist->add_option("--p", t_p, "full-twist count p")->required();
  twist->add_option("--n", t_n, "color n (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  twist->add_option("--format", t_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  twist->add_option("--out", t_out, "write to file instead of stdout");

  // jones
  auto* jones = app.add_subcommand(
      "jones", "a = q^N specialization (N = 2: colored Jones)");
  int j_p = 0, j_n = 0, j_level = 2;
  std::string j_format = "text", j_out;
  jones->add_option("--p", j_p, "full-twist count p")->required();
  jones->add_option("--n", j_n, "color n (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  jones->add_option("--N", j_level, "specialization level (>= 2)")
      ->check(CLI::Range(2, 64));
  jones->add_option("--format", j_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  jones->add_option("--out", j_out, "write to file instead of stdout");

  // table
  auto* table = app.add_subcommand(
      "table", "Grid of invariants over ranges of p and n");
  std::string tb_p = "0..0", tb_n = "0..0", tb_format = "text", tb_out;
  table->add_option("--p", tb_p, "p range, e.g. -2..2 or a single value")
      ->required();
  table->add_option("--n", tb_n, "n range, e.g. 0..4 or a single value")
      ->required();
  table->add_option("--format", tb_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  table->add_option("--out", tb_out, "output file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run identity-verification suites (exit 1 on any failure)");
  std::string v_suite = "all", v_format = "text", v_out;
  int v_max_n = 0, v_max_p = 0, v_max_m = 0;
  verify_cmd->add_option("--suite", v_suite, "suite name or 'all'");
  verify_cmd->add_option("--max-n", v_max_n, "override n-type bounds")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-p", v_max_p, "override |p| bounds")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-m", v_max_m, "override m-type bounds")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", v_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", v_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (twist->parsed()) {
    const LaurentPoly2 poly = twistknot::inv::colored_homfly_twist(t_n, t_p);
    if (t_format == "json")
      emit(twistknot::twist_result_to_json(t_p, t_n, poly).dump(2), t_out);
    else
      emit(poly.str(), t_out);
    return 0;
  }

  if (jones->parsed()) {
    const LaurentPoly1 poly = twistknot::inv::colored_jones(j_n, j_p, j_level);
    if (j_format == "json") {
      nlohmann::json j = {{"knot", {{"type", "twist"}, {"p", j_p}}},
                          {"color", j_n},
                          {"N", j_level},
                          {"variable", "q"},
                          {"terms", twistknot::terms_to_json(poly)}};
      emit(j.dump(2), j_out);
    } else {
      emit(jones_text(poly), j_out);
    }
    return 0;
  }

  if (table->parsed()) {
    const Range pr = parse_range(tb_p);
    const Range nr = parse_range(tb_n);
    if (nr.lo < 0) throw CLI::ValidationError("table", "n must be >= 0");
    if (tb_format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (int p = pr.lo; p <= pr.hi; ++p)
        for (int n = nr.lo; n <= nr.hi; ++n)
          arr.push_back(twistknot::twist_result_to_json(
              p, n, twistknot::inv::colored_homfly_twist(n, p)));
      emit(arr.dump(2), tb_out);
    } else {
      std::string body;
      for (int p = pr.lo; p <= pr.hi; ++p)
        for (int n = nr.lo; n <= nr.hi; ++n) {
          body += "p=" + std::to_string(p) + "\tn=" + std::to_string(n) +
                  "\t" + twistknot::inv::colored_homfly_twist(n, p).str() +
                  "\n";
        }
      if (!body.empty()) body.pop_back();
      emit(body, tb_out);
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    twistknot::verify::SuiteRanges ranges;
    ranges.max_n = v_max_n;
    ranges.max_p = v_max_p;
    ranges.max_m = v_max_m;
    std::vector<twistknot::verify::IdentityReport> reports;
    if (v_suite == "all") {
      reports = twistknot::verify::run_all(ranges);
    } else {
      reports.push_back(twistknot::verify::run_suite(v_suite, ranges));
    }
    bool all_passed = true;
    if (v_format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        arr.push_back(twistknot::report_to_json(r));
        all_passed = all_passed && r.passed;
      }
      emit(arr.dump(2), v_out);
    } else {
      std::string body;
      for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        body += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.suite +
                "  range(" + r.range + ")  checked=" +
                std::to_string(r.checked) + "  " +
                std::to_string(r.millis) + "ms\n";
        if (!r.passed) body += "       counterexample: " + r.counterexample + "\n";
      }
      if (!body.empty()) body.pop_back();
      emit(body, v_out);
    }
    return all_passed ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;  // CLI11_PARSE already handled printing; not reached normally
  } catch (const twistknot::NotDivisible& e) {
    std::cerr << "internal invariant violation (NotDivisible): " << e.what()
              << "\n";
    return 3;
  } catch (const twistknot::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
