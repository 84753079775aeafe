#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qtheta/qtheta.hpp"

namespace qtheta::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool verbose = false;

  std::int64_t p = 3;
  std::int64_t ell = 0;
  std::int64_t max = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t precision = 0;
  std::string method;
  std::string code_path;
  std::int64_t ell1 = 0;
  std::int64_t ell2 = 0;
  std::size_t n = 0;
  std::vector<std::size_t> degrees;
  std::int64_t ell_max = 0;
  std::string out_path = "-";
  std::string report_path;
  unsigned jobs = 0;
};

const CLI::Validator kPrime(
    [](std::string& value) -> std::string {
      try {
        if (is_prime(std::stoll(value))) return {};
      } catch (const std::exception&) {
      }
      return "p must be a prime, got " + value;
    },
    "PRIME");

void emit(std::ostream& out, const Json& json) { out << json.dump() << '\n'; }

int cmd_levels(const Options& o, std::ostream& out) {
  emit(out, Json(admissible_levels(o.p, o.max)));
  return 0;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  emit(out, to_json(orbit_representatives(o.p)));
  return 0;
}

int cmd_coset_theta(const Options& o, std::ostream& out) {
  const Level level = make_level(o.p, o.ell);
  const ScaledSeries s = o.method == "enum" ? coset_theta_enum(level, o.a, o.b, o.precision)
                                            : coset_theta_formula(level, o.a, o.b, o.precision);
  emit(out, to_json(s));
  return 0;
}

int cmd_enumerator(const Options& o, std::ostream& out, bool symmetric) {
  const CodeFile file = load_code_file(o.code_path);
  emit(out, to_json(symmetric ? swe(file.code) : cwe(file.code)));
  return 0;
}

int cmd_code_theta(const Options& o, std::ostream& out) {
  const CodeFile file = load_code_file(o.code_path);
  const Level level = o.ell > 0 ? make_level(file.level.p, o.ell) : file.level;
  ScaledSeries s;
  if (o.method == "enum") {
    s = theta_via_enum(file.code, level, o.precision);
  } else if (o.method == "swe") {
    s = theta_via_swe(file.code, level, o.precision);
  } else {
    s = theta_via_cwe(file.code, level, o.precision);
  }
  emit(out, to_json(s));
  return 0;
}

int cmd_level_agreement(const Options& o, std::ostream& out) {
  const CodeFile file = load_code_file(o.code_path);
  const Level first = make_level(file.level.p, o.ell1);
  const Level second = make_level(file.level.p, o.ell2);
  emit(out, to_json(level_agreement_prefix(file.code, first, second, o.precision)));
  return 0;
}

int cmd_nullity(const Options& o, std::ostream& out) {
  emit(out, to_json(nullity_experiment(o.p, o.n, o.ell)));
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<SweepRow> rows = conjecture_sweep(o.p, o.degrees, o.ell_max, o.jobs);
  if (o.out_path == "-") {
    write_sweep_csv(out, rows);
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw UsageError("cannot write " + o.out_path);
    write_sweep_csv(file, rows);
  }
  if (!o.report_path.empty()) {
    Json report = Json::array();
    for (const SweepRow& r : rows) report.push_back(to_json(r));
    std::ofstream file(o.report_path);
    if (!file) throw UsageError("cannot write " + o.report_path);
    file << report.dump(2) << '\n';
  }
  for (const SweepRow& r : rows) {
    if (r.flags.any_violation()) {
      err << "conjecture threshold violated: n=" << r.report.n << " ell=" << r.report.ell
          << " nullity=" << r.report.nullity << '\n';
    }
  }
  if (o.verbose) {
    for (const RingType type : {RingType::Inert, RingType::Split}) {
      err << to_string(type) << " levels:";
      for (const SweepRow& r : rows) {
        if (r.report.type == type) {
          err << " (n=" << r.report.n << ", ell=" << r.report.ell << ", null=" << r.report.nullity
              << ")";
        }
      }
      err << '\n';
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact theta series of coset and Construction A lattices over O_K/pO_K", "qtheta"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", o.verbose, "Report timing and details on stderr");

  auto* levels = app.add_subcommand("levels", "List admissible levels ell <= max");
  levels->add_option("--p", o.p, "Prime")->required()->check(kPrime);
  levels->add_option("--max", o.max, "Largest ell")->required()->check(CLI::Range(3, 1 << 24));

  auto* orbits = app.add_subcommand("orbits", "Klein four-group orbits of (Z/p)^2");
  orbits->add_option("--p", o.p, "Odd prime")->required()->check(kPrime);

  auto* coset = app.add_subcommand("coset-theta", "Theta series of the coset a - b*w + pO_K");
  coset->add_option("--p", o.p, "Prime")->required()->check(kPrime);
  coset->add_option("--ell", o.ell, "Level")->required();
  coset->add_option("--a", o.a, "Coset label a")->required();
  coset->add_option("--b", o.b, "Coset label b")->required();
  coset->add_option("--precision", o.precision, "Series known below q^precision")
      ->required()
      ->check(CLI::NonNegativeNumber);
  o.method = "formula";
  coset->add_option("--method", o.method, "formula or enum")
      ->check(CLI::IsMember({"formula", "enum"}));

  auto* cwe_cmd = app.add_subcommand("cwe", "Complete weight enumerator of a code file");
  cwe_cmd->add_option("--code", o.code_path, "Code JSON file")->required();
  auto* swe_cmd = app.add_subcommand("swe", "Symmetric weight enumerator of a code file");
  swe_cmd->add_option("--code", o.code_path, "Code JSON file")->required();

  auto* code_theta = app.add_subcommand("code-theta", "Theta series of the Construction A lattice");
  code_theta->add_option("--code", o.code_path, "Code JSON file")->required();
  code_theta->add_option("--ell", o.ell, "Level (defaults to the code file's ell)");
  code_theta->add_option("--precision", o.precision, "Series known below q^precision")
      ->required()
      ->check(CLI::NonNegativeNumber);
  code_theta->add_option("--method", o.method, "cwe, swe or enum")
      ->check(CLI::IsMember({"cwe", "swe", "enum"}));

  auto* agreement = app.add_subcommand("level-agreement",
                                       "First exponent where two levels' theta series differ");
  agreement->add_option("--code", o.code_path, "Code JSON file")->required();
  agreement->add_option("--ell1", o.ell1, "First level")->required();
  agreement->add_option("--ell2", o.ell2, "Second level")->required();
  agreement->add_option("--precision", o.precision, "Series known below q^precision")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* nullity = app.add_subcommand("nullity", "Rank and nullity of the coefficient matrix");
  nullity->add_option("--p", o.p, "Prime")->required()->check(kPrime);
  nullity->add_option("--n", o.n, "Code length (polynomial degree)")->required();
  nullity->add_option("--ell", o.ell, "Level")->required();

  auto* sweep = app.add_subcommand("sweep", "Nullity table over degrees and admissible levels");
  sweep->add_option("--p", o.p, "Prime")->required()->check(kPrime);
  sweep->add_option("--n", o.degrees, "Comma-separated degrees")->required()->delimiter(',');
  sweep->add_option("--ell-max", o.ell_max, "Largest level")->required();
  sweep->add_option("--out", o.out_path, "CSV output path, - for stdout");
  sweep->add_option("--report", o.report_path, "Optional JSON report with threshold flags");
  sweep->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (*levels) status = cmd_levels(o, out);
    else if (*orbits) status = cmd_orbits(o, out);
    else if (*coset) status = cmd_coset_theta(o, out);
    else if (*cwe_cmd) status = cmd_enumerator(o, out, false);
    else if (*swe_cmd) status = cmd_enumerator(o, out, true);
    else if (*code_theta) status = cmd_code_theta(o, out);
    else if (*agreement) status = cmd_level_agreement(o, out);
    else if (*nullity) status = cmd_nullity(o, out);
    else if (*sweep) status = cmd_sweep(o, out, err);
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  }
  if (o.verbose) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    err << "elapsed: " << ms << " ms\n";
  }
  return status;
}

}  // namespace qtheta::cli
