#include "isingpair/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "isingpair/classify/scan.hpp"
#include "isingpair/engine/serialize.hpp"
#include "isingpair/engine/verify.hpp"
#include "isingpair/model/errors.hpp"

namespace isingpair::cli {

namespace {

// Input problems that surface after CLI11 has accepted the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraOptions {
  int n = 0;
  std::string lambda1;
  std::string lambda2;
  bool bracket = false;
};

void add_algebra_options(CLI::App* cmd, AlgebraOptions& o, bool required) {
  auto* n = cmd->add_option("--n", o.n, "orbit size |e^T u f^T|")->check(CLI::Range(1, 6));
  auto* l1 = cmd->add_option("--lambda1", o.lambda1, "(e|f) as p/q");
  auto* l2 = cmd->add_option("--lambda2", o.lambda2, "(e|e^{tau_f}) as p/q");
  if (required) {
    n->required();
    l1->required();
    l2->required();
  } else {
    l1->needs(n);
    l2->needs(n);
    n->needs(l1)->needs(l2);
  }
  cmd->add_flag("--bracket", o.bracket, "read the values on the <.,.> scale (a quarter of (.|.))");
}

ParamRecord parse_params(const AlgebraOptions& o) {
  try {
    const Rational a = Rational::parse(o.lambda1);
    const Rational b = Rational::parse(o.lambda2);
    return o.bracket ? ParamRecord::from_bracket(a, b) : ParamRecord::make(a, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path.string());
  file << text;
  if (!file) throw UsageError("failed writing " + path.string());
}

nlohmann::json row_json(const ClassRow& r) {
  return nlohmann::json{{"n", r.n},
                        {"class", r.label},
                        {"ef", r.ef.str()},
                        {"e_etf", r.e_etf.str()},
                        {"extra", r.extra ? nlohmann::json(r.extra->str()) : nlohmann::json(nullptr)}};
}

int run_build(const AlgebraOptions& o, const std::string& format, const std::string& output, std::ostream& out) {
  const DihedralAlgebra alg = build_algebra(o.n, parse_params(o));
  emit(format == "csv" ? to_csv(alg) : to_json(alg).dump(2) + "\n", output, out);
  return kOk;
}

int run_verify(const AlgebraOptions& o, const std::string& output, std::ostream& out) {
  std::vector<std::pair<int, ParamRecord>> targets;
  if (o.n != 0) {
    targets.emplace_back(o.n, parse_params(o));
  } else {
    for (const auto& r : classify_all())
      targets.emplace_back(r.n, ParamRecord::from_bracket(r.ef, r.e_etf));
  }
  nlohmann::json reports = nlohmann::json::array();
  bool ok = true;
  for (const auto& [n, params] : targets) {
    const DihedralAlgebra alg = build_algebra(n, params);
    const AxiomReport report = verify_axioms(alg);
    ok = ok && report.all_passed();
    nlohmann::json j = to_json(report);
    j["n"] = n;
    j["lambda1"] = params.lambda1.str();
    j["lambda2"] = params.lambda2.str();
    j["rank"] = alg.rank;
    reports.push_back(std::move(j));
  }
  emit((o.n != 0 ? reports[0] : reports).dump(2) + "\n", output, out);
  return ok ? kOk : kFailure;
}

}  // namespace

std::string render_table(std::vector<ClassRow> rows, std::string_view format) {
  if (format != "csv" && format != "json") throw std::invalid_argument("unknown table format '" + std::string(format) + "'");
  if (rows.empty()) throw std::invalid_argument("empty class table");
  std::stable_sort(rows.begin(), rows.end(), [](const ClassRow& a, const ClassRow& b) {
    return a.n != b.n ? a.n < b.n : a.ef > b.ef;
  });
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n,class,ef,e_etf,extra\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.label << ',' << r.ef.str() << ',' << r.e_etf.str() << ',' << (r.extra ? r.extra->str() : "")
       << '\n';
  return os.str();
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction of the algebra generated by two Ising vectors", "isingpair"};
  app.require_subcommand(1);

  AlgebraOptions build_opts, verify_opts;
  std::string build_format = "json", table_format = "csv", output;
  int bound = 12;
  unsigned workers = 0;

  auto* build = app.add_subcommand("build", "construct the algebra and dump it");
  add_algebra_options(build, build_opts, true);
  build->add_option("--format", build_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  build->add_option("--output", output, "write to this file instead of stdout");

  auto* classify = app.add_subcommand("classify", "admissible inner products for n = 1..6");
  classify->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  classify->add_option("--output", output, "write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "axiom report; every classified row when --n is omitted");
  add_algebra_options(verify, verify_opts, false);
  verify->add_option("--output", output, "write to this file instead of stdout");

  auto* scan = app.add_subcommand("scan", "determinant scan over the lambda grid for orbits of size >= 7");
  scan->add_option("--bound", bound, "denominator bound")->check(CLI::Range(2, 28));
  scan->add_option("--workers", workers, "worker threads, 0 for hardware concurrency");
  scan->add_option("--output", output, "write to this file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*build) return run_build(build_opts, build_format, output, out);
    if (*verify) return run_verify(verify_opts, output, out);
    if (*classify) {
      emit(render_table(classify_all(), table_format), output, out);
      return kOk;
    }
    if (*scan) {
      const ScanReport report = infeasibility_scan(bound, workers);
      emit(to_json(report).dump(2) + "\n", output, out);
      return report.violations == 0 && report.m1_negative == 0 && report.m2_negative == 0 &&
                     report.crosscheck_failures == 0
                 ? kOk
                 : kFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace isingpair::cli
