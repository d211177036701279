// Command line surface. Subcommands compute decompositions and run the
// verification sweeps; data goes to stdout (JSON by default), progress
// and per-instance status go to stderr. Exit codes: 0 success, 1 a
// mathematical mismatch was found, 2 usage error, 3 resource bound.

#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "foulkes/bounds.hpp"
#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"
#include "foulkes/foulkes_modules.hpp"
#include "foulkes/json_io.hpp"
#include "foulkes/oracle.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/symfun.hpp"

using namespace foulkes;

namespace {

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct CliConfig {
  Bounds bounds{};
  int threads = default_threads();
  std::string format = "json";
};

// Every subcommand accepts the output format, the thread count, and the
// resource bounds. Environment variables seed the defaults; explicit
// flags win over them.
void add_common_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "worker thread count")
      ->envname("FOULKES_THREADS")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--plethysm-bound", cfg.bounds.plethysm,
                  "largest ab for the power sum plethysm route")
      ->envname("FOULKES_PLETHYSM_BOUND");
  cmd->add_option("--monomial-bound", cfg.bounds.monomial,
                  "largest ab for the brute monomial plethysm")
      ->envname("FOULKES_MONOMIAL_BOUND");
  cmd->add_option("--oracle-bound", cfg.bounds.oracle,
                  "largest ab for block system enumeration")
      ->envname("FOULKES_ORACLE_BOUND");
  cmd->add_option("--trace-bound", cfg.bounds.trace,
                  "largest ab for a full bipartite oracle trace")
      ->envname("FOULKES_TRACE_BOUND");
  cmd->add_option("--brute-char-bound", cfg.bounds.brute_char,
                  "largest b for Specht characters by matrix trace")
      ->envname("FOULKES_BRUTE_CHAR_BOUND");
  cmd->add_option("--char-table-bound", cfg.bounds.char_table,
                  "largest n for a full character table")
      ->envname("FOULKES_CHAR_TABLE_BOUND");
}

// Inclusive integer range, written "lo..hi" or as a single value.
struct Range {
  int lo = 0;
  int hi = 0;
};

int parse_int_exact(const std::string& text) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("cannot parse integer '" + text + "'");
  }
  if (pos != text.size()) throw UsageError("cannot parse integer '" + text + "'");
  return value;
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int_exact(text);
  } else {
    r.lo = parse_int_exact(text.substr(0, dots));
    r.hi = parse_int_exact(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

Partition parse_partition_of(const std::string& text, int weight,
                             const std::string& name) {
  const Partition p = Partition::parse(text);
  if (p.weight() != weight) {
    throw UsageError(name + " = " + p.to_string() + " is not a partition of " +
                     std::to_string(weight));
  }
  return p;
}

// Table cells: big integers arrive as JSON strings and print unquoted.
std::string cell(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct DecomposeArgs {
  int a = 0;
  int b = 0;
  std::string nu;
};

int run_decompose(const DecomposeArgs& args, const CliConfig& cfg) {
  const Partition nu = parse_partition_of(args.nu, args.b, "nu");
  const SchurVector f = plethysm_h(nu, args.a, cfg.bounds);
  Json out;
  out["a"] = args.a;
  out["b"] = args.b;
  out["nu"] = nu.to_string();
  out["n"] = args.a * args.b;
  out["coeffs"] = to_json(f).at("coeffs");
  out["total_dimension"] = int_to_json(dimension(f));
  if (cfg.format == "json") {
    emit_json(out);
  } else {
    std::cout << "F_" << nu.to_string() << "^" << args.a << " over S_"
              << args.a * args.b << "\n";
    for (const auto& [shape, c] : out["coeffs"].items())
      std::cout << "  " << std::left << std::setw(18) << shape << cell(c) << "\n";
    std::cout << "total dimension " << cell(out["total_dimension"]) << "\n";
  }
  return 0;
}

// The three shapes are separate single-value positionals: a multi-value
// option would let the argument parser split a bracketed partition on
// its commas.
struct KroneckerArgs {
  std::string mu;
  std::string lambda;
  std::string nu;
  int table_b = 0;
};

int run_kronecker(const KroneckerArgs& args, const CliConfig& cfg) {
  const int given = static_cast<int>(!args.mu.empty()) +
                    static_cast<int>(!args.lambda.empty()) +
                    static_cast<int>(!args.nu.empty());
  if (args.table_b > 0) {
    if (given != 0)
      throw UsageError("give either three partitions or --table, not both");
    const auto& all = partitions_of(args.table_b);
    Json entries = Json::array();
    for (const auto& mu : all) {
      for (const auto& lambda : all) {
        for (const auto& nu : all) {
          const Int g = kronecker(mu, lambda, nu, cfg.bounds, cfg.threads);
          if (g == 0) continue;
          Json e;
          e["mu"] = mu.to_string();
          e["lambda"] = lambda.to_string();
          e["nu"] = nu.to_string();
          e["value"] = int_to_json(g);
          entries.push_back(std::move(e));
        }
      }
    }
    Json out;
    out["b"] = args.table_b;
    out["entries"] = std::move(entries);
    if (cfg.format == "json") {
      emit_json(out);
    } else {
      for (const auto& e : out["entries"])
        std::cout << e["mu"].get<std::string>() << " "
                  << e["lambda"].get<std::string>() << " "
                  << e["nu"].get<std::string>() << "  " << cell(e["value"]) << "\n";
    }
    return 0;
  }
  if (given != 3)
    throw UsageError("kronecker needs three partitions or --table b");
  const Partition mu = Partition::parse(args.mu);
  const Partition lambda = parse_partition_of(args.lambda, mu.weight(), "lambda");
  const Partition nu = parse_partition_of(args.nu, mu.weight(), "nu");
  const Int g = kronecker(mu, lambda, nu, cfg.bounds, cfg.threads);
  if (cfg.format == "json") {
    emit_json(int_to_json(g));
  } else {
    std::cout << g << "\n";
  }
  return 0;
}

struct CharTableArgs {
  int n = 0;
};

int run_char_table(const CharTableArgs& args, const CliConfig& cfg) {
  if (args.n < 1) throw UsageError("n must be positive");
  const CharacterTable& table = character_table(args.n, cfg.bounds, cfg.threads);
  Json out;
  out["n"] = args.n;
  Json classes = Json::array();
  for (const auto& rho : table.classes) classes.push_back(rho.to_string());
  out["classes"] = std::move(classes);
  Json rows = Json::object();
  const auto& shapes = partitions_of(args.n);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    Json row = Json::array();
    for (const auto& v : table.rows[i]) row.push_back(int_to_json(v));
    rows[shapes[i].to_string()] = std::move(row);
  }
  out["rows"] = std::move(rows);
  if (cfg.format == "json") {
    emit_json(out);
    return 0;
  }
  std::size_t width = 0;
  for (const auto& c : out["classes"])
    width = std::max(width, c.get<std::string>().size());
  for (const auto& [shape, row] : out["rows"].items()) {
    width = std::max(width, shape.size());
    for (const auto& v : row) width = std::max(width, cell(v).size());
  }
  const int w = static_cast<int>(width) + 2;
  std::cout << std::setw(w) << "";
  for (const auto& c : out["classes"])
    std::cout << std::setw(w) << c.get<std::string>();
  std::cout << "\n";
  for (const auto& [shape, row] : out["rows"].items()) {
    std::cout << std::setw(w) << shape;
    for (const auto& v : row) std::cout << std::setw(w) << cell(v);
    std::cout << "\n";
  }
  return 0;
}

struct RestrictArgs {
  int a = 0;
  int b = 0;
  int k = 0;
  std::string nu;
};

int run_restrict(const RestrictArgs& args, const CliConfig& cfg) {
  const Partition nu = parse_partition_of(args.nu, args.b, "nu");
  const int n = args.a * args.b;
  if (args.k < 1 || args.k >= n)
    throw UsageError("k must satisfy 1 <= k < ab");
  const SchurVector f = plethysm_h(nu, args.a, cfg.bounds);
  const BipartiteDecomposition table = restrict_module(f, args.k);
  Json out;
  out["a"] = args.a;
  out["b"] = args.b;
  out["nu"] = nu.to_string();
  out["k"] = args.k;
  out["n"] = n;
  out["coeffs"] = to_json(table).at("coeffs");
  Json components = Json::array();
  for (const auto& lambda : omega_k(args.a, args.b, args.k)) {
    Json c;
    c["lambda"] = lambda.to_string();
    c["count"] = int_to_json(count_systems_with_type(args.a, args.b, args.k, lambda));
    c["dimension"] = int_to_json(submodule_dimension(args.a, args.b, args.k, lambda, nu));
    components.push_back(std::move(c));
  }
  out["components"] = std::move(components);
  if (cfg.format == "json") {
    emit_json(out);
  } else {
    std::cout << "restriction of F_" << nu.to_string() << "^" << args.a
              << " to S_" << args.k << " x S_" << n - args.k << "\n";
    for (const auto& e : out["coeffs"])
      std::cout << "  " << e["mu"].get<std::string>() << " (x) "
                << e["lambda"].get<std::string>() << "  " << cell(e["c"]) << "\n";
    std::cout << "block intersection components at k = " << args.k << "\n";
    for (const auto& c : out["components"])
      std::cout << "  " << std::left << std::setw(14) << c["lambda"].get<std::string>()
                << " systems " << std::setw(10) << cell(c["count"]) << " dimension "
                << cell(c["dimension"]) << "\n";
  }
  return 0;
}

struct OracleArgs {
  int a = 0;
  int b = 0;
  int k = 0;
  std::string nu;
  std::string lambda;
};

int run_oracle(const OracleArgs& args, const CliConfig& cfg) {
  const Partition nu = parse_partition_of(args.nu, args.b, "nu");
  const Partition lambda = Partition::parse(args.lambda);
  const PairClassFunction chi =
      oracle_character(args.a, args.b, nu, args.k, lambda, cfg.bounds);
  const BipartiteDecomposition dec = decompose_bipartite(chi, cfg.bounds);
  Json out;
  out["a"] = args.a;
  out["b"] = args.b;
  out["nu"] = nu.to_string();
  out["k"] = args.k;
  out["lambda"] = lambda.to_string();
  out["dimension"] =
      int_to_json(submodule_dimension(args.a, args.b, args.k, lambda, nu));
  out["character"] = to_json(chi).at("values");
  out["decomposition"] = to_json(dec).at("coeffs");
  if (cfg.format == "json") {
    emit_json(out);
  } else {
    std::cout << "component of type " << lambda.to_string() << " at k = " << args.k
              << ", dimension " << cell(out["dimension"]) << "\n";
    std::cout << "character values\n";
    for (const auto& e : out["character"]) {
      if (cell(e["value"]) == "0") continue;
      std::cout << "  " << e["rho"].get<std::string>() << " "
                << e["sigma"].get<std::string>() << "  " << cell(e["value"]) << "\n";
    }
    std::cout << "decomposition\n";
    for (const auto& e : out["decomposition"])
      std::cout << "  " << e["mu"].get<std::string>() << " (x) "
                << e["lambda"].get<std::string>() << "  " << cell(e["c"]) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string claim;
  std::string a_text;
  std::string b_text;
  std::string k_text;
};

const std::vector<std::string> kClaims = {
    "theorem1",      "thrall",     "corollaries", "sign-lemma",
    "tabloid-lemma", "corollary6", "eq1",         "conjecture"};

int run_verify(const VerifyArgs& args, const CliConfig& cfg) {
  const VerifyOptions opts{cfg.bounds, cfg.threads};
  auto range_or = [&](const std::string& text, Range fallback) {
    return text.empty() ? fallback : parse_range(text);
  };

  std::vector<Report> instances;
  auto note = [&](Report r) {
    std::cerr << (r.verified() ? "verified" : "MISMATCH") << " " << r.claim
              << " " << r.params.dump() << "\n";
    instances.push_back(std::move(r));
  };

  if (args.claim == "theorem1") {
    const Range A = range_or(args.a_text, {2, 2});
    const Range B = range_or(args.b_text, {2, 4});
    for (int a = A.lo; a <= A.hi; ++a)
      for (int b = B.lo; b <= B.hi; ++b)
        for (const auto& nu : partitions_of(b)) note(verify_theorem1(a, nu, opts));
  } else if (args.claim == "thrall") {
    // Both families sweep: F_(b)^2 over the b range and F_(2)^a over the
    // a range, which defaults to the same interval.
    const Range B = range_or(args.b_text, {2, 5});
    const Range A = range_or(args.a_text, B);
    for (int b = B.lo; b <= B.hi; ++b) note(verify_thrall_fb2(b, opts));
    for (int a = A.lo; a <= A.hi; ++a) note(verify_thrall_f2a(a, opts));
  } else if (args.claim == "corollaries") {
    const Range B = range_or(args.b_text, {2, 5});
    for (int b = B.lo; b <= B.hi; ++b) note(verify_corollaries(b, opts));
  } else if (args.claim == "sign-lemma") {
    const Range A = range_or(args.a_text, {2, 3});
    const Range B = range_or(args.b_text, {2, 4});
    for (int a = A.lo; a <= A.hi; ++a)
      for (int b = B.lo; b <= B.hi; ++b)
        for (const auto& nu : partitions_of(b)) note(verify_sign_lemma(a, nu, opts));
  } else if (args.claim == "tabloid-lemma") {
    const Range A = range_or(args.a_text, {2, 3});
    const Range B = range_or(args.b_text, {2, 3});
    for (int a = A.lo; a <= A.hi; ++a)
      for (int b = B.lo; b <= B.hi; ++b) note(verify_tabloid_lemma(a, b, opts));
  } else if (args.claim == "corollary6") {
    const Range A = range_or(args.a_text, {1, 2});
    const Range B = range_or(args.b_text, {2, 3});
    for (int a = A.lo; a <= A.hi; ++a)
      for (int b = B.lo; b <= B.hi; ++b)
        for (const auto& nu : partitions_of(b)) note(verify_corollary6(a, nu, opts));
  } else if (args.claim == "eq1") {
    const Range A = range_or(args.a_text, {2, 2});
    const Range B = range_or(args.b_text, {2, 3});
    // The counting sweep always checks every cut 1 <= k < ab; an explicit
    // --k is validated and recorded but cannot shrink the check.
    if (!args.k_text.empty() && parse_range(args.k_text).lo < 1)
      throw UsageError("k must be positive");
    for (int a = A.lo; a <= A.hi; ++a)
      for (int b = B.lo; b <= B.hi; ++b)
        for (const auto& nu : partitions_of(b)) note(verify_eq1(a, nu, opts));
  } else if (args.claim == "conjecture") {
    const Range A = range_or(args.a_text, {2, 2});
    const Range B = range_or(args.b_text, {3, 3});
    bool any = false;
    for (int a = A.lo; a <= A.hi; ++a) {
      for (int b = B.lo; b <= B.hi; ++b) {
        if (a > b) continue;
        any = true;
        note(verify_conjecture(a, b, opts));
      }
    }
    if (!any) throw UsageError("containment sweep needs some pair with a <= b");
  } else {
    throw UsageError("unknown claim '" + args.claim + "'");
  }

  Json params;
  if (!args.a_text.empty()) params["a"] = args.a_text;
  if (!args.b_text.empty()) params["b"] = args.b_text;
  if (!args.k_text.empty()) params["k"] = args.k_text;
  const Report merged = merge_reports(args.claim, std::move(params), instances);
  if (cfg.format == "json") {
    emit_json(merged.to_json());
  } else {
    for (const auto& r : instances) {
      std::cout << (r.verified() ? "verified" : "mismatch") << "  " << r.claim
                << " " << r.params.dump() << "\n";
      for (const auto& e : r.entries) {
        std::cout << "    " << std::left << std::setw(9) << e.status << e.what;
        if (!e.details.empty()) std::cout << "  " << e.details.dump();
        std::cout << "\n";
      }
    }
  }
  return merged.verified() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decompositions of generalized Foulkes modules"};
  app.require_subcommand(1);
  CliConfig cfg;
  int rc = 0;

  DecomposeArgs dec;
  auto* cmd_decompose = app.add_subcommand(
      "decompose", "Schur expansion of the module F_nu^a");
  cmd_decompose->add_option("-a", dec.a, "block size")->required();
  cmd_decompose->add_option("-b", dec.b, "number of blocks")->required();
  cmd_decompose->add_option("--nu", dec.nu, "partition of b, e.g. \"[2,1]\"")
      ->required();
  add_common_options(cmd_decompose, cfg);
  cmd_decompose->callback([&] { rc = run_decompose(dec, cfg); });

  KroneckerArgs kron;
  auto* cmd_kronecker = app.add_subcommand(
      "kronecker", "Kronecker coefficient g(mu, lambda, nu)");
  cmd_kronecker->add_option("mu", kron.mu, "first partition");
  cmd_kronecker->add_option("lambda", kron.lambda, "second partition");
  cmd_kronecker->add_option("nu", kron.nu, "third partition");
  cmd_kronecker->add_option("--table", kron.table_b,
                            "emit every nonzero coefficient of weight b")
      ->check(CLI::PositiveNumber);
  add_common_options(cmd_kronecker, cfg);
  cmd_kronecker->callback([&] { rc = run_kronecker(kron, cfg); });

  CharTableArgs chart;
  auto* cmd_char_table = app.add_subcommand(
      "char-table", "ordinary character table of the symmetric group S_n");
  cmd_char_table->add_option("-n", chart.n, "symmetric group degree")->required();
  add_common_options(cmd_char_table, cfg);
  cmd_char_table->callback([&] { rc = run_char_table(chart, cfg); });

  RestrictArgs restr;
  auto* cmd_restrict = app.add_subcommand(
      "restrict", "restriction of F_nu^a to S_k x S_{ab-k}");
  cmd_restrict->add_option("-a", restr.a, "block size")->required();
  cmd_restrict->add_option("-b", restr.b, "number of blocks")->required();
  cmd_restrict->add_option("--nu", restr.nu, "partition of b")->required();
  cmd_restrict->add_option("-k", restr.k, "cut point")->required();
  add_common_options(cmd_restrict, cfg);
  cmd_restrict->callback([&] { rc = run_restrict(restr, cfg); });

  VerifyArgs ver;
  auto* cmd_verify = app.add_subcommand(
      "verify", "run a verification sweep and report per-instance status");
  cmd_verify
      ->add_option("claim", ver.claim,
                   "one of: theorem1 thrall corollaries sign-lemma "
                   "tabloid-lemma corollary6 eq1 conjecture")
      ->required()
      ->check(CLI::IsMember(kClaims));
  cmd_verify->add_option("--a", ver.a_text, "range for a, e.g. 2 or 2..3");
  cmd_verify->add_option("--b", ver.b_text, "range for b, e.g. 2..4");
  cmd_verify->add_option("--k", ver.k_text,
                         "cut range for eq1 (the sweep checks every cut)");
  add_common_options(cmd_verify, cfg);
  cmd_verify->callback([&] { rc = run_verify(ver, cfg); });

  OracleArgs orc;
  auto* cmd_oracle = app.add_subcommand(
      "oracle", "straightening oracle for one block intersection component");
  cmd_oracle->add_option("-a", orc.a, "block size")->required();
  cmd_oracle->add_option("-b", orc.b, "number of blocks")->required();
  cmd_oracle->add_option("--nu", orc.nu, "partition of b")->required();
  cmd_oracle->add_option("-k", orc.k, "cut point")->required();
  cmd_oracle->add_option("--lambda", orc.lambda,
                         "block intersection type, a partition of k")
      ->required();
  add_common_options(cmd_oracle, cfg);
  cmd_oracle->callback([&] { rc = run_oracle(orc, cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IntegralityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
