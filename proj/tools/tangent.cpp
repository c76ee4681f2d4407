// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tangent/engine/classify.hpp"
#include "tangent/engine/tables.hpp"
#include "tangent/engine/verify.hpp"
#include "tangent/obstructions/pfister_oracle.hpp"
#include "tangent_embedded_catalog.hpp"

namespace {

using namespace tangent;

constexpr int kUsage = 1;
constexpr int kCatalog = 2;
constexpr int kInconsistent = 3;
constexpr int kRejected = 4;

Catalog load_catalog(const std::string& flag) {
  if (!flag.empty()) return Catalog::load(flag);
  if (const char* env = std::getenv("TANGENT_CATALOG"); env && *env) return Catalog::load(env);
  return Catalog::parse(tangent_build::kEmbeddedCatalog);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_classify(const Catalog& cat, const std::string& expr, bool json, bool timing) {
  engine::Engine eng(cat);
  const auto& rep = eng.classify(expr);
  if (json)
    std::cout << engine::to_json(rep, timing).dump(2) << '\n';
  else
    std::cout << engine::to_text(rep);
  return 0;
}

int run_table(const Catalog& cat, const std::string& which, std::int64_t bound, const std::string& format) {
  engine::Engine eng(cat);
  const auto t = engine::regenerate_table(eng, which, bound);
  std::cout << engine::render(t, engine::parse_format(format), cat.hash());
  return 0;
}

int run_verify(const Catalog& cat, const std::string& path) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("certificate file is not JSON: ") + e.what());
  }
  if (j.contains("certificate")) j = j.at("certificate");
  if (j.is_null()) throw Error("report carries no certificate (status Unknown)");
  const auto cert = certificate_from_json(j);
  const auto v = engine::verify_certificate(cat, cert);
  std::cout << engine::to_json(v).dump(2) << '\n';
  return v.ok ? 0 : kRejected;
}

int run_oracle(int n, std::size_t samples, std::uint64_t seed, const std::string& field, bool json) {
  if (field != "R" && field != "C") throw Error("--field must be R or C");
  const auto ws = obstructions::pfister_oracle(n, field[0], samples, seed);
  std::size_t failures = 0;
  double odd = 0, pair = 0;
  for (const auto& w : ws) {
    failures += !w.ok;
    odd = std::max(odd, w.check.odd_residual);
    pair = std::max(pair, w.check.pairing_residual);
  }
  if (json) {
    nlohmann::ordered_json out;
    out["n"] = n;
    out["field"] = field;
    out["seed"] = seed;
    out["samples"] = samples;
    out["failures"] = failures;
    out["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : ws) out["witnesses"].push_back(obstructions::to_json(w));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << ws.size() << " witnesses, " << failures << " failures (n=" << n << ", field " << field
              << ", seed " << seed << ")\n"
              << "max odd-coefficient residual " << odd << ", max pairing residual " << pair << '\n';
    for (const auto& w : ws)
      if (!w.ok) std::cout << "sample " << w.sample << " (seed " << w.seed << "): " << w.failure << '\n';
  }
  return failures ? kRejected : 0;
}

int run_sweep(const Catalog& cat, std::int64_t bound, const std::string& format) {
  engine::Engine eng(cat);
  const auto summary = engine::sweep(eng, bound);
  const auto table = engine::full_sweep(eng, bound);
  const auto f = engine::parse_format(format);
  if (f == engine::Format::Json) {
    auto j = nlohmann::ordered_json::parse(engine::render(table, f, cat.hash()));
    j["consistency"] = engine::to_json(summary);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << engine::render(table, f);
    if (f == engine::Format::Markdown) {
      std::cout << "\n## Consistency\n\n";
      const auto j = engine::to_json(summary);
      for (const auto& [k, v] : j.items())
        if (k != "problems") std::cout << "- " << k << ": " << v.dump() << '\n';
      for (const auto& p : summary.problems) std::cout << "- problem: " << p << '\n';
    }
  }
  if (!summary.ok()) {
    std::cerr << summary.problems.size() << " consistency problems\n";
    return kInconsistent;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangent: compact quotients of tangential symmetric spaces"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "catalog JSON (default: $TANGENT_CATALOG, then the built-in copy)");

  auto* classify = app.add_subcommand("classify", "classify a symmetric pair G/H");
  std::string expr;
  bool json = false, no_timing = false;
  classify->add_option("pair", expr, "pair expression, e.g. \"SL(4,R)/Sp(2,R)\"")->required();
  classify->add_flag("--json", json, "print the report as JSON");
  classify->add_flag("--no-timing", no_timing, "omit timing from JSON output");

  auto* table = app.add_subcommand("table", "regenerate a table");
  std::string which, format = "md";
  std::int64_t bound = 8;
  table->add_option("which", which, "table1..table5, unknown_set or full_sweep")
      ->required()
      ->check(CLI::IsMember(engine::table_names()));
  table->add_option("--bound", bound, "rank and parameter bound")->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "markdown", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "re-derive a certificate and compare");
  std::string cert_path;
  verify->add_option("certificate", cert_path, "certificate or report JSON file")->required();

  auto* oracle = app.add_subcommand("oracle", "numerical oracles");
  oracle->require_subcommand(1);
  auto* pfister = oracle->add_subcommand("pfister", "find even-polynomial points on random subspaces");
  int n = 2;
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  std::string field = "R";
  bool oracle_json = false;
  pfister->add_option("--n", n, "half the matrix size (2 or 3)")->check(CLI::IsMember({2, 3}));
  pfister->add_option("--samples", samples, "number of subspaces")->check(CLI::PositiveNumber);
  pfister->add_option("--seed", seed, "random seed");
  pfister->add_option("--field", field, "R or C")->check(CLI::IsMember({"R", "C"}));
  pfister->add_flag("--json", oracle_json, "print witnesses as JSON");

  auto* sweep = app.add_subcommand("sweep", "classify every instance and run consistency checks");
  std::int64_t sweep_bound = 8;
  std::string sweep_format = "md";
  sweep->add_option("--bound", sweep_bound, "rank and parameter bound")->check(CLI::NonNegativeNumber);
  sweep->add_option("--format", sweep_format, "md, csv or json")->check(CLI::IsMember({"md", "markdown", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*pfister) return run_oracle(n, samples, seed, field, oracle_json);
    const Catalog cat = load_catalog(catalog_path);
    if (*classify) return run_classify(cat, expr, json, !no_timing);
    if (*table) return run_table(cat, which, bound, format);
    if (*verify) return run_verify(cat, cert_path);
    if (*sweep) return run_sweep(cat, sweep_bound, sweep_format);
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << '\n';
    return kCatalog;
  } catch (const engine::InconsistencyError& e) {
    std::cerr << e.what() << '\n'
              << "exists certificate: " << to_json(e.exists()).dump() << '\n'
              << "not-exists certificate: " << to_json(e.not_exists()).dump() << '\n';
    return kInconsistent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
