// derham: integral de Rham cohomology of affine space, Bockstein pages and
// verification reports.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or bounds error.

#include "derham/bockstein.hpp"
#include "derham/cohomology.hpp"
#include "derham/report.hpp"
#include "derham/theorems.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace derham;

constexpr int kMaxRank = 4;
constexpr int kMaxDegree = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool csv = false;
  bool latex = false;
  bool unsafe_bounds = false;
  bool timing = false;
  std::string cache;

  Format format() const { return csv ? Format::csv : latex ? Format::latex : Format::json; }
};

void check_bounds(const Common& c, int r, int n) {
  if (c.unsafe_bounds) return;
  if (r > kMaxRank || n > kMaxDegree)
    throw UsageError("bounds exceeded: r <= " + std::to_string(kMaxRank) + " and n <= " +
                     std::to_string(kMaxDegree) + " unless --unsafe-bounds is given");
}

void check_prime(Prime p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw UsageError("prime must be one of 2, 3, 5, 7, 11, 13; got " + std::to_string(p));
}

std::filesystem::path cache_file(const Common& c, const std::string& command) {
  std::string name;
  for (char ch : command) name += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return std::filesystem::path(c.cache) / ("v" + std::string(kSchemaVersion) + "_" + name + ".json");
}

std::optional<ReportDocument> cache_load(const Common& c, const std::string& command) {
  if (c.cache.empty()) return std::nullopt;
  std::ifstream in(cache_file(c, command));
  if (!in) return std::nullopt;
  try {
    ReportDocument doc = document_from_json(Json::parse(in));
    if (doc.command != command) return std::nullopt;
    return doc;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const Common& c, const ReportDocument& doc) {
  if (c.cache.empty()) return;
  std::filesystem::create_directories(c.cache);
  ReportDocument stored = doc;
  stored.timing_seconds.reset();
  const auto path = cache_file(c, doc.command);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << to_json(stored).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

template <typename Build>
int emit(const Common& c, const std::string& command, const std::string& kind, Json params, Build&& build,
         bool is_verify = false) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  if (auto hit = cache_load(c, command)) {
    doc = *hit;
  } else {
    doc.command = command;
    doc.kind = kind;
    doc.parameters = std::move(params);
    doc.results = build();
    cache_store(c, doc);
  }
  if (c.timing)
    doc.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << render(doc, c.format());
  return is_verify && !verify_passed(doc.results) ? 1 : 0;
}

std::string echo(const std::string& sub, std::initializer_list<std::pair<const char*, std::string>> args) {
  std::string s = sub;
  for (const auto& [flag, value] : args)
    if (!value.empty()) s += std::string(" ") + flag + " " + value;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral de Rham cohomology of affine space over Z"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  auto* fmt = app.add_option_group("format");
  bool json_flag = false;
  fmt->add_flag("--json", json_flag, "JSON output (default)");
  fmt->add_flag("--csv", common.csv, "CSV output");
  fmt->add_flag("--latex", common.latex, "LaTeX table output");
  fmt->require_option(0, 1);
  app.add_flag("--unsafe-bounds", common.unsafe_bounds, "Allow r > 4 or n > 16");
  app.add_flag("--timing", common.timing, "Add wall-clock timing to the document");
  app.add_option("--cache", common.cache, "Directory memoizing result documents");

  int r = 0, n = 0, i = 0, kmax = 0;
  long long p = 0;
  unsigned threads = 0;

  auto* coh = app.add_subcommand("cohomology", "Integral cohomology H^i(Omega_n) in every degree");
  coh->add_option("-r,--rank", r, "Number of variables")->required()->check(CLI::Range(1, 1 << 20));
  coh->add_option("-n,--degree", n, "Total degree")->required()->check(CLI::NonNegativeNumber);

  auto* pg = app.add_subcommand("pages", "Bockstein spectral sequence pages at a prime");
  pg->add_option("-r,--rank", r, "Number of variables")->required()->check(CLI::Range(1, 1 << 20));
  pg->add_option("-n,--degree", n, "Total degree")->required()->check(CLI::NonNegativeNumber);
  pg->add_option("-p,--prime", p, "Prime")->required();
  pg->add_option("--kmax", kmax, "Last page (default: p-adic valuation of n plus one)")
      ->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Run verification reports");
  std::string statement;
  bool all = false, single = false;
  auto* st = ver->add_option("--statement", statement, "Statement id (or euler)");
  auto* al = ver->add_flag("--all", all, "Every statement");
  st->excludes(al);
  ver->add_option("-r,--rank", r, "Largest number of variables")->required()->check(CLI::Range(1, 1 << 20));
  ver->add_option("-n,--degree", n, "Largest total degree")->required()->check(CLI::NonNegativeNumber);
  ver->add_option("-p,--prime", p, "Only this prime");
  ver->add_flag("--single", single, "Run at exactly (r, n, p) instead of sweeping");
  ver->add_option("--threads", threads, "Worker threads (default: all cores)");

  auto* bas = app.add_subcommand("basis", "Ordered basis of Omega^i_n");
  bas->add_option("-r,--rank", r, "Number of variables")->required()->check(CLI::Range(1, 1 << 20));
  bas->add_option("-n,--degree", n, "Total degree")->required()->check(CLI::NonNegativeNumber);
  bas->add_option("-i,--form-degree", i, "Form degree")->required()->check(CLI::NonNegativeNumber);

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

  const std::string rs = std::to_string(r), ns = std::to_string(n);
  const std::string ps = p ? std::to_string(p) : std::string();
  try {
    if (*coh) {
      check_bounds(common, r, n);
      return emit(common, echo("cohomology", {{"-r", rs}, {"-n", ns}}), "cohomology", Json{{"r", r}, {"n", n}},
                  [&] { return cohomology_results(integral_cohomology(r, n)); });
    }
    if (*pg) {
      check_bounds(common, r, n);
      check_prime(p);
      const std::string ks = kmax ? std::to_string(kmax) : std::string();
      return emit(common, echo("pages", {{"-r", rs}, {"-n", ns}, {"-p", ps}, {"--kmax", ks}}), "pages",
                  Json{{"r", r}, {"n", n}, {"p", p}},
                  [&] { return pages_results(r, n, p, kmax); });
    }
    if (*ver) {
      check_bounds(common, r, n);
      if (p) check_prime(p);
      if (!all && statement.empty()) throw UsageError("verify needs --statement ID or --all");
      std::optional<std::string> id;
      if (!all) {
        id = canonical_statement(statement);
        if (!id) throw UsageError("unknown statement id: " + statement);
      }
      Json params{{"r", r}, {"n", n}};
      if (p) params["p"] = p;
      params["statement"] = id ? *id : "all";
      params["mode"] = single ? "single" : "sweep";
      const std::string command =
          echo("verify", {{"--statement", id.value_or("")}, {"-r", rs}, {"-n", ns}, {"-p", ps}}) +
          (all ? " --all" : "") + (single ? " --single" : "");
      if (single) {
        if (all) throw UsageError("--single needs one --statement");
        const bool needs_p = *id == "cartier" || *id == "couple_morphism" || *id == "frobenius_iso" ||
                             *id == "page_identification";
        if (needs_p && !p) throw UsageError(*id + " needs -p in --single mode");
        return emit(common, command, "verify", params,
                    [&] { return verify_results({verify_single(*id, r, n, p)}); }, true);
      }
      SweepOptions o;
      o.rmax = r;
      o.nmax = n;
      o.prime = p;
      o.threads = threads;
      if (id) o.statements = {*id};
      return emit(common, command, "verify", params, [&] { return verify_results(sweep(o)); }, true);
    }
    if (*bas) {
      check_bounds(common, r, n);
      const std::string is = std::to_string(i);
      return emit(common, echo("basis", {{"-r", rs}, {"-n", ns}, {"-i", is}}), "basis",
                  Json{{"r", r}, {"n", n}, {"i", i}}, [&] { return basis_results(r, n, i); });
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
