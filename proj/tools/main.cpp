#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rstirling/coinversion.hpp"
#include "rstirling/demazure.hpp"
#include "rstirling/enumeration.hpp"
#include "rstirling/pattern_matrix.hpp"
#include "rstirling/schubert.hpp"
#include "rstirling/text.hpp"
#include "rstirling/verification.hpp"

using json = nlohmann::ordered_json;
using namespace rstirling;
using combinatorics::OrderedSetPartition;
using combinatorics::Permutation;
using combinatorics::Word;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit-code contract: 0 pass, 1 verification failure, 2 usage, 3 budget.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string format = "text";
  int jobs = 1;
  long seed = 0;
  bool timings = false;
  std::optional<int> n, k, r;
  std::optional<int> max_n;
  bool force = false;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json provenance(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
  json p;
  p["tool"] = "rstirling";
  p["version"] = kVersion;
  if (cfg.timings) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    p["wall_ms"] = ms;
  }
  return p;
}

Parameters require_triple(const RunConfig& cfg) {
  if (!cfg.n || !cfg.k || !cfg.r)
    throw ParameterError("this command needs all of --n, --k, --r");
  return Parameters(*cfg.n, *cfg.k, *cfg.r);
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Parameters p = require_triple(cfg);

  struct Row {
    std::string sigma, code, monomial;
    int inv, coinv;
  };
  std::vector<Row> rows;
  combinatorics::for_each_partition(p, [&](const OrderedSetPartition& sigma) {
    const auto code = combinatorics::coinversion_code(sigma);
    polyalg::Monomial m(p.n);
    for (int i = 0; i < p.n; ++i) m[static_cast<size_t>(i)] = code[static_cast<size_t>(i)];
    rows.push_back({sigma.to_string(), format_code(code), m.to_string(),
                    combinatorics::inv(sigma), combinatorics::coinv(sigma)});
  });

  if (cfg.format == "csv") {
    std::printf("sigma,code,inv,coinv,monomial\n");
    for (const auto& row : rows)
      std::printf("%s,%s,%d,%d,%s\n", csv_field(row.sigma).c_str(), csv_field(row.code).c_str(),
                  row.inv, row.coinv, csv_field(row.monomial).c_str());
  } else if (cfg.format == "json") {
    json doc;
    doc["schema"] = "rstirling/enumerate/v1";
    doc["params"] = {{"n", p.n}, {"k", p.k}, {"r", p.r}};
    doc["provenance"] = provenance(cfg, start);
    doc["rows"] = json::array();
    for (const auto& row : rows) {
      doc["rows"].push_back({{"sigma", row.sigma},
                             {"code", parse_code(row.code)},
                             {"inv", row.inv},
                             {"coinv", row.coinv},
                             {"monomial", row.monomial}});
    }
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    size_t w_sigma = 5, w_code = 4, w_mono = 8;
    for (const auto& row : rows) {
      w_sigma = std::max(w_sigma, row.sigma.size());
      w_code = std::max(w_code, row.code.size() + 2);
      w_mono = std::max(w_mono, row.monomial.size());
    }
    std::printf("%-*s  %-*s  %3s  %5s  %s\n", static_cast<int>(w_sigma), "sigma",
                static_cast<int>(w_code), "code", "inv", "coinv", "monomial");
    for (const auto& row : rows)
      std::printf("%-*s  %-*s  %3d  %5d  %s\n", static_cast<int>(w_sigma), row.sigma.c_str(),
                  static_cast<int>(w_code), ("(" + row.code + ")").c_str(), row.inv, row.coinv,
                  row.monomial.c_str());
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
  std::string suite;
  Parameters params;
  bool pass = false;
  bool gating = true;
  std::string detail;
};

const std::vector<std::string> kAllSuites = {
    "standard-basis", "hilbert",      "schubert-zbasis",      "demazure",
    "chevalley",      "generator-identities", "conjecture-probe"};

bool suite_is_character(const std::string& s) {
  return s == "schubert-zbasis" || s == "chevalley" || s == "conjecture-probe";
}

SuiteResult run_suite(const std::string& suite, const Parameters& p,
                      const rings::VerifyOptions& opt) {
  SuiteResult res{suite, p, false, suite != "conjecture-probe", ""};
  if (suite == "standard-basis") {
    const auto rep = rings::verify_standard_basis(p, opt);
    res.pass = rep.equal;
    res.detail = std::to_string(rep.count) + " monomials";
    if (!rep.equal) {
      res.detail += "; symmetric difference:";
      for (const auto& m : rep.missing_from_groebner) res.detail += " -" + m.to_string();
      for (const auto& m : rep.extra_in_groebner) res.detail += " +" + m.to_string();
    }
  } else if (suite == "hilbert") {
    const auto rep = rings::verify_hilbert_series(p, opt);
    res.pass = rep.equal;
    res.detail = format_qseries(rep.groebner_series);
    if (!rep.equal) res.detail += " != " + format_qseries(rep.coinv_series);
  } else if (suite == "schubert-zbasis") {
    const auto cert = rings::schubert_basis_certificate(p, opt);
    res.pass = cert.ok;
    res.detail = cert.ok ? "unimodular (" + cert.change_of_basis.summary() + ")" : cert.failure;
  } else if (suite == "demazure") {
    const auto rep = rings::demazure_membership(p, opt);
    res.pass = rep.ok;
    res.detail = std::to_string(rep.subsets_checked) + " subsets";
    for (const auto& f : rep.failures) res.detail += "; " + f;
  } else if (suite == "chevalley") {
    const auto rep = rings::verify_chevalley(p, opt);
    res.pass = rep.ok;
    res.detail = std::to_string(rep.pairs_checked) + " group elements";
    for (const auto& f : rep.failures) res.detail += "; " + f;
  } else if (suite == "generator-identities") {
    const auto rep = rings::verify_generator_identities(p, opt);
    res.pass = rep.ok;
    res.detail = std::to_string(rep.checked) + " identities";
    for (const auto& f : rep.failures) res.detail += "; " + f;
  } else if (suite == "conjecture-probe") {
    const auto rep = rings::tensor_conjecture_probe(p, opt);
    res.pass = rep.equal && rep.exact_antisymmetrization;
    res.detail = format_qseries(rep.lhs) + (rep.equal ? " == " : " != ") +
                 format_qseries(rep.rhs) + " [" + rep.note + "]";
  } else {
    throw ParameterError("unknown suite '" + suite + "'");
  }
  return res;
}

void run_pool(std::vector<std::function<void()>>& tasks, int jobs) {
  if (jobs <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  const int width = std::min<int>(jobs, static_cast<int>(tasks.size()));
  for (int t = 0; t < width; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        tasks[i]();
      }
    });
  }
  for (auto& w : workers) w.join();
}

int cmd_verify(const RunConfig& cfg, const std::string& suite_arg) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::string> suites;
  if (suite_arg == "all")
    suites = kAllSuites;
  else
    suites.push_back(suite_arg);
  for (const auto& s : suites)
    if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
      throw ParameterError("unknown suite '" + s + "'");

  rings::VerifyOptions opt;
  opt.force = cfg.force;

  // Sweep bound: --max-n, else RSTIRLING_MAX_N, else each suite's own budget.
  std::optional<int> max_n = cfg.max_n;
  if (!max_n) {
    if (const char* env = std::getenv("RSTIRLING_MAX_N")) max_n = std::atoi(env);
  }
  if (max_n && !cfg.force &&
      (*max_n > opt.max_groebner_n ||
       std::any_of(suites.begin(), suites.end(),
                   [&](const std::string& s) { return suite_is_character(s) && *max_n > opt.max_character_n; }))) {
    throw BudgetError("--max-n " + std::to_string(*max_n) +
                      " exceeds the default size budget; pass --force to acknowledge");
  }
  if (cfg.force) {
    if (max_n) {
      opt.max_groebner_n = std::max(opt.max_groebner_n, *max_n);
      opt.max_character_n = std::max(opt.max_character_n, *max_n);
    }
    if (cfg.n) {
      opt.max_groebner_n = std::max(opt.max_groebner_n, *cfg.n);
      opt.max_character_n = std::max(opt.max_character_n, *cfg.n);
    }
    std::fprintf(stderr,
                 "warning: size budget overridden; Groebner and character computations grow "
                 "quickly with n and may take a long time\n");
  }

  // Work list: explicit triple, or the sweep over all valid triples.
  std::vector<std::pair<std::string, Parameters>> work;
  if (cfg.n || cfg.k || cfg.r) {
    const Parameters p = require_triple(cfg);
    for (const auto& s : suites) work.push_back({s, p});
  } else {
    for (const auto& s : suites) {
      const int bound = max_n ? *max_n
                              : (suite_is_character(s) ? opt.max_character_n : opt.max_groebner_n);
      for (int n = 1; n <= bound; ++n)
        for (int k = 1; k <= n; ++k)
          for (int r = 0; r <= k; ++r) work.push_back({s, Parameters(n, k, r)});
    }
  }

  std::vector<SuiteResult> results(work.size(),
                                   SuiteResult{"", Parameters(1, 1, 0), false, true, ""});
  std::vector<std::exception_ptr> errors(work.size());
  std::vector<std::function<void()>> tasks;
  for (size_t i = 0; i < work.size(); ++i) {
    tasks.push_back([&, i] {
      try {
        results[i] = run_suite(work[i].first, work[i].second, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  run_pool(tasks, cfg.jobs);
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  bool all_pass = true;
  for (const auto& res : results)
    if (res.gating && !res.pass) all_pass = false;

  if (cfg.format == "csv") {
    std::printf("suite,n,k,r,verdict,detail\n");
    for (const auto& res : results)
      std::printf("%s,%d,%d,%d,%s,%s\n", csv_field(res.suite).c_str(), res.params.n, res.params.k,
                  res.params.r,
                  res.pass ? "pass" : (res.gating ? "FAIL" : "mismatch(informational)"),
                  csv_field(res.detail).c_str());
  } else if (cfg.format == "json") {
    json doc;
    doc["schema"] = "rstirling/verify/v1";
    doc["suites"] = suites;
    doc["provenance"] = provenance(cfg, start);
    doc["results"] = json::array();
    for (const auto& res : results) {
      doc["results"].push_back({{"suite", res.suite},
                                {"n", res.params.n},
                                {"k", res.params.k},
                                {"r", res.params.r},
                                {"pass", res.pass},
                                {"gating", res.gating},
                                {"detail", res.detail}});
    }
    doc["pass"] = all_pass;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    for (const auto& res : results)
      std::printf("%-22s %-12s %s  %s\n", res.suite.c_str(), res.params.to_string().c_str(),
                  res.pass ? "PASS" : (res.gating ? "FAIL" : "INFO(mismatch)"),
                  res.detail.c_str());
    std::printf("%s\n", all_pass ? "all gating suites passed" : "verification FAILED");
  }
  return all_pass ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// poly

int emit_poly(const RunConfig& cfg, const std::string& kind, const json& input,
              const polyalg::Polynomial& poly,
              std::chrono::steady_clock::time_point start) {
  if (cfg.format == "json") {
    json doc;
    doc["schema"] = "rstirling/poly/v1";
    doc["kind"] = kind;
    doc["input"] = input;
    doc["provenance"] = provenance(cfg, start);
    doc["polynomial"] = poly.to_string();
    doc["degree"] = poly.degree();
    doc["terms"] = poly.term_count();
    std::printf("%s\n", doc.dump(2).c_str());
  } else if (cfg.format == "csv") {
    throw ParameterError("poly output has no CSV form; use text or json");
  } else {
    std::printf("%s\n", poly.to_string().c_str());
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// pattern

int cmd_pattern(const RunConfig& cfg, const std::string& word_text, int k) {
  const auto start = std::chrono::steady_clock::now();
  const Word w = Word::parse(word_text);
  const Parameters p(w.size(), k, 0);
  const auto pm = geometry::pattern_matrix(w, p);
  const auto in_w = combinatorics::initial_indices(w);

  if (cfg.format == "json") {
    json doc;
    doc["schema"] = "rstirling/pattern/v1";
    doc["word"] = word_text;
    doc["k"] = k;
    doc["n"] = w.size();
    doc["provenance"] = provenance(cfg, start);
    doc["initial_indices"] = in_w;
    doc["star_count"] = pm.star_count();
    doc["rows"] = json::array();
    const std::string ascii = pm.ascii();
    size_t pos = 0;
    while (pos < ascii.size()) {
      const size_t end = ascii.find('\n', pos);
      doc["rows"].push_back(ascii.substr(pos, end - pos));
      pos = end + 1;
    }
    std::printf("%s\n", doc.dump(2).c_str());
  } else if (cfg.format == "csv") {
    throw ParameterError("pattern output has no CSV form; use text or json");
  } else {
    std::fputs(pm.ascii().c_str(), stdout);
    std::string in_text = "in(w) = {";
    for (size_t i = 0; i < in_w.size(); ++i)
      in_text += (i ? "," : "") + std::to_string(in_w[static_cast<size_t>(i)]);
    std::printf("%s}, stars = %d\n", in_text.c_str(), pm.star_count());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for ordered r-Stirling partitions, coinversion codes,\n"
               "Groebner standard monomial bases, and word Schubert polynomials"};
  app.set_version_flag("--version", std::string("rstirling ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format: text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--jobs", cfg.jobs, "worker pool width for verification sweeps")
      ->check(CLI::Range(1, 64));
  app.add_option("--seed", cfg.seed, "seed recorded in the run config (reserved for sampled checks)");
  app.add_flag("--timings", cfg.timings, "include wall-clock provenance in JSON output");
  long schubert_cache = -1;
  app.add_option("--schubert-cache", schubert_cache, "entry budget of the Schubert LRU cache");

  auto* enumerate = app.add_subcommand("enumerate", "list OP_{n,k}^{(r)} with codes and statistics");
  int en = 0, ek = 0, er = 0;
  enumerate->add_option("--n", en, "ground-set size")->required();
  enumerate->add_option("--k", ek, "block count")->required();
  enumerate->add_option("--r", er, "Stirling restriction")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite,
                     "standard-basis|hilbert|schubert-zbasis|demazure|chevalley|"
                     "generator-identities|conjecture-probe|all");
  int vn = -1, vk = -1, vr = -1, vmax = -1;
  verify->add_option("--n", vn, "run a single triple: n");
  verify->add_option("--k", vk, "run a single triple: k");
  verify->add_option("--r", vr, "run a single triple: r");
  verify->add_option("--max-n", vmax, "sweep all valid triples with n up to this bound");
  verify->add_flag("--force", cfg.force, "acknowledge a budget override");

  auto* poly = app.add_subcommand("poly", "print a polynomial in canonical text form");
  poly->require_subcommand(1);
  auto* poly_schubert = poly->add_subcommand("schubert", "Schubert polynomial of a permutation");
  std::string perm_text;
  poly_schubert->add_option("--perm", perm_text, "one-line notation, e.g. 321")->required();
  auto* poly_word = poly->add_subcommand("word-schubert", "word Schubert polynomial");
  std::string word_text;
  int wn = 0, wk = 0;
  poly_word->add_option("--word", word_text, "word over [k], e.g. 1245555")->required();
  poly_word->add_option("--n", wn, "word length")->required();
  poly_word->add_option("--k", wk, "alphabet size")->required();
  auto* poly_demazure = poly->add_subcommand("demazure", "key polynomial of a composition");
  std::string gamma_text;
  poly_demazure->add_option("--gamma", gamma_text, "composition, e.g. 0,2,0,1")->required();
  auto* poly_elementary = poly->add_subcommand("elementary", "e_d(x_1..x_m) in `vars` variables");
  auto* poly_homogeneous = poly->add_subcommand("homogeneous", "h_d(x_1..x_m) in `vars` variables");
  int sd = 0, sm = 0, svars = -1;
  for (auto* sub : {poly_elementary, poly_homogeneous}) {
    sub->add_option("--d", sd, "degree")->required();
    sub->add_option("--m", sm, "number of leading variables")->required();
    sub->add_option("--vars", svars, "ambient variable count (default m)");
  }

  auto* pattern = app.add_subcommand("pattern", "pattern matrix of a word");
  std::string pattern_word;
  int pk = 0;
  pattern->add_option("--word", pattern_word, "word over [k]")->required();
  pattern->add_option("--k", pk, "alphabet size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kUsage;
  }

  if (schubert_cache >= 0)
    polyalg::set_schubert_cache_budget(static_cast<size_t>(schubert_cache));

  try {
    if (enumerate->parsed()) {
      cfg.n = en;
      cfg.k = ek;
      cfg.r = er;
      return cmd_enumerate(cfg);
    }
    if (verify->parsed()) {
      if (vn >= 0) cfg.n = vn;
      if (vk >= 0) cfg.k = vk;
      if (vr >= 0) cfg.r = vr;
      if (vmax >= 0) cfg.max_n = vmax;
      return cmd_verify(cfg, suite);
    }
    if (poly->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      if (poly_schubert->parsed()) {
        const Permutation w = Permutation::parse(perm_text);
        return emit_poly(cfg, "schubert", {{"perm", perm_text}}, polyalg::schubert(w), start);
      }
      if (poly_word->parsed()) {
        const Word w = Word::parse(word_text);
        const Parameters p(wn, wk, 0);
        return emit_poly(cfg, "word-schubert", {{"word", word_text}, {"n", wn}, {"k", wk}},
                         polyalg::word_schubert(w, p), start);
      }
      if (poly_demazure->parsed()) {
        const auto gamma = parse_code(gamma_text);
        return emit_poly(cfg, "demazure", {{"gamma", gamma}}, polyalg::demazure(gamma), start);
      }
      const int vars = svars < 0 ? sm : svars;
      if (poly_elementary->parsed())
        return emit_poly(cfg, "elementary", {{"d", sd}, {"m", sm}, {"vars", vars}},
                         polyalg::elementary(sd, sm, vars), start);
      if (poly_homogeneous->parsed())
        return emit_poly(cfg, "homogeneous", {{"d", sd}, {"m", sm}, {"vars", vars}},
                         polyalg::homogeneous(sd, sm, vars), start);
    }
    if (pattern->parsed()) return cmd_pattern(cfg, pattern_word, pk);
  } catch (const BudgetError& e) {
    std::fprintf(stderr, "budget error: %s\n", e.what());
    return kBudget;
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
