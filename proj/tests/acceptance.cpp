// Acceptance suite: one PASS/FAIL line per numbered criterion, each pinned
// to its stated size bound and tolerance (everything here is exact).
#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
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

using namespace rstirling;
using namespace rstirling::combinatorics;
using rstirling::rings::VerifyOptions;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool pass = false;
  bool gating = true;
  std::string detail;
};

std::vector<Parameters> triples_up_to(int max_n) {
  std::vector<Parameters> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k)
      for (int r = 0; r <= k; ++r) out.emplace_back(n, k, r);
  return out;
}

// Runs f over the triples on a small worker pool; failures are collected
// per-task so the merged report is deterministic.
std::vector<std::string> parallel_over_triples(const std::vector<Parameters>& triples,
                                               const std::function<std::string(const Parameters&)>& f) {
  std::vector<std::string> failures(triples.size());
  std::atomic<size_t> next{0};
  const unsigned width = std::min<unsigned>(8, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < width; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= triples.size()) return;
        try {
          failures[i] = f(triples[i]);
        } catch (const std::exception& e) {
          failures[i] = triples[i].to_string() + ": exception: " + e.what();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  std::vector<std::string> out;
  for (auto& s : failures)
    if (!s.empty()) out.push_back(std::move(s));
  return out;
}

std::string first_or_count(const std::vector<std::string>& failures) {
  if (failures.empty()) return "";
  return std::to_string(failures.size()) + " failures; first: " + failures.front();
}

std::vector<OrderedSetPartition> brute_force_partitions(const Parameters& p) {
  std::vector<OrderedSetPartition> out;
  std::vector<int> assign(static_cast<size_t>(p.n), 0);
  auto rec = [&](auto&& self, int letter) -> void {
    if (letter > p.n) {
      std::vector<std::vector<int>> blocks(static_cast<size_t>(p.k));
      for (int i = 1; i <= p.n; ++i)
        blocks[static_cast<size_t>(assign[static_cast<size_t>(i - 1)])].push_back(i);
      for (const auto& b : blocks)
        if (b.empty()) return;
      OrderedSetPartition sigma(std::move(blocks));
      if (sigma.is_r_stirling(p.r)) out.push_back(std::move(sigma));
      return;
    }
    for (int b = 0; b < p.k; ++b) {
      assign[static_cast<size_t>(letter - 1)] = b;
      self(self, letter + 1);
    }
  };
  rec(rec, 1);
  return out;
}

// --------------------------------------------------------------------------

Criterion criterion_bijection() {
  Criterion c{1, "bijection: insertion and code are mutually inverse, n <= 8"};
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::int64_t> objects{0};
  const auto failures = parallel_over_triples(triples_up_to(8), [&](const Parameters& p) {
    std::int64_t count = 0;
    std::string failure;
    for_each_code(p, [&](std::span<const int> code) {
      ++count;
      const auto sigma = partition_from_code(code, p);
      const auto back = coinversion_code(sigma);
      if (!std::equal(back.begin(), back.end(), code.begin(), code.end()) && failure.empty())
        failure = p.to_string() + ": code round trip failed at " + format_code(code);
    });
    if (count != ordered_partition_count(p))
      failure = p.to_string() + ": enumerated " + std::to_string(count) + " codes, expected " +
                std::to_string(ordered_partition_count(p));
    // Independent direction on brute-force partitions at small n.
    if (p.n <= 5) {
      for (const auto& sigma : brute_force_partitions(p)) {
        const auto code = coinversion_code(sigma, p);
        if (!(partition_from_code(code, p) == sigma) && failure.empty())
          failure = p.to_string() + ": insertion round trip failed at " + sigma.to_string();
      }
    }
    objects += count;
    return failure;
  });
  const auto secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  c.pass = failures.empty() && secs < 120.0;
  c.detail = std::to_string(objects.load()) + " objects in " + std::to_string(secs) +
             "s (< 120s). " + first_or_count(failures);
  return c;
}

Criterion criterion_cardinality() {
  Criterion c{2, "cardinality: |OP| = k! Stir = |W|, n <= 8"};
  const auto failures = parallel_over_triples(triples_up_to(8), [&](const Parameters& p) {
    const std::int64_t expected = ordered_partition_count(p);
    std::int64_t codes = 0;
    for_each_code(p, [&](std::span<const int>) { ++codes; });
    if (codes != expected)
      return p.to_string() + ": codes " + std::to_string(codes) + " != " +
             std::to_string(expected);
    if (word_count(p) != expected)
      return p.to_string() + ": words " + std::to_string(word_count(p)) + " != " +
             std::to_string(expected);
    return std::string();
  });
  c.pass = failures.empty();
  c.detail = first_or_count(failures);
  return c;
}

Criterion criterion_table_golden() {
  Criterion c{3, "worked 30-row table reproduction (byte-level golden)"};

  const std::vector<std::array<std::string, 3>> table = {
      {"1|2|34", "2,1,0,2", "x1^2*x2*x4^2"}, {"1|24|3", "2,1,0,1", "x1^2*x2*x4"},
      {"14|2|3", "2,1,0,0", "x1^2*x2"},      {"1|23|4", "2,1,2,0", "x1^2*x2*x3^2"},
      {"13|2|4", "2,1,1,0", "x1^2*x2*x3"},   {"2|1|34", "1,1,0,2", "x1*x2*x4^2"},
      {"2|14|3", "1,1,0,1", "x1*x2*x4"},     {"24|1|3", "1,1,0,0", "x1*x2"},
      {"2|13|4", "1,1,2,0", "x1*x2*x3^2"},   {"23|1|4", "1,1,1,0", "x1*x2*x3"},
      {"1|34|2", "2,0,0,1", "x1^2*x4"},      {"1|3|24", "2,0,0,2", "x1^2*x4^2"},
      {"14|3|2", "2,0,0,0", "x1^2"},         {"1|4|23", "2,0,2,0", "x1^2*x3^2"},
      {"13|4|2", "2,0,1,0", "x1^2*x3"},      {"2|34|1", "0,1,0,1", "x2*x4"},
      {"2|3|14", "0,1,0,2", "x2*x4^2"},      {"24|3|1", "0,1,0,0", "x2"},
      {"2|4|13", "0,1,2,0", "x2*x3^2"},      {"23|4|1", "0,1,1,0", "x2*x3"},
      {"34|1|2", "1,0,0,0", "x1"},           {"3|14|2", "1,0,0,1", "x1*x4"},
      {"3|1|24", "1,0,0,2", "x1*x4^2"},      {"4|13|2", "1,0,1,0", "x1*x3"},
      {"4|1|23", "1,0,2,0", "x1*x3^2"},      {"34|2|1", "0,0,0,0", "1"},
      {"3|24|1", "0,0,0,1", "x4"},           {"3|2|14", "0,0,0,2", "x4^2"},
      {"4|23|1", "0,0,1,0", "x3"},           {"4|2|13", "0,0,2,0", "x3^2"}};

  // Byte-level golden comparison of the CLI output.
  const std::string cmd =
      std::string(RSTIRLING_CLI_PATH) + " enumerate --n 4 --k 3 --r 2 --format csv";
  std::string out;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
  }
  std::ifstream golden_in(std::string(RSTIRLING_GOLDEN_DIR) + "/enumerate_4_3_2.csv",
                          std::ios::binary);
  std::ostringstream golden;
  golden << golden_in.rdbuf();

  // Row set comparison against the frozen table.
  std::set<std::string> expected;
  for (const auto& row : table) expected.insert(row[0] + ";" + row[1] + ";" + row[2]);
  std::set<std::string> got;
  std::istringstream lines(out);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    // sigma,"c1,c2,c3,c4",inv,coinv,monomial
    const size_t q1 = line.find('"');
    const size_t q2 = line.find('"', q1 + 1);
    const std::string sigma = line.substr(0, q1 - 1);
    const std::string code = line.substr(q1 + 1, q2 - q1 - 1);
    const std::string monomial = line.substr(line.rfind(',') + 1);
    got.insert(sigma + ";" + code + ";" + monomial);
  }

  c.pass = rows == 30 && got == expected && !out.empty() && out == golden.str();
  c.detail = std::to_string(rows) + " rows; set match: " + (got == expected ? "yes" : "NO") +
             "; bytes match golden: " + (out == golden.str() ? "yes" : "NO");
  return c;
}

Criterion criterion_standard_basis() {
  Criterion c{4, "standard monomial basis equals the code image, n <= 6"};
  const auto start = std::chrono::steady_clock::now();
  const auto failures = parallel_over_triples(triples_up_to(6), [&](const Parameters& p) {
    const auto report = rings::verify_standard_basis(p);
    if (!report.equal)
      return p.to_string() + ": symmetric difference of size " +
             std::to_string(report.missing_from_groebner.size() +
                            report.extra_in_groebner.size());
    return std::string();
  });
  const auto secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  c.pass = failures.empty() && secs < 600.0;
  c.detail = "77 quotients in " + std::to_string(secs) + "s (< 600s). " + first_or_count(failures);
  return c;
}

Criterion criterion_hilbert() {
  Criterion c{5, "Hilbert series equals the coinv distribution, n <= 6"};
  const auto failures = parallel_over_triples(triples_up_to(6), [&](const Parameters& p) {
    const auto report = rings::verify_hilbert_series(p);
    if (!report.equal)
      return p.to_string() + ": " + format_qseries(report.groebner_series) + " != " +
             format_qseries(report.coinv_series);
    return std::string();
  });
  const auto series = rings::verify_hilbert_series(Parameters(4, 3, 2)).groebner_series;
  const bool pinned = series == std::vector<std::int64_t>{1, 4, 8, 9, 6, 2};
  c.pass = failures.empty() && pinned;
  c.detail = "(4,3,2): " + format_qseries(series) + (pinned ? "" : " MISMATCH") + ". " +
             first_or_count(failures);
  return c;
}

Criterion criterion_max_inv() {
  Criterion c{6, "inv maximum and unique maximizer, n <= 8"};
  const auto failures = parallel_over_triples(triples_up_to(8), [&](const Parameters& p) {
    const int bound = max_inv(p.n, p.k);
    const auto sigma0 = inv_maximizer(p);
    if (inv(sigma0) != bound)
      return p.to_string() + ": inv(sigma0) = " + std::to_string(inv(sigma0)) + " != " +
             std::to_string(bound);
    int maximizers = 0;
    bool over = false, wrong = false;
    for_each_partition(p, [&](const OrderedSetPartition& s) {
      const int v = inv(s);
      if (v > bound) over = true;
      if (v == bound) {
        ++maximizers;
        if (!(s == sigma0)) wrong = true;
      }
    });
    if (over) return p.to_string() + ": inv exceeds the closed-form maximum";
    if (maximizers != 1 || wrong)
      return p.to_string() + ": expected a unique maximizer, found " +
             std::to_string(maximizers);
    return std::string();
  });
  c.pass = failures.empty();
  c.detail = first_or_count(failures);
  return c;
}

Criterion criterion_generator_identities() {
  Criterion c{7, "word Schubert generator identities, n <= 6"};
  const auto failures = parallel_over_triples(triples_up_to(6), [&](const Parameters& p) {
    const auto report = rings::verify_generator_identities(p);
    if (!report.ok) return p.to_string() + ": " + report.failures.front();
    return std::string();
  });
  c.pass = failures.empty();
  c.detail = first_or_count(failures);
  return c;
}

Criterion criterion_demazure() {
  Criterion c{8, "key polynomial membership and leading term, n <= 6"};
  const auto failures = parallel_over_triples(triples_up_to(6), [&](const Parameters& p) {
    const auto report = rings::demazure_membership(p);
    if (!report.ok) return p.to_string() + ": " + report.failures.front();
    return std::string();
  });
  c.pass = failures.empty();
  c.detail = first_or_count(failures);
  return c;
}

Criterion criterion_zbasis() {
  Criterion c{9, "word Schubert change of basis is unimodular, n <= 5"};
  const auto failures = parallel_over_triples(triples_up_to(5), [&](const Parameters& p) {
    const auto cert = rings::schubert_basis_certificate(p);
    if (!cert.ok) return p.to_string() + ": " + cert.failure;
    return std::string();
  });
  c.pass = failures.empty();
  c.detail = first_or_count(failures);
  return c;
}

Criterion criterion_chevalley() {
  Criterion c{10, "graded traces total to fixed-point counts, n <= 5"};
  const auto failures = parallel_over_triples(triples_up_to(5), [&](const Parameters& p) {
    const auto report = rings::verify_chevalley(p);
    if (!report.ok) return p.to_string() + ": " + report.failures.front();
    return std::string();
  });
  c.pass = failures.empty();
  c.detail = first_or_count(failures);
  return c;
}

Criterion criterion_pattern_and_words() {
  Criterion c{11, "pattern matrix and word normal forms (golden)"};
  std::vector<std::string> failures;

  const auto pm = geometry::pattern_matrix(Word::parse("242141"), Parameters(6, 4, 0));
  const std::string expected =
      "0 0 0 1 0 1\n"
      "1 * 1 0 * *\n"
      "0 0 0 0 0 0\n"
      "0 1 0 0 1 *\n";
  if (pm.ascii() != expected) failures.push_back("pattern matrix grid differs");
  if (initial_indices(Word::parse("242141")) != std::vector<int>{1, 2, 4})
    failures.push_back("initial indices differ");
  if (convexify(Word::parse("242141")).to_string() != "224411")
    failures.push_back("convexification differs");
  if (sorting_permutation(Word::parse("242141")).to_string() != "132546")
    failures.push_back("sorting permutation differs");
  if (standardize(Word::parse("3344411"), 5).to_string() != "364781925")
    failures.push_back("standardization differs");

  c.pass = failures.empty();
  c.detail = first_or_count(failures);
  return c;
}

Criterion criterion_conjecture_probe() {
  Criterion c{12, "tensor decomposition probe, n <= 5 (conjecture evidence)"};
  c.gating = false;
  int agree = 0, total = 0;
  std::string detail;
  for (const auto& p : triples_up_to(5)) {
    const auto report = rings::tensor_conjecture_probe(p);
    ++total;
    if (report.equal && report.exact_antisymmetrization) {
      ++agree;
    } else if (detail.empty()) {
      detail = "first mismatch " + p.to_string() + ": " + format_qseries(report.lhs) + " vs " +
               format_qseries(report.rhs);
    }
  }
  c.pass = agree == total;
  c.detail = std::to_string(agree) + "/" + std::to_string(total) +
             " Hilbert-level agreements. " + detail;
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  const auto total_start = std::chrono::steady_clock::now();

  results.push_back(criterion_bijection());
  results.push_back(criterion_cardinality());
  results.push_back(criterion_table_golden());
  results.push_back(criterion_standard_basis());
  results.push_back(criterion_hilbert());
  results.push_back(criterion_max_inv());
  results.push_back(criterion_generator_identities());
  results.push_back(criterion_demazure());
  results.push_back(criterion_zbasis());
  results.push_back(criterion_chevalley());
  results.push_back(criterion_pattern_and_words());
  results.push_back(criterion_conjecture_probe());

  bool ok = true;
  for (const auto& c : results) {
    const char* verdict = c.pass ? "PASS" : (c.gating ? "FAIL" : "INFO(mismatch)");
    std::printf("%-14s criterion %2d: %s%s%s\n", verdict, c.id, c.title.c_str(),
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    if (c.gating && !c.pass) ok = false;
  }
  const auto secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                        std::chrono::steady_clock::now() - total_start)
                        .count();
  std::printf("acceptance %s in %.1fs\n", ok ? "PASSED" : "FAILED", secs);
  return ok ? 0 : 1;
}
