#include <doctest.h>

#include <map>

#include "rstirling/enumeration.hpp"
#include "rstirling/pattern_matrix.hpp"
#include "rstirling/schubert.hpp"
#include "rstirling/verification.hpp"

using namespace rstirling;
using namespace rstirling::geometry;
using rstirling::combinatorics::Word;

TEST_CASE("pattern matrix of 242141 matches the worked example") {
  const Word w = Word::parse("242141");
  const auto pm = pattern_matrix(w, Parameters(6, 4, 0));
  const std::string expected =
      "0 0 0 1 0 1\n"
      "1 * 1 0 * *\n"
      "0 0 0 0 0 0\n"
      "0 1 0 0 1 *\n";
  CHECK(pm.ascii() == expected);
  CHECK(pm.star_count() == 4);

  // Row 3 is all zero since the letter 3 does not occur.
  for (int j = 1; j <= 6; ++j) CHECK(pm.at(3, j) == Cell::zero);
  // Exactly one 1 per column, in row w_j.
  for (int j = 1; j <= 6; ++j) {
    int ones = 0;
    for (int i = 1; i <= 4; ++i)
      if (pm.at(i, j) == Cell::one) ++ones;
    CHECK(ones == 1);
    CHECK(pm.at(w.letters[static_cast<size_t>(j - 1)], j) == Cell::one);
  }
}

TEST_CASE("pattern matrix structural cases") {
  // Single-letter alphabet: the 1 x n all-ones matrix.
  const auto pm1 = pattern_matrix(Word::parse("1111"), Parameters(4, 1, 0));
  CHECK(pm1.ascii() == "1 1 1 1\n");
  CHECK(pm1.star_count() == 0);

  // 1 2 ... k followed by all k, by case-by-case rule application: initial
  // column j stars every smaller letter (they all occurred earlier), and the
  // trailing non-initial columns star the letters 1..k-1.
  const Parameters p(5, 3, 0);
  const auto pm = pattern_matrix(Word::parse("12333"), p);
  CHECK(pm.ascii() ==
        "1 * * * *\n"
        "0 1 * * *\n"
        "0 0 1 1 1\n");
}

TEST_CASE("initial indices") {
  CHECK(initial_indices(Word::parse("242141")) == std::vector<int>{1, 2, 4});
  CHECK(initial_indices(Word::parse("123")) == std::vector<int>{1, 2, 3});
  CHECK(initial_indices(Word::parse("111")) == std::vector<int>{1});
}

TEST_CASE("codimension statistics") {
  // The unique word of codimension zero.
  const Parameters p(4, 3, 2);
  int zero_codim = 0;
  combinatorics::for_each_word(p, [&](const Word& w) {
    if (codim(w, p) == 0) ++zero_codim;
  });
  CHECK(zero_codim == 1);
  CHECK(codim(Word::parse("1233"), p) == 0);

  // codim is the degree of the word Schubert polynomial.
  combinatorics::for_each_word(p, [&](const Word& w) {
    CHECK(codim(w, p) == polyalg::word_schubert(w, p).degree());
  });

  // Words outside the family are rejected.
  CHECK_THROWS_AS(codim(Word::parse("1133"), p), DomainError);

  // Codimension generating function equals the Hilbert series.
  for (const Parameters& q : {Parameters(4, 3, 2), Parameters(4, 2, 0), Parameters(5, 3, 1)}) {
    std::map<int, std::int64_t> dist;
    combinatorics::for_each_word(q, [&](const Word& w) { ++dist[codim(w, q)]; });
    const auto hilbert = rings::stirling_quotient(q)->hilbert_series();
    for (size_t d = 0; d < hilbert.size(); ++d)
      CHECK(hilbert[d] == dist[static_cast<int>(d)]);
  }

  // Permutation words: codimension is the Coxeter length.
  for (int n = 1; n <= 4; ++n) {
    const Parameters q(n, n, 0);
    for (const auto& u : combinatorics::all_permutations(n))
      CHECK(codim(Word{u.one_line()}, q) == u.length());
  }
}
