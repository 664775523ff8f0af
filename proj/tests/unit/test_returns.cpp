#include "../oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "wordgroups/error.hpp"
#include "wordgroups/rauzy.hpp"
#include "wordgroups/returns.hpp"

using namespace testing;

namespace {

std::vector<Word> fromSet(const std::set<Word>& s) {
  std::vector<Word> v(s.begin(), s.end());
  sortShortlex(v);
  return v;
}

}  // namespace

TEST_SUITE("returns") {
  TEST_CASE("the empty pair returns to every letter") {
    for (const auto* s : {&phi(), &thueMorse(), &fibonacci()}) {
      LanguageOracle o(*s, 8);
      auto r = returnSet(o, {}, {});
      CHECK(r.complete);
      CHECK(r.words == o.factorsOfLength(1));
      CHECK(equal(returnGroup(r, s->alphabetSize()), freeGroup(s->alphabetSize())));
    }
  }

  TEST_CASE("return sets agree with the extension-tree oracle") {
    for (const auto* s : {&phi(), &thueMorse(), &fibonacci()}) {
      LanguageOracle o(*s, 128);
      for (std::size_t n = 0; n <= 4; ++n) {
        for (const auto& w : o.factorsOfLength(n)) {
          for (std::size_t i = 0; i <= n; ++i) {
            Word u = slice(w, 0, i), v = slice(w, i, n);
            auto r = returnSet(o, u, v);
            CAPTURE(s->toString());
            CAPTURE(S(w));
            CHECK(r.complete);
            CHECK(r.words == fromSet(oracle::returnTree(o, u, v)));
          }
        }
      }
    }
  }

  TEST_CASE("every return word satisfies the defining conditions") {
    LanguageOracle o(phi(), 80);
    for (const auto& w : o.factorsOfLength(5)) {
      auto r = returnSet(o, slice(w, 0, 2), slice(w, 2, 5));
      for (const auto& x : r.words) {
        Word urv = r.u + x + r.v;
        CHECK(o.contains(urv));
        CHECK(startsWith(urv, w));
        CHECK(endsWith(urv, w));
        CHECK(occurrences(urv, w).size() == 2);
      }
    }
  }

  TEST_CASE("stability under a further doubling") {
    for (const auto& w : factors(phi(), 4)) {
      auto r = scanReturnWords(phi(), slice(w, 0, 1), slice(w, 1, 4));
      ReturnScanOptions more;
      more.initialLength = 2 * r.scanLength;
      auto again = scanReturnWords(phi(), r.u, r.v, more);
      CHECK(again.words == r.words);
      CHECK(4 * r.maxGap < r.scanLength);
    }
  }

  TEST_CASE("Fibonacci return sets have two elements") {
    LanguageOracle o(fibonacci(), 40);
    auto r = returnSet(o, W(fibonacci(), "0"), {});
    CHECK(r.words == Ws(fibonacci(), {"0", "10"}));
    auto k = returnGroup(r, 2);
    CHECK(k.rank() == 2);
    std::vector<GroupElement> gs;
    for (const auto& x : r.words) gs.push_back(GroupElement::fromWord(x));
    CHECK(isFreeSubset(gs, 2));
  }

  TEST_CASE("incomplete scans are refused") {
    ReturnScanOptions tiny;
    tiny.initialLength = 8;
    tiny.maxLength = 16;
    auto r = scanReturnWords(phi(), W("0001"), W("00"), tiny);
    CHECK_FALSE(r.complete);
    CHECK_THROWS_AS(returnGroup(r, 3), Error);
  }

  TEST_CASE("errors") {
    LanguageOracle o(phi(), 10);
    CHECK_THROWS_AS(returnSet(o, W("00"), W("00")), DomainError);
    LanguageOracle small(phi(), 5);
    CHECK_THROWS_AS(returnSet(small, W("0"), W("01")), HorizonExceeded);
  }

  TEST_CASE("longest return word breaks ties shortlex-greatest") {
    ReturnSet r;
    r.words = Ws({"0", "10", "01"});
    CHECK(longestReturnWord(r) == W("10"));
  }

  TEST_CASE("zigzag inclusions") {
    LanguageOracle o(phi(), 40);
    auto z = checkZigzag(o, {}, W("0"));
    CHECK(z.returnInRauzy);
    CHECK(z.rauzyInReturn);
    LanguageOracle t(thueMorse(), 40);
    CHECK(checkZigzag(t, W(thueMorse(), "0"), W(thueMorse(), "1")).passed());
    CHECK(checkZigzag(o, {}, {}).passed());
    auto r = returnSet(o, W("0"), W("2"));
    LanguageOracle tight(phi(), zigzagHorizon(r) - 1);
    try {
      checkZigzag(tight, r);
      FAIL("expected HorizonExceeded");
    } catch (const HorizonExceeded& e) {
      CHECK(e.required() == zigzagHorizon(r));
    }
  }

  TEST_CASE("zigzag holds on Thue-Morse even without suffix-connectedness") {
    LanguageOracle t(thueMorse(), 60);
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& w : t.factorsOfLength(n))
        for (std::size_t i = 0; i <= n; ++i)
          CHECK(checkZigzag(t, slice(w, 0, i), slice(w, i, n)).passed());
  }

  TEST_CASE("main theorem on the case-study language") {
    LanguageOracle o(phi(), theoremHorizon(phi(), 3));
    auto r = verifyMainTheorem(o, 3);
    CHECK(r.passed());
    CHECK(r.expectedRank == 3);
    CHECK(r.components == 1);
    CHECK(r.suffixConnected);
    CHECK(r.pairs.size() == 6 + 15 + 28);
    for (const auto& p : r.pairs) {
      CHECK(p.rank == 3);
      CHECK(p.equalsRauzyGroup);
      CHECK(p.theorem);
    }
  }

  TEST_CASE("main theorem at maxLen 0") {
    LanguageOracle o(phi(), theoremHorizon(phi(), 0));
    auto r = verifyMainTheorem(o, 0);
    CHECK(r.pairs.empty());
    CHECK(r.degenerateOk);
    CHECK(r.passed());
  }

  TEST_CASE("main theorem on Fibonacci") {
    LanguageOracle o(fibonacci(), theoremHorizon(fibonacci(), 3));
    auto r = verifyMainTheorem(o, 3);
    CHECK(r.passed());
    CHECK(r.expectedRank == 2);
  }

  TEST_CASE("Thue-Morse falls outside the theorem") {
    LanguageOracle o(thueMorse(), theoremHorizon(thueMorse(), 3));
    auto r = verifyMainTheorem(o, 3);
    CHECK_FALSE(r.suffixConnected);
    CHECK_FALSE(r.notSuffixConnected.empty());
  }

  TEST_CASE("analysis of a single pair") {
    LanguageOracle o(phi(), 40);
    auto p = analyzePair(o, W("0"), W("01"), expectedReturnRank(o));
    CHECK(p.passed());
    CHECK(p.b == 1);
    CHECK(p.conjugator == GroupElement::fromWord(W("01")).inverse());
  }

  TEST_CASE("corollaries on the case-study language") {
    LanguageOracle o(phi(), theoremHorizon(phi(), 7));
    auto r = verifyCorollaries(o, 7);
    CHECK(r.passed());
    CHECK(r.allGenerate);
    CHECK(r.emptyConnected);
    CHECK(r.someFree);
    CHECK_FALSE(r.allFree);
    CHECK(r.cardinalityHistogram.count(3) == 1);
    CHECK(r.cardinalityHistogram.count(4) == 1);
    CHECK_FALSE(r.neutral);
    CHECK_FALSE(r.connected);
  }

  TEST_CASE("corollaries on Fibonacci") {
    LanguageOracle o(fibonacci(), theoremHorizon(fibonacci(), 8));
    auto r = verifyCorollaries(o, 8);
    CHECK(r.passed());
    CHECK(r.neutral);
    CHECK(r.connected);
    CHECK(r.treeSet);
    CHECK(r.allFree);
    CHECK(r.cardinalityFormula);
    CHECK(r.hypothesisScale >= 8);
  }
}
