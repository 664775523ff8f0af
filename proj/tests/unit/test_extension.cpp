#include "doctest.h"
#include "helpers.hpp"
#include "wordgroups/error.hpp"
#include "wordgroups/extension.hpp"

using namespace testing;

TEST_SUITE("extension") {
  TEST_CASE("extensions of short words") {
    LanguageOracle o(phi(), 10);
    CHECK(rightExtensions(o, W("00")) == Ws({"0", "1"}));
    CHECK(rightExtensions(o, W("10")) == Ws({"0", "2"}));
    CHECK(leftExtensions(o, W("000")) == Ws({"1", "2"}));
    CHECK(leftExtensions(o, W("001")) == Ws({"0", "1"}));
    CHECK(leftExtensions(o, Word{}) == Ws({"0", "1", "2"}));
    CHECK(rightExtensions(o, W("0"), 2) == Ws({"00", "01", "10", "20"}));
  }

  TEST_CASE("extension graph of the empty word") {
    LanguageOracle o(phi(), 4);
    auto g = extensionGraph(o, Word{});
    CHECK(g.left == Ws({"0", "1", "2"}));
    CHECK(g.right == Ws({"0", "1", "2"}));
    CHECK(g.edges.size() == 5);
    CHECK(characteristic(g) == 1);
    CHECK(connectedComponents(g).count == 1);
    CHECK(isTreeGraph(g));
    CHECK(isForestGraph(g));
  }

  TEST_CASE("the smallest disconnected word") {
    LanguageOracle o(phi(), 16);
    Word w0 = W("001000100010");
    auto g = extensionGraph(o, w0);
    CHECK(connectedComponents(g).count == 2);
    CHECK_FALSE(isConnectedWord(o, w0));
    CHECK(classify(o, w0).bispecial());
    CHECK(isForestGraph(g));
    CHECK_FALSE(isTreeGraph(g));
    CHECK(isConnectedWord(o, W("000100010")));
    CHECK_FALSE(isNeutral(o, W("000100010")));
  }

  TEST_CASE("classification of specials") {
    LanguageOracle o(phi(), 8);
    auto s = classify(o, W("00"));
    CHECK(s.rightSpecial);
    CHECK(s.leftSpecial);
    CHECK(s.bispecial());
    auto t = classify(o, W("01"));
    CHECK_FALSE(t.leftSpecial);
    CHECK_FALSE(t.rightSpecial);
    CHECK_THROWS_AS(classify(LanguageOracle(phi(), 3), W("00")),
                    HorizonExceeded);
  }

  TEST_CASE("suffix embeddings") {
    LanguageOracle o(phi(), 20);
    Word w0 = W("001000100010");
    auto e = suffixEmbedding(o, w0, 4);
    CHECK(e.hostCenter == W("000100010"));
    REQUIRE(e.embeddedLeft.size() == 2);
    CHECK(e.embeddedLeft[0].second == W("0001"));
    CHECK(e.embeddedLeft[1].second == W("1001"));
    CHECK_THROWS_AS(suffixEmbedding(o, w0, 0), DomainError);
    CHECK_THROWS_AS(suffixEmbedding(o, w0, 14), DomainError);
  }

  TEST_CASE("suffix-connected depth of the smallest disconnected word") {
    LanguageOracle o(phi(), 20);
    Word w0 = W("001000100010");
    CHECK(suffixConnectedDepth(o, w0) == 4);
    for (std::size_t d = 1; d <= 3; ++d) {
      CHECK_FALSE(embeddingConnected(o, w0, d));
    }
    CHECK(suffixConnectedDepth(o, w0, 3) == std::nullopt);
    CHECK(suffixConnectedDepth(o, W("0")) == 1);
    CHECK_THROWS_AS(suffixConnectedDepth(o, Word{}), DomainError);
  }

  TEST_CASE("horizon failures report the depth that did not fit") {
    LanguageOracle o(phi(), 15);
    try {
      suffixConnectedDepth(o, W("001000100010"));
      FAIL("expected HorizonExceeded");
    } catch (const HorizonExceeded& e) {
      CHECK(e.required() == 12 + 3 + 1);
    }
  }

  TEST_CASE("Thue-Morse is not suffix-connected at 010") {
    LanguageOracle o(thueMorse(), 12);
    Word w = W(thueMorse(), "010");
    CHECK(suffixConnectedDepth(o, w, 4) == std::nullopt);
    CHECK(suffixConnectedDepth(o, w) == std::nullopt);
    CHECK_FALSE(isConnectedWord(o, w));
  }

  TEST_CASE("prefix-connectedness is the mirror notion") {
    LanguageOracle o(phi(), 24);
    for (std::size_t k = 1; k <= 8; ++k) {
      for (const auto& w : o.factorsOfLength(k)) {
        auto m = o.mirror();
        CHECK(prefixConnectedDepth(o, w) ==
              suffixConnectedDepth(m, reversed(w)));
      }
    }
  }

  TEST_CASE("(m,e)-suffix-connectedness") {
    LanguageOracle o(phi(), 30);
    CHECK(isMESuffixConnected(o, 0, 1));
    CHECK(isMESuffixConnected(o, 1, 1));
    CHECK(isMESuffixConnected(o, 11, 1));
    CHECK_FALSE(isMESuffixConnected(o, 12, 3));
    CHECK(isMESuffixConnected(o, 12, 4));
    CHECK_THROWS_AS(isMESuffixConnected(o, 2, 0), DomainError);
    CHECK_THROWS_AS(isMESuffixConnected(o, 2, 4), DomainError);
    LanguageOracle t(thueMorse(), 12);
    CHECK_FALSE(isMESuffixConnected(t, 3, 4));
  }

  TEST_CASE("Fibonacci is a tree set at small lengths") {
    LanguageOracle o(fibonacci(), 14);
    CHECK(isForestGraph(extensionGraph(o, Word{})));
    for (std::size_t k = 1; k <= 12; ++k) {
      for (const auto& w : o.factorsOfLength(k)) {
        CHECK(isTreeGraph(extensionGraph(o, w)));
        CHECK(isNeutral(o, w));
      }
    }
  }

  TEST_CASE("DOT rendering marks embedded vertices") {
    LanguageOracle o(phi(), 20);
    auto e = suffixEmbedding(o, W("001000100010"), 4);
    auto g = extensionGraph(o, e.hostCenter, 4, 4);
    std::string dot = toDot(g, o.alphabet(), {W("0001"), W("1001")});
    CHECK(dot.find("L_0001") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(dot.find("R_2000") != std::string::npos);
  }
}
