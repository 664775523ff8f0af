#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "wordgroups/error.hpp"
#include "wordgroups/extension.hpp"
#include "wordgroups/rauzy.hpp"

using namespace testing;

namespace {

// All (u,v) with uv ∈ L and |uv| <= maxLen.
std::vector<std::pair<Word, Word>> pairs(const LanguageOracle& o,
                                         std::size_t maxLen) {
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t n = 0; n <= maxLen; ++n)
    for (const auto& w : o.factorsOfLength(n))
      for (std::size_t i = 0; i <= n; ++i)
        out.push_back({slice(w, 0, i), slice(w, i, n)});
  return out;
}

}  // namespace

TEST_SUITE("rauzy") {
  TEST_CASE("G_{1,1} labels every edge by its last letter") {
    LanguageOracle o(phi(), 6);
    auto g = rauzyGraph(o, 1, 1);
    CHECK(g.vertices == Ws({"0", "1", "2"}));
    CHECK(g.graph.edgeCount() == 5);
    for (std::size_t i = 0; i < g.edgeWords.size(); ++i) {
      const auto& e = g.graph.edges()[i];
      CHECK(e.label == g.edgeWords[i][1]);
      CHECK(g.vertices[e.terminus] == tail(g.edgeWords[i]));
      CHECK(g.vertices[e.origin] == init(g.edgeWords[i]));
    }
  }

  TEST_CASE("G_{0,0} is a bouquet of loops") {
    LanguageOracle o(phi(), 3);
    auto g = rauzyGraph(o, 0, 0);
    CHECK(g.vertices.size() == 1);
    CHECK(g.vertices[0].empty());
    CHECK(g.graph.edgeCount() == 3);
    for (const auto& e : g.graph.edges()) CHECK(e.origin == e.terminus);
  }

  TEST_CASE("sizes and errors") {
    LanguageOracle o(phi(), 6);
    CHECK(rauzyGraph(o, 2, 1).graph.edgeCount() == 7);
    CHECK(rauzyGraph(o, 3, 0).vertices.size() == 7);
    CHECK_THROWS_AS(rauzyGraph(o, 2, 3), DomainError);
    CHECK_THROWS_AS(rauzyGraph(o, 6, 0), HorizonExceeded);
  }

  TEST_CASE("Rauzy graphs are strongly connected") {
    LanguageOracle o(phi(), 12);
    for (std::size_t m = 0; m <= 10; ++m) {
      auto g = rauzyGraph(o, m, 0);
      // Forward reachability from vertex 0 and back.
      for (bool reverse : {false, true}) {
        std::vector<bool> seen(g.vertices.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
          auto v = stack.back();
          stack.pop_back();
          for (const auto& e : g.graph.edges()) {
            auto from = reverse ? e.terminus : e.origin;
            auto to = reverse ? e.origin : e.terminus;
            if (from == v && !seen[to]) {
              seen[to] = true;
              stack.push_back(to);
            }
          }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
      }
    }
  }

  TEST_CASE("init and tail are onto morphisms") {
    LanguageOracle o(phi(), 8);
    for (std::size_t m = 1; m <= 6; ++m) {
      for (std::size_t k = 0; k <= m; ++k) {
        auto g = rauzyGraph(o, m, k);
        auto maps = levelMorphisms(o, g);
        CHECK(maps.initMap.has_value() == (k + 1 <= m));
        CHECK(maps.tailMap.has_value() == (k >= 1));
        if (maps.initMap) {
          CHECK(maps.initMap->isMorphism);
          CHECK(maps.initMap->isOnto);
        }
        if (maps.tailMap) {
          CHECK(maps.tailMap->isMorphism);
          CHECK(maps.tailMap->isOnto);
        }
      }
    }
    auto g11 = rauzyGraph(o, 1, 1);
    auto t = tailMorphism(o, g11);
    CHECK(t.target.vertices.size() == 1);
    CHECK_THROWS_AS(initMorphism(o, g11), DomainError);
    CHECK_THROWS_AS(levelMorphisms(o, rauzyGraph(o, 0, 0)), DomainError);
  }

  TEST_CASE("init and tail commute on vertices") {
    LanguageOracle o(phi(), 8);
    auto g = rauzyGraph(o, 4, 2);
    for (const auto& w : g.vertices) CHECK(init(tail(w)) == tail(init(w)));
  }

  TEST_CASE("Rauzy groups of the case-study language") {
    LanguageOracle o(phi(), 8);
    CHECK(equal(rauzyGroup(o, {}, {}), freeGroup(3)));
    for (Letter b = 0; b < 3; ++b) {
      CHECK(rauzyGroup(o, Word(1, b), {}).rank() == 3);
      CHECK(rauzyGroup(o, {}, Word(1, b)).rank() == 3);
    }
    CHECK_THROWS_AS(rauzyGroup(o, W("00"), W("00")), DomainError);
  }

  TEST_CASE("lattice of Rauzy groups") {
    LanguageOracle o(phi(), 8);
    for (const auto& [u, v] : pairs(o, 4)) {
      auto h = rauzyGroup(o, u, v);
      if (!u.empty()) CHECK(leq(h, rauzyGroup(o, tail(u), v)));
      if (!v.empty()) CHECK(leq(h, rauzyGroup(o, u, init(v))));
    }
  }

  TEST_CASE("conjugation identity H_{ua,v} = a⁻¹H_{u,av}a") {
    LanguageOracle o(phi(), 8);
    for (const auto& [u, av] : pairs(o, 4)) {
      if (av.empty()) continue;
      Word ua = u + Word(1, av[0]);
      Word v = tail(av);
      auto lhs = rauzyGroup(o, ua, v);
      auto rhs = conjugate(rauzyGroup(o, u, av), GroupElement::letter(av[0]));
      CHECK(equal(lhs, rhs));
    }
  }

  TEST_CASE("Rauzy groups at one level are conjugate") {
    LanguageOracle o(thueMorse(), 8);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto ps = pairs(o, n);
      std::vector<Subgroup> level;
      for (const auto& [u, v] : ps)
        if (u.size() + v.size() == n) level.push_back(rauzyGroup(o, u, v));
      for (const auto& h : level) CHECK(isConjugate(h, level.front()));
    }
  }

  TEST_CASE("suffix-connected languages have H_{u,ε} = H_{b,ε}") {
    LanguageOracle o(phi(), 8);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& u : o.factorsOfLength(n)) {
        CHECK(equal(rauzyGroup(o, u, {}), rauzyGroup(o, Word(1, u.back()), {})));
      }
    }
  }

  TEST_CASE("lemma paths") {
    LanguageOracle o(phi(), 10);
    auto g = rauzyGraph(o, 2, 1);
    auto p = lemmaPath(g, W("0010"));
    CHECK(p.isValid(g.graph));
    CHECK(p.isPositive());
    CHECK(g.vertices[p.start()] == W("00"));
    CHECK(g.vertices[p.end(g.graph)] == W("10"));
    CHECK(p.positiveLabel(g.graph) == W("01"));
    auto single = lemmaPath(g, W("010"));
    CHECK(single.length() == 1);
    CHECK_THROWS_AS(lemmaPath(g, W("01")), DomainError);
    CHECK_THROWS_AS(lemmaPath(g, W("0110")), DomainError);
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t k = 0; k <= m; ++k) {
        auto h = rauzyGraph(o, m, k);
        for (const auto& x : o.factorsOfLength(m + 3)) {
          auto q = lemmaPath(h, x);
          CHECK(q.positiveLabel(h.graph) == slice(x, k, k + 3));
          CHECK(h.vertices[q.start()] == initPow(x, 3));
          CHECK(h.vertices[q.end(h.graph)] == tailPow(x, 3));
        }
      }
    }
  }

  TEST_CASE("positive path labels are exactly the short factors") {
    LanguageOracle o(phi(), 8);
    std::size_t m = 2, k = 1;
    auto g = rauzyGraph(o, m, k);
    // Labels of all positive paths with at most m+1 steps.
    std::set<Word> labels{Word{}};
    std::vector<std::pair<std::size_t, Word>> frontier;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) frontier.push_back({v, {}});
    for (std::size_t step = 0; step < m + 1; ++step) {
      std::vector<std::pair<std::size_t, Word>> next;
      for (const auto& [v, w] : frontier)
        for (const auto& e : g.graph.edges())
          if (e.origin == v) next.push_back({e.terminus, w + Word(1, e.label)});
      for (const auto& [v, w] : next) labels.insert(w);
      frontier = std::move(next);
    }
    std::set<Word> expected;
    for (std::size_t j = 0; j <= m + 1; ++j)
      for (const auto& w : o.factorsOfLength(j)) expected.insert(w);
    CHECK(labels == expected);
  }

  TEST_CASE("labels into uv are suffix-comparable with u") {
    LanguageOracle o(phi(), 8);
    const Word u = W("0"), v = W("01");
    auto g = rauzyGraph(o, 3, 1);
    auto target = *g.vertexOf(u + v);
    // Walk backwards from uv along positive edges.
    std::vector<std::pair<std::size_t, Word>> frontier{{target, {}}};
    for (int step = 0; step < 4; ++step) {
      std::vector<std::pair<std::size_t, Word>> next;
      for (const auto& [x, w] : frontier)
        for (const auto& e : g.graph.edges())
          if (e.terminus == x) next.push_back({e.origin, Word(1, e.label) + w});
      for (const auto& [x, w] : next)
        CHECK((endsWith(w, u) || endsWith(u, w)));
      frontier = std::move(next);
    }
    frontier = {{target, {}}};
    for (int step = 0; step < 4; ++step) {
      std::vector<std::pair<std::size_t, Word>> next;
      for (const auto& [x, w] : frontier)
        for (const auto& e : g.graph.edges())
          if (e.origin == x) next.push_back({e.terminus, w + Word(1, e.label)});
      for (const auto& [x, w] : next)
        CHECK((startsWith(w, v) || startsWith(v, w)));
      frontier = std::move(next);
    }
  }

  TEST_CASE("ker(tail) is group-preserving under suffix-connectedness") {
    LanguageOracle o(phi(), 20);
    auto r = checkKerTailGroupPreserving(o, 2, 1, 1);
    CHECK(r.preconditionHolds);
    CHECK(r.groupPreserving);
    CHECK(r.classCount == 3);
    for (std::size_t m = 1; m <= 13; ++m) {
      for (std::size_t k = 1; k <= m; ++k) {
        std::size_t e = std::min<std::size_t>(k, 4);
        auto rep = checkKerTailGroupPreserving(o, m, k, e);
        if (rep.preconditionHolds) CHECK(rep.groupPreserving);
      }
    }
    CHECK_THROWS_AS(checkKerTailGroupPreserving(o, 2, 1, 2), DomainError);
    CHECK_THROWS_AS(checkKerTailGroupPreserving(o, 2, 0, 0), DomainError);
  }

  TEST_CASE("ker(tail) on Thue-Morse") {
    LanguageOracle o(thueMorse(), 12);
    auto r = checkKerTailGroupPreserving(o, 3, 3, 3);
    // Short words are suffix-connected, so the quotient must preserve groups.
    CHECK(r.preconditionHolds);
    CHECK(r.groupPreserving);
  }

  TEST_CASE("DOT export uses words as names") {
    LanguageOracle o(phi(), 4);
    auto dot = toDot(rauzyGraph(o, 1, 1), o.alphabet());
    CHECK(dot.find("\"0\" -> \"1\" [label=\"1\"]") != std::string::npos);
    CHECK(toDot(rauzyGraph(o, 0, 0), o.alphabet()).find("ε") != std::string::npos);
  }
}
