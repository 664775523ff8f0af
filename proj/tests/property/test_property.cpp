#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "random_graphs.hpp"

using namespace property;

namespace {

GroupElement randomElement(std::mt19937& rng, std::size_t letters,
                           std::size_t maxLength) {
  std::uniform_int_distribution<std::size_t> len(0, maxLength);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(letters) - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<SignedLetter> raw;
  for (std::size_t i = len(rng); i > 0; --i)
    raw.push_back({static_cast<Letter>(letter(rng)), inv(rng)});
  return GroupElement(raw);
}

}  // namespace

TEST_SUITE("property") {
  TEST_CASE("Stallings folding on random digraphs") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 300; ++i) {
      auto g = randomDigraph(rng, 5, 8, 2);
      auto c = checkGraph(g);
      CAPTURE(i);
      CHECK(c.closureAgrees);
      CHECK(c.pathsAgree);
      CHECK(c.folded);
      CHECK(c.rankAgrees);
      CHECK(c.loopsContained);
    }
  }

  TEST_CASE("folding is idempotent and group-preserving") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      auto g = randomDigraph(rng, 6, 10, 3);
      auto f = stallingsFold(g);
      auto again = stallingsFold(f.folded);
      CHECK(again.folded == f.folded);
      CHECK(again.equivalence == VertexEquivalence::identity(f.folded.vertexCount()));
      auto comp = baseComponent(g);
      CHECK(isGroupPreserving(comp, stallingsFold(comp).equivalence));
    }
  }

  TEST_CASE("group laws") {
    std::mt19937 rng(11);
    Alphabet a({"a", "b", "c"});
    for (int i = 0; i < 500; ++i) {
      auto x = randomElement(rng, 3, 8);
      auto y = randomElement(rng, 3, 8);
      auto z = randomElement(rng, 3, 8);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x * y).inverse() == y.inverse() * x.inverse());
      CHECK((x * x.inverse()).isIdentity());
      CHECK(GroupElement::parse(x.format(a), a) == x);
      for (std::size_t j = 0; j + 1 < x.length(); ++j)
        CHECK(x.letters()[j] != x.letters()[j + 1].inverted());
    }
  }

  TEST_CASE("subgroups from random generators") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
      std::vector<GroupElement> gens;
      std::uniform_int_distribution<int> count(0, 4);
      for (int j = count(rng); j > 0; --j) gens.push_back(randomElement(rng, 2, 6));
      auto h = subgroupFrom(gens, 2);
      for (const auto& g : gens) CHECK(h.contains(g));
      for (const auto& g : h.basis()) CHECK(h.contains(g));
      CHECK(equal(h, subgroupFrom(h.basis(), 2)));
      CHECK(isFreeSubset(h.basis(), 2));
      CHECK(h.rank() <= gens.size());
      auto w = randomElement(rng, 2, 5);
      auto c = conjugate(h, w);
      CHECK(isConjugate(h, c));
      CHECK(c.rank() == h.rank());
      for (const auto& g : gens) CHECK(c.contains(w.inverse() * g * w));
      auto p = gens.empty() ? GroupElement{} : gens[0] * gens.back();
      CHECK(h.contains(p));
    }
  }
}
