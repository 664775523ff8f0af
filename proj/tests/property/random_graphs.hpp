#ifndef WORDGROUPS_TESTS_RANDOM_GRAPHS_HPP_
#define WORDGROUPS_TESTS_RANDOM_GRAPHS_HPP_

#include <random>
#include <vector>

#include "../oracles.hpp"
#include "wordgroups/digraph.hpp"
#include "wordgroups/freegroup.hpp"

namespace property {

using namespace wordgroups;

// Up to maxVertices vertices and maxEdges edge draws over `letters` labels.
inline LabeledDigraph randomDigraph(std::mt19937& rng, std::size_t maxVertices,
                                    std::size_t maxEdges, std::size_t letters) {
  std::uniform_int_distribution<std::size_t> nv(1, maxVertices);
  std::uniform_int_distribution<std::size_t> ne(0, maxEdges);
  LabeledDigraph g(letters, nv(rng));
  std::uniform_int_distribution<std::size_t> vertex(0, g.vertexCount() - 1);
  std::uniform_int_distribution<int> label(0, static_cast<int>(letters) - 1);
  for (std::size_t i = ne(rng); i > 0; --i) {
    g.addEdge(vertex(rng), static_cast<Letter>(label(rng)), vertex(rng));
  }
  return g;
}

// The component of vertex 0 with vertices renumbered in index order.
inline LabeledDigraph baseComponent(const LabeledDigraph& g) {
  auto comp = g.componentLabels();
  std::vector<std::size_t> renumber(g.vertexCount(), g.vertexCount());
  std::size_t kept = 0;
  for (std::size_t v = 0; v < g.vertexCount(); ++v)
    if (comp[v] == comp[0]) renumber[v] = kept++;
  LabeledDigraph h(g.alphabetSize(), kept);
  for (const auto& e : g.edges())
    if (renumber[e.origin] < kept)
      h.addEdge(renumber[e.origin], e.label, renumber[e.terminus]);
  return h;
}

struct GraphCheck {
  bool closureAgrees = true;
  bool pathsAgree = true;
  bool folded = true;
  bool rankAgrees = true;
  bool loopsContained = true;

  bool ok() const {
    return closureAgrees && pathsAgree && folded && rankAgrees &&
           loopsContained;
  }
};

// Fold versus both equivalence oracles, and the subgroup at vertex 0
// versus a naive fold and enumerated loop labels.
inline GraphCheck checkGraph(const LabeledDigraph& g) {
  GraphCheck c;
  auto f = stallingsFold(g);
  auto closure = oracle::closureEquivalence(g);
  auto paths = oracle::trivialPathEquivalence(g);
  for (std::size_t x = 0; x < g.vertexCount(); ++x) {
    for (std::size_t y = 0; y < g.vertexCount(); ++y) {
      c.closureAgrees = c.closureAgrees && f.equivalence.related(x, y) == closure[x][y];
      c.pathsAgree = c.pathsAgree && f.equivalence.related(x, y) == paths[x][y];
    }
  }
  c.folded = f.folded.isFolded();
  auto component = baseComponent(g);
  auto naive = oracle::naiveFold(component);
  auto h = groupAt(g, 0);
  c.rankAgrees = h.rank() + naive.vertexCount() == naive.edgeCount() + 1 &&
                 rank(component) == h.rank();
  for (const auto& x : oracle::loopLabels(g, 0, 5)) {
    c.loopsContained = c.loopsContained && h.contains(x);
  }
  return c;
}

}  // namespace property

#endif  // WORDGROUPS_TESTS_RANDOM_GRAPHS_HPP_
