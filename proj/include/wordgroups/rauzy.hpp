#ifndef WORDGROUPS_RAUZY_HPP_
#define WORDGROUPS_RAUZY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wordgroups/digraph.hpp"
#include "wordgroups/freegroup.hpp"
#include "wordgroups/language.hpp"

namespace wordgroups {

// The k-labeled Rauzy graph G_{m,k}: vertices L ∩ A^m, and one edge
// (init x, x[k], tail x) for each x ∈ L ∩ A^{m+1}.
struct RauzyGraph {
  std::size_t level = 0;
  std::size_t labelIndex = 0;
  // Vertex i of graph is vertices[i]; shortlex order.
  std::vector<Word> vertices;
  LabeledDigraph graph;
  // edgeWords[i] is the factor carried by graph.edges()[i].
  std::vector<Word> edgeWords;

  std::optional<std::size_t> vertexOf(const Word& w) const;
  std::optional<std::size_t> edgeOf(const Word& x) const;
};

RauzyGraph rauzyGraph(const LanguageOracle& o, std::size_t m, std::size_t k);

// A digraph morphism between consecutive levels, induced by init or tail.
struct RauzyMorphism {
  RauzyGraph target;
  std::vector<std::size_t> vertexMap;
  std::vector<std::size_t> edgeMap;
  // Endpoints and labels are preserved.
  bool isMorphism = false;
  // Every target vertex and edge has a preimage.
  bool isOnto = false;
};

// w ↦ init(w) into G_{m-1,k}.  Requires m >= 1 and k <= m-1.
RauzyMorphism initMorphism(const LanguageOracle& o, const RauzyGraph& g);
// w ↦ tail(w) into G_{m-1,k-1}.  Requires m >= 1 and k >= 1.
RauzyMorphism tailMorphism(const LanguageOracle& o, const RauzyGraph& g);

struct LevelMorphisms {
  std::optional<RauzyMorphism> initMap;
  std::optional<RauzyMorphism> tailMap;
};

// Both maps where their index constraints allow.  DomainError for m = 0.
LevelMorphisms levelMorphisms(const LanguageOracle& o, const RauzyGraph& g);

// H_{u,v}: the group of G_{|uv|,|u|} at uv.  DomainError unless uv ∈ L.
Subgroup rauzyGroup(const LanguageOracle& o, const Word& u, const Word& v);

// The positive path of G_{m,k} from init^d(x) to tail^d(x) following the
// successive length-(m+1) windows of x, where d = |x| - m >= 1.  Its label
// is x[k:k+d].  DomainError if x is too short or a window is not an edge.
Path lemmaPath(const RauzyGraph& g, const Word& x);

struct KerTailReport {
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t e = 0;
  // L is (m-1, e)-suffix-connected.
  bool preconditionHolds = false;
  std::size_t classCount = 0;
  bool groupPreserving = false;
};

// Checks whether ker(tail) is a group-preserving equivalence of G_{m,k} and
// records whether the suffix-connectedness hypothesis holds.  DomainError
// unless 1 <= e <= k <= m.
KerTailReport checkKerTailGroupPreserving(const LanguageOracle& o,
                                          std::size_t m, std::size_t k,
                                          std::size_t e);

// Graphviz rendering with words as vertex names.
std::string toDot(const RauzyGraph& g, const Alphabet& alphabet);

}  // namespace wordgroups

#endif  // WORDGROUPS_RAUZY_HPP_
