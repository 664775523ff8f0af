#ifndef WORDGROUPS_EXTENSION_HPP_
#define WORDGROUPS_EXTENSION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordgroups/language.hpp"
#include "wordgroups/word.hpp"

namespace wordgroups {

// lext_k(w) = { u ∈ L ∩ A^k : uw ∈ L }, shortlex.
std::vector<Word> leftExtensions(const LanguageOracle& o, const Word& w,
                                 std::size_t k = 1);
// rext_k(w) = { v ∈ L ∩ A^k : wv ∈ L }, shortlex.
std::vector<Word> rightExtensions(const LanguageOracle& o, const Word& w,
                                  std::size_t k = 1);

// ext_{k,l}(w).  Vertex i < left.size() is left[i]; vertex left.size() + j
// is right[j].  Extensions without incident edges stay as isolated vertices.
struct BipartiteExtensionGraph {
  Word center;
  std::size_t leftOrder = 1;
  std::size_t rightOrder = 1;
  std::vector<Word> left;
  std::vector<Word> right;
  // (left index, right index), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t vertexCount() const noexcept {
    return left.size() + right.size();
  }
  std::optional<std::size_t> leftIndex(const Word& u) const;
  std::optional<std::size_t> rightIndex(const Word& v) const;
};

BipartiteExtensionGraph extensionGraph(const LanguageOracle& o, const Word& w,
                                       std::size_t k = 1, std::size_t l = 1);

struct Components {
  // label[i] for vertex i (numbering of BipartiteExtensionGraph), labels
  // numbered by first vertex.
  std::vector<std::size_t> label;
  std::size_t count = 0;
};

Components connectedComponents(const BipartiteExtensionGraph& g);

// Vertices minus edges.
long characteristic(const BipartiteExtensionGraph& g);
bool isTreeGraph(const BipartiteExtensionGraph& g);
// Acyclic: exactly characteristic(g) components.
bool isForestGraph(const BipartiteExtensionGraph& g);

struct Specialness {
  bool leftSpecial = false;
  bool rightSpecial = false;
  bool bispecial() const noexcept { return leftSpecial && rightSpecial; }
};

Specialness classify(const LanguageOracle& o, const Word& w);

bool isConnectedWord(const LanguageOracle& o, const Word& w);
// χ(ext(w)) = 1.
bool isNeutral(const LanguageOracle& o, const Word& w);

// The natural embedding a ↦ a·w[0:d-1] of lext(w) into the left vertices of
// ext_{d,d}(tail^{d-1}(w)).
struct SuffixEmbedding {
  Word word;
  std::size_t depth = 1;
  Word hostCenter;
  // (a, a·prefix) pairs, shortlex in a.
  std::vector<std::pair<Word, Word>> embeddedLeft;
};

SuffixEmbedding suffixEmbedding(const LanguageOracle& o, const Word& w,
                                std::size_t depth);

// Whether the natural embedding of lext(w) lies in one component of the
// depth-d suffix extension graph.  Also defined for the empty word (d = 1).
bool embeddingConnected(const LanguageOracle& o, const Word& w,
                        std::size_t depth);

// Smallest depth 1 <= d <= min(maxDepth, |w|+1) at which w is
// suffix-connected; maxDepth defaults to |w|+1.  The empty word is rejected
// with DomainError.  HorizonExceeded reports the first depth that no longer
// fits in the oracle.
std::optional<std::size_t> suffixConnectedDepth(
    const LanguageOracle& o, const Word& w,
    std::optional<std::size_t> maxDepth = std::nullopt);

// Dual notion, computed on the mirror language.
std::optional<std::size_t> prefixConnectedDepth(
    const LanguageOracle& o, const Word& w,
    std::optional<std::size_t> maxDepth = std::nullopt);

// Every w ∈ L ∩ A^m is suffix-connected at some depth d <= e.  For m = 0
// this asks whether lext(ε) lies in one component of ext(ε).
bool isMESuffixConnected(const LanguageOracle& o, std::size_t m,
                         std::size_t e);

// Graphviz rendering.  Left vertices are named L_<word>, right vertices
// R_<word>; vertices listed in `dashed` (left words) are drawn dashed.
std::string toDot(const BipartiteExtensionGraph& g, const Alphabet& alphabet,
                  const std::vector<Word>& dashed = {});

}  // namespace wordgroups

#endif  // WORDGROUPS_EXTENSION_HPP_
