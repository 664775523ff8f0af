#ifndef WORDGROUPS_DIGRAPH_HPP_
#define WORDGROUPS_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wordgroups/free_group_element.hpp"
#include "wordgroups/word.hpp"

namespace wordgroups {

struct Edge {
  std::size_t origin = 0;
  Letter label = 0;
  std::size_t terminus = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Labeled digraph over an alphabet of the given size.  Vertices are
// 0..vertexCount()-1; edges are a set of (origin, label, terminus) triples
// kept in sorted order, so an edge index is its rank in that order.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  LabeledDigraph(std::size_t alphabetSize, std::size_t vertexCount);

  std::size_t alphabetSize() const noexcept { return alphabet_size_; }
  std::size_t vertexCount() const noexcept { return vertex_count_; }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t addVertex() { return vertex_count_++; }
  // False if the triple was already present.
  bool addEdge(std::size_t origin, Letter label, std::size_t terminus);
  bool hasEdge(const Edge& e) const;
  std::optional<std::size_t> edgeIndex(const Edge& e) const;

  // Undirected connectivity.
  std::vector<std::size_t> componentLabels() const;
  std::size_t componentCount() const;
  bool isConnected() const;

  // At most one outgoing and at most one incoming edge per vertex and label.
  bool isFolded() const;

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

 private:
  std::size_t alphabet_size_ = 0;
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// A step along an edge of a digraph, forwards or along its formal inverse.
struct PathStep {
  std::size_t edge = 0;
  bool inverse = false;
};

class Path {
 public:
  Path() = default;
  Path(std::size_t start, std::vector<PathStep> steps)
      : start_(start), steps_(std::move(steps)) {}

  std::size_t start() const noexcept { return start_; }
  const std::vector<PathStep>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }

  // Consecutive steps with the first step leaving start().
  bool isValid(const LabeledDigraph& g) const;
  std::size_t end(const LabeledDigraph& g) const;
  bool isPositive() const noexcept;
  GroupElement label(const LabeledDigraph& g) const;
  // Label of a positive path as a word.
  Word positiveLabel(const LabeledDigraph& g) const;

  Path inverse(const LabeledDigraph& g) const;
  // this followed by other; other must start where this ends.
  Path then(const LabeledDigraph& g, const Path& other) const;

 private:
  std::size_t start_ = 0;
  std::vector<PathStep> steps_;
};

// Partition of the vertices of a digraph.  Classes are numbered by their
// smallest vertex.
class VertexEquivalence {
 public:
  VertexEquivalence() = default;
  static VertexEquivalence identity(std::size_t vertexCount);
  // Vertices with equal keys are related.
  static VertexEquivalence fromKeys(const std::vector<std::size_t>& keys);

  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t classCount() const noexcept { return class_count_; }
  std::size_t classOf(std::size_t v) const { return class_of_.at(v); }
  const std::vector<std::size_t>& classIds() const noexcept { return class_of_; }
  bool related(std::size_t x, std::size_t y) const {
    return classOf(x) == classOf(y);
  }
  bool isSubrelationOf(const VertexEquivalence& other) const;
  std::vector<std::vector<std::size_t>> classes() const;

  friend bool operator==(const VertexEquivalence&,
                         const VertexEquivalence&) = default;

 private:
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
};

// G/≡ with vertex i of the result being class i.
LabeledDigraph quotient(const LabeledDigraph& g, const VertexEquivalence& e);

struct FoldResult {
  VertexEquivalence equivalence;
  LabeledDigraph folded;
};

// Stallings equivalence and the folded quotient.
FoldResult stallingsFold(const LabeledDigraph& g);

// |E| - |V| + 1 of the folded graph.  DomainError unless g is connected.
std::size_t rank(const LabeledDigraph& g);

// Graphviz rendering; names[v] labels vertex v (defaults to its index).
std::string toDot(const LabeledDigraph& g, const Alphabet& alphabet,
                  const std::vector<std::string>& names = {});

}  // namespace wordgroups

#endif  // WORDGROUPS_DIGRAPH_HPP_
