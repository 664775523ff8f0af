#ifndef WORDGROUPS_FREEGROUP_HPP_
#define WORDGROUPS_FREEGROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wordgroups/digraph.hpp"
#include "wordgroups/free_group_element.hpp"

namespace wordgroups {

// Finitely generated subgroup of F(A), stored as a folded based digraph
// (the component of the base only; the base is vertex 0) together with the
// basis read off a breadth-first spanning tree.
class Subgroup {
 public:
  // Trivial subgroup.
  explicit Subgroup(std::size_t alphabetSize = 0);
  // graph must be folded; only the component of base is kept.
  Subgroup(const LabeledDigraph& folded, std::size_t base);

  std::size_t alphabetSize() const noexcept { return graph_.alphabetSize(); }
  const LabeledDigraph& graph() const noexcept { return graph_; }
  std::size_t base() const noexcept { return 0; }
  const std::vector<GroupElement>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  // Walks the element from the base; nullopt if it falls off the graph.
  std::optional<std::size_t> read(const GroupElement& g,
                                  std::size_t from = 0) const;
  bool contains(const GroupElement& g) const;

 private:
  std::size_t step(std::size_t v, const SignedLetter& s) const;

  LabeledDigraph graph_;
  // Successor along (letter, direction), or vertexCount() if none.
  std::vector<std::size_t> forward_;
  std::vector<std::size_t> backward_;
  std::vector<GroupElement> basis_;
};

// Group of g at base: folds g, then extracts the basis of the folded
// component of base.
Subgroup groupAt(const LabeledDigraph& g, std::size_t base);

// Subgroup generated by the elements, via the folded flower graph.
Subgroup subgroupFrom(std::span<const GroupElement> generators,
                      std::size_t alphabetSize);

// Throws DomainError on alphabet mismatch.
bool leq(const Subgroup& h1, const Subgroup& h2);
bool equal(const Subgroup& h1, const Subgroup& h2);

// g⁻¹ h g.
Subgroup conjugate(const Subgroup& h, const GroupElement& g);

// Cyclically reduced core: the graph with every vertex of degree at most one
// removed repeatedly (base included).
LabeledDigraph coreGraph(const Subgroup& h);
bool isConjugate(const Subgroup& h1, const Subgroup& h2);

// The distinct elements of s form a basis of the subgroup they generate.
bool isFreeSubset(std::span<const GroupElement> s, std::size_t alphabetSize);

// Whether the group of g/e at the class of vertex 0 equals the group of g at
// vertex 0.  DomainError unless g is connected.
bool isGroupPreserving(const LabeledDigraph& g, const VertexEquivalence& e);

// Full free group on the alphabet.
Subgroup freeGroup(std::size_t alphabetSize);

}  // namespace wordgroups

#endif  // WORDGROUPS_FREEGROUP_HPP_
