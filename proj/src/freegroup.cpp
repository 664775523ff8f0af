#include "wordgroups/freegroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "wordgroups/error.hpp"

namespace wordgroups {

namespace {

struct Arc {
  Letter label;
  bool inverse;
  std::size_t other;
  std::size_t edge;

  auto key() const { return std::tie(label, inverse, other, edge); }
};

// Incident arcs of every vertex, sorted by (label, direction, endpoint).
std::vector<std::vector<Arc>> incidentArcs(const LabeledDigraph& g) {
  std::vector<std::vector<Arc>> arcs(g.vertexCount());
  for (std::size_t i = 0; i < g.edgeCount(); ++i) {
    const auto& e = g.edges()[i];
    arcs[e.origin].push_back({e.label, false, e.terminus, i});
    arcs[e.terminus].push_back({e.label, true, e.origin, i});
  }
  for (auto& list : arcs) {
    std::sort(list.begin(), list.end(),
              [](const Arc& a, const Arc& b) { return a.key() < b.key(); });
  }
  return arcs;
}

// Breadth-first discovery order of the component of base.
std::vector<std::size_t> discoveryOrder(
    const std::vector<std::vector<Arc>>& arcs, std::size_t base) {
  std::vector<bool> visited(arcs.size(), false);
  std::vector<std::size_t> order{base};
  visited[base] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& arc : arcs[order[i]]) {
      if (!visited[arc.other]) {
        visited[arc.other] = true;
        order.push_back(arc.other);
      }
    }
  }
  return order;
}

struct Transitions {
  std::size_t letters;
  std::size_t none;
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;

  explicit Transitions(const LabeledDigraph& g)
      : letters(g.alphabetSize()),
        none(g.vertexCount()),
        forward(g.vertexCount() * g.alphabetSize(), g.vertexCount()),
        backward(g.vertexCount() * g.alphabetSize(), g.vertexCount()) {
    for (const auto& e : g.edges()) {
      forward[e.origin * letters + e.label] = e.terminus;
      backward[e.terminus * letters + e.label] = e.origin;
    }
  }

  std::size_t step(std::size_t v, Letter a, bool inverse) const {
    return (inverse ? backward : forward)[v * letters + a];
  }
};

bool isomorphicFolded(const LabeledDigraph& a, const LabeledDigraph& b) {
  if (a.alphabetSize() != b.alphabetSize() ||
      a.vertexCount() != b.vertexCount() || a.edgeCount() != b.edgeCount()) {
    return false;
  }
  if (a.vertexCount() == 0) {
    return true;
  }
  Transitions ta(a), tb(b);
  const std::size_t n = a.alphabetSize();
  auto signature = [n](const Transitions& t, std::size_t v) {
    std::vector<bool> sig(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      sig[x] = t.step(v, static_cast<Letter>(x), false) != t.none;
      sig[n + x] = t.step(v, static_cast<Letter>(x), true) != t.none;
    }
    return sig;
  };
  const auto seedSignature = signature(ta, 0);
  for (std::size_t candidate = 0; candidate < b.vertexCount(); ++candidate) {
    if (signature(tb, candidate) != seedSignature) {
      continue;
    }
    // In a connected folded graph the image of one vertex determines the
    // whole map.
    std::vector<std::size_t> map(a.vertexCount(), b.vertexCount());
    std::vector<bool> used(b.vertexCount(), false);
    map[0] = candidate;
    used[candidate] = true;
    std::deque<std::size_t> queue{0};
    bool ok = true;
    while (ok && !queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t letter = 0; letter < n && ok; ++letter) {
        for (bool inverse : {false, true}) {
          std::size_t y = ta.step(x, static_cast<Letter>(letter), inverse);
          std::size_t image =
              tb.step(map[x], static_cast<Letter>(letter), inverse);
          if ((y == ta.none) != (image == tb.none)) {
            ok = false;
            break;
          }
          if (y == ta.none) {
            continue;
          }
          if (map[y] == b.vertexCount()) {
            if (used[image]) {
              ok = false;
              break;
            }
            map[y] = image;
            used[image] = true;
            queue.push_back(y);
          } else if (map[y] != image) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok && std::all_of(map.begin(), map.end(), [&](std::size_t v) {
          return v != b.vertexCount();
        })) {
      return true;
    }
  }
  return false;
}

void requireSameAlphabet(const Subgroup& h1, const Subgroup& h2) {
  if (h1.alphabetSize() != h2.alphabetSize()) {
    throw DomainError("subgroups live in free groups of different rank");
  }
}

}  // namespace

Subgroup::Subgroup(std::size_t alphabetSize) : graph_(alphabetSize, 1) {
  forward_.assign(alphabetSize, 1);
  backward_.assign(alphabetSize, 1);
}

Subgroup::Subgroup(const LabeledDigraph& folded, std::size_t base) {
  if (base >= folded.vertexCount()) {
    throw DomainError("base is not a vertex of the digraph");
  }
  if (!folded.isFolded()) {
    throw DomainError("subgroup graphs must be folded");
  }
  const auto arcs = incidentArcs(folded);
  const auto order = discoveryOrder(arcs, base);
  std::vector<std::size_t> renumber(folded.vertexCount(), folded.vertexCount());
  for (std::size_t i = 0; i < order.size(); ++i) {
    renumber[order[i]] = i;
  }
  graph_ = LabeledDigraph(folded.alphabetSize(), order.size());
  for (const auto& e : folded.edges()) {
    if (renumber[e.origin] != folded.vertexCount()) {
      graph_.addEdge(renumber[e.origin], e.label, renumber[e.terminus]);
    }
  }

  Transitions t(graph_);
  forward_ = std::move(t.forward);
  backward_ = std::move(t.backward);

  // Spanning tree by breadth-first search from the base in arc order.
  const auto local = incidentArcs(graph_);
  const std::size_t vertices = graph_.vertexCount();
  std::vector<bool> visited(vertices, false);
  std::vector<bool> treeEdge(graph_.edgeCount(), false);
  std::vector<GroupElement> fromBase(vertices);
  std::deque<std::size_t> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& arc : local[v]) {
      if (visited[arc.other]) {
        continue;
      }
      visited[arc.other] = true;
      treeEdge[arc.edge] = true;
      fromBase[arc.other] =
          fromBase[v] * GroupElement::letter(arc.label, arc.inverse);
      queue.push_back(arc.other);
    }
  }
  for (std::size_t i = 0; i < graph_.edgeCount(); ++i) {
    if (treeEdge[i]) {
      continue;
    }
    const auto& e = graph_.edges()[i];
    basis_.push_back(fromBase[e.origin] * GroupElement::letter(e.label) *
                     fromBase[e.terminus].inverse());
  }
}

std::size_t Subgroup::step(std::size_t v, const SignedLetter& s) const {
  const auto& table = s.inverse ? backward_ : forward_;
  return table[v * alphabetSize() + s.letter];
}

std::optional<std::size_t> Subgroup::read(const GroupElement& g,
                                          std::size_t from) const {
  std::size_t v = from;
  for (const auto& s : g.letters()) {
    if (s.letter >= alphabetSize()) {
      return std::nullopt;
    }
    v = step(v, s);
    if (v == graph_.vertexCount()) {
      return std::nullopt;
    }
  }
  return v;
}

bool Subgroup::contains(const GroupElement& g) const {
  auto end = read(g);
  return end && *end == 0;
}

Subgroup groupAt(const LabeledDigraph& g, std::size_t base) {
  if (base >= g.vertexCount()) {
    throw DomainError("base is not a vertex of the digraph");
  }
  auto fold = stallingsFold(g);
  return Subgroup(fold.folded, fold.equivalence.classOf(base));
}

Subgroup subgroupFrom(std::span<const GroupElement> generators,
                      std::size_t alphabetSize) {
  LabeledDigraph flower(alphabetSize, 1);
  for (const auto& gen : generators) {
    const auto& letters = gen.letters();
    std::size_t at = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      std::size_t next = i + 1 == letters.size() ? 0 : flower.addVertex();
      if (letters[i].inverse) {
        flower.addEdge(next, letters[i].letter, at);
      } else {
        flower.addEdge(at, letters[i].letter, next);
      }
      at = next;
    }
  }
  return groupAt(flower, 0);
}

bool leq(const Subgroup& h1, const Subgroup& h2) {
  requireSameAlphabet(h1, h2);
  return std::all_of(h1.basis().begin(), h1.basis().end(),
                     [&](const GroupElement& g) { return h2.contains(g); });
}

bool equal(const Subgroup& h1, const Subgroup& h2) {
  return leq(h1, h2) && leq(h2, h1);
}

Subgroup conjugate(const Subgroup& h, const GroupElement& g) {
  std::vector<GroupElement> generators;
  generators.reserve(h.basis().size());
  const auto gInverse = g.inverse();
  for (const auto& x : h.basis()) {
    generators.push_back(gInverse * x * g);
  }
  return subgroupFrom(generators, h.alphabetSize());
}

LabeledDigraph coreGraph(const Subgroup& h) {
  const auto& g = h.graph();
  std::vector<std::size_t> degree(g.vertexCount(), 0);
  for (const auto& e : g.edges()) {
    ++degree[e.origin];
    ++degree[e.terminus];
  }
  std::vector<bool> removed(g.vertexCount(), false);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < g.vertexCount(); ++v) {
    if (degree[v] <= 1) {
      queue.push_back(v);
    }
  }
  const auto arcs = incidentArcs(g);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (removed[v]) {
      continue;
    }
    removed[v] = true;
    for (const auto& arc : arcs[v]) {
      if (!removed[arc.other] && --degree[arc.other] == 1) {
        queue.push_back(arc.other);
      }
    }
  }
  std::vector<std::size_t> renumber(g.vertexCount(), g.vertexCount());
  std::size_t kept = 0;
  for (std::size_t v = 0; v < g.vertexCount(); ++v) {
    if (!removed[v]) {
      renumber[v] = kept++;
    }
  }
  LabeledDigraph core(g.alphabetSize(), kept);
  for (const auto& e : g.edges()) {
    if (!removed[e.origin] && !removed[e.terminus]) {
      core.addEdge(renumber[e.origin], e.label, renumber[e.terminus]);
    }
  }
  return core;
}

bool isConjugate(const Subgroup& h1, const Subgroup& h2) {
  requireSameAlphabet(h1, h2);
  if (h1.rank() != h2.rank()) {
    return false;
  }
  return isomorphicFolded(coreGraph(h1), coreGraph(h2));
}

bool isFreeSubset(std::span<const GroupElement> s, std::size_t alphabetSize) {
  std::set<GroupElement> distinct(s.begin(), s.end());
  if (distinct.count(GroupElement{}) > 0) {
    return false;
  }
  std::vector<GroupElement> elements(distinct.begin(), distinct.end());
  return subgroupFrom(elements, alphabetSize).rank() == elements.size();
}

bool isGroupPreserving(const LabeledDigraph& g, const VertexEquivalence& e) {
  if (!g.isConnected()) {
    throw DomainError("group preservation is checked on connected digraphs");
  }
  auto original = groupAt(g, 0);
  auto collapsed = groupAt(quotient(g, e), e.classOf(0));
  return leq(collapsed, original);
}

Subgroup freeGroup(std::size_t alphabetSize) {
  LabeledDigraph g(alphabetSize, 1);
  for (std::size_t a = 0; a < alphabetSize; ++a) {
    g.addEdge(0, static_cast<Letter>(a), 0);
  }
  return Subgroup(g, 0);
}

}  // namespace wordgroups
