#include "wordgroups/digraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "wordgroups/disjoint_set.hpp"
#include "wordgroups/error.hpp"

namespace wordgroups {

LabeledDigraph::LabeledDigraph(std::size_t alphabetSize,
                               std::size_t vertexCount)
    : alphabet_size_(alphabetSize), vertex_count_(vertexCount) {}

bool LabeledDigraph::addEdge(std::size_t origin, Letter label,
                             std::size_t terminus) {
  if (origin >= vertex_count_ || terminus >= vertex_count_) {
    throw DomainError("edge endpoint is not a vertex");
  }
  if (label >= alphabet_size_) {
    throw DomainError("edge label outside alphabet");
  }
  Edge e{origin, label, terminus};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) {
    return false;
  }
  edges_.insert(it, e);
  return true;
}

bool LabeledDigraph::hasEdge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<std::size_t> LabeledDigraph::edgeIndex(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> LabeledDigraph::componentLabels() const {
  DisjointSet ds(vertex_count_);
  for (const auto& e : edges_) {
    ds.join(e.origin, e.terminus);
  }
  std::vector<std::size_t> keys(vertex_count_);
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    keys[v] = ds.find(v);
  }
  return VertexEquivalence::fromKeys(keys).classIds();
}

std::size_t LabeledDigraph::componentCount() const {
  auto labels = componentLabels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool LabeledDigraph::isConnected() const { return componentCount() == 1; }

bool LabeledDigraph::isFolded() const {
  std::vector<unsigned> out(vertex_count_ * alphabet_size_, 0);
  std::vector<unsigned> in(vertex_count_ * alphabet_size_, 0);
  for (const auto& e : edges_) {
    if (++out[e.origin * alphabet_size_ + e.label] > 1 ||
        ++in[e.terminus * alphabet_size_ + e.label] > 1) {
      return false;
    }
  }
  return true;
}

bool Path::isValid(const LabeledDigraph& g) const {
  if (start_ >= g.vertexCount()) {
    return false;
  }
  std::size_t at = start_;
  for (const auto& step : steps_) {
    if (step.edge >= g.edgeCount()) {
      return false;
    }
    const auto& e = g.edges()[step.edge];
    std::size_t from = step.inverse ? e.terminus : e.origin;
    if (from != at) {
      return false;
    }
    at = step.inverse ? e.origin : e.terminus;
  }
  return true;
}

std::size_t Path::end(const LabeledDigraph& g) const {
  if (!isValid(g)) {
    throw DomainError("path is not consecutive in this digraph");
  }
  if (steps_.empty()) {
    return start_;
  }
  const auto& last = steps_.back();
  const auto& e = g.edges()[last.edge];
  return last.inverse ? e.origin : e.terminus;
}

bool Path::isPositive() const noexcept {
  return std::none_of(steps_.begin(), steps_.end(),
                      [](const PathStep& s) { return s.inverse; });
}

GroupElement Path::label(const LabeledDigraph& g) const {
  std::vector<SignedLetter> raw;
  raw.reserve(steps_.size());
  for (const auto& step : steps_) {
    raw.push_back({g.edges().at(step.edge).label, step.inverse});
  }
  return GroupElement(raw);
}

Word Path::positiveLabel(const LabeledDigraph& g) const {
  if (!isPositive()) {
    throw DomainError("path uses inverse edges");
  }
  Word w;
  for (const auto& step : steps_) {
    w.push_back(g.edges().at(step.edge).label);
  }
  return w;
}

Path Path::inverse(const LabeledDigraph& g) const {
  std::vector<PathStep> steps;
  steps.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    steps.push_back({it->edge, !it->inverse});
  }
  return Path(end(g), std::move(steps));
}

Path Path::then(const LabeledDigraph& g, const Path& other) const {
  if (end(g) != other.start_) {
    throw DomainError("paths are not consecutive");
  }
  std::vector<PathStep> steps = steps_;
  steps.insert(steps.end(), other.steps_.begin(), other.steps_.end());
  return Path(start_, std::move(steps));
}

VertexEquivalence VertexEquivalence::identity(std::size_t vertexCount) {
  std::vector<std::size_t> keys(vertexCount);
  for (std::size_t v = 0; v < vertexCount; ++v) {
    keys[v] = v;
  }
  return fromKeys(keys);
}

VertexEquivalence VertexEquivalence::fromKeys(
    const std::vector<std::size_t>& keys) {
  VertexEquivalence e;
  e.class_of_.resize(keys.size());
  std::unordered_map<std::size_t, std::size_t> seen;  // key -> class
  for (std::size_t v = 0; v < keys.size(); ++v) {
    auto [it, inserted] = seen.try_emplace(keys[v], e.class_count_);
    if (inserted) {
      ++e.class_count_;
    }
    e.class_of_[v] = it->second;
  }
  return e;
}

bool VertexEquivalence::isSubrelationOf(const VertexEquivalence& other) const {
  if (other.size() != size()) {
    return false;
  }
  // Each of our classes must map into a single class of other.
  std::vector<std::size_t> image(class_count_, other.size());
  for (std::size_t v = 0; v < size(); ++v) {
    auto& slot = image[class_of_[v]];
    if (slot == other.size()) {
      slot = other.class_of_[v];
    } else if (slot != other.class_of_[v]) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> VertexEquivalence::classes() const {
  std::vector<std::vector<std::size_t>> out(class_count_);
  for (std::size_t v = 0; v < size(); ++v) {
    out[class_of_[v]].push_back(v);
  }
  return out;
}

LabeledDigraph quotient(const LabeledDigraph& g, const VertexEquivalence& e) {
  if (e.size() != g.vertexCount()) {
    throw DomainError("equivalence does not partition the digraph's vertices");
  }
  LabeledDigraph q(g.alphabetSize(), e.classCount());
  for (const auto& edge : g.edges()) {
    q.addEdge(e.classOf(edge.origin), edge.label, e.classOf(edge.terminus));
  }
  return q;
}

FoldResult stallingsFold(const LabeledDigraph& g) {
  const std::size_t vertices = g.vertexCount();
  const std::size_t letters = g.alphabetSize();
  const auto& edges = g.edges();
  DisjointSet ds(vertices);
  // Edge indices leaving / entering each class, stored at the class root.
  std::vector<std::vector<std::size_t>> out(vertices), in(vertices);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out[edges[i].origin].push_back(i);
    in[edges[i].terminus].push_back(i);
  }
  std::deque<std::size_t> work;
  std::vector<bool> queued(vertices, true);
  for (std::size_t v = 0; v < vertices; ++v) {
    work.push_back(v);
  }
  std::vector<std::size_t> seen(letters);
  std::vector<std::pair<std::size_t, std::size_t>> merges;
  auto collect = [&](const std::vector<std::size_t>& incident, bool outgoing) {
    std::fill(seen.begin(), seen.end(), vertices);
    for (auto i : incident) {
      const auto& e = edges[i];
      std::size_t other = outgoing ? e.terminus : e.origin;
      auto& slot = seen[e.label];
      if (slot == vertices) {
        slot = other;
      } else if (!ds.joined(slot, other)) {
        merges.emplace_back(slot, other);
      }
    }
  };
  while (!work.empty()) {
    std::size_t r = work.front();
    work.pop_front();
    queued[r] = false;
    if (ds.find(r) != r) {
      continue;
    }
    merges.clear();
    // Rule (F): same-label edges out of one class; rule (F'): into one class.
    collect(out[r], true);
    collect(in[r], false);
    for (auto [x, y] : merges) {
      std::size_t rx = ds.find(x);
      std::size_t ry = ds.find(y);
      if (rx == ry) {
        continue;
      }
      std::size_t root = ds.join(rx, ry);
      std::size_t absorbed = root == rx ? ry : rx;
      out[root].insert(out[root].end(), out[absorbed].begin(),
                       out[absorbed].end());
      in[root].insert(in[root].end(), in[absorbed].begin(), in[absorbed].end());
      out[absorbed].clear();
      out[absorbed].shrink_to_fit();
      in[absorbed].clear();
      in[absorbed].shrink_to_fit();
      if (!queued[root]) {
        queued[root] = true;
        work.push_back(root);
      }
    }
  }
  std::vector<std::size_t> keys(vertices);
  for (std::size_t v = 0; v < vertices; ++v) {
    keys[v] = ds.find(v);
  }
  FoldResult result;
  result.equivalence = VertexEquivalence::fromKeys(keys);
  result.folded = quotient(g, result.equivalence);
  return result;
}

std::size_t rank(const LabeledDigraph& g) {
  if (!g.isConnected()) {
    throw DomainError("rank is defined for connected digraphs only");
  }
  auto folded = stallingsFold(g).folded;
  return folded.edgeCount() + 1 - folded.vertexCount();
}

std::string toDot(const LabeledDigraph& g, const Alphabet& alphabet,
                  const std::vector<std::string>& names) {
  auto name = [&](std::size_t v) {
    return "\"" + (v < names.size() ? names[v] : std::to_string(v)) + "\"";
  };
  std::ostringstream out;
  out << "digraph G {\n";
  for (std::size_t v = 0; v < g.vertexCount(); ++v) {
    out << "  " << name(v) << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << name(e.origin) << " -> " << name(e.terminus)
        << " [label=\"" << alphabet.symbol(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wordgroups
