#include "wordgroups/extension.hpp"

#include <algorithm>
#include <sstream>

#include "wordgroups/disjoint_set.hpp"
#include "wordgroups/error.hpp"

namespace wordgroups {

namespace {

std::optional<std::size_t> indexIn(const std::vector<Word>& sorted,
                                   const Word& w) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), w, ShortlexLess{});
  if (it == sorted.end() || *it != w) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

std::string displayWord(const Alphabet& alphabet, const Word& w) {
  return w.empty() ? std::string("ε") : alphabet.format(w);
}

}  // namespace

std::vector<Word> leftExtensions(const LanguageOracle& o, const Word& w,
                                 std::size_t k) {
  o.requireHorizon(w.size() + k, "left extensions");
  std::vector<Word> out;
  for (const auto& u : o.factorsOfLength(k)) {
    if (o.contains(u + w)) {
      out.push_back(u);
    }
  }
  return out;
}

std::vector<Word> rightExtensions(const LanguageOracle& o, const Word& w,
                                  std::size_t k) {
  o.requireHorizon(w.size() + k, "right extensions");
  std::vector<Word> out;
  for (const auto& v : o.factorsOfLength(k)) {
    if (o.contains(w + v)) {
      out.push_back(v);
    }
  }
  return out;
}

std::optional<std::size_t> BipartiteExtensionGraph::leftIndex(
    const Word& u) const {
  return indexIn(left, u);
}

std::optional<std::size_t> BipartiteExtensionGraph::rightIndex(
    const Word& v) const {
  return indexIn(right, v);
}

BipartiteExtensionGraph extensionGraph(const LanguageOracle& o, const Word& w,
                                       std::size_t k, std::size_t l) {
  o.requireHorizon(w.size() + k + l, "extension graph");
  BipartiteExtensionGraph g;
  g.center = w;
  g.leftOrder = k;
  g.rightOrder = l;
  g.left = leftExtensions(o, w, k);
  g.right = rightExtensions(o, w, l);
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    Word prefix = g.left[i] + w;
    for (std::size_t j = 0; j < g.right.size(); ++j) {
      if (o.contains(prefix + g.right[j])) {
        g.edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

Components connectedComponents(const BipartiteExtensionGraph& g) {
  DisjointSet ds(g.vertexCount());
  for (auto [i, j] : g.edges) {
    ds.join(i, g.left.size() + j);
  }
  Components c;
  c.label.assign(g.vertexCount(), 0);
  std::vector<std::size_t> rootLabel(g.vertexCount(), g.vertexCount());
  for (std::size_t v = 0; v < g.vertexCount(); ++v) {
    auto root = ds.find(v);
    if (rootLabel[root] == g.vertexCount()) {
      rootLabel[root] = c.count++;
    }
    c.label[v] = rootLabel[root];
  }
  return c;
}

long characteristic(const BipartiteExtensionGraph& g) {
  return static_cast<long>(g.vertexCount()) - static_cast<long>(g.edges.size());
}

bool isTreeGraph(const BipartiteExtensionGraph& g) {
  return connectedComponents(g).count == 1 && characteristic(g) == 1;
}

bool isForestGraph(const BipartiteExtensionGraph& g) {
  return static_cast<long>(connectedComponents(g).count) == characteristic(g);
}

Specialness classify(const LanguageOracle& o, const Word& w) {
  o.requireHorizon(w.size() + 2, "classification");
  return {leftExtensions(o, w).size() > 1, rightExtensions(o, w).size() > 1};
}

bool isConnectedWord(const LanguageOracle& o, const Word& w) {
  return connectedComponents(extensionGraph(o, w)).count == 1;
}

bool isNeutral(const LanguageOracle& o, const Word& w) {
  return characteristic(extensionGraph(o, w)) == 1;
}

SuffixEmbedding suffixEmbedding(const LanguageOracle& o, const Word& w,
                                std::size_t depth) {
  if (depth < 1 || depth > w.size() + 1) {
    throw DomainError("suffix extension depth must lie in [1, |w|+1]");
  }
  SuffixEmbedding e;
  e.word = w;
  e.depth = depth;
  e.hostCenter = tailPow(w, depth - 1);
  Word prefix = w.substr(0, depth - 1);
  for (const auto& a : leftExtensions(o, w)) {
    e.embeddedLeft.emplace_back(a, a + prefix);
  }
  return e;
}

bool embeddingConnected(const LanguageOracle& o, const Word& w,
                        std::size_t depth) {
  auto embedding = suffixEmbedding(o, w, depth);
  auto host = extensionGraph(o, embedding.hostCenter, depth, depth);
  auto components = connectedComponents(host);
  std::optional<std::size_t> seen;
  for (const auto& [a, image] : embedding.embeddedLeft) {
    auto index = host.leftIndex(image);
    if (!index) {
      throw Error("natural embedding left the host extension graph");
    }
    auto label = components.label[*index];
    if (seen && *seen != label) {
      return false;
    }
    seen = label;
  }
  return true;
}

std::optional<std::size_t> suffixConnectedDepth(
    const LanguageOracle& o, const Word& w,
    std::optional<std::size_t> maxDepth) {
  if (w.empty()) {
    throw DomainError(
        "suffix-connectedness is only defined for non-empty words");
  }
  std::size_t limit = std::min(maxDepth.value_or(w.size() + 1), w.size() + 1);
  for (std::size_t d = 1; d <= limit; ++d) {
    // ext_{d,d}(tail^{d-1}(w)) needs words of length |w| + d + 1.
    std::size_t needed = w.size() + d + 1;
    if (needed > o.horizon()) {
      throw HorizonExceeded(needed, o.horizon(),
                            "suffix extension graph at depth " +
                                std::to_string(d));
    }
    if (embeddingConnected(o, w, d)) {
      return d;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> prefixConnectedDepth(
    const LanguageOracle& o, const Word& w,
    std::optional<std::size_t> maxDepth) {
  return suffixConnectedDepth(o.mirror(), reversed(w), maxDepth);
}

bool isMESuffixConnected(const LanguageOracle& o, std::size_t m,
                         std::size_t e) {
  if (e < 1 || e > m + 1) {
    throw DomainError("(m,e)-suffix-connectedness needs 1 <= e <= m+1");
  }
  o.requireHorizon(m + e + 1, "(m,e)-suffix-connectedness");
  if (m == 0) {
    return embeddingConnected(o, Word{}, 1);
  }
  for (const auto& w : o.factorsOfLength(m)) {
    if (!suffixConnectedDepth(o, w, e)) {
      return false;
    }
  }
  return true;
}

std::string toDot(const BipartiteExtensionGraph& g, const Alphabet& alphabet,
                  const std::vector<Word>& dashed) {
  std::ostringstream out;
  auto name = [&](char side, const Word& w) {
    return std::string("\"") + side + "_" + alphabet.format(w) + "\"";
  };
  out << "graph ext {\n";
  out << "  label=\"ext_{" << g.leftOrder << "," << g.rightOrder << "}("
      << displayWord(alphabet, g.center) << ")\";\n";
  out << "  rankdir=LR;\n";
  for (const auto& u : g.left) {
    out << "  " << name('L', u) << " [label=\"" << displayWord(alphabet, u)
        << "\"";
    if (std::find(dashed.begin(), dashed.end(), u) != dashed.end()) {
      out << ", style=dashed";
    }
    out << "];\n";
  }
  for (const auto& v : g.right) {
    out << "  " << name('R', v) << " [label=\"" << displayWord(alphabet, v)
        << "\"];\n";
  }
  for (auto [i, j] : g.edges) {
    out << "  " << name('L', g.left[i]) << " -- " << name('R', g.right[j])
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wordgroups
