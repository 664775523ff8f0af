#include "wordgroups/rauzy.hpp"

#include <algorithm>

#include "wordgroups/error.hpp"
#include "wordgroups/extension.hpp"

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

RauzyMorphism buildMorphism(const RauzyGraph& g, RauzyGraph target,
                            Word (*project)(const Word&)) {
  RauzyMorphism result;
  result.isMorphism = true;
  result.vertexMap.reserve(g.vertices.size());
  for (const auto& w : g.vertices) {
    auto image = target.vertexOf(project(w));
    if (!image) {
      throw DomainError("projected vertex missing from the lower level");
    }
    result.vertexMap.push_back(*image);
  }
  std::vector<bool> vertexHit(target.vertices.size(), false);
  for (auto v : result.vertexMap) {
    vertexHit[v] = true;
  }
  std::vector<bool> edgeHit(target.edgeWords.size(), false);
  for (std::size_t i = 0; i < g.edgeWords.size(); ++i) {
    auto image = target.edgeOf(project(g.edgeWords[i]));
    if (!image) {
      throw DomainError("projected edge missing from the lower level");
    }
    result.edgeMap.push_back(*image);
    edgeHit[*image] = true;
    const auto& e = g.graph.edges()[i];
    const auto& f = target.graph.edges()[*image];
    if (result.vertexMap[e.origin] != f.origin ||
        result.vertexMap[e.terminus] != f.terminus || e.label != f.label) {
      result.isMorphism = false;
    }
  }
  auto all = [](const std::vector<bool>& hit) {
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  };
  result.isOnto = all(vertexHit) && all(edgeHit);
  result.target = std::move(target);
  return result;
}

}  // namespace

std::optional<std::size_t> RauzyGraph::vertexOf(const Word& w) const {
  return indexIn(vertices, w);
}

std::optional<std::size_t> RauzyGraph::edgeOf(const Word& x) const {
  if (x.size() != level + 1) {
    return std::nullopt;
  }
  auto origin = vertexOf(init(x));
  auto terminus = vertexOf(tail(x));
  if (!origin || !terminus) {
    return std::nullopt;
  }
  return graph.edgeIndex({*origin, x[labelIndex], *terminus});
}

RauzyGraph rauzyGraph(const LanguageOracle& o, std::size_t m, std::size_t k) {
  if (k > m) {
    throw DomainError("label index exceeds the level of the Rauzy graph");
  }
  o.requireHorizon(m + 1, "Rauzy graph G_{" + std::to_string(m) + "," +
                              std::to_string(k) + "}");
  RauzyGraph g;
  g.level = m;
  g.labelIndex = k;
  g.vertices = o.factorsOfLength(m);
  g.graph = LabeledDigraph(o.alphabet().size(), g.vertices.size());
  const auto& words = o.factorsOfLength(m + 1);
  for (const auto& x : words) {
    g.graph.addEdge(*g.vertexOf(init(x)), x[k], *g.vertexOf(tail(x)));
  }
  // Distinct factors give distinct triples, so edges and words correspond.
  g.edgeWords.resize(words.size());
  for (const auto& x : words) {
    g.edgeWords[*g.edgeOf(x)] = x;
  }
  return g;
}

RauzyMorphism initMorphism(const LanguageOracle& o, const RauzyGraph& g) {
  if (g.level == 0 || g.labelIndex + 1 > g.level) {
    throw DomainError("init morphism needs m >= 1 and k <= m-1");
  }
  return buildMorphism(g, rauzyGraph(o, g.level - 1, g.labelIndex), &init);
}

RauzyMorphism tailMorphism(const LanguageOracle& o, const RauzyGraph& g) {
  if (g.level == 0 || g.labelIndex == 0) {
    throw DomainError("tail morphism needs m >= 1 and k >= 1");
  }
  return buildMorphism(g, rauzyGraph(o, g.level - 1, g.labelIndex - 1), &tail);
}

LevelMorphisms levelMorphisms(const LanguageOracle& o, const RauzyGraph& g) {
  if (g.level == 0) {
    throw DomainError("level morphisms need m >= 1");
  }
  LevelMorphisms result;
  if (g.labelIndex + 1 <= g.level) {
    result.initMap = initMorphism(o, g);
  }
  if (g.labelIndex >= 1) {
    result.tailMap = tailMorphism(o, g);
  }
  return result;
}

Subgroup rauzyGroup(const LanguageOracle& o, const Word& u, const Word& v) {
  const Word uv = u + v;
  o.requireHorizon(uv.size() + 1, "Rauzy group");
  if (!o.contains(uv)) {
    throw DomainError("uv is not a factor of the language");
  }
  auto g = rauzyGraph(o, uv.size(), u.size());
  return groupAt(g.graph, *g.vertexOf(uv));
}

Path lemmaPath(const RauzyGraph& g, const Word& x) {
  const std::size_t m = g.level;
  if (x.size() < m + 1) {
    throw DomainError("lemma path needs |x| > m");
  }
  const std::size_t d = x.size() - m;
  std::vector<PathStep> steps;
  steps.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto edge = g.edgeOf(slice(x, i, i + m + 1));
    if (!edge) {
      throw DomainError("a window of x is not a factor");
    }
    steps.push_back({*edge, false});
  }
  return Path(*g.vertexOf(slice(x, 0, m)), std::move(steps));
}

KerTailReport checkKerTailGroupPreserving(const LanguageOracle& o,
                                          std::size_t m, std::size_t k,
                                          std::size_t e) {
  if (!(1 <= e && e <= k && k <= m)) {
    throw DomainError("ker(tail) check needs 1 <= e <= k <= m");
  }
  KerTailReport report;
  report.m = m;
  report.k = k;
  report.e = e;
  report.preconditionHolds = isMESuffixConnected(o, m - 1, e);
  auto g = rauzyGraph(o, m, k);
  const auto& lower = o.factorsOfLength(m - 1);
  std::vector<std::size_t> keys;
  keys.reserve(g.vertices.size());
  for (const auto& w : g.vertices) {
    keys.push_back(*indexIn(lower, tail(w)));
  }
  auto kernel = VertexEquivalence::fromKeys(keys);
  report.classCount = kernel.classCount();
  report.groupPreserving = isGroupPreserving(g.graph, kernel);
  return report;
}

std::string toDot(const RauzyGraph& g, const Alphabet& alphabet) {
  std::vector<std::string> names;
  names.reserve(g.vertices.size());
  for (const auto& w : g.vertices) {
    names.push_back(w.empty() ? "ε" : alphabet.format(w));
  }
  return toDot(g.graph, alphabet, names);
}

}  // namespace wordgroups
