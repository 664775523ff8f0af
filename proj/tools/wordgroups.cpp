#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordgroups/casestudy.hpp"
#include "wordgroups/digraph.hpp"
#include "wordgroups/error.hpp"
#include "wordgroups/extension.hpp"
#include "wordgroups/freegroup.hpp"
#include "wordgroups/language.hpp"
#include "wordgroups/rauzy.hpp"
#include "wordgroups/returns.hpp"

namespace wg = wordgroups;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string spec = "0:0001,1:02,2:001";
  std::optional<std::size_t> horizon;
  std::string format = "text";
};

// Raised when the requested horizon is below what the command needs.
struct HorizonTooSmall {
  std::size_t required;
  std::size_t given;
};

std::string show(const wg::Alphabet& a, const wg::Word& w) {
  return w.empty() ? "ε" : a.format(w);
}

Json words(const wg::Alphabet& a, const std::vector<wg::Word>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) {
    out.push_back(a.format(w));
  }
  return out;
}

Json basis(const wg::Alphabet& a, const wg::Subgroup& h) {
  Json out = Json::array();
  for (const auto& g : h.basis()) {
    out.push_back(g.format(a));
  }
  return out;
}

std::string joinBasis(const wg::Alphabet& a, const wg::Subgroup& h) {
  std::string out;
  for (const auto& g : h.basis()) {
    out += (out.empty() ? "" : ", ") + g.format(a);
  }
  return "{" + out + "}";
}

class Session {
 public:
  explicit Session(const Config& config)
      : config_(config), substitution_(wg::Substitution::parse(config.spec)) {}

  const wg::Substitution& substitution() const { return substitution_; }
  const wg::Alphabet& alphabet() const { return substitution_.alphabet(); }
  const std::string& format() const { return config_.format; }

  // Oracle covering `required`, or the user's horizon if one was given.
  wg::LanguageOracle oracle(std::size_t required) const {
    std::size_t h = required;
    if (config_.horizon) {
      if (*config_.horizon < required) {
        throw HorizonTooSmall{required, *config_.horizon};
      }
      h = *config_.horizon;
    }
    return wg::LanguageOracle(substitution_, h);
  }

  wg::Word word(const std::string& text) const {
    return alphabet().parse(text);
  }

 private:
  Config config_;
  wg::Substitution substitution_;
};

int runFactors(const Session& s, std::size_t k) {
  auto o = s.oracle(k);
  const auto& f = o.factorsOfLength(k);
  if (s.format() == "json") {
    Json out{{"k", k}, {"count", f.size()}, {"factors", words(s.alphabet(), f)}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& w : f) {
      std::cout << show(s.alphabet(), w) << "\n";
    }
  }
  return kOk;
}

int runExtgraph(const Session& s, const std::string& text, std::size_t k,
                std::size_t l) {
  const auto w = s.word(text);
  auto o = s.oracle(w.size() + k + l);
  if (!o.contains(w)) {
    throw wg::DomainError("word is not a factor of the language");
  }
  auto g = wg::extensionGraph(o, w, k, l);
  const auto& a = s.alphabet();
  auto comps = wg::connectedComponents(g);
  if (s.format() == "dot") {
    std::cout << wg::toDot(g, a);
    return kOk;
  }
  Json edges = Json::array();
  for (auto [i, j] : g.edges) {
    edges.push_back({a.format(g.left[i]), a.format(g.right[j])});
  }
  if (s.format() == "json") {
    Json out{{"word", a.format(w)},
             {"k", k},
             {"l", l},
             {"left", words(a, g.left)},
             {"right", words(a, g.right)},
             {"edges", edges},
             {"components", comps.count},
             {"characteristic", wg::characteristic(g)},
             {"tree", wg::isTreeGraph(g)}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "word: " << show(a, w) << "\n";
  std::cout << "left: " << words(a, g.left).dump() << "\n";
  std::cout << "right: " << words(a, g.right).dump() << "\n";
  std::cout << "edges: " << edges.dump() << "\n";
  std::cout << "components: " << comps.count << "\n";
  std::cout << "characteristic: " << wg::characteristic(g) << "\n";
  std::cout << "tree: " << (wg::isTreeGraph(g) ? "yes" : "no") << "\n";
  return kOk;
}

int runSuffixConnected(const Session& s, const std::string& text,
                       std::optional<std::size_t> maxDepth) {
  const auto w = s.word(text);
  if (w.empty()) {
    throw wg::DomainError("suffix-connectedness is defined for non-empty words");
  }
  std::size_t deepest = std::min(maxDepth.value_or(w.size() + 1), w.size() + 1);
  auto o = s.oracle(w.size() + deepest + 1);
  if (!o.contains(w)) {
    throw wg::DomainError("word is not a factor of the language");
  }
  auto depth = wg::suffixConnectedDepth(o, w, maxDepth);
  if (s.format() == "dot") {
    std::size_t d = depth.value_or(deepest);
    auto emb = wg::suffixEmbedding(o, w, d);
    auto g = wg::extensionGraph(o, emb.hostCenter, d, d);
    std::vector<wg::Word> dashed;
    for (const auto& p : emb.embeddedLeft) {
      dashed.push_back(p.second);
    }
    std::cout << wg::toDot(g, s.alphabet(), dashed);
  } else if (s.format() == "json") {
    Json out{{"word", s.alphabet().format(w)}, {"depth", nullptr}};
    if (depth) {
      out["depth"] = *depth;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (depth ? std::to_string(*depth) : "none") << "\n";
  }
  return kOk;
}

int runRauzy(const Session& s, std::size_t m, std::size_t k) {
  auto o = s.oracle(m + 1);
  auto g = wg::rauzyGraph(o, m, k);
  const auto& a = s.alphabet();
  if (s.format() == "dot") {
    std::cout << wg::toDot(g, a);
    return kOk;
  }
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.edgeWords.size(); ++i) {
    const auto& e = g.graph.edges()[i];
    edges.push_back({{"from", show(a, g.vertices[e.origin])},
                     {"label", a.symbol(e.label)},
                     {"to", show(a, g.vertices[e.terminus])},
                     {"word", a.format(g.edgeWords[i])}});
  }
  Json groups = Json::array();
  std::vector<wg::Subgroup> hs;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    hs.push_back(wg::groupAt(g.graph, v));
    const auto& w = g.vertices[v];
    groups.push_back({{"u", a.format(wg::slice(w, 0, k))},
                      {"v", a.format(wg::slice(w, k, w.size()))},
                      {"rank", hs.back().rank()},
                      {"basis", basis(a, hs.back())}});
  }
  if (s.format() == "json") {
    Json out{{"m", m},          {"k", k},          {"vertices", words(a, g.vertices)},
             {"edges", edges}, {"groups", groups}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "G_{" << m << "," << k << "}: " << g.vertices.size()
            << " vertices, " << g.edgeWords.size() << " edges\n";
  for (const auto& e : edges) {
    std::cout << e["from"].get<std::string>() << " -"
              << e["label"].get<std::string>() << "-> "
              << e["to"].get<std::string>() << "\n";
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& w = g.vertices[v];
    std::cout << "H_{" << show(a, wg::slice(w, 0, k)) << ","
              << show(a, wg::slice(w, k, w.size())) << "}: rank "
              << hs[v].rank() << " " << joinBasis(a, hs[v]) << "\n";
  }
  return kOk;
}

struct GraphFile {
  std::vector<std::string> vertices;
  wg::Alphabet alphabet;
  wg::LabeledDigraph graph;
};

// One edge `origin label terminus` per line; `#` starts a comment.
GraphFile readGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw wg::ParseError("cannot open graph file " + path);
  }
  struct Raw {
    std::string origin, label, terminus;
  };
  std::vector<Raw> raw;
  std::map<std::string, std::size_t> vertexIndex;
  std::vector<std::string> vertices;
  std::vector<std::string> labels;
  auto vertex = [&](const std::string& name) {
    if (vertexIndex.emplace(name, vertices.size()).second) {
      vertices.push_back(name);
    }
  };
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) {
      tok.push_back(t);
    }
    if (tok.empty()) {
      continue;
    }
    if (tok.size() != 3) {
      throw wg::ParseError("line " + std::to_string(lineNo) +
                           ": expected `origin label terminus`");
    }
    raw.push_back({tok[0], tok[1], tok[2]});
    vertex(tok[0]);
    vertex(tok[2]);
    labels.push_back(tok[1]);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  GraphFile file{vertices, wg::Alphabet(labels),
                 wg::LabeledDigraph(labels.size(), vertices.size())};
  for (const auto& r : raw) {
    file.graph.addEdge(vertexIndex[r.origin], file.alphabet.letter(r.label),
                       vertexIndex[r.terminus]);
  }
  return file;
}

int runFold(const Session& s, const std::string& path,
            const std::optional<std::string>& baseName) {
  auto file = readGraphFile(path);
  if (file.vertices.empty()) {
    throw wg::ParseError("graph file has no edges");
  }
  std::size_t base = 0;
  if (baseName) {
    auto it = std::find(file.vertices.begin(), file.vertices.end(), *baseName);
    if (it == file.vertices.end()) {
      throw wg::DomainError("base vertex " + *baseName + " not in graph");
    }
    base = static_cast<std::size_t>(it - file.vertices.begin());
  }
  auto fold = wg::stallingsFold(file.graph);
  auto h = wg::groupAt(file.graph, base);
  std::vector<std::string> names;
  Json classes = Json::array();
  for (const auto& cls : fold.equivalence.classes()) {
    Json members = Json::array();
    std::string name;
    for (auto v : cls) {
      members.push_back(file.vertices[v]);
      name += (name.empty() ? "" : " ") + file.vertices[v];
    }
    classes.push_back(members);
    names.push_back(name);
  }
  const auto& a = file.alphabet;
  if (s.format() == "dot") {
    std::cout << wg::toDot(fold.folded, a, names);
    return kOk;
  }
  Json folded = Json::array();
  for (const auto& e : fold.folded.edges()) {
    folded.push_back({names[e.origin], a.symbol(e.label), names[e.terminus]});
  }
  if (s.format() == "json") {
    Json out{{"vertices", file.vertices.size()},
             {"edges", file.graph.edgeCount()},
             {"classes", classes},
             {"foldedEdges", folded},
             {"base", file.vertices[base]},
             {"rank", h.rank()},
             {"basis", basis(a, h)}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "vertices: " << file.vertices.size() << "\n";
  std::cout << "edges: " << file.graph.edgeCount() << "\n";
  std::cout << "classes:";
  for (const auto& n : names) {
    std::cout << " {" << n << "}";
  }
  std::cout << "\nfolded edges: " << fold.folded.edgeCount() << "\n";
  std::cout << "base: " << file.vertices[base] << "\n";
  std::cout << "rank: " << h.rank() << "\n";
  std::cout << "basis: " << joinBasis(a, h) << "\n";
  return kOk;
}

Json pairJson(const wg::Alphabet& a, const wg::PairRecord& p) {
  Json witness{{"letter", nullptr}, {"conjugator", p.conjugator.format(a)}};
  if (!(p.u + p.v).empty()) {
    witness["letter"] = a.symbol(p.b);
  }
  return {{"u", a.format(p.u)},
          {"v", a.format(p.v)},
          {"returnWords", words(a, p.returnWords)},
          {"complete", p.complete},
          {"cardinality", p.cardinality},
          {"rank", p.rank},
          {"conjugacyWitness", witness},
          {"checks",
           {{"zigzag1", p.zigzag1},
            {"zigzag2", p.zigzag2},
            {"theorem", p.theorem}}}};
}

void printPair(const wg::Alphabet& a, const wg::PairRecord& p) {
  std::cout << "(" << show(a, p.u) << ", " << show(a, p.v) << "): "
            << p.cardinality << " return words, rank " << p.rank
            << (p.complete ? "" : ", INCOMPLETE") << "\n";
}

std::size_t returnsHorizon(const wg::Substitution& s, const wg::Word& u,
                           const wg::Word& v) {
  auto r = wg::scanReturnWords(s, u, v);
  std::size_t need = std::max(r.longestExtendedLength(), wg::zigzagHorizon(r));
  // The Rauzy groups of letters need G_{1,0}.
  return std::max<std::size_t>(need, 2);
}

int runReturns(const Session& s, const std::string& ut, const std::string& vt) {
  const auto u = s.word(ut);
  const auto v = s.word(vt);
  auto o = s.oracle(std::max(returnsHorizon(s.substitution(), u, v),
                             u.size() + v.size() + 2));
  if (!o.contains(u + v)) {
    throw wg::DomainError("uv is not a factor of the language");
  }
  auto rec = wg::analyzePair(o, u, v, wg::expectedReturnRank(o));
  const auto& a = s.alphabet();
  if (s.format() == "json") {
    std::cout << pairJson(a, rec).dump(2) << "\n";
  } else {
    printPair(a, rec);
    for (const auto& r : rec.returnWords) {
      std::cout << "  " << show(a, r) << "\n";
    }
    std::cout << "K <= H_{u,v}: " << (rec.zigzag1 ? "yes" : "no") << "\n";
    std::cout << "H_{u,sv} <= K: " << (rec.zigzag2 ? "yes" : "no") << "\n";
    std::cout << "K = v H_{b,ε} v^-1: " << (rec.theorem ? "yes" : "no")
              << "\n";
  }
  return rec.complete && rec.zigzag1 && rec.zigzag2 ? kOk
                                                    : kVerificationFailed;
}

int runVerifyTheorem(const Session& s, std::size_t maxLen) {
  auto o = s.oracle(wg::theoremHorizon(s.substitution(), maxLen));
  auto report = wg::verifyMainTheorem(o, maxLen);
  const auto& a = s.alphabet();
  if (s.format() == "json") {
    Json pairs = Json::array();
    for (const auto& p : report.pairs) {
      pairs.push_back(pairJson(a, p));
    }
    Json out{{"maxLen", maxLen},
             {"alphabetSize", report.alphabetSize},
             {"components", report.components},
             {"expectedRank", report.expectedRank},
             {"hypothesisScale", report.hypothesisScale},
             {"suffixConnected", report.suffixConnected},
             {"notSuffixConnected", words(a, report.notSuffixConnected)},
             {"degenerateOk", report.degenerateOk},
             {"allConjugate", report.allConjugate},
             {"pairs", pairs},
             {"passed", report.passed()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "pairs: " << report.pairs.size() << "\n";
    std::cout << "expected rank: " << report.expectedRank << " (n = "
              << report.alphabetSize << ", c = " << report.components << ")\n";
    std::cout << "suffix-connected up to length " << report.hypothesisScale
              << ": " << (report.suffixConnected ? "yes" : "no") << "\n";
    std::cout << "K_{ε,ε} = F(A): " << (report.degenerateOk ? "yes" : "no")
              << "\n";
    std::cout << "all conjugate: " << (report.allConjugate ? "yes" : "no")
              << "\n";
    for (const auto& p : report.pairs) {
      if (!p.passed()) {
        std::cout << "failed ";
        printPair(a, p);
      }
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int runVerifyCorollaries(const Session& s, std::size_t maxLen) {
  auto o = s.oracle(wg::theoremHorizon(s.substitution(), maxLen));
  auto r = wg::verifyCorollaries(o, maxLen);
  const auto& a = s.alphabet();
  Json histogram = Json::object();
  for (auto [card, count] : r.cardinalityHistogram) {
    histogram[std::to_string(card)] = count;
  }
  if (s.format() == "json") {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
      pairs.push_back({{"u", a.format(p.u)},
                       {"v", a.format(p.v)},
                       {"returnWords", words(a, p.returnWords)},
                       {"complete", p.complete},
                       {"cardinality", p.cardinality},
                       {"rank", p.rank},
                       {"generatesFreeGroup", p.generatesFreeGroup},
                       {"free", p.free}});
    }
    Json out{
        {"maxLen", maxLen},
        {"hypothesisScale", r.hypothesisScale},
        {"components", r.components},
        {"emptyCharacteristic", r.emptyCharacteristic},
        {"hypotheses",
         {{"suffixConnected", r.suffixConnected},
          {"connected", r.connected},
          {"neutral", r.neutral},
          {"treeSet", r.treeSet}}},
        {"first",
         {{"allGenerate", r.allGenerate},
          {"someFullRank", r.someFullRank},
          {"emptyConnected", r.emptyConnected},
          {"consistent", r.firstConsistent()}}},
        {"second",
         {{"someFree", r.someFree},
          {"allFree", r.allFree},
          {"treeSet", r.treeSet},
          {"consistent", r.secondConsistent()}}},
        {"cardinalityFormula",
         {{"holds", r.cardinalityFormula},
          {"consistent", r.formulaConsistent()}}},
        {"cardinalityHistogram", histogram},
        {"pairs", pairs},
        {"passed", r.passed()}};
    std::cout << out.dump(2) << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "pairs: " << r.pairs.size() << "\n";
    std::cout << "hypotheses up to length " << r.hypothesisScale
              << ": suffix-connected " << yn(r.suffixConnected)
              << ", connected " << yn(r.connected) << ", neutral "
              << yn(r.neutral) << ", tree set " << yn(r.treeSet) << "\n";
    std::cout << "all return sets generate F(A): " << yn(r.allGenerate)
              << "\n";
    std::cout << "some return group of full rank: " << yn(r.someFullRank)
              << "\n";
    std::cout << "ext(ε) connected: " << yn(r.emptyConnected) << "\n";
    std::cout << "some free: " << yn(r.someFree) << ", all free: "
              << yn(r.allFree) << "\n";
    std::cout << "cardinality formula: " << yn(r.cardinalityFormula) << "\n";
    std::cout << "cardinalities: " << histogram.dump() << "\n";
    std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  return r.passed() ? kOk : kVerificationFailed;
}

int runCasestudy(const Session& s, int step, std::size_t kMax,
                 std::size_t lenMax) {
  std::vector<int> steps;
  if (step == 0) {
    steps = {1, 2, 3, 4, 5};
  } else {
    steps = {step};
  }
  std::size_t need = 0;
  for (int st : steps) {
    need = std::max(need, wg::stepHorizon(st, kMax, lenMax));
  }
  auto o = s.oracle(need);
  std::vector<wg::StepReport> reports;
  for (int st : steps) {
    switch (st) {
      case 1: reports.push_back(wg::verifyStep1(o)); break;
      case 2: reports.push_back(wg::verifyStep2(o)); break;
      case 3: reports.push_back(wg::verifyStep3(o, kMax)); break;
      case 4: reports.push_back(wg::verifyStep4(o, kMax, lenMax)); break;
      default: reports.push_back(wg::verifyStep5(o, kMax)); break;
    }
  }
  bool ok = std::all_of(reports.begin(), reports.end(),
                        [](const wg::StepReport& r) { return r.passed(); });
  if (s.format() == "json") {
    Json out = Json::array();
    for (const auto& r : reports) {
      Json claims = Json::array();
      for (const auto& c : r.claims) {
        claims.push_back(
            {{"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out.push_back({{"step", r.step},
                     {"title", r.title},
                     {"passed", r.passed()},
                     {"claims", claims}});
    }
    std::cout << Json{{"steps", out}, {"passed", ok}}.dump(2) << "\n";
  } else {
    std::cout << wg::toMarkdown(reports);
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Return groups, Rauzy graphs and extension graphs of "
               "substitutive languages"};
  app.require_subcommand(1);
  Config config;
  if (const char* env = std::getenv("WORDGROUPS_HORIZON")) {
    try {
      config.horizon = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: WORDGROUPS_HORIZON must be a non-negative integer\n";
      return kUsage;
    }
  }
  app.add_option("-s,--substitution", config.spec,
                 "substitution, e.g. 0:0001,1:02,2:001")
      ->capture_default_str();
  app.add_option("--horizon", config.horizon,
                 "longest factor length to materialize (default: what the "
                 "command needs; also WORDGROUPS_HORIZON)");
  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();

  std::size_t factorLength = 0;
  auto* factorsCmd = app.add_subcommand("factors", "list L ∩ A^k");
  factorsCmd->add_option("k", factorLength, "factor length")->required();

  std::string extWord;
  std::size_t extK = 1, extL = 1;
  auto* extCmd = app.add_subcommand("extgraph", "extension graph ext_{k,l}(w)");
  extCmd->add_option("w", extWord, "word (ε for the empty word)")->required();
  extCmd->add_option("--k", extK, "left order")->capture_default_str();
  extCmd->add_option("--l", extL, "right order")->capture_default_str();

  std::string scWord;
  std::optional<std::size_t> scMaxDepth;
  auto* scCmd = app.add_subcommand(
      "suffix-connected", "smallest depth at which w is suffix-connected");
  scCmd->add_option("w", scWord, "non-empty word")->required();
  scCmd->add_option("--max-depth", scMaxDepth, "largest depth to try");

  std::size_t rauzyM = 0, rauzyK = 0;
  auto* rauzyCmd = app.add_subcommand("rauzy", "Rauzy graph G_{m,k}");
  rauzyCmd->add_option("m", rauzyM, "level")->required();
  rauzyCmd->add_option("k", rauzyK, "label index")->required();

  std::string foldFile;
  std::optional<std::string> foldBase;
  auto* foldCmd = app.add_subcommand("fold", "Stallings folding of a graph file");
  foldCmd->add_option("graph-file", foldFile, "one `origin label terminus` per line")
      ->required();
  foldCmd->add_option("--base", foldBase, "base vertex (default: first seen)");

  std::string retU, retV;
  auto* retCmd = app.add_subcommand("returns", "return set Ret_{u,v}");
  retCmd->add_option("u", retU, "word u (ε for empty)")->required();
  retCmd->add_option("v", retV, "word v (ε for empty)")->required();

  std::size_t theoremLen = 3;
  auto* theoremCmd =
      app.add_subcommand("verify-theorem", "return groups versus Rauzy groups");
  theoremCmd->add_option("--max-len", theoremLen, "largest |uv|")
      ->capture_default_str();

  std::size_t corLen = 3;
  auto* corCmd = app.add_subcommand("verify-corollaries",
                                    "generation and freeness of return sets");
  corCmd->add_option("--max-len", corLen, "largest |uv|")->capture_default_str();

  int csStep = 0;
  std::size_t csK = 2, csLen = 50;
  auto* csCmd = app.add_subcommand("casestudy", "checks on 0:0001,1:02,2:001");
  csCmd->add_option("--step", csStep, "step 1-5 (0 for all)")
      ->check(CLI::Range(0, 5))
      ->capture_default_str();
  csCmd->add_option("--kmax", csK, "largest k")->capture_default_str();
  csCmd->add_option("--len-max", csLen, "longest word for step 4")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Session session(config);
    if (csCmd->parsed() && !(session.substitution() ==
                             wg::caseStudySubstitution())) {
      std::cerr << "error: casestudy runs on 0:0001,1:02,2:001 only\n";
      return kUsage;
    }
    if (factorsCmd->parsed()) return runFactors(session, factorLength);
    if (extCmd->parsed()) return runExtgraph(session, extWord, extK, extL);
    if (scCmd->parsed()) return runSuffixConnected(session, scWord, scMaxDepth);
    if (rauzyCmd->parsed()) return runRauzy(session, rauzyM, rauzyK);
    if (foldCmd->parsed()) return runFold(session, foldFile, foldBase);
    if (retCmd->parsed()) return runReturns(session, retU, retV);
    if (theoremCmd->parsed()) return runVerifyTheorem(session, theoremLen);
    if (corCmd->parsed()) return runVerifyCorollaries(session, corLen);
    return runCasestudy(session, csStep, csK, csLen);
  } catch (const HorizonTooSmall& e) {
    std::cerr << "error: horizon " << e.given << " too small; required horizon "
              << e.required << "\n";
    return kUsage;
  } catch (const wg::HorizonExceeded& e) {
    std::cerr << "error: " << e.what() << "; required horizon " << e.required()
              << "\n";
    return kUsage;
  } catch (const wg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
