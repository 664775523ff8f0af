#include "wordgroups/returns.hpp"

#include <algorithm>
#include <set>

#include "wordgroups/error.hpp"
#include "wordgroups/extension.hpp"
#include "wordgroups/rauzy.hpp"

namespace wordgroups {

namespace {

struct Scan {
  std::set<Word, ShortlexLess> words;
  std::size_t maxGap = 0;
  bool found = false;
};

Scan scanPrefix(const Word& x, const Word& u, const Word& v) {
  const Word uv = u + v;
  Scan scan;
  auto occ = occurrences(x, uv);
  if (occ.empty()) {
    scan.maxGap = x.size();
    return scan;
  }
  scan.found = true;
  scan.maxGap = std::max(occ.front(), x.size() - occ.back());
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    scan.maxGap = std::max(scan.maxGap, occ[i + 1] - occ[i]);
    scan.words.insert(slice(x, occ[i] + u.size(), occ[i + 1] + u.size()));
  }
  return scan;
}

std::vector<GroupElement> asElements(const std::vector<Word>& words) {
  std::vector<GroupElement> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    out.push_back(GroupElement::fromWord(w));
  }
  return out;
}

struct Pair {
  Word u;
  Word v;
};

// All (u,v) with uv ∈ L, 0 < |uv| <= maxLen, ordered by uv then |u|.
std::vector<Pair> pairsUpTo(const std::vector<std::vector<Word>>& byLength) {
  std::vector<Pair> out;
  for (std::size_t len = 1; len < byLength.size(); ++len) {
    for (const auto& w : byLength[len]) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        out.push_back({slice(w, 0, i), slice(w, i, w.size())});
      }
    }
  }
  return out;
}

std::vector<std::vector<Word>> factorTable(const LanguageOracle& o,
                                           std::size_t maxLen) {
  std::vector<std::vector<Word>> table;
  for (std::size_t k = 0; k <= maxLen; ++k) {
    table.push_back(o.factorsOfLength(k));
  }
  return table;
}

std::size_t emptyComponents(const LanguageOracle& o) {
  return connectedComponents(extensionGraph(o, Word{})).count;
}

// Longest word whose extension graph fits in the oracle.
std::size_t checkableLength(const LanguageOracle& o) {
  return o.horizon() >= 2 ? o.horizon() - 2 : 0;
}

}  // namespace

std::size_t ReturnSet::longestExtendedLength() const {
  std::size_t best = 0;
  for (const auto& r : words) {
    best = std::max(best, r.size());
  }
  return u.size() + best + v.size();
}

ReturnSet scanReturnWords(const Substitution& s, const Word& u, const Word& v,
                          const ReturnScanOptions& options) {
  ReturnSet result;
  result.u = u;
  result.v = v;
  std::vector<std::set<Word, ShortlexLess>> history;
  std::size_t length = std::max<std::size_t>(options.initialLength, 1);
  while (true) {
    length = std::min(length, options.maxLength);
    Word x = fixedPointPrefix(s, length);
    Scan scan = scanPrefix(x, u, v);
    result.scanLength = length;
    result.maxGap = scan.maxGap;
    history.push_back(std::move(scan.words));
    const std::size_t n = history.size();
    bool stable = scan.found && n >= 3 && history[n - 1] == history[n - 2] &&
                  history[n - 2] == history[n - 3];
    if (stable && 4 * scan.maxGap < length) {
      result.complete = true;
      break;
    }
    if (length >= options.maxLength) {
      break;
    }
    length *= 2;
  }
  result.words.assign(history.back().begin(), history.back().end());
  return result;
}

ReturnSet returnSet(const LanguageOracle& o, const Word& u, const Word& v,
                    const ReturnScanOptions& options) {
  const Word uv = u + v;
  if (!o.contains(uv)) {
    throw DomainError("uv is not a factor of the language");
  }
  ReturnSet result = scanReturnWords(o.substitution(), u, v, options);
  o.requireHorizon(result.longestExtendedLength(), "return set validation");
  for (const auto& r : result.words) {
    const Word urv = u + r + v;
    if (!o.contains(urv) || !startsWith(urv, uv) || !endsWith(urv, uv) ||
        occurrences(urv, uv).size() != 2) {
      throw Error("scanned return word fails the defining conditions");
    }
  }
  return result;
}

Subgroup returnGroup(const ReturnSet& r, std::size_t alphabetSize) {
  if (!r.complete) {
    throw Error("return set not certified complete after scanning " +
                std::to_string(r.scanLength) + " letters");
  }
  return subgroupFrom(asElements(r.words), alphabetSize);
}

Subgroup returnGroup(const LanguageOracle& o, const Word& u, const Word& v) {
  return returnGroup(returnSet(o, u, v), o.alphabet().size());
}

Word longestReturnWord(const ReturnSet& r) {
  Word best;
  for (const auto& w : r.words) {
    if (shortlexLess(best, w)) {
      best = w;
    }
  }
  return best;
}

std::size_t zigzagHorizon(const ReturnSet& r) {
  return r.u.size() + longestReturnWord(r).size() + r.v.size() + 1;
}

ZigzagReport checkZigzag(const LanguageOracle& o, const ReturnSet& r) {
  ZigzagReport report;
  report.u = r.u;
  report.v = r.v;
  report.s = longestReturnWord(r);
  o.requireHorizon(zigzagHorizon(r), "zigzag check");
  auto k = returnGroup(r, o.alphabet().size());
  report.returnInRauzy = leq(k, rauzyGroup(o, r.u, r.v));
  report.rauzyInReturn = leq(rauzyGroup(o, r.u, report.s + r.v), k);
  return report;
}

ZigzagReport checkZigzag(const LanguageOracle& o, const Word& u,
                         const Word& v) {
  return checkZigzag(o, returnSet(o, u, v));
}

bool TheoremReport::passed() const noexcept {
  return degenerateOk && allConjugate &&
         std::all_of(pairs.begin(), pairs.end(),
                     [](const PairRecord& p) { return p.passed(); });
}

std::size_t expectedReturnRank(const LanguageOracle& o) {
  return o.alphabet().size() - emptyComponents(o) + 1;
}

PairRecord analyzePair(const LanguageOracle& o, const Word& u, const Word& v,
                       std::size_t expectedRank, const Subgroup* reference) {
  const std::size_t n = o.alphabet().size();
  PairRecord rec;
  rec.u = u;
  rec.v = v;
  auto rs = returnSet(o, u, v);
  rec.returnWords = rs.words;
  rec.complete = rs.complete;
  rec.cardinality = rs.words.size();
  if (!rec.complete) {
    return rec;
  }
  auto k = returnGroup(rs, n);
  auto z = checkZigzag(o, rs);
  rec.zigzag1 = z.returnInRauzy;
  rec.zigzag2 = z.rauzyInReturn;
  rec.rank = k.rank();
  rec.rankMatches = rec.rank == expectedRank;
  rec.equalsRauzyGroup = equal(k, rauzyGroup(o, u, v));
  rec.conjugator = GroupElement::fromWord(v).inverse();
  const Word uv = u + v;
  if (uv.empty()) {
    rec.theorem = equal(k, freeGroup(n));
    rec.conjugateToReference =
        reference ? isConjugate(k, *reference) : rec.theorem;
    return rec;
  }
  rec.b = uv.back();
  auto letterGroup = rauzyGroup(o, Word(1, rec.b), {});
  rec.theorem = equal(k, conjugate(letterGroup, rec.conjugator));
  rec.conjugateToReference =
      isConjugate(k, reference ? *reference : letterGroup);
  return rec;
}

std::size_t theoremHorizon(const Substitution& s, std::size_t maxLen) {
  std::size_t scale = maxLen;
  std::size_t needed = maxLen + 2;
  for (std::size_t len = 0; len <= maxLen; ++len) {
    for (const auto& w : factors(s, len)) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        auto r = scanReturnWords(s, slice(w, 0, i), slice(w, i, w.size()));
        scale = std::max(scale, r.longestExtendedLength());
        needed = std::max(needed, zigzagHorizon(r));
      }
    }
  }
  // Suffix-connectedness of a word of length n may need depth n+1.
  return std::max(needed, 2 * scale + 2);
}

TheoremReport verifyMainTheorem(const LanguageOracle& o, std::size_t maxLen) {
  const std::size_t n = o.alphabet().size();
  TheoremReport report;
  report.maxLen = maxLen;
  report.alphabetSize = n;
  report.components = emptyComponents(o);
  report.expectedRank = expectedReturnRank(o);
  report.degenerateOk = equal(returnGroup(o, {}, {}), freeGroup(n));

  const auto table = factorTable(o, maxLen);

  std::size_t scale = maxLen;
  std::optional<Subgroup> reference;
  report.allConjugate = true;
  for (const auto& [u, v] : pairsUpTo(table)) {
    auto rs = returnSet(o, u, v);
    scale = std::max(scale, rs.longestExtendedLength());
    if (!reference && rs.complete) {
      reference = returnGroup(rs, n);
    }
    auto rec = analyzePair(o, u, v, report.expectedRank,
                           reference ? &*reference : nullptr);
    report.allConjugate = report.allConjugate && rec.conjugateToReference;
    report.pairs.push_back(std::move(rec));
  }

  report.hypothesisScale = std::min(scale, checkableLength(o));
  for (std::size_t len = 1; len <= report.hypothesisScale; ++len) {
    for (const auto& w : o.factorsOfLength(len)) {
      if (!isConnectedWord(o, w) && !suffixConnectedDepth(o, w)) {
        report.notSuffixConnected.push_back(w);
      }
    }
  }
  report.suffixConnected = report.notSuffixConnected.empty();
  return report;
}

bool CorollaryReport::allComplete() const noexcept {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const CorollaryPair& p) { return p.complete; });
}

bool CorollaryReport::firstConsistent() const noexcept {
  if (!suffixConnected) {
    return true;
  }
  return allGenerate == someFullRank && someFullRank == emptyConnected;
}

bool CorollaryReport::secondConsistent() const noexcept {
  if (!(connected && neutral)) {
    return true;
  }
  return someFree == allFree && allFree == treeSet;
}

bool CorollaryReport::formulaConsistent() const noexcept {
  return !neutral || cardinalityFormula;
}

CorollaryReport verifyCorollaries(const LanguageOracle& o, std::size_t maxLen) {
  const std::size_t n = o.alphabet().size();
  CorollaryReport report;
  report.maxLen = maxLen;
  report.alphabetSize = n;
  auto empty = extensionGraph(o, Word{});
  report.components = connectedComponents(empty).count;
  report.emptyCharacteristic = characteristic(empty);
  report.emptyConnected = report.components == 1;
  const auto full = freeGroup(n);
  const long expectedCard =
      static_cast<long>(n) - report.emptyCharacteristic + 1;

  report.allGenerate = true;
  report.allFree = true;
  report.cardinalityFormula = true;
  std::size_t scale = maxLen;
  auto table = factorTable(o, maxLen);
  auto pairs = pairsUpTo(table);
  pairs.insert(pairs.begin(), Pair{});
  for (const auto& [u, v] : pairs) {
    CorollaryPair rec;
    rec.u = u;
    rec.v = v;
    auto rs = returnSet(o, u, v);
    scale = std::max(scale, rs.longestExtendedLength());
    rec.returnWords = rs.words;
    rec.complete = rs.complete;
    rec.cardinality = rs.words.size();
    if (rec.complete) {
      auto k = returnGroup(rs, n);
      rec.rank = k.rank();
      rec.generatesFreeGroup = equal(k, full);
      rec.free = rec.cardinality == rec.rank;
    }
    report.allGenerate = report.allGenerate && rec.generatesFreeGroup;
    report.someFullRank = report.someFullRank || rec.rank == n;
    report.someFree = report.someFree || rec.free;
    report.allFree = report.allFree && rec.free;
    report.cardinalityFormula =
        report.cardinalityFormula &&
        static_cast<long>(rec.cardinality) == expectedCard;
    ++report.cardinalityHistogram[rec.cardinality];
    report.pairs.push_back(std::move(rec));
  }

  report.hypothesisScale = std::min(scale, checkableLength(o));
  report.suffixConnected = true;
  report.connected = true;
  report.neutral = true;
  report.treeSet = isForestGraph(empty);
  for (std::size_t len = 1; len <= report.hypothesisScale; ++len) {
    for (const auto& w : o.factorsOfLength(len)) {
      auto g = extensionGraph(o, w);
      bool connectedWord = connectedComponents(g).count == 1;
      bool neutralWord = characteristic(g) == 1;
      report.connected = report.connected && connectedWord;
      report.neutral = report.neutral && neutralWord;
      report.treeSet = report.treeSet && isTreeGraph(g);
      if (!connectedWord && report.suffixConnected) {
        report.suffixConnected = suffixConnectedDepth(o, w).has_value();
      }
    }
  }
  return report;
}

}  // namespace wordgroups
