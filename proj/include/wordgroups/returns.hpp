#ifndef WORDGROUPS_RETURNS_HPP_
#define WORDGROUPS_RETURNS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wordgroups/freegroup.hpp"
#include "wordgroups/language.hpp"
#include "wordgroups/substitution.hpp"

namespace wordgroups {

struct ReturnScanOptions {
  std::size_t initialLength = 256;
  // Scans never read past this many letters of the fixed point.
  std::size_t maxLength = std::size_t{1} << 24;
};

// Ret_{u,v}: words r with urv ∈ L such that urv starts and ends with uv and
// contains exactly two occurrences of uv.
struct ReturnSet {
  Word u;
  Word v;
  // Shortlex.
  std::vector<Word> words;
  // The scan stabilized; see scanReturnWords.
  bool complete = false;
  std::size_t scanLength = 0;
  // Largest distance between consecutive occurrences of uv, counting the
  // stretches before the first and after the last occurrence.
  std::size_t maxGap = 0;

  // max |urv| over the set (|uv| when empty).
  std::size_t longestExtendedLength() const;
};

// Collects the gaps between consecutive occurrences of uv in a prefix of a
// fixed point of s, doubling the prefix until the collected set is the same
// for three consecutive lengths and the largest gap is below a quarter of
// the scanned length.  Hitting options.maxLength leaves complete = false.
ReturnSet scanReturnWords(const Substitution& s, const Word& u, const Word& v,
                          const ReturnScanOptions& options = {});

// The scan above with every word checked against the defining conditions
// through the oracle.  DomainError unless uv ∈ L; HorizonExceeded if some
// urv is longer than the horizon.
ReturnSet returnSet(const LanguageOracle& o, const Word& u, const Word& v,
                    const ReturnScanOptions& options = {});

// K_{u,v}.  Refuses (Error) incomplete sets.
Subgroup returnGroup(const ReturnSet& r, std::size_t alphabetSize);
Subgroup returnGroup(const LanguageOracle& o, const Word& u, const Word& v);

// Longest return word, the shortlex-greatest among those of maximal length.
Word longestReturnWord(const ReturnSet& r);

struct ZigzagReport {
  Word u;
  Word v;
  Word s;
  // K_{u,v} ≤ H_{u,v}.
  bool returnInRauzy = false;
  // H_{u,sv} ≤ K_{u,v}.
  bool rauzyInReturn = false;
  bool passed() const noexcept { return returnInRauzy && rauzyInReturn; }
};

// Horizon needed by checkZigzag: |u| + |s| + |v| + 1.
std::size_t zigzagHorizon(const ReturnSet& r);
ZigzagReport checkZigzag(const LanguageOracle& o, const ReturnSet& r);
ZigzagReport checkZigzag(const LanguageOracle& o, const Word& u,
                         const Word& v);

// Per-pair outcome of the main theorem check.
struct PairRecord {
  Word u;
  Word v;
  std::vector<Word> returnWords;
  bool complete = false;
  std::size_t cardinality = 0;
  std::size_t rank = 0;
  // K_{u,v} = conjugate(H_{b,ε}, conjugator), conjugator = v⁻¹.
  Letter b = 0;
  GroupElement conjugator;
  bool zigzag1 = false;
  bool zigzag2 = false;
  bool rankMatches = false;
  bool conjugateToReference = false;
  bool equalsRauzyGroup = false;
  // equal(K_{u,v}, conjugate(H_{b,ε}, v⁻¹)).
  bool theorem = false;

  bool passed() const noexcept {
    return complete && zigzag1 && zigzag2 && rankMatches &&
           conjugateToReference && equalsRauzyGroup && theorem;
  }
};

// Computes every field of the record for one pair.  The rank is compared
// with expectedRank.  conjugateToReference compares with *reference, or with
// H_{b,ε} when reference is null.  For uv = ε, b is unused and the theorem
// check becomes K_{ε,ε} = F(A).
PairRecord analyzePair(const LanguageOracle& o, const Word& u, const Word& v,
                       std::size_t expectedRank,
                       const Subgroup* reference = nullptr);

// Card(A) - c + 1 with c the number of components of ext(ε).
std::size_t expectedReturnRank(const LanguageOracle& o);

struct TheoremReport {
  std::size_t maxLen = 0;
  std::size_t alphabetSize = 0;
  // Components of ext(ε).
  std::size_t components = 0;
  std::size_t expectedRank = 0;
  // Words up to this length were tested for suffix-connectedness.
  std::size_t hypothesisScale = 0;
  bool suffixConnected = false;
  std::vector<Word> notSuffixConnected;
  // The pair (ε, ε): K_{ε,ε} = F(A).
  bool degenerateOk = false;
  // Pairs with uv ≠ ε, ordered by uv shortlex, then |u|.
  std::vector<PairRecord> pairs;
  bool allConjugate = false;

  bool passed() const noexcept;
};

// Horizon sufficient for verifyMainTheorem / verifyCorollaries at maxLen.
std::size_t theoremHorizon(const Substitution& s, std::size_t maxLen);

TheoremReport verifyMainTheorem(const LanguageOracle& o, std::size_t maxLen);

struct CorollaryPair {
  Word u;
  Word v;
  std::vector<Word> returnWords;
  bool complete = false;
  std::size_t cardinality = 0;
  std::size_t rank = 0;
  bool generatesFreeGroup = false;
  // Cardinality equals rank.
  bool free = false;
};

struct CorollaryReport {
  std::size_t maxLen = 0;
  std::size_t alphabetSize = 0;
  std::size_t components = 0;
  long emptyCharacteristic = 0;
  // Hypotheses are tested on non-empty words up to this length, which
  // covers every urv met by the return sets.
  std::size_t hypothesisScale = 0;
  bool suffixConnected = false;
  bool connected = false;
  bool neutral = false;
  bool treeSet = false;
  std::vector<CorollaryPair> pairs;
  std::map<std::size_t, std::size_t> cardinalityHistogram;

  // Return sets generating F(A) / some return group of rank Card(A) /
  // ext(ε) connected.
  bool allGenerate = false;
  bool someFullRank = false;
  bool emptyConnected = false;
  // Some / all return sets free.
  bool someFree = false;
  bool allFree = false;
  // Card(Ret) = Card(A) - χ(ext(ε)) + 1 for every pair.
  bool cardinalityFormula = false;

  bool allComplete() const noexcept;
  // First corollary: suffix-connected ⇒ the three statements agree.
  bool firstConsistent() const noexcept;
  // Second corollary: connected and neutral ⇒ the three statements agree.
  bool secondConsistent() const noexcept;
  // Cardinality formula whenever neutral.
  bool formulaConsistent() const noexcept;
  bool passed() const noexcept {
    return allComplete() && firstConsistent() && secondConsistent() &&
           formulaConsistent();
  }
};

CorollaryReport verifyCorollaries(const LanguageOracle& o, std::size_t maxLen);

}  // namespace wordgroups

#endif  // WORDGROUPS_RETURNS_HPP_
