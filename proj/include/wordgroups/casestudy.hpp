#ifndef WORDGROUPS_CASESTUDY_HPP_
#define WORDGROUPS_CASESTUDY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wordgroups/language.hpp"
#include "wordgroups/substitution.hpp"

namespace wordgroups {

// 0 ↦ 0001, 1 ↦ 02, 2 ↦ 001.
Substitution caseStudySubstitution();

// Substitutions believed to be suffix-connected with infinitely many
// disconnected words.  Provided for experiments only.
struct BundledSubstitution {
  std::string name;
  Substitution substitution;
};
std::vector<BundledSubstitution> conjecturedSubstitutions();

// The disconnected words w_k of the case study and their companions:
// d_k = |φ^k(001)| + 1, x_k = init(φ^k(2)), y_k = tail^{d_k-1}(w_k).
struct CaseStudySequences {
  std::size_t k = 0;
  Word w;
  std::size_t d = 0;
  Word x;
  Word y;
};

// Entries for k = 0..kMax.
std::vector<CaseStudySequences> caseStudySequences(std::size_t kMax);

// {|s(prefix)| : prefix of z} ∩ [0, |s(z)| - 1], increasing.
std::vector<std::size_t> cuttingPoints(const Substitution& s, const Word& z);

// The unique z with s(z) = image, if any.  UnsupportedError unless the
// images form a prefix code.
std::optional<Word> deconcatenate(const Substitution& s, const Word& image);

struct ClaimCheck {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct StepReport {
  int step = 0;
  std::string title;
  std::vector<ClaimCheck> claims;

  bool passed() const noexcept;
};

// Horizon each step needs with the given bounds.
std::size_t stepHorizon(int step, std::size_t kMax, std::size_t lenMax);

// Factor tables and the right/left special factors of lengths 2 and 3.
StepReport verifyStep1(const LanguageOracle& o);
// Bispecial factors starting with 001 and the smallest disconnected word.
StepReport verifyStep2(const LanguageOracle& o);
// ext(x) ≅ ext(φ(x)0) or ext(φ(x)00) through the letter swap 1 ↔ 2.
// DomainError unless x is bispecial, starts with 000 and ends with 00 or 10.
StepReport verifyStep3(const LanguageOracle& o, const Word& x);
// The statement above for every bispecial word starting with 000 of length
// at most 15 and for w_1..w_{kMax-1}.
StepReport verifyStep3(const LanguageOracle& o, std::size_t kMax);
// The disconnected words of length <= lenMax are the w_k.
StepReport verifyStep4(const LanguageOracle& o, std::size_t kMax,
                       std::size_t lenMax);
// The w_k are suffix-connected at depth d_k, and the identities linking
// w_k, d_k, x_k, y_k.
StepReport verifyStep5(const LanguageOracle& o, std::size_t kMax);

std::string toMarkdown(const std::vector<StepReport>& steps);

}  // namespace wordgroups

#endif  // WORDGROUPS_CASESTUDY_HPP_
