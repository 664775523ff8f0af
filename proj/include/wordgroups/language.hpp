#ifndef WORDGROUPS_LANGUAGE_HPP_
#define WORDGROUPS_LANGUAGE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wordgroups/substitution.hpp"
#include "wordgroups/word.hpp"

namespace wordgroups {

// L ∩ A^k for the language of a primitive substitution, sorted shortlex.
//
// Every letter is iterated under the substitution and the length-k factors
// of all iterates are harvested.  The harvest stops once every iterate has
// length at least k, the harvested set did not change between two
// consecutive rounds, and the round count exceeds the primitivity power.
// Throws UnsupportedError for non-primitive or non-growing substitutions.
std::vector<Word> factors(const Substitution& s, std::size_t k);

// Same as above with an explicit order in which the letters are iterated;
// the result does not depend on it.
std::vector<Word> factors(const Substitution& s, std::size_t k,
                          std::span<const Letter> seedOrder);

// A prefix of length exactly minLen of a one-sided fixed point of the
// smallest power p of s having a letter a with s^p(a) starting with a
// (smallest such letter in alphabet order).
Word fixedPointPrefix(const Substitution& s, std::size_t minLen);

// Bounded view of the language of a primitive substitution: all factor
// sets up to the horizon are materialized eagerly at construction.
class LanguageOracle {
 public:
  LanguageOracle(Substitution s, std::size_t horizon);

  const Substitution& substitution() const noexcept { return substitution_; }
  const Alphabet& alphabet() const noexcept {
    return substitution_.alphabet();
  }
  std::size_t horizon() const noexcept { return factors_.size() - 1; }

  // L ∩ A^k in shortlex order.  Throws HorizonExceeded for k > horizon.
  const std::vector<Word>& factorsOfLength(std::size_t k) const;

  // Throws HorizonExceeded if |w| > horizon.
  bool contains(const Word& w) const;

  // Throws HorizonExceeded when length exceeds the horizon.
  void requireHorizon(std::size_t length, const std::string& context) const;

  // Oracle of the mirror language (all words reversed), same horizon.
  LanguageOracle mirror() const;

 private:
  LanguageOracle(Substitution s, std::vector<std::vector<Word>> factors);

  Substitution substitution_;
  std::vector<std::vector<Word>> factors_;
};

}  // namespace wordgroups

#endif  // WORDGROUPS_LANGUAGE_HPP_
