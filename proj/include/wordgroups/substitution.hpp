#ifndef WORDGROUPS_SUBSTITUTION_HPP_
#define WORDGROUPS_SUBSTITUTION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordgroups/word.hpp"

namespace wordgroups {

// A non-erasing morphism of the free monoid over an alphabet.
class Substitution {
 public:
  // images[a] is the image of letter a; every image must be non-empty and
  // lie in the alphabet.
  Substitution(Alphabet alphabet, std::vector<Word> images);

  // Parses `letter:image` rules separated by commas, e.g.
  // "0:0001,1:02,2:001".  Whitespace is ignored.  Letters are single
  // characters; the alphabet is ordered by symbol.
  static Substitution parse(std::string_view spec);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabetSize() const noexcept { return alphabet_.size(); }
  const Word& image(Letter a) const;
  const std::vector<Word>& images() const noexcept { return images_; }

  Word apply(const Word& w) const;
  Word applyPower(Word w, std::size_t power) const;

  // Smallest p <= n^2 such that every letter occurs in the p-th image of
  // every letter, if any.
  std::optional<std::size_t> primitivityPower() const;
  bool isPrimitive() const { return primitivityPower().has_value(); }
  // Some image has length at least two, so iterated images grow.
  bool isGrowing() const noexcept;
  // No image is a proper prefix of another and images are distinct.
  bool isPrefixCode() const noexcept;

  // The substitution a -> reverse(image(a)); its language is the mirror
  // image of this one.
  Substitution mirror() const;

  std::string toString() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

}  // namespace wordgroups

#endif  // WORDGROUPS_SUBSTITUTION_HPP_
