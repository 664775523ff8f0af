#ifndef WORDGROUPS_FREE_GROUP_ELEMENT_HPP_
#define WORDGROUPS_FREE_GROUP_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordgroups/word.hpp"

namespace wordgroups {

// A letter or its formal inverse.  Inverses never become alphabet members.
struct SignedLetter {
  Letter letter = 0;
  bool inverse = false;

  SignedLetter inverted() const noexcept { return {letter, !inverse}; }
  friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

// Freely reduced element of F(A).
class GroupElement {
 public:
  GroupElement() = default;
  // Reduces the given sequence.
  explicit GroupElement(std::span<const SignedLetter> raw);
  static GroupElement fromWord(const Word& w);
  static GroupElement letter(Letter a, bool inverse = false);

  const std::vector<SignedLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool isIdentity() const noexcept { return letters_.empty(); }

  GroupElement inverse() const;
  // Free reduction of the concatenation.
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

  // Letters separated by spaces, inverses marked with an apostrophe:
  // "0 2' 1".  The identity renders as the empty string.
  std::string format(const Alphabet& alphabet) const;
  // Accepts the format above; single-character alphabets may omit spaces.
  // "" and "ε" denote the identity.
  static GroupElement parse(std::string_view text, const Alphabet& alphabet);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<SignedLetter> letters_;
};

GroupElement reduce(std::span<const SignedLetter> raw);

}  // namespace wordgroups

#endif  // WORDGROUPS_FREE_GROUP_ELEMENT_HPP_
