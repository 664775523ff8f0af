#include "wordgroups/free_group_element.hpp"

#include <algorithm>

#include "wordgroups/error.hpp"

namespace wordgroups {

GroupElement::GroupElement(std::span<const SignedLetter> raw) {
  letters_.reserve(raw.size());
  for (const auto& s : raw) {
    if (!letters_.empty() && letters_.back() == s.inverted()) {
      letters_.pop_back();
    } else {
      letters_.push_back(s);
    }
  }
}

GroupElement GroupElement::fromWord(const Word& w) {
  std::vector<SignedLetter> raw;
  raw.reserve(w.size());
  for (Letter a : w) {
    raw.push_back({a, false});
  }
  return GroupElement(raw);
}

GroupElement GroupElement::letter(Letter a, bool inverse) {
  SignedLetter s{a, inverse};
  return GroupElement(std::span<const SignedLetter>(&s, 1));
}

GroupElement GroupElement::inverse() const {
  GroupElement out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverted());
  }
  return out;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  std::vector<SignedLetter> raw = a.letters_;
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return GroupElement(raw);
}

std::string GroupElement::format(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
    }
    out += alphabet.symbol(letters_[i].letter);
    if (letters_[i].inverse) {
      out.push_back('\'');
    }
  }
  return out;
}

GroupElement GroupElement::parse(std::string_view text,
                                 const Alphabet& alphabet) {
  std::vector<SignedLetter> raw;
  if (text == "ε") {
    return {};
  }
  auto isSpace = [](char c) { return c == ' ' || c == '\t'; };
  std::size_t i = 0;
  while (i < text.size()) {
    if (isSpace(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (alphabet.singleCharacter()) {
      j = i + 1;
    } else {
      while (j < text.size() && !isSpace(text[j]) && text[j] != '\'') {
        ++j;
      }
    }
    auto a = alphabet.find(text.substr(i, j - i));
    if (!a) {
      throw ParseError("unknown symbol '" + std::string(text.substr(i, j - i)) +
                       "' in group element");
    }
    bool inverse = j < text.size() && text[j] == '\'';
    raw.push_back({*a, inverse});
    i = inverse ? j + 1 : j;
  }
  return GroupElement(raw);
}

GroupElement reduce(std::span<const SignedLetter> raw) {
  return GroupElement(raw);
}

}  // namespace wordgroups
