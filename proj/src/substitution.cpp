#include "wordgroups/substitution.hpp"

#include <algorithm>
#include <map>

#include "wordgroups/error.hpp"

namespace wordgroups {

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) {
    throw DomainError("substitution needs exactly one image per letter");
  }
  for (const auto& img : images_) {
    if (img.empty()) {
      throw DomainError("substitution images must be non-empty");
    }
    if (!alphabet_.contains(img)) {
      throw DomainError("image letter outside alphabet");
    }
  }
}

Substitution Substitution::parse(std::string_view spec) {
  std::string compact;
  for (char c : spec) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      compact.push_back(c);
    }
  }
  std::map<std::string, std::string> rules;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    auto comma = compact.find(',', pos);
    if (comma == std::string::npos) {
      comma = compact.size();
    }
    std::string rule = compact.substr(pos, comma - pos);
    pos = comma + 1;
    if (rule.empty()) {
      if (comma == compact.size()) {
        break;
      }
      throw ParseError("empty rule in substitution spec");
    }
    auto colon = rule.find(':');
    if (colon != 1) {
      throw ParseError("malformed rule '" + rule +
                       "': expected single-character letter followed by ':'");
    }
    std::string letter = rule.substr(0, 1);
    std::string image = rule.substr(2);
    if (image.empty()) {
      throw ParseError("rule '" + rule + "' has an empty image");
    }
    if (!rules.emplace(letter, image).second) {
      throw ParseError("duplicate rule for letter '" + letter + "'");
    }
  }
  if (rules.empty()) {
    throw ParseError("substitution spec contains no rules");
  }
  std::vector<std::string> symbols;
  for (const auto& [letter, image] : rules) {
    symbols.push_back(letter);
  }
  Alphabet alphabet(symbols);
  std::vector<Word> images;
  for (const auto& [letter, image] : rules) {
    Word w;
    for (char c : image) {
      auto a = alphabet.find(std::string_view(&c, 1));
      if (!a) {
        throw ParseError("image of '" + letter + "' uses letter '" +
                         std::string(1, c) + "' outside the alphabet");
      }
      w.push_back(*a);
    }
    images.push_back(std::move(w));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

const Word& Substitution::image(Letter a) const {
  if (a >= images_.size()) {
    throw DomainError("letter outside alphabet");
  }
  return images_[a];
}

Word Substitution::apply(const Word& w) const {
  Word out;
  std::size_t total = 0;
  for (Letter a : w) {
    total += image(a).size();
  }
  out.reserve(total);
  for (Letter a : w) {
    out += images_[a];
  }
  return out;
}

Word Substitution::applyPower(Word w, std::size_t power) const {
  for (std::size_t i = 0; i < power; ++i) {
    w = apply(w);
  }
  return w;
}

std::optional<std::size_t> Substitution::primitivityPower() const {
  const std::size_t n = alphabetSize();
  // occurs[a][b]: letter b occurs in the current power applied to a.
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (Letter b : images_[a]) {
      base[a][b] = true;
    }
  }
  auto current = base;
  for (std::size_t p = 1; p <= n * n; ++p) {
    bool positive = true;
    for (std::size_t a = 0; a < n && positive; ++a) {
      positive = std::all_of(current[a].begin(), current[a].end(),
                             [](bool x) { return x; });
    }
    if (positive) {
      return p;
    }
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!current[a][b]) {
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (base[b][c]) {
            next[a][c] = true;
          }
        }
      }
    }
    current = std::move(next);
  }
  return std::nullopt;
}

bool Substitution::isGrowing() const noexcept {
  return std::any_of(images_.begin(), images_.end(),
                     [](const Word& w) { return w.size() >= 2; });
}

bool Substitution::isPrefixCode() const noexcept {
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = 0; b < images_.size(); ++b) {
      if (a != b && startsWith(images_[b], images_[a])) {
        return false;
      }
    }
  }
  return true;
}

Substitution Substitution::mirror() const {
  std::vector<Word> images;
  images.reserve(images_.size());
  for (const auto& w : images_) {
    images.push_back(reversed(w));
  }
  return Substitution(alphabet_, std::move(images));
}

std::string Substitution::toString() const {
  std::string out;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (a > 0) {
      out += ',';
    }
    out += alphabet_.symbol(static_cast<Letter>(a));
    out += ':';
    out += alphabet_.format(images_[a]);
  }
  return out;
}

}  // namespace wordgroups
