#include "wordgroups/word.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wordgroups/error.hpp"

namespace wordgroups {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::string_view bytes(reinterpret_cast<const char*>(w.data()), w.size());
  return std::hash<std::string_view>{}(bytes);
}

bool shortlexLess(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

Word slice(const Word& w, std::size_t i, std::size_t j) {
  if (i > j || j > w.size()) {
    throw DomainError("slice bounds outside word");
  }
  return w.substr(i, j - i);
}

Word tail(const Word& w) {
  if (w.empty()) {
    throw DomainError("tail of the empty word");
  }
  return w.substr(1);
}

Word init(const Word& w) {
  if (w.empty()) {
    throw DomainError("init of the empty word");
  }
  return w.substr(0, w.size() - 1);
}

Word tailPow(const Word& w, std::size_t d) {
  if (d > w.size()) {
    throw DomainError("tail power exceeds word length");
  }
  return w.substr(d);
}

Word initPow(const Word& w, std::size_t d) {
  if (d > w.size()) {
    throw DomainError("init power exceeds word length");
  }
  return w.substr(0, w.size() - d);
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

bool startsWith(const Word& w, const Word& prefix) noexcept {
  return w.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool endsWith(const Word& w, const Word& suffix) noexcept {
  return w.size() >= suffix.size() &&
         std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

std::vector<std::size_t> occurrences(const Word& w, const Word& u) {
  std::vector<std::size_t> out;
  if (u.size() > w.size()) {
    return out;
  }
  if (u.empty()) {
    out.resize(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) {
      out[i] = i;
    }
    return out;
  }
  for (auto pos = w.find(u); pos != Word::npos; pos = w.find(u, pos + 1)) {
    out.push_back(pos);
  }
  return out;
}

void sortShortlex(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), ShortlexLess{});
}

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw DomainError("alphabet must contain at least one letter");
  }
  if (symbols_.size() > 256) {
    throw UnsupportedError("alphabets are limited to 256 letters");
  }
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) {
      throw DomainError("alphabet symbols must be non-empty");
    }
    if (!seen.insert(s).second) {
      throw DomainError("duplicate alphabet symbol '" + s + "'");
    }
    if (s.size() != 1) {
      single_char_ = false;
    }
  }
}

const std::string& Alphabet::symbol(Letter a) const {
  if (a >= symbols_.size()) {
    throw DomainError("letter outside alphabet");
  }
  return symbols_[a];
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) {
      return static_cast<Letter>(i);
    }
  }
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view symbol) const {
  if (auto a = find(symbol)) {
    return *a;
  }
  throw DomainError("symbol '" + std::string(symbol) + "' outside alphabet");
}

bool Alphabet::contains(const Word& w) const noexcept {
  return std::all_of(w.begin(), w.end(),
                     [this](Letter a) { return a < symbols_.size(); });
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) {
      out.push_back(' ');
    }
    out += symbol(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  if (text == "ε" && !find("ε")) {
    return w;
  }
  if (single_char_) {
    for (char c : text) {
      if (c == ' ' || c == '\t') {
        continue;
      }
      w.push_back(letter(std::string_view(&c, 1)));
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') {
      ++j;
    }
    if (j > i) {
      w.push_back(letter(text.substr(i, j - i)));
    }
    i = j;
  }
  return w;
}

}  // namespace wordgroups
