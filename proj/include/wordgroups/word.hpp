#ifndef WORDGROUPS_WORD_HPP_
#define WORDGROUPS_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordgroups {

// A letter is an index into an Alphabet; comparisons of letters follow the
// alphabet order.
using Letter = std::uint8_t;
using Word = std::basic_string<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Length first, then lexicographic in alphabet order.
bool shortlexLess(const Word& a, const Word& b) noexcept;

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const noexcept {
    return shortlexLess(a, b);
  }
};

// w[i:j]
Word slice(const Word& w, std::size_t i, std::size_t j);
Word tail(const Word& w);
Word init(const Word& w);
// tail^d(w) and init^d(w); d may not exceed |w|.
Word tailPow(const Word& w, std::size_t d);
Word initPow(const Word& w, std::size_t d);
Word reversed(Word w);

bool startsWith(const Word& w, const Word& prefix) noexcept;
bool endsWith(const Word& w, const Word& suffix) noexcept;
// All indices j with w[j:j+|u|] = u, in increasing order.  The empty word
// occurs at every index 0..|w|.
std::vector<std::size_t> occurrences(const Word& w, const Word& u);

void sortShortlex(std::vector<Word>& words);

class Alphabet {
 public:
  Alphabet() = default;
  // Symbols must be non-empty and pairwise distinct; their order is the
  // letter order.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Letter a) const;
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<Letter> find(std::string_view symbol) const;
  Letter letter(std::string_view symbol) const;
  bool singleCharacter() const noexcept { return single_char_; }
  bool contains(const Word& w) const noexcept;

  // Single-character alphabets render words by concatenation, otherwise
  // symbols are separated by spaces.  Parsing mirrors this.
  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  bool single_char_ = true;
};

}  // namespace wordgroups

#endif  // WORDGROUPS_WORD_HPP_
