#include "wordgroups/language.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>
#include <unordered_set>

#include "wordgroups/error.hpp"

namespace wordgroups {

namespace {

// Iterates stop growing beyond this length; far beyond anything a desk-scale
// horizon needs.
constexpr std::size_t kMaxIterateLength = std::size_t{1} << 28;

std::size_t requirePrimitive(const Substitution& s) {
  auto p = s.primitivityPower();
  if (!p) {
    throw UnsupportedError("substitution " + s.toString() +
                           " is not primitive");
  }
  if (!s.isGrowing()) {
    throw UnsupportedError("substitution " + s.toString() +
                           " does not generate an infinite language");
  }
  return *p;
}

std::vector<Word> harvest(const std::vector<Word>& iterates, std::size_t k) {
  std::unordered_set<std::string_view> seen;
  for (const auto& w : iterates) {
    const auto* data = reinterpret_cast<const char*>(w.data());
    for (std::size_t i = 0; i + k <= w.size(); ++i) {
      seen.emplace(data + i, k);
    }
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (auto view : seen) {
    out.emplace_back(reinterpret_cast<const Letter*>(view.data()), view.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Word> factors(const Substitution& s, std::size_t k) {
  std::vector<Letter> order(s.alphabetSize());
  std::iota(order.begin(), order.end(), Letter{0});
  return factors(s, k, order);
}

std::vector<Word> factors(const Substitution& s, std::size_t k,
                          std::span<const Letter> seedOrder) {
  const std::size_t power = requirePrimitive(s);
  {
    std::vector<Letter> check(seedOrder.begin(), seedOrder.end());
    std::sort(check.begin(), check.end());
    bool permutation = check.size() == s.alphabetSize();
    for (std::size_t i = 0; permutation && i < check.size(); ++i) {
      permutation = check[i] == i;
    }
    if (!permutation) {
      throw DomainError("seed order must be a permutation of the alphabet");
    }
  }
  if (k == 0) {
    return {Word{}};
  }
  std::vector<Word> iterates;
  for (Letter a : seedOrder) {
    iterates.push_back(Word(1, a));
  }
  std::vector<Word> previous;
  bool havePrevious = false;
  for (std::size_t round = 1;; ++round) {
    for (auto& w : iterates) {
      w = s.apply(w);
      if (w.size() > kMaxIterateLength) {
        throw Error("factor sets of length " + std::to_string(k) +
                    " did not stabilize");
      }
    }
    bool longEnough = std::all_of(iterates.begin(), iterates.end(),
                                  [k](const Word& w) { return w.size() >= k; });
    if (!longEnough) {
      continue;
    }
    auto current = harvest(iterates, k);
    if (havePrevious && round > power && current == previous) {
      sortShortlex(current);
      return current;
    }
    previous = std::move(current);
    havePrevious = true;
  }
}

Word fixedPointPrefix(const Substitution& s, std::size_t minLen) {
  requirePrimitive(s);
  const std::size_t n = s.alphabetSize();
  // first[a] = first letter of s^p(a), advanced one power at a time.
  std::vector<Letter> first(n);
  for (std::size_t a = 0; a < n; ++a) {
    first[a] = static_cast<Letter>(a);
  }
  std::size_t period = 0;
  Letter seed = 0;
  for (std::size_t p = 1; p <= n && period == 0; ++p) {
    for (std::size_t a = 0; a < n; ++a) {
      first[a] = s.image(first[a]).front();
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (first[a] == a) {
        period = p;
        seed = static_cast<Letter>(a);
        break;
      }
    }
  }
  Word w(1, seed);
  while (w.size() < minLen) {
    w = s.applyPower(std::move(w), period);
  }
  w.resize(minLen);
  return w;
}

LanguageOracle::LanguageOracle(Substitution s, std::size_t horizon)
    : substitution_(std::move(s)) {
  factors_.resize(horizon + 1);
  factors_[horizon] = factors(substitution_, horizon);
  std::sort(factors_[horizon].begin(), factors_[horizon].end());
  // Factor closure: every factor of length k < horizon extends to the right
  // and to the left inside the language.
  for (std::size_t k = horizon; k-- > 0;) {
    auto& target = factors_[k];
    for (const auto& w : factors_[k + 1]) {
      target.push_back(w.substr(0, k));
      target.push_back(w.substr(1));
    }
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());
  }
}

LanguageOracle::LanguageOracle(Substitution s,
                               std::vector<std::vector<Word>> factors)
    : substitution_(std::move(s)), factors_(std::move(factors)) {}

const std::vector<Word>& LanguageOracle::factorsOfLength(std::size_t k) const {
  requireHorizon(k, "factor set");
  return factors_[k];
}

bool LanguageOracle::contains(const Word& w) const {
  requireHorizon(w.size(), "membership");
  const auto& set = factors_[w.size()];
  return std::binary_search(set.begin(), set.end(), w);
}

void LanguageOracle::requireHorizon(std::size_t length,
                                    const std::string& context) const {
  if (length > horizon()) {
    throw HorizonExceeded(length, horizon(), context);
  }
}

LanguageOracle LanguageOracle::mirror() const {
  std::vector<std::vector<Word>> mirrored(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    for (const auto& w : factors_[k]) {
      mirrored[k].push_back(reversed(w));
    }
    std::sort(mirrored[k].begin(), mirrored[k].end());
  }
  return LanguageOracle(substitution_.mirror(), std::move(mirrored));
}

}  // namespace wordgroups
