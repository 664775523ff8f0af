#ifndef WORDGROUPS_TESTS_HELPERS_HPP_
#define WORDGROUPS_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "wordgroups/language.hpp"
#include "wordgroups/substitution.hpp"
#include "wordgroups/word.hpp"

namespace testing {

using namespace wordgroups;

inline const Substitution& phi() {
  static const Substitution s = Substitution::parse("0:0001,1:02,2:001");
  return s;
}
inline const Substitution& thueMorse() {
  static const Substitution s = Substitution::parse("0:01,1:10");
  return s;
}
inline const Substitution& fibonacci() {
  static const Substitution s = Substitution::parse("0:01,1:0");
  return s;
}

inline Word W(const Substitution& s, const std::string& text) {
  return s.alphabet().parse(text);
}
inline Word W(const std::string& text) { return W(phi(), text); }

inline std::vector<Word> Ws(const Substitution& s,
                            const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(W(s, t));
  return out;
}
inline std::vector<Word> Ws(const std::vector<std::string>& texts) {
  return Ws(phi(), texts);
}

inline std::string S(const Word& w) { return phi().alphabet().format(w); }

}  // namespace testing

#endif  // WORDGROUPS_TESTS_HELPERS_HPP_
