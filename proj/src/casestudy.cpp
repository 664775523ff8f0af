#include "wordgroups/casestudy.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "wordgroups/error.hpp"
#include "wordgroups/extension.hpp"

namespace wordgroups {

namespace {

const Alphabet& caseAlphabet() {
  static const Alphabet alphabet = caseStudySubstitution().alphabet();
  return alphabet;
}

Word w(std::string_view text) { return caseAlphabet().parse(text); }

std::string show(const Alphabet& a, const Word& x) {
  return x.empty() ? "ε" : a.format(x);
}

std::string show(const Alphabet& a, const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    out += (i ? ", " : "") + show(a, words[i]);
  }
  return out + "}";
}

std::vector<Word> sorted(std::vector<Word> words) {
  sortShortlex(words);
  return words;
}

ClaimCheck wordsClaim(const std::string& claim, const Alphabet& a,
                      const std::vector<Word>& actual,
                      const std::vector<Word>& expected) {
  bool ok = sorted(actual) == sorted(expected);
  return {claim, ok,
          ok ? show(a, actual)
             : "found " + show(a, actual) + ", expected " + show(a, expected)};
}

using EdgeWords = std::set<std::pair<Word, Word>>;

EdgeWords edgeWords(const BipartiteExtensionGraph& g) {
  EdgeWords out;
  for (auto [i, j] : g.edges) {
    out.insert({g.left[i], g.right[j]});
  }
  return out;
}

// Whether the letter permutation p maps gx isomorphically onto gy.
bool permutationIsomorphism(const BipartiteExtensionGraph& gx,
                            const BipartiteExtensionGraph& gy,
                            const std::vector<Letter>& p) {
  auto map = [&p](Word x) {
    for (auto& c : x) {
      c = p[c];
    }
    return x;
  };
  std::vector<Word> left, right;
  for (const auto& x : gx.left) left.push_back(map(x));
  for (const auto& x : gx.right) right.push_back(map(x));
  if (sorted(left) != gy.left || sorted(right) != gy.right) {
    return false;
  }
  EdgeWords mapped;
  for (const auto& [a, b] : edgeWords(gx)) {
    mapped.insert({map(a), map(b)});
  }
  return mapped == edgeWords(gy);
}

std::vector<Word> step3Words(const LanguageOracle& o, std::size_t kMax) {
  std::vector<Word> xs;
  for (std::size_t len = 3; len <= 15; ++len) {
    for (const auto& x : o.factorsOfLength(len)) {
      if (startsWith(x, w("000")) && classify(o, x).bispecial()) {
        xs.push_back(x);
      }
    }
  }
  for (const auto& seq : caseStudySequences(kMax > 0 ? kMax - 1 : 0)) {
    if (seq.k >= 1 && seq.w.size() > 15) {
      xs.push_back(seq.w);
    }
  }
  return xs;
}

}  // namespace

Substitution caseStudySubstitution() {
  return Substitution::parse("0:0001,1:02,2:001");
}

std::vector<BundledSubstitution> conjecturedSubstitutions() {
  return {
      {"conjectured-a", Substitution::parse("0:100,1:032,2:232,3:03")},
      {"conjectured-b", Substitution::parse("0:01,1:2,2:3,3:02")},
      {"conjectured-c", Substitution::parse("0:12,1:2,2:01")},
  };
}

std::vector<CaseStudySequences> caseStudySequences(std::size_t kMax) {
  const auto phi = caseStudySubstitution();
  std::vector<CaseStudySequences> out;
  Word wk = w("001000100010");
  Word image001 = w("001");
  Word image2 = w("2");
  for (std::size_t k = 0; k <= kMax; ++k) {
    CaseStudySequences seq;
    seq.k = k;
    seq.w = wk;
    seq.d = image001.size() + 1;
    seq.x = init(image2);
    seq.y = tailPow(wk, seq.d - 1);
    out.push_back(std::move(seq));
    wk = phi.apply(wk) + (k % 2 == 0 ? w("00") : w("0"));
    image001 = phi.apply(image001);
    image2 = phi.apply(image2);
  }
  return out;
}

std::vector<std::size_t> cuttingPoints(const Substitution& s, const Word& z) {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (auto c : z) {
    out.push_back(at);
    at += s.image(c).size();
  }
  return out;
}

std::optional<Word> deconcatenate(const Substitution& s, const Word& image) {
  if (!s.isPrefixCode()) {
    throw UnsupportedError("deconcatenation needs a prefix code");
  }
  Word z;
  std::size_t at = 0;
  while (at < image.size()) {
    bool matched = false;
    for (std::size_t a = 0; a < s.alphabetSize(); ++a) {
      const auto& img = s.image(static_cast<Letter>(a));
      if (image.compare(at, img.size(), img) == 0) {
        z.push_back(static_cast<Letter>(a));
        at += img.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      return std::nullopt;
    }
  }
  return z;
}

bool StepReport::passed() const noexcept {
  return !claims.empty() &&
         std::all_of(claims.begin(), claims.end(),
                     [](const ClaimCheck& c) { return c.passed; });
}

std::size_t stepHorizon(int step, std::size_t kMax, std::size_t lenMax) {
  const auto phi = caseStudySubstitution();
  switch (step) {
    case 1:
      return 6;
    case 2:
      return 14;
    case 3: {
      // Bispecials of length 15 have images of length at most 60.
      std::size_t need = 4 * 15 + 4;
      for (const auto& seq : caseStudySequences(kMax > 0 ? kMax - 1 : 0)) {
        need = std::max(need, phi.apply(seq.w).size() + 4);
      }
      return need;
    }
    case 4:
      return lenMax + 2;
    case 5: {
      std::size_t need = 0;
      for (const auto& seq : caseStudySequences(kMax)) {
        need = std::max(need, seq.w.size() + seq.d + 1);
      }
      return need;
    }
    default:
      throw DomainError("case study steps are numbered 1 to 5");
  }
}

StepReport verifyStep1(const LanguageOracle& o) {
  o.requireHorizon(6, "step 1");
  const auto& a = o.alphabet();
  StepReport report{1, "Special factors of small length", {}};
  report.claims.push_back(
      wordsClaim("L ∩ A^3 has 7 words", a, o.factorsOfLength(3),
                 {w("000"), w("001"), w("010"), w("020"), w("100"),
                  w("102"), w("200")}));
  report.claims.push_back(
      wordsClaim("L ∩ A^4 has 9 words", a, o.factorsOfLength(4),
                 {w("0001"), w("0010"), w("0100"), w("0102"), w("0200"),
                  w("1000"), w("1001"), w("1020"), w("2000")}));
  report.claims.push_back({"0000 is not a factor", !o.contains(w("0000")), ""});

  std::vector<Word> rightSpecial, leftSpecial;
  for (const auto& x : o.factorsOfLength(2)) {
    if (classify(o, x).rightSpecial) rightSpecial.push_back(x);
  }
  for (const auto& x : o.factorsOfLength(3)) {
    if (classify(o, x).leftSpecial) leftSpecial.push_back(x);
  }
  report.claims.push_back(wordsClaim("right special factors of length 2", a,
                                     rightSpecial, {w("00"), w("10")}));
  report.claims.push_back(wordsClaim("rext(00) = {0, 1}", a,
                                     rightExtensions(o, w("00")),
                                     {w("0"), w("1")}));
  report.claims.push_back(wordsClaim("rext(10) = {0, 2}", a,
                                     rightExtensions(o, w("10")),
                                     {w("0"), w("2")}));
  report.claims.push_back(wordsClaim("left special factors of length 3", a,
                                     leftSpecial, {w("000"), w("001")}));
  report.claims.push_back(wordsClaim("lext(000) = {1, 2}", a,
                                     leftExtensions(o, w("000")),
                                     {w("1"), w("2")}));
  report.claims.push_back(wordsClaim("lext(001) = {0, 1}", a,
                                     leftExtensions(o, w("001")),
                                     {w("0"), w("1")}));
  return report;
}

StepReport verifyStep2(const LanguageOracle& o) {
  o.requireHorizon(14, "step 2");
  const auto& a = o.alphabet();
  const auto& s = o.substitution();
  StepReport report{2, "Bispecial factors starting with 001", {}};

  std::vector<Word> bispecial, disconnected;
  bool shorterConnected = true;
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const auto& x : o.factorsOfLength(len)) {
      if (startsWith(x, w("001")) && classify(o, x).bispecial()) {
        bispecial.push_back(x);
      }
      if (!isConnectedWord(o, x)) {
        disconnected.push_back(x);
        shorterConnected = shorterConnected && len == 12;
      }
    }
  }
  report.claims.push_back(wordsClaim(
      "bispecial factors of length <= 12 starting with 001", a, bispecial,
      {w("0010"), w("00100"), w("00100010"), w("001000100010")}));
  report.claims.push_back(wordsClaim(
      "001000100010 is the only disconnected word of length <= 12", a,
      disconnected, {w("001000100010")}));
  report.claims.push_back(
      {"every non-empty word shorter than 12 is connected", shorterConnected,
       ""});
  const Word y0 = w("000100010");
  report.claims.push_back(
      {"000100010 is bispecial and connected",
       classify(o, y0).bispecial() && isConnectedWord(o, y0), ""});

  report.claims.push_back({"φ(A) is a prefix code", s.isPrefixCode(), ""});
  // Cutting points sit right after the letters 1 and 2 of an image.
  bool cutsOk = true;
  bool inverseOk = true;
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const auto& z : o.factorsOfLength(len)) {
      Word img = s.apply(z);
      std::vector<std::size_t> expected{0};
      for (std::size_t j = 1; j < img.size(); ++j) {
        if (img[j - 1] == 1 || img[j - 1] == 2) expected.push_back(j);
      }
      cutsOk = cutsOk && cuttingPoints(s, z) == expected;
      auto back = deconcatenate(s, img);
      inverseOk = inverseOk && back && *back == z;
    }
  }
  report.claims.push_back(
      {"cutting points follow the occurrences of 1 and 2", cutsOk,
       "factors of length <= 6"});
  report.claims.push_back(
      {"deconcatenation inverts φ", inverseOk, "factors of length <= 6"});
  return report;
}

StepReport verifyStep3(const LanguageOracle& o, const Word& x) {
  const auto& a = o.alphabet();
  const bool ends00 = endsWith(x, w("00"));
  const bool ends10 = endsWith(x, w("10"));
  if (!startsWith(x, w("000")) || !(ends00 || ends10)) {
    throw DomainError("step 3 needs a word starting with 000 and ending "
                      "with 00 or 10");
  }
  Word y = o.substitution().apply(x) + (ends00 ? w("0") : w("00"));
  o.requireHorizon(y.size() + 2, "step 3");
  if (!classify(o, x).bispecial()) {
    throw DomainError("step 3 needs a bispecial word");
  }
  StepReport report{3, "Stability of extension graphs", {}};
  auto gx = extensionGraph(o, x);
  auto gy = extensionGraph(o, y);
  const std::vector<Letter> sigma{0, 2, 1};
  bool viaSigma = permutationIsomorphism(gx, gy, sigma);
  std::string detail = "ext(" + show(a, x) + ") -> ext(" + show(a, y) + ")";
  if (!viaSigma) {
    std::vector<Letter> p(a.size());
    std::iota(p.begin(), p.end(), Letter{0});
    bool other = false;
    do {
      other = other || permutationIsomorphism(gx, gy, p);
    } while (!other && std::next_permutation(p.begin(), p.end()));
    detail += other ? "; another letter permutation is an isomorphism"
                    : "; no letter permutation is an isomorphism";
  }
  report.claims.push_back(
      {"swapping 1 and 2 is an isomorphism of extension graphs", viaSigma,
       detail});
  return report;
}

StepReport verifyStep3(const LanguageOracle& o, std::size_t kMax) {
  StepReport report{3, "Stability of extension graphs", {}};
  for (const auto& x : step3Words(o, kMax)) {
    auto single = verifyStep3(o, x);
    report.claims.insert(report.claims.end(), single.claims.begin(),
                         single.claims.end());
  }
  return report;
}

StepReport verifyStep4(const LanguageOracle& o, std::size_t kMax,
                       std::size_t lenMax) {
  o.requireHorizon(lenMax + 2, "step 4");
  const auto& a = o.alphabet();
  StepReport report{4, "Disconnected words", {}};
  std::vector<Word> found;
  bool nonBispecialConnected = true;
  for (std::size_t len = 1; len <= lenMax; ++len) {
    for (const auto& x : o.factorsOfLength(len)) {
      bool connected = isConnectedWord(o, x);
      if (!connected) {
        found.push_back(x);
      }
      if (!classify(o, x).bispecial()) {
        nonBispecialConnected = nonBispecialConnected && connected;
      }
    }
  }
  std::vector<Word> expected;
  for (const auto& seq : caseStudySequences(kMax)) {
    if (seq.w.size() <= lenMax) {
      expected.push_back(seq.w);
    }
  }
  report.claims.push_back(wordsClaim(
      "disconnected words of length <= " + std::to_string(lenMax) +
          " are the w_k",
      a, found, expected));
  report.claims.push_back({"every word that is not bispecial is connected",
                           nonBispecialConnected, ""});
  return report;
}

StepReport verifyStep5(const LanguageOracle& o, std::size_t kMax) {
  const auto& s = o.substitution();
  const auto& a = o.alphabet();
  StepReport report{5, "Suffix-connectedness of the w_k", {}};
  const auto seqs = caseStudySequences(kMax);
  for (const auto& seq : seqs) {
    o.requireHorizon(seq.w.size() + seq.d + 1, "step 5");
  }
  const Word y0 = seqs.front().y;
  bool increasing = true;
  for (const auto& seq : seqs) {
    const std::string k = std::to_string(seq.k);
    const Word image001 = s.applyPower(w("001"), seq.k);
    report.claims.push_back(
        {"d_" + k + " = |φ^" + k + "(001)| + 1 = " + std::to_string(seq.d),
         seq.d == image001.size() + 1, ""});
    report.claims.push_back({"w_" + k + " = φ^" + k + "(001) y_" + k,
                             seq.w == image001 + seq.y, ""});
    report.claims.push_back(
        {"w_" + k + " ends with " + (seq.k % 2 == 0 ? "10" : "00"),
         endsWith(seq.w, seq.k % 2 == 0 ? w("10") : w("00")), ""});
    report.claims.push_back({"φ^" + k + "(y_0) x_" + k + " = y_" + k,
                             s.applyPower(y0, seq.k) + seq.x == seq.y, ""});
    report.claims.push_back({"x_" + k + "·0 is a prefix of φ^" + k + "(0)",
                             startsWith(s.applyPower(w("0"), seq.k),
                                        seq.x + w("0")),
                             ""});
    if (seq.k + 1 < seqs.size()) {
      const auto& next = seqs[seq.k + 1];
      increasing = increasing && next.w.size() > seq.w.size();
      Word expected = s.apply(seq.x) + (seq.k % 2 == 0 ? w("00") : w("0"));
      report.claims.push_back({"x_" + std::to_string(seq.k + 1) +
                                   " = φ(x_" + k + ")" +
                                   (seq.k % 2 == 0 ? "00" : "0"),
                               next.x == expected, ""});
    }
    auto embedding = suffixEmbedding(o, seq.w, seq.d);
    std::vector<Word> embedded;
    for (const auto& pair : embedding.embeddedLeft) {
      embedded.push_back(pair.second);
    }
    report.claims.push_back(
        {"w_" + k + " is suffix-connected at depth d_" + k,
         embeddingConnected(o, seq.w, seq.d),
         "|w_" + k + "| = " + std::to_string(seq.w.size()) +
             ", embedded " + show(a, embedded)});
  }
  report.claims.push_back({"|w_k| is increasing", increasing, ""});
  auto depth = suffixConnectedDepth(o, seqs.front().w);
  report.claims.push_back(
      {"smallest suffix-connected depth of w_0 is 4", depth && *depth == 4,
       depth ? "depth " + std::to_string(*depth) : "none"});
  return report;
}

namespace {

std::string cell(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string toMarkdown(const std::vector<StepReport>& steps) {
  std::ostringstream out;
  out << "# Case study\n";
  for (const auto& step : steps) {
    out << "\n## Step " << step.step << ": " << step.title << " ("
        << (step.passed() ? "PASS" : "FAIL") << ")\n\n";
    out << "| claim | result | detail |\n|---|---|---|\n";
    for (const auto& c : step.claims) {
      out << "| " << cell(c.claim) << " | " << (c.passed ? "PASS" : "FAIL")
          << " | " << cell(c.detail) << " |\n";
    }
  }
  return out.str();
}

}  // namespace wordgroups
