#include "polyzeta/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace pz {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.length(); ++i)
    if (word_cmp(w, w.suffix(i)) >= 0) return false;
  return true;
}

std::vector<Word> lyndon_words_of_grade(Alphabet a, int grade) {
  std::vector<Word> out;
  for (auto& w : all_words_of_grade(a, grade))
    if (is_lyndon(w)) out.push_back(w);
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<Word> lyndon_words(Alphabet a, int bound) {
  if (bound < 1) throw std::invalid_argument("lyndon_words: bound must be >= 1");
  std::vector<Word> out;
  for (int g = 1; g <= bound; ++g) {
    auto v = lyndon_words_of_grade(a, g);
    out.insert(out.end(), v.begin(), v.end());
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.length() < 2 || !is_lyndon(l))
    throw std::invalid_argument("standard_factorization needs a Lyndon word of length >= 2");
  // The longest proper Lyndon suffix starts at the smallest index that works.
  for (size_t i = 1; i < l.length(); ++i) {
    Word right = l.suffix(i);
    if (is_lyndon(right)) return {l.prefix(i), right};
  }
  throw std::logic_error("standard_factorization: no Lyndon suffix found");
}

std::vector<std::pair<Word, int>> lyndon_factorization(const Word& w) {
  // Duval's algorithm, generic over letter_cmp.
  std::vector<Word> factors;
  const auto& s = w.letters();
  size_t n = s.size(), i = 0;
  while (i < n) {
    size_t j = i + 1, k = i;
    while (j < n && letter_cmp(w.alphabet(), s[k], s[j]) <= 0) {
      if (letter_cmp(w.alphabet(), s[k], s[j]) < 0)
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      factors.emplace_back(w.alphabet(), s.substr(i, j - k));
      i += j - k;
    }
  }
  std::vector<std::pair<Word, int>> out;
  for (auto& f : factors) {
    if (!out.empty() && out.back().first == f)
      ++out.back().second;
    else
      out.emplace_back(f, 1);
  }
  return out;
}

}  // namespace pz
