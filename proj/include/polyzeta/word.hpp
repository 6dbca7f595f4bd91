#ifndef POLYZETA_WORD_HPP
#define POLYZETA_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pz {

// X  = {x0, x1}                letter values 0, 1
// Y  = {y1, y2, ...}           letter values 1, 2, ...
// Y0 = {y0, y1, ...}           letter values 0, 1, ...
enum class Alphabet : uint8_t { X, Y, Y0 };

const char* alphabet_name(Alphabet a);

// A word over one alphabet. Letters are stored as raw indices in a short
// byte string (words in this project stay tiny, so SSO keeps them inline).
//
// The grade is the grading used everywhere for truncation: length for X,
// weight for Y and Y0.
class Word {
 public:
  using Letters = std::basic_string<unsigned char>;

  Word() : alpha_(Alphabet::X) {}
  explicit Word(Alphabet a) : alpha_(a) {}
  Word(Alphabet a, Letters ls) : alpha_(a), letters_(std::move(ls)) {}
  Word(Alphabet a, std::initializer_list<unsigned char> ls)
      : alpha_(a), letters_(ls.begin(), ls.end()) {}

  Alphabet alphabet() const { return alpha_; }
  const Letters& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  unsigned char letter(size_t i) const { return letters_[i]; }

  int weight() const;
  int grade() const { return alpha_ == Alphabet::X ? (int)length() : weight(); }

  Word prefix(size_t n) const { return Word(alpha_, letters_.substr(0, n)); }
  Word suffix(size_t from) const { return Word(alpha_, letters_.substr(from)); }
  Word append(unsigned char l) const {
    Letters ls = letters_;
    ls.push_back(l);
    return Word(alpha_, std::move(ls));
  }

  friend Word concat(const Word& a, const Word& b);

  bool operator==(const Word& o) const {
    return alpha_ == o.alpha_ && letters_ == o.letters_;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }

  // Cheap total order for container keys (not the paper order).
  bool operator<(const Word& o) const {
    if (alpha_ != o.alpha_) return alpha_ < o.alpha_;
    return letters_ < o.letters_;
  }

  // Text form used by the CLI: X-words as bit strings ("001"), Y/Y0-words
  // as space-separated indices ("2 1"), the empty word as "e".
  std::string text() const;
  static Word parse(Alphabet a, const std::string& text);

 private:
  Alphabet alpha_;
  Letters letters_;
};

Word concat(const Word& a, const Word& b);

inline Word word_x(std::initializer_list<unsigned char> ls) {
  return Word(Alphabet::X, ls);
}
inline Word word_y(std::initializer_list<unsigned char> ls) {
  return Word(Alphabet::Y, ls);
}

// Letter order of the paper: x0 < x1 on X, y1 > y2 > y3 > ... on Y and Y0
// (y0 is taken below every other letter). Returns <0, 0, >0.
int letter_cmp(Alphabet a, unsigned char p, unsigned char q);

// Lexicographic extension of letter_cmp with the proper-prefix-is-smaller
// convention. This is the order all Lyndon machinery uses.
int word_cmp(const Word& a, const Word& b);
inline bool word_less(const Word& a, const Word& b) { return word_cmp(a, b) < 0; }

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull ^ static_cast<size_t>(w.alphabet());
    for (unsigned char c : w.letters()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// y_k -> x0^{k-1} x1, extended over words. Defined for Y and Y0 (y0 -> x1
// never occurs; y0 has no X-coding and is rejected).
Word code_pi_x(const Word& y_word);

// Partial inverse: words in X*x1 (or the empty word) decode to a Y-word;
// words ending in x0 have no preimage and report has_value = false.
struct PiYResult {
  bool nonzero = false;
  Word word;
};
PiYResult code_pi_y(const Word& x_word);

std::vector<Word> all_words_of_grade(Alphabet a, int grade);
std::vector<Word> all_words_up_to_grade(Alphabet a, int grade);

}  // namespace pz

#endif
