#include "polyzeta/word.hpp"

#include <sstream>
#include <stdexcept>

namespace pz {

const char* alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::X: return "X";
    case Alphabet::Y: return "Y";
    case Alphabet::Y0: return "Y0";
  }
  return "?";
}

int Word::weight() const {
  int w = 0;
  if (alpha_ == Alphabet::X) return static_cast<int>(length());
  for (unsigned char c : letters_) w += c;
  return w;
}

Word concat(const Word& a, const Word& b) {
  if (a.alpha_ != b.alpha_) throw std::invalid_argument("concat: alphabet mismatch");
  return Word(a.alpha_, a.letters_ + b.letters_);
}

std::string Word::text() const {
  if (empty()) return "e";
  std::ostringstream os;
  if (alpha_ == Alphabet::X) {
    for (unsigned char c : letters_) os << static_cast<int>(c);
  } else {
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << static_cast<int>(letters_[i]);
    }
  }
  return os.str();
}

Word Word::parse(Alphabet a, const std::string& text) {
  Word w(a);
  if (text == "e" || text.empty()) return w;
  if (a == Alphabet::X) {
    for (char c : text) {
      if (c == ' ') continue;
      if (c != '0' && c != '1')
        throw std::invalid_argument("X-word must be over {0,1}: '" + text + "'");
      w.letters_.push_back(static_cast<unsigned char>(c - '0'));
    }
    return w;
  }
  std::istringstream is(text);
  int v;
  while (is >> v) {
    int lo = (a == Alphabet::Y) ? 1 : 0;
    if (v < lo || v > 255)
      throw std::invalid_argument("bad letter index in '" + text + "'");
    w.letters_.push_back(static_cast<unsigned char>(v));
  }
  if (!is.eof()) throw std::invalid_argument("bad word: '" + text + "'");
  if (w.letters_.empty()) throw std::invalid_argument("bad word: '" + text + "'");
  return w;
}

int letter_cmp(Alphabet a, unsigned char p, unsigned char q) {
  if (p == q) return 0;
  if (a == Alphabet::X) return p < q ? -1 : 1;
  // y1 > y2 > ...; y0 smaller than everything else.
  if (p == 0) return -1;
  if (q == 0) return 1;
  return p > q ? -1 : 1;
}

int word_cmp(const Word& a, const Word& b) {
  size_t n = std::min(a.length(), b.length());
  for (size_t i = 0; i < n; ++i) {
    int c = letter_cmp(a.alphabet(), a.letter(i), b.letter(i));
    if (c != 0) return c;
  }
  if (a.length() == b.length()) return 0;
  return a.length() < b.length() ? -1 : 1;
}

Word code_pi_x(const Word& y) {
  if (y.alphabet() == Alphabet::X)
    throw std::invalid_argument("code_pi_x expects a Y-word");
  Word::Letters out;
  for (unsigned char c : y.letters()) {
    if (c == 0) throw std::invalid_argument("code_pi_x: y0 has no X-coding");
    out.append(c - 1, 0);
    out.push_back(1);
  }
  return Word(Alphabet::X, std::move(out));
}

PiYResult code_pi_y(const Word& x) {
  if (x.alphabet() != Alphabet::X)
    throw std::invalid_argument("code_pi_y expects an X-word");
  PiYResult r;
  r.word = Word(Alphabet::Y);
  if (x.empty()) {
    r.nonzero = true;
    return r;
  }
  if (x.letter(x.length() - 1) == 0) return r;  // kernel A<X>x0
  Word::Letters out;
  unsigned run = 0;
  for (unsigned char c : x.letters()) {
    if (c == 0) {
      ++run;
    } else {
      out.push_back(static_cast<unsigned char>(run + 1));
      run = 0;
    }
  }
  r.nonzero = true;
  r.word = Word(Alphabet::Y, std::move(out));
  return r;
}

namespace {

void gen_words(Alphabet a, int grade, Word::Letters& cur, std::vector<Word>& out) {
  if (grade == 0) {
    out.emplace_back(a, cur);
    return;
  }
  if (a == Alphabet::X) {
    for (unsigned char l : {0, 1}) {
      cur.push_back(l);
      gen_words(a, grade - 1, cur, out);
      cur.pop_back();
    }
  } else {
    for (int l = 1; l <= grade; ++l) {
      cur.push_back(static_cast<unsigned char>(l));
      gen_words(a, grade - l, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> all_words_of_grade(Alphabet a, int grade) {
  if (a == Alphabet::Y0)
    throw std::invalid_argument("Y0 words are not grade-enumerable (y0 has weight 0)");
  std::vector<Word> out;
  Word::Letters cur;
  gen_words(a, grade, cur, out);
  return out;
}

std::vector<Word> all_words_up_to_grade(Alphabet a, int grade) {
  std::vector<Word> out;
  for (int g = 0; g <= grade; ++g) {
    auto v = all_words_of_grade(a, g);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace pz
