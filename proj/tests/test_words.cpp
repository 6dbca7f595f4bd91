#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyzeta/lyndon.hpp"
#include "polyzeta/word.hpp"

#include <algorithm>
#include <set>

using namespace pz;

namespace {

// Independent oracle: w is Lyndon iff nonempty and strictly smaller than
// every proper nonempty suffix, checked literally.
bool lyndon_oracle(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.length(); ++i)
    if (!(word_cmp(w, w.suffix(i)) < 0)) return false;
  return true;
}

// Independent oracle for the CFL factorization: repeatedly strip the
// longest Lyndon prefix.
std::vector<Word> cfl_oracle(const Word& w) {
  std::vector<Word> out;
  Word rest = w;
  while (!rest.empty()) {
    size_t best = 1;
    for (size_t n = 1; n <= rest.length(); ++n)
      if (lyndon_oracle(rest.prefix(n))) best = n;
    out.push_back(rest.prefix(best));
    rest = rest.suffix(best);
  }
  return out;
}

Word wx(const std::string& s) { return Word::parse(Alphabet::X, s); }
Word wy(const std::string& s) { return Word::parse(Alphabet::Y, s); }

}  // namespace

TEST_CASE("word basics and text round trip") {
  Word w = wx("001");
  CHECK(w.length() == 3);
  CHECK(w.weight() == 3);  // X grade is length
  CHECK(w.text() == "001");
  Word y = wy("2 1");
  CHECK(y.weight() == 3);
  CHECK(y.length() == 2);
  CHECK(y.text() == "2 1");
  CHECK(Word::parse(Alphabet::Y, "2 1") == y);
  CHECK(Word::parse(Alphabet::X, "e").empty());
  CHECK(Word(Alphabet::X).grade() == 0);
  CHECK_THROWS(Word::parse(Alphabet::X, "012"));
  CHECK_THROWS(Word::parse(Alphabet::Y, "0 1"));
  CHECK(Word::parse(Alphabet::Y0, "0 1").weight() == 1);
}

TEST_CASE("paper letter order") {
  CHECK(letter_cmp(Alphabet::X, 0, 1) < 0);
  CHECK(letter_cmp(Alphabet::Y, 1, 2) > 0);  // y1 > y2
  CHECK(letter_cmp(Alphabet::Y, 3, 2) < 0);
  CHECK(word_less(wy("2"), wy("1")));
  CHECK(word_less(wy("3"), wy("2 1")));
  CHECK(word_less(wx("0"), wx("01")));  // prefix smaller
}

TEST_CASE("pi_X / pi_Y codings") {
  CHECK(code_pi_x(wy("2 1")) == wx("011"));
  CHECK(code_pi_y(wx("011")).nonzero);
  CHECK(code_pi_y(wx("011")).word == wy("2 1"));
  CHECK_FALSE(code_pi_y(wx("10")).nonzero);  // kernel A<X>x0
  for (int g = 1; g <= 10; ++g)
    for (auto& w : all_words_of_grade(Alphabet::Y, g)) {
      auto r = code_pi_y(code_pi_x(w));
      REQUIRE(r.nonzero);
      CHECK(r.word == w);
      CHECK(static_cast<int>(code_pi_x(w).length()) == w.weight());
    }
}

TEST_CASE("lyndon words against the brute-force oracle") {
  auto lx = lyndon_words(Alphabet::X, 3);
  std::vector<Word> expect = {wx("0"), wx("001"), wx("01"), wx("011"), wx("1")};
  CHECK(lx == expect);

  auto ly = lyndon_words(Alphabet::Y, 3);
  std::set<Word> got(ly.begin(), ly.end());
  std::set<Word> want{wy("1"), wy("2"), wy("3"), wy("2 1")};
  CHECK(got == want);

  auto l1 = lyndon_words(Alphabet::X, 1);
  CHECK(l1 == std::vector<Word>{wx("0"), wx("1")});

  for (Alphabet a : {Alphabet::X, Alphabet::Y})
    for (int g = 1; g <= 8; ++g) {
      std::set<Word> fast;
      for (auto& w : lyndon_words_of_grade(a, g)) fast.insert(w);
      std::set<Word> slow;
      for (auto& w : all_words_of_grade(a, g))
        if (lyndon_oracle(w)) slow.insert(w);
      CHECK(fast == slow);
    }
}

TEST_CASE("X Lyndon counts match necklace counts") {
  std::vector<size_t> expect = {1, 2, 1, 2, 3, 6, 9, 18, 30};  // n = 0..8
  for (int n = 1; n <= 8; ++n)
    CHECK(lyndon_words_of_grade(Alphabet::X, n).size() == expect[n]);
}

TEST_CASE("standard factorization") {
  auto [a, b] = standard_factorization(wx("001"));
  CHECK(a == wx("0"));
  CHECK(b == wx("01"));
  auto [c, d] = standard_factorization(wx("011"));
  CHECK(c == wx("01"));
  CHECK(d == wx("1"));
  auto [e, f] = standard_factorization(wy("2 1"));
  CHECK(e == wy("2"));
  CHECK(f == wy("1"));
  CHECK_THROWS(standard_factorization(wx("1")));
  CHECK_THROWS(standard_factorization(wx("10")));

  // both factors Lyndon, and l2 is the longest Lyndon proper suffix
  for (Alphabet al : {Alphabet::X, Alphabet::Y})
    for (int g = 2; g <= 7; ++g)
      for (auto& l : lyndon_words_of_grade(al, g)) {
        if (l.length() < 2) continue;
        auto [l1, l2] = standard_factorization(l);
        CHECK(lyndon_oracle(l1));
        CHECK(lyndon_oracle(l2));
        CHECK(concat(l1, l2) == l);
        for (size_t i = 1; i < l.length() - l2.length(); ++i)
          CHECK_FALSE(lyndon_oracle(l.suffix(i)));
      }
}

TEST_CASE("lyndon factorization examples and oracle") {
  auto f = lyndon_factorization(wx("10"));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == wx("1"));
  CHECK(f[1].first == wx("0"));

  auto g = lyndon_factorization(wx("0101"));
  REQUIRE(g.size() == 1);
  CHECK(g[0].first == wx("01"));
  CHECK(g[0].second == 2);

  CHECK(lyndon_factorization(Word(Alphabet::X)).empty());

  for (Alphabet a : {Alphabet::X, Alphabet::Y})
    for (int gr = 1; gr <= 8; ++gr)
      for (auto& w : all_words_of_grade(a, gr)) {
        auto fac = lyndon_factorization(w);
        std::vector<Word> flat;
        for (auto& [l, m] : fac)
          for (int i = 0; i < m; ++i) flat.push_back(l);
        CHECK(flat == cfl_oracle(w));
        Word cat(a);
        for (auto& l : flat) cat = concat(cat, l);
        CHECK(cat == w);
        for (size_t i = 0; i + 1 < fac.size(); ++i)
          CHECK(word_cmp(fac[i].first, fac[i + 1].first) > 0);
      }
}
