#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyzeta/coeff.hpp"
#include "polyzeta/ncpoly.hpp"

#include <random>

using namespace pz;

namespace {

Word wx(const std::string& s) { return Word::parse(Alphabet::X, s); }
Word wy(const std::string& s) { return Word::parse(Alphabet::Y, s); }

// Independent shuffle oracle: enumerate position subsets. For every way of
// choosing |u| slots among |u|+|v|, place u there and v in the rest.
NCPoly<Rat> shuffle_oracle(const Word& u, const Word& v) {
  size_t n = u.length() + v.length();
  NCPoly<Rat> out;
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (static_cast<size_t>(__builtin_popcountll(mask)) != u.length()) continue;
    Word::Letters w(n, 0);
    size_t iu = 0, iv = 0;
    for (size_t i = 0; i < n; ++i)
      w[i] = (mask >> i) & 1 ? u.letter(iu++) : v.letter(iv++);
    out.add_term(Word(u.alphabet(), w), rat(1));
  }
  return out;
}

std::vector<Word> random_words(Alphabet a, int max_grade, int count,
                               unsigned seed) {
  std::mt19937 rng(seed);
  auto pool = all_words_up_to_grade(a, max_grade);
  std::vector<Word> out;
  std::uniform_int_distribution<size_t> d(0, pool.size() - 1);
  for (int i = 0; i < count; ++i) out.push_back(pool[d(rng)]);
  return out;
}

}  // namespace

TEST_CASE("conc examples") {
  auto x0 = NCPoly<Rat>::of_word(wx("0"));
  auto x1 = NCPoly<Rat>::of_word(wx("1"));
  CHECK(conc(x0, x1) == NCPoly<Rat>::of_word(wx("01")));
  auto sum = x0 + x1;
  auto r = conc(sum, x1);
  CHECK(r.coeff(wx("01")) == 1);
  CHECK(r.coeff(wx("11")) == 1);
  CHECK(r.size() == 2);
  CHECK(conc(NCPoly<Rat>::unit(Alphabet::X), sum) == sum);
  CHECK_THROWS(conc(x0, NCPoly<Rat>::of_word(wy("1"))));
}

TEST_CASE("shuffle examples and unit") {
  auto r = shuffle_words(wx("0"), wx("1"));
  CHECK(r.coeff(wx("01")) == 1);
  CHECK(r.coeff(wx("10")) == 1);

  auto s = shuffle_words(wx("01"), wx("0"));
  CHECK(s.coeff(wx("001")) == 2);
  CHECK(s.coeff(wx("010")) == 1);
  CHECK(s.size() == 2);

  CHECK(shuffle_words(wx("0110"), Word(Alphabet::X)) ==
        NCPoly<Rat>::of_word(wx("0110")));
}

TEST_CASE("shuffle against the position-subset oracle") {
  for (auto& u : random_words(Alphabet::X, 4, 12, 11))
    for (auto& v : random_words(Alphabet::X, 4, 6, 22))
      CHECK(shuffle_words(u, v) == shuffle_oracle(u, v));
}

TEST_CASE("stuffle examples") {
  auto r = stuffle_words(wy("1"), wy("1"));
  CHECK(r.coeff(wy("1 1")) == 2);
  CHECK(r.coeff(wy("2")) == 1);
  CHECK(r.size() == 2);

  auto s = stuffle_words(wy("2"), wy("3"));
  CHECK(s.coeff(wy("2 3")) == 1);
  CHECK(s.coeff(wy("3 2")) == 1);
  CHECK(s.coeff(wy("5")) == 1);
  CHECK(s.size() == 3);

  CHECK(stuffle_words(Word(Alphabet::Y), wy("2 1")) ==
        NCPoly<Rat>::of_word(wy("2 1")));
  CHECK_THROWS(stuffle(NCPoly<Rat>::of_word(wx("0")),
                       NCPoly<Rat>::of_word(wx("1"))));
}

TEST_CASE("commutativity and associativity on random triples") {
  auto us = random_words(Alphabet::Y, 3, 6, 7);
  auto vs = random_words(Alphabet::Y, 2, 6, 9);
  auto ws = random_words(Alphabet::Y, 1, 6, 13);
  for (size_t i = 0; i < us.size(); ++i) {
    auto a = NCPoly<Rat>::of_word(us[i]);
    auto b = NCPoly<Rat>::of_word(vs[i]);
    auto c = NCPoly<Rat>::of_word(ws[i]);
    CHECK(stuffle(a, b) == stuffle(b, a));
    CHECK(stuffle(stuffle(a, b), c) == stuffle(a, stuffle(b, c)));
    CHECK(shuffle(a, b) == shuffle(b, a));
    CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
  }
}

TEST_CASE("coproduct examples") {
  auto dc = coproduct_word(wx("01"), Coproduct::Conc);
  CHECK(dc.coeff(Word(Alphabet::X), wx("01")) == 1);
  CHECK(dc.coeff(wx("0"), wx("1")) == 1);
  CHECK(dc.coeff(wx("01"), Word(Alphabet::X)) == 1);
  CHECK(dc.terms().size() == 3);

  auto dq = coproduct_word(wy("2"), Coproduct::Stuffle);
  CHECK(dq.coeff(wy("2"), Word(Alphabet::Y)) == 1);
  CHECK(dq.coeff(Word(Alphabet::Y), wy("2")) == 1);
  CHECK(dq.coeff(wy("1"), wy("1")) == 1);
  CHECK(dq.terms().size() == 3);

  auto ds = coproduct_word(wx("0"), Coproduct::Shuffle);
  CHECK(ds.coeff(wx("0"), Word(Alphabet::X)) == 1);
  CHECK(ds.coeff(Word(Alphabet::X), wx("0")) == 1);
  CHECK(ds.terms().size() == 2);
}

TEST_CASE("coproduct/product duality <Delta(w)|u x v> = <w|u*v>") {
  for (int gw = 1; gw <= 5; ++gw)
    for (auto& w : all_words_of_grade(Alphabet::Y, gw)) {
      auto dq = coproduct_word(w, Coproduct::Stuffle);
      for (int gu = 0; gu <= gw; ++gu)
        for (auto& u : all_words_of_grade(Alphabet::Y, gu))
          for (auto& v : all_words_of_grade(Alphabet::Y, gw - gu))
            CHECK(dq.coeff(u, v) == stuffle_words(u, v).coeff(w));
    }
  for (int gw = 1; gw <= 5; ++gw)
    for (auto& w : all_words_of_grade(Alphabet::X, gw)) {
      auto ds = coproduct_word(w, Coproduct::Shuffle);
      for (int gu = 0; gu <= gw; ++gu)
        for (auto& u : all_words_of_grade(Alphabet::X, gu))
          for (auto& v : all_words_of_grade(Alphabet::X, gw - gu))
            CHECK(ds.coeff(u, v) == shuffle_words(u, v).coeff(w));
    }
}

TEST_CASE("pairing") {
  auto p = NCPoly<Rat>::of_word(wx("0")) + NCPoly<Rat>::of_word(wx("1")) * rat(2);
  CHECK(pairing(p, 1, p) == 5);

  // identity-like series truncated at 2 pairs a word to 1
  NCPoly<Rat> id;
  for (auto& w : all_words_up_to_grade(Alphabet::X, 2)) id.add_term(w, rat(1));
  CHECK(pairing(id, 2, NCPoly<Rat>::of_word(wx("01"))) == 1);

  auto e = exp_conc(NCPoly<Rat>::of_word(wx("0")), Alphabet::X, 3);
  CHECK(pairing(e, 3, NCPoly<Rat>::of_word(wx("00"))) == rat(1, 2));
  CHECK_THROWS(pairing(e, 3, NCPoly<Rat>::of_word(wx("0000"))));
}

TEST_CASE("exp and log") {
  auto e = exp_conc(NCPoly<Rat>::of_word(wx("0")), Alphabet::X, 2);
  CHECK(e.coeff(Word(Alphabet::X)) == 1);
  CHECK(e.coeff(wx("0")) == 1);
  CHECK(e.coeff(wx("00")) == rat(1, 2));
  CHECK(e.size() == 3);

  auto s = NCPoly<Rat>::of_word(wx("0")) + NCPoly<Rat>::of_word(wx("1"));
  CHECK(log_conc(exp_conc(s, Alphabet::X, 4), Alphabet::X, 4) == s);

  auto ey = exp_conc(NCPoly<Rat>::of_word(wy("1")), Alphabet::Y, 3);
  CHECK(ey.coeff(wy("1 1 1")) == rat(1, 6));

  CHECK_THROWS(exp_conc(NCPoly<Rat>::unit(Alphabet::X), Alphabet::X, 3));
  CHECK_THROWS(log_conc(NCPoly<Rat>::of_word(wx("0")), Alphabet::X, 3));

  // inverse pair on pseudo-random inputs
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    NCPoly<Rat> arg;
    for (auto& w : all_words_up_to_grade(Alphabet::X, 3)) {
      if (w.empty()) continue;
      long c = static_cast<long>(rng() % 5) - 2;
      if (c) arg.add_term(w, rat(c));
    }
    int bound = 8;
    auto exp8 = exp_conc(arg.truncated(bound), Alphabet::X, bound);
    CHECK(log_conc(exp8, Alphabet::X, bound) == arg.truncated(bound));
  }
}

TEST_CASE("group-like character criterion") {
  // exp of a primitive element is group-like for the shuffle coproduct
  auto p = NCPoly<Rat>::of_word(wx("0")) * rat(3) + NCPoly<Rat>::of_word(wx("1"));
  TruncatedSeries<Rat> s{exp_conc(p, Alphabet::X, 4), Alphabet::X, 4};
  CHECK(is_group_like(s, Coproduct::Shuffle));

  TruncatedSeries<Rat> bad{s.poly, Alphabet::X, 4};
  bad.poly.add_term(wx("01"), rat(1, 7));
  CHECK_FALSE(is_group_like(bad, Coproduct::Shuffle));

  // stuffle side: exp of the primitive letter y1 is group-like, exp(y2) not
  TruncatedSeries<Rat> t{exp_conc(NCPoly<Rat>::of_word(wy("1")), Alphabet::Y, 4),
                         Alphabet::Y, 4};
  CHECK(is_group_like(t, Coproduct::Stuffle));
  TruncatedSeries<Rat> t2{exp_conc(NCPoly<Rat>::of_word(wy("2")), Alphabet::Y, 4),
                          Alphabet::Y, 4};
  CHECK_FALSE(is_group_like(t2, Coproduct::Stuffle));
}

TEST_CASE("poly coefficient ring") {
  Poly g(sym_gamma());
  Poly z2(sym_zeta_y(wy("2")));
  Poly p = g * g * rat(1, 2) - z2 * rat(1, 2);
  CHECK(p.str() == "1/2*g^2 - 1/2*zY[2]");
  CHECK(p.homogeneous_weight() == 2);
  CHECK(p.depends_on(sym_gamma()));
  Poly q = p.substitute(sym_gamma(), Poly(rat(0)));
  CHECK(q == z2 * rat(-1, 2));
  Poly r = p.substitute(sym_gamma(), z2);  // inhomogeneous on purpose
  CHECK_THROWS(r.homogeneous_weight());
  CHECK((Poly(rat(2)) * Poly(rat(3, 4))).constant_value() == rat(3, 2));
  CHECK(Poly(rat(0)).is_zero());
  CHECK(sym_info(sym_zeta_x(wx("01"))).weight == 2);
  CHECK(sym_info(sym_zeta_y(wy("3"))).weight == 3);
}
