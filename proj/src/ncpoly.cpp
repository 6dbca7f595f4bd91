#include "polyzeta/ncpoly.hpp"

namespace pz {

namespace {

void shuffle_rec(const Word& u, size_t iu, const Word& v, size_t iv,
                 Word::Letters& cur, Alphabet a, NCPoly<Rat>& out) {
  if (iu == u.length() || iv == v.length()) {
    Word::Letters w = cur;
    w.append(u.letters(), iu, u.length() - iu);
    w.append(v.letters(), iv, v.length() - iv);
    out.add_term(Word(a, std::move(w)), rat(1));
    return;
  }
  cur.push_back(u.letter(iu));
  shuffle_rec(u, iu + 1, v, iv, cur, a, out);
  cur.pop_back();
  cur.push_back(v.letter(iv));
  shuffle_rec(u, iu, v, iv + 1, cur, a, out);
  cur.pop_back();
}

void stuffle_rec(const Word& u, size_t iu, const Word& v, size_t iv,
                 Word::Letters& cur, Alphabet a, NCPoly<Rat>& out) {
  if (iu == u.length() || iv == v.length()) {
    Word::Letters w = cur;
    w.append(u.letters(), iu, u.length() - iu);
    w.append(v.letters(), iv, v.length() - iv);
    out.add_term(Word(a, std::move(w)), rat(1));
    return;
  }
  cur.push_back(u.letter(iu));
  stuffle_rec(u, iu + 1, v, iv, cur, a, out);
  cur.pop_back();
  cur.push_back(v.letter(iv));
  stuffle_rec(u, iu, v, iv + 1, cur, a, out);
  cur.pop_back();
  cur.push_back(static_cast<unsigned char>(u.letter(iu) + v.letter(iv)));
  stuffle_rec(u, iu + 1, v, iv + 1, cur, a, out);
  cur.pop_back();
}

}  // namespace

NCPoly<Rat> shuffle_words(const Word& u, const Word& v) {
  NCPoly<Rat> out;
  Word::Letters cur;
  shuffle_rec(u, 0, v, 0, cur, u.empty() ? v.alphabet() : u.alphabet(), out);
  return out;
}

NCPoly<Rat> stuffle_words(const Word& u, const Word& v) {
  NCPoly<Rat> out;
  Word::Letters cur;
  stuffle_rec(u, 0, v, 0, cur, u.empty() ? v.alphabet() : u.alphabet(), out);
  return out;
}

PairPoly PairPoly::mul(const PairPoly& a, const PairPoly& b, int bound) {
  PairPoly out;
  for (auto& [pa, ca] : a.terms_)
    for (auto& [pb, cb] : b.terms_) {
      if (pa.first.grade() + pb.first.grade() > bound) continue;
      if (pa.second.grade() + pb.second.grade() > bound) continue;
      Rat c = ca * cb;
      out.add_term(concat(pa.first, pb.first), concat(pa.second, pb.second), c);
    }
  return out;
}

PairPoly coproduct_word(const Word& w, Coproduct which) {
  Alphabet a = w.alphabet();
  PairPoly out;
  if (which == Coproduct::Conc) {
    for (size_t i = 0; i <= w.length(); ++i)
      out.add_term(w.prefix(i), w.suffix(i), rat(1));
    return out;
  }
  out.add_term(Word(a), Word(a), rat(1));
  for (size_t i = 0; i < w.length(); ++i) {
    unsigned char l = w.letter(i);
    PairPoly dl;
    dl.add_term(Word(a, {l}), Word(a), rat(1));
    dl.add_term(Word(a), Word(a, {l}), rat(1));
    if (which == Coproduct::Stuffle) {
      if (a == Alphabet::X)
        throw std::invalid_argument("stuffle coproduct needs a Y alphabet");
      for (unsigned char j = 1; j < l; ++j)
        dl.add_term(Word(a, {j}), Word(a, {static_cast<unsigned char>(l - j)}),
                    rat(1));
    }
    out = PairPoly::mul(out, dl, 1 << 20);
  }
  return out;
}

}  // namespace pz
