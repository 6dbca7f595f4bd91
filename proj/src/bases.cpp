#include "polyzeta/bases.hpp"

#include <algorithm>
#include <stdexcept>

namespace pz {

namespace {

// Enumerates tuples (u1,...,uk) of nonempty Y-words with total weight W,
// carrying the running quasi-shuffle product restricted to weight-W words.
// At each completed tuple the coefficient <w|u1 qsh ... qsh uk> is read off.
void pi1_tuples(const Word& w, int remaining, int k, const NCPoly<Rat>& partial,
                const Word& prefix, NCPoly<Rat>& out) {
  int total = w.weight();
  if (remaining == 0) {
    if (k < 2) return;
    Rat c = partial.coeff(w);
    if (is_zero(c)) return;
    Rat f = rat((k % 2) ? 1 : -1, k);
    c *= f;
    out.add_term(prefix, c);
    return;
  }
  for (int g = 1; g <= remaining; ++g)
    for (auto& u : all_words_of_grade(w.alphabet(), g)) {
      NCPoly<Rat> next = (k == 0) ? NCPoly<Rat>::of_word(u)
                                  : stuffle(partial, NCPoly<Rat>::of_word(u), total);
      // Only weight-(total) terms can ever match w.
      pi1_tuples(w, remaining - g, k + 1, next, concat(prefix, u), out);
    }
}

}  // namespace

NCPoly<Rat> eulerian_pi1_letter(Alphabet a, unsigned s) {
  if (a == Alphabet::X) throw std::invalid_argument("pi1 lives on Y alphabets");
  NCPoly<Rat> out;
  // compositions of s; (j1,...,jk) carries (-1)^{k-1}/k
  struct Frame {
    Word::Letters comp;
    unsigned left;
  };
  std::vector<Frame> stack{{Word::Letters(), s}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.left == 0) {
      size_t k = f.comp.size();
      out.add_term(Word(a, f.comp), rat((k % 2) ? 1 : -1, static_cast<long>(k)));
      continue;
    }
    for (unsigned j = 1; j <= f.left; ++j) {
      Frame g = f;
      g.comp.push_back(static_cast<unsigned char>(j));
      g.left -= j;
      stack.push_back(std::move(g));
    }
  }
  return out;
}

NCPoly<Rat> eulerian_pi1(const Word& w) {
  if (w.alphabet() == Alphabet::X)
    throw std::invalid_argument("pi1 lives on Y alphabets");
  if (w.empty()) return NCPoly<Rat>();
  if (w.length() == 1) return eulerian_pi1_letter(w.alphabet(), w.letter(0));
  NCPoly<Rat> out = NCPoly<Rat>::of_word(w);
  NCPoly<Rat> unit;
  pi1_tuples(w, w.weight(), 0, unit, Word(w.alphabet()), out);
  return out;
}

Alphabet basis_alphabet(BasisKind k) {
  return k == BasisKind::ShuffleX ? Alphabet::X : Alphabet::Y;
}

std::map<Word, NCPoly<Rat>> stuffle_lie_basis(int bound) {
  std::map<Word, NCPoly<Rat>> lie;
  for (auto& l : lyndon_words(Alphabet::Y, bound)) {
    if (l.length() == 1) {
      lie.emplace(l, eulerian_pi1_letter(Alphabet::Y, l.letter(0)));
    } else {
      auto [l1, l2] = standard_factorization(l);
      const auto& a = lie.at(l1);
      const auto& b = lie.at(l2);
      lie.emplace(l, conc(a, b) - conc(b, a));
    }
  }
  return lie;
}

std::map<Word, NCPoly<Rat>> shuffle_lie_basis(BasisKind kind, int bound) {
  std::map<Word, NCPoly<Rat>> lie;
  for (auto& l : lyndon_words(basis_alphabet(kind), bound)) {
    if (l.length() == 1) {
      lie.emplace(l, NCPoly<Rat>::of_word(l));
    } else {
      auto [l1, l2] = standard_factorization(l);
      const auto& a = lie.at(l1);
      const auto& b = lie.at(l2);
      lie.emplace(l, conc(a, b) - conc(b, a));
    }
  }
  return lie;
}

NCPoly<Rat> pbw_lower_of_word(const Word& w,
                              const std::map<Word, NCPoly<Rat>>& lie_basis) {
  NCPoly<Rat> acc = NCPoly<Rat>::unit(w.alphabet());
  for (auto& [l, mult] : lyndon_factorization(w)) {
    const auto& pl = lie_basis.at(l);
    for (int i = 0; i < mult; ++i) acc = conc(acc, pl);
  }
  return acc;
}

NCPoly<Rat> shuffle_upper_of_word(const Word& w) {
  if (w.empty()) return NCPoly<Rat>::unit(w.alphabet());
  if (w.length() == 1) return NCPoly<Rat>::of_word(w);
  if (is_lyndon(w)) {
    // S_l = y S_{l'} for l = y l'
    NCPoly<Rat> rest = shuffle_upper_of_word(w.suffix(1));
    return conc(NCPoly<Rat>::of_word(w.prefix(1)), rest);
  }
  NCPoly<Rat> acc = NCPoly<Rat>::unit(w.alphabet());
  for (auto& [l, mult] : lyndon_factorization(w)) {
    NCPoly<Rat> sl = shuffle_upper_of_word(l);
    NCPoly<Rat> pw = acc;
    for (int i = 0; i < mult; ++i) pw = shuffle(pw, sl);
    acc = pw * (rat(1) / factorial(static_cast<unsigned>(mult)));
  }
  return acc;
}

StuffleSlice StuffleSlice::build(int weight,
                                 const std::map<Word, NCPoly<Rat>>& pi_lyndon) {
  StuffleSlice s;
  s.words = all_words_of_grade(Alphabet::Y, weight);
  std::sort(s.words.begin(), s.words.end(), word_less);
  for (size_t i = 0; i < s.words.size(); ++i)
    s.index_.emplace(s.words[i], static_cast<int>(i));
  s.rows.resize(s.words.size());
  s.cols_.resize(s.words.size());
  for (size_t i = 0; i < s.words.size(); ++i) {
    NCPoly<Rat> pi = pbw_lower_of_word(s.words[i], pi_lyndon);
    auto& row = s.rows[i];
    for (auto& [v, c] : pi.terms()) {
      int j = s.index_.at(v);
      if (j < static_cast<int>(i))
        throw std::logic_error("Pi_w is not unitriangular as expected");
      row.emplace_back(j, c);
      if (j > static_cast<int>(i)) s.cols_[j].emplace_back(static_cast<int>(i), c);
    }
  }
  return s;
}

int StuffleSlice::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("word not in slice");
  return it->second;
}

NCPoly<Rat> StuffleSlice::sigma(const Word& l) const {
  // Back-substitution sweep on the unitriangular system M s = e_l.
  int li = index_of(l);
  std::map<int, Rat, std::greater<int>> s;  // processed descending
  s.emplace(li, rat(1));
  NCPoly<Rat> out;
  for (auto it = s.begin(); it != s.end(); ++it) {
    int j = it->first;
    const Rat& sv = it->second;
    if (is_zero(sv)) continue;
    out.add_term(words[j], sv);
    for (auto& [i, c] : cols_[j]) {
      Rat d = c * sv;
      auto [pos, inserted] = s.emplace(i, -d);
      if (!inserted) pos->second -= d;
    }
  }
  return out;
}

DualBasisPair pbw_basis(BasisKind kind, int bound) {
  if (bound < 1) throw std::invalid_argument("pbw_basis: bound must be >= 1");
  DualBasisPair pair;
  pair.kind = kind;
  pair.bound = bound;
  Alphabet a = basis_alphabet(kind);
  auto lie = kind == BasisKind::StuffleY ? stuffle_lie_basis(bound)
                                         : shuffle_lie_basis(kind, bound);
  for (int g = 0; g <= bound; ++g) {
    std::optional<StuffleSlice> slice;
    if (kind == BasisKind::StuffleY && g >= 1)
      slice = StuffleSlice::build(g, lie);
    for (auto& w : all_words_of_grade(a, g)) {
      pair.lower.emplace(w, pbw_lower_of_word(w, lie));
      if (kind == BasisKind::StuffleY)
        pair.upper.emplace(w, g == 0 ? NCPoly<Rat>::unit(a) : slice->sigma(w));
      else
        pair.upper.emplace(w, shuffle_upper_of_word(w));
    }
  }
  return pair;
}

DualityReport check_duality(const DualBasisPair& pair) {
  DualityReport r;
  for (auto& [u, su] : pair.upper)
    for (auto& [v, pv] : pair.lower) {
      if (u.grade() != v.grade()) continue;  // homogeneous bases
      Rat val(0);
      for (auto& [w, c] : su.terms()) {
        Rat t = c * pv.coeff(w);
        val += t;
      }
      Rat expect = rat(u == v ? 1 : 0);
      if (val != expect) {
        r.ok = false;
        r.u = u;
        r.v = v;
        r.value = val;
        return r;
      }
    }
  return r;
}

bool mrs_check(BasisKind kind, int bound) {
  DualBasisPair pair = pbw_basis(kind, bound);
  Alphabet a = basis_alphabet(kind);
  PairPoly acc;
  acc.add_term(Word(a), Word(a), rat(1));
  auto lyn = lyndon_words(a, bound);
  for (auto it = lyn.rbegin(); it != lyn.rend(); ++it) {
    const auto& s = pair.upper.at(*it);
    const auto& p = pair.lower.at(*it);
    PairPoly sp;
    for (auto& [u, cu] : s.terms())
      for (auto& [v, cv] : p.terms()) {
        Rat c = cu * cv;
        sp.add_term(u, v, c);
      }
    PairPoly factor;
    factor.add_term(Word(a), Word(a), rat(1));
    PairPoly pw = factor;
    for (int k = 1; k * it->grade() <= bound; ++k) {
      pw = PairPoly::mul(pw, sp, bound);
      if (pw.is_zero()) break;
      factor += pw * (rat(1) / factorial(static_cast<unsigned>(k)));
    }
    acc = PairPoly::mul(acc, factor, bound);
  }
  PairPoly diag;
  for (int g = 0; g <= bound; ++g)
    for (auto& w : all_words_of_grade(a, g)) diag.add_term(w, w, rat(1));
  return acc == diag;
}

NCPoly<Rat> phi_pi1(const NCPoly<Rat>& p) {
  NCPoly<Rat> out;
  for (auto& [w, c] : p.terms()) {
    NCPoly<Rat> img = NCPoly<Rat>::unit(w.alphabet());
    for (size_t i = 0; i < w.length(); ++i)
      img = conc(img, eulerian_pi1_letter(w.alphabet(), w.letter(i)));
    out += img * c;
  }
  return out;
}

}  // namespace pz
