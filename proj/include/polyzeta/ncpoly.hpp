#ifndef POLYZETA_NCPOLY_HPP
#define POLYZETA_NCPOLY_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "polyzeta/coeff.hpp"
#include "polyzeta/lyndon.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/word.hpp"

namespace pz {

inline bool coeff_is_zero(const Rat& c) { return is_zero(c); }
inline bool coeff_is_zero(const Poly& c) { return c.is_zero(); }

template <class C>
C coeff_one();
template <>
inline Rat coeff_one<Rat>() { return Rat(1); }
template <>
inline Poly coeff_one<Poly>() { return Poly(rat(1)); }

// Noncommutative polynomial: finite Word -> C map with no zero entries.
// All words must share one alphabet (checked on mixing operations).
// Doubles as a truncated series when paired with a grade bound; products
// take an optional bound and drop words of grade > bound.
template <class C>
class NCPoly {
 public:
  using Map = std::map<Word, C>;

  NCPoly() = default;
  static NCPoly unit(Alphabet a) {
    NCPoly p;
    p.add_term(Word(a), coeff_one<C>());
    return p;
  }
  static NCPoly of_word(const Word& w, C c = coeff_one<C>()) {
    NCPoly p;
    p.add_term(w, std::move(c));
    return p;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  C coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(const Word& w, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) {
      C neg = o.coeff(w);
      neg = -std::move(neg);
      add_term(w, neg);
    }
    return *this;
  }
  NCPoly operator+(const NCPoly& o) const {
    NCPoly p = *this;
    p += o;
    return p;
  }
  NCPoly operator-(const NCPoly& o) const {
    NCPoly p = *this;
    p -= o;
    return p;
  }
  NCPoly operator-() const {
    NCPoly p;
    for (auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
  }
  NCPoly operator*(const C& c) const {
    NCPoly p;
    for (auto& [w, v] : terms_) {
      C prod = v;
      prod = prod * c;
      p.add_term(w, prod);
    }
    return p;
  }
  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  int max_grade() const {
    int g = 0;
    for (auto& [w, c] : terms_) g = std::max(g, w.grade());
    return g;
  }

  NCPoly truncated(int bound) const {
    NCPoly p;
    for (auto& [w, c] : terms_)
      if (w.grade() <= bound) p.terms_.emplace(w, c);
    return p;
  }

 private:
  Map terms_;
};

template <class C>
Alphabet poly_alphabet(const NCPoly<C>& p, Alphabet fallback) {
  return p.is_zero() ? fallback : p.terms().begin()->first.alphabet();
}

template <class C>
void check_same_alphabet(const NCPoly<C>& a, const NCPoly<C>& b) {
  if (!a.is_zero() && !b.is_zero() &&
      a.terms().begin()->first.alphabet() != b.terms().begin()->first.alphabet())
    throw std::invalid_argument("alphabet mismatch");
}

// bound < 0 means no truncation.
template <class C>
NCPoly<C> conc(const NCPoly<C>& a, const NCPoly<C>& b, int bound = -1) {
  check_same_alphabet(a, b);
  NCPoly<C> p;
  for (auto& [u, cu] : a.terms()) {
    int gu = u.grade();
    if (bound >= 0 && gu > bound) continue;
    for (auto& [v, cv] : b.terms()) {
      if (bound >= 0 && gu + v.grade() > bound) continue;
      C c = cu;
      c = c * cv;
      p.add_term(concat(u, v), c);
    }
  }
  return p;
}

// Word-level shuffle: x u sh y v = x(u sh yv) + y(xu sh v).
NCPoly<Rat> shuffle_words(const Word& u, const Word& v);
// Word-level quasi-shuffle with the collision term y_{i+j}(u qsh v).
NCPoly<Rat> stuffle_words(const Word& u, const Word& v);

template <class C>
NCPoly<C> shuffle(const NCPoly<C>& a, const NCPoly<C>& b, int bound = -1) {
  check_same_alphabet(a, b);
  NCPoly<C> p;
  for (auto& [u, cu] : a.terms())
    for (auto& [v, cv] : b.terms()) {
      if (bound >= 0 && u.grade() + v.grade() > bound) continue;
      C c = cu;
      c = c * cv;
      for (auto& [w, k] : shuffle_words(u, v).terms()) {
        C t = c;
        t = t * C(k);
        p.add_term(w, t);
      }
    }
  return p;
}

template <class C>
NCPoly<C> stuffle(const NCPoly<C>& a, const NCPoly<C>& b, int bound = -1) {
  check_same_alphabet(a, b);
  if (poly_alphabet(a, Alphabet::Y) == Alphabet::X ||
      poly_alphabet(b, Alphabet::Y) == Alphabet::X)
    throw std::invalid_argument("stuffle is defined on Y/Y0 alphabets only");
  NCPoly<C> p;
  for (auto& [u, cu] : a.terms())
    for (auto& [v, cv] : b.terms()) {
      if (bound >= 0 && u.grade() + v.grade() > bound) continue;
      C c = cu;
      c = c * cv;
      for (auto& [w, k] : stuffle_words(u, v).terms()) {
        if (bound >= 0 && w.grade() > bound) continue;
        C t = c;
        t = t * C(k);
        p.add_term(w, t);
      }
    }
  return p;
}

// <T|P> = sum_w <T|w><P|w>. Throws when P reaches beyond the stated bound
// of T (information loss).
template <class C>
C pairing(const NCPoly<C>& series, int series_bound, const NCPoly<Rat>& poly) {
  C acc{};
  for (auto& [w, c] : poly.terms()) {
    if (w.grade() > series_bound)
      throw std::out_of_range("pairing: polynomial exceeds truncation bound");
    C t = series.coeff(w);
    t = t * C(c);
    acc += t;
  }
  return acc;
}

// Truncated exponential in the concatenation algebra; requires <S|1> = 0.
template <class C>
NCPoly<C> exp_conc(const NCPoly<C>& s, Alphabet a, int bound) {
  if (!coeff_is_zero(s.coeff(Word(a))))
    throw std::invalid_argument("exp_conc: nonzero constant term");
  NCPoly<C> acc = NCPoly<C>::unit(a);
  NCPoly<C> pw = NCPoly<C>::unit(a);
  for (int k = 1; k <= bound; ++k) {
    pw = conc(pw, s, bound);
    if (pw.is_zero()) break;
    acc += pw * C(rat(1, 1) / factorial(static_cast<unsigned>(k)));
  }
  return acc;
}

// Truncated logarithm; requires <S|1> = 1.
template <class C>
NCPoly<C> log_conc(const NCPoly<C>& s, Alphabet a, int bound) {
  C c0 = s.coeff(Word(a));
  C one = coeff_one<C>();
  one = -one;
  c0 += one;
  if (!coeff_is_zero(c0)) throw std::invalid_argument("log_conc: constant term != 1");
  NCPoly<C> x = s;
  x.add_term(Word(a), -coeff_one<C>());
  NCPoly<C> acc;
  NCPoly<C> pw = NCPoly<C>::unit(a);
  for (int k = 1; k <= bound; ++k) {
    pw = conc(pw, x, bound);
    if (pw.is_zero()) break;
    Rat c = rat((k % 2) ? 1 : -1, k);
    acc += pw * C(c);
  }
  return acc;
}

// ---- tensor pairs (for coproducts and the MRS identity) ----

using PairWord = std::pair<Word, Word>;

class PairPoly {
 public:
  using Map = std::map<PairWord, Rat>;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& l, const Word& r, const Rat& c) {
    if (is_zero_rat(c)) return;
    auto [it, inserted] = terms_.emplace(PairWord{l, r}, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_rat(it->second)) terms_.erase(it);
    }
  }

  Rat coeff(const Word& l, const Word& r) const {
    auto it = terms_.find({l, r});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  PairPoly& operator+=(const PairPoly& o) {
    for (auto& [p, c] : o.terms_) add_term(p.first, p.second, c);
    return *this;
  }
  PairPoly operator-(const PairPoly& o) const {
    PairPoly r = *this;
    for (auto& [p, c] : o.terms_) r.add_term(p.first, p.second, -c);
    return r;
  }
  PairPoly operator*(const Rat& c) const {
    PairPoly r;
    for (auto& [p, v] : terms_) {
      Rat t = v * c;
      r.add_term(p.first, p.second, t);
    }
    return r;
  }
  bool operator==(const PairPoly& o) const { return terms_ == o.terms_; }

  // Componentwise concatenation product, truncating each side at bound.
  static PairPoly mul(const PairPoly& a, const PairPoly& b, int bound);

 private:
  static bool is_zero_rat(const Rat& c) { return sgn(c) == 0; }
  Map terms_;
};

enum class Coproduct { Conc, Shuffle, Stuffle };

// Coproduct image of a single word. Delta_conc splits; Delta_sh / Delta_qsh
// act on letters and extend multiplicatively over concatenation.
PairPoly coproduct_word(const Word& w, Coproduct which);

template <class C>
struct TruncatedSeries {
  NCPoly<C> poly;
  Alphabet alpha = Alphabet::X;
  int bound = 0;

  C coeff(const Word& w) const { return poly.coeff(w); }
};

// Character test: <S|u*v> = <S|u><S|v> for all pairs of nonempty words with
// grade(u)+grade(v) <= bound, plus <S|1> = 1. Equivalent to group-likeness
// of the truncated series for the corresponding coproduct.
template <class C>
bool is_group_like(const TruncatedSeries<C>& s, Coproduct product) {
  if (product == Coproduct::Conc)
    throw std::invalid_argument("group-like test supports shuffle/stuffle products");
  C one = s.coeff(Word(s.alpha));
  C e = coeff_one<C>();
  e = -e;
  e += one;
  if (!coeff_is_zero(e)) return false;
  for (int gu = 1; gu + 1 <= s.bound; ++gu)
    for (auto& u : all_words_of_grade(s.alpha, gu))
      for (int gv = 1; gu + gv <= s.bound; ++gv)
        for (auto& v : all_words_of_grade(s.alpha, gv)) {
          NCPoly<Rat> uv = product == Coproduct::Shuffle ? shuffle_words(u, v)
                                                         : stuffle_words(u, v);
          C lhs{};
          for (auto& [w, k] : uv.terms()) {
            C t = s.coeff(w);
            t = t * C(k);
            lhs += t;
          }
          C rhs = s.coeff(u);
          rhs = rhs * s.coeff(v);
          rhs = -rhs;
          lhs += rhs;
          if (!coeff_is_zero(lhs)) return false;
        }
  return true;
}

}  // namespace pz

#endif
