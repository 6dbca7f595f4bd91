#ifndef POLYZETA_BASES_HPP
#define POLYZETA_BASES_HPP

#include <map>
#include <optional>
#include <vector>

#include "polyzeta/ncpoly.hpp"

namespace pz {

// Eulerian projector onto the primitives of the quasi-shuffle bialgebra:
//   pi1(w) = w + sum_{k>=2} ((-1)^{k-1}/k) sum <w|u1 qsh ... qsh uk> u1...uk
// The outer sum runs to the weight of w (tuples of k nonempty words exist
// for every k <= (w), and collision terms make k > |w| contribute).
NCPoly<Rat> eulerian_pi1(const Word& w);

// Closed form on letters: the coefficient of the composition word
// y_{j1}...y_{jk} of s is (-1)^{k-1}/k.
NCPoly<Rat> eulerian_pi1_letter(Alphabet a, unsigned s);

enum class BasisKind { ShuffleX, ShuffleY, StuffleY };

Alphabet basis_alphabet(BasisKind k);

// Homogeneous dual bases {P_w}/{S_w} (shuffle kinds) or {Pi_w}/{Sigma_w}
// (stuffle kind) for all words of grade <= bound, dual under the word
// pairing. Lower basis elements at Lyndon words are Lie/primitive elements.
struct DualBasisPair {
  BasisKind kind = BasisKind::ShuffleX;
  int bound = 0;
  std::map<Word, NCPoly<Rat>> lower;  // P_w or Pi_w
  std::map<Word, NCPoly<Rat>> upper;  // S_w or Sigma_w
};

DualBasisPair pbw_basis(BasisKind kind, int bound);

struct DualityReport {
  bool ok = true;
  Word u, v;   // first violating pair when !ok
  Rat value;   // the offending pairing value
};

DualityReport check_duality(const DualBasisPair& pair);

// Verifies the diagonal-series factorization
//   prod^{decreasing}_{l Lyndon} exp(upper_l (x) lower_l) = sum_w w (x) w
// truncated at the grade bound.
bool mrs_check(BasisKind kind, int bound);

// Concatenation endomorphism y_k -> pi1(y_k), extended linearly.
NCPoly<Rat> phi_pi1(const NCPoly<Rat>& p);

// ---- group-like series over a coefficient ring C ----

// c_l = <S|upper_l> for Lyndon l of grade <= bound (and grade >= 1).
template <class C>
std::map<Word, C> coordinates_of(const TruncatedSeries<C>& s,
                                 const DualBasisPair& pair) {
  std::map<Word, C> out;
  for (auto& l : lyndon_words(basis_alphabet(pair.kind),
                               std::min(s.bound, pair.bound))) {
    C c = pairing(s.poly, s.bound, pair.upper.at(l));
    if (!coeff_is_zero(c)) out.emplace(l, c);
  }
  return out;
}

// prod^{decreasing Lyndon order} exp_conc(c_l lower_l), truncated.
template <class C>
TruncatedSeries<C> assemble_group_like(const std::map<Word, C>& coords,
                                       const DualBasisPair& pair, int bound) {
  Alphabet a = basis_alphabet(pair.kind);
  TruncatedSeries<C> s;
  s.alpha = a;
  s.bound = bound;
  s.poly = NCPoly<C>::unit(a);
  auto lyn = lyndon_words(a, bound);
  for (auto it = lyn.rbegin(); it != lyn.rend(); ++it) {
    auto c = coords.find(*it);
    if (c == coords.end() || coeff_is_zero(c->second)) continue;
    NCPoly<C> arg;
    for (auto& [w, k] : pair.lower.at(*it).terms()) {
      C v = c->second;
      v = v * C(k);
      arg.add_term(w, v);
    }
    s.poly = conc(s.poly, exp_conc(arg, a, bound), bound);
  }
  return s;
}

// ---- slice machinery shared with the relation miner ----

// Caches the stuffle-side Lie basis elements Pi_l (Lyndon l, weight <= bound)
// and produces, per weight slice, the full {Pi_w} row set and the dual
// {Sigma_w} columns via a unitriangular solve.
class StuffleSlice {
 public:
  // words of the slice sorted ascending in the paper order
  std::vector<Word> words;
  // rows[i]: sparse row of Pi_{words[i]} as (word-index, coeff), diag incl.
  std::vector<std::vector<std::pair<int, Rat>>> rows;

  static StuffleSlice build(int weight,
                            const std::map<Word, NCPoly<Rat>>& pi_lyndon);

  int index_of(const Word& w) const;

  // Solves <Sigma_l | Pi_w> = delta for the column of l.
  NCPoly<Rat> sigma(const Word& l) const;

 private:
  std::map<Word, int> index_;
  // col[j]: entries (i, M[i][j]) with i < j (strictly above the diagonal).
  std::vector<std::vector<std::pair<int, Rat>>> cols_;
};

// Pi_l for every Lyndon Y-word of weight <= bound.
std::map<Word, NCPoly<Rat>> stuffle_lie_basis(int bound);

// P_l for every Lyndon word of the shuffle kind, grade <= bound.
std::map<Word, NCPoly<Rat>> shuffle_lie_basis(BasisKind kind, int bound);

// P_w / Pi_w for an arbitrary word from the Lyndon store (concatenation
// along the decreasing Lyndon factorization).
NCPoly<Rat> pbw_lower_of_word(const Word& w,
                              const std::map<Word, NCPoly<Rat>>& lie_basis);

// S_w of the shuffle kinds (recursive construction; exact dual of P_w).
NCPoly<Rat> shuffle_upper_of_word(const Word& w);

}  // namespace pz

#endif
