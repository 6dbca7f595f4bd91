#ifndef POLYZETA_LYNDON_HPP
#define POLYZETA_LYNDON_HPP

#include <utility>
#include <vector>

#include "polyzeta/word.hpp"

namespace pz {

// w is Lyndon iff it is nonempty and strictly smaller than every proper
// nonempty suffix (letter order of the paper: x0 < x1, y1 > y2 > ...).
bool is_lyndon(const Word& w);

// All Lyndon words of grade <= bound, sorted ascending by word_cmp.
// For Y the bound is a weight bound (the letter set {y1..y_bound} is then
// finite); X uses length. Y0 is rejected: y0 has grade 0 and the set of
// bounded-grade words over Y0 is infinite.
std::vector<Word> lyndon_words(Alphabet a, int bound);
std::vector<Word> lyndon_words_of_grade(Alphabet a, int grade);

// Standard factorization l = l1 l2 with l2 the longest proper Lyndon right
// factor. Requires l Lyndon of length >= 2.
std::pair<Word, Word> standard_factorization(const Word& l);

// Chen-Fox-Lyndon: unique factorization w = l1^i1 ... lk^ik with
// l1 > ... > lk Lyndon. Returned factors are strictly decreasing.
std::vector<std::pair<Word, int>> lyndon_factorization(const Word& w);

}  // namespace pz

#endif
