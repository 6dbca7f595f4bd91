#ifndef POLYZETA_NEGALOG_HPP
#define POLYZETA_NEGALOG_HPP

#include <utility>
#include <vector>

#include "polyzeta/rational.hpp"
#include "polyzeta/word.hpp"

namespace pz {

// Univariate polynomial with a declared basis:
//   Monomial  c[k] * u^k            with u = (1-z)^{-1}
//   Binomial  c[k] * C(n+k, k)
//   Star      c[k] * (k x1)^*       (star of the plane, Li-image u^k)
// The coefficient vector is shared by the three readings of one object:
// Li^-_w uses the same integers in the Monomial and Star bases, H^-_w uses
// them in the Binomial basis.
struct UPoly {
  enum class Basis { Monomial, Binomial, Star };
  Basis basis = Basis::Monomial;
  std::vector<Rat> c;

  int degree() const;
  Rat at(size_t k) const { return k < c.size() ? c[k] : Rat(0); }
  void trim();
  bool operator==(const UPoly& o) const;
  std::string str(const char* var = "u") const;
};

UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const UPoly& a, const Rat& s);

// Coefficients of Li^-_w(z) = sum_k p_k u^k for nonempty w over Y0; integer
// coefficients, degree (w)+|w|, valuation >= 1.
UPoly lineg_coeffs(const Word& w);

// H^-_w(n) = sum_{n>=n1>...>nr>0} n1^{s1}...nr^{sr}, exact.
Rat hneg_value(const Word& w, long n);
UPoly hneg_poly(const Word& w);  // binomial basis, same coefficients

// C^-_w = prod over nonempty suffixes v of 1/((v)+|v|);
// B^-_w = ((w)+|w|)! C^-_w, the leading coefficient of lineg_coeffs(w).
Rat c_minus(const Word& w);
Int b_minus(const Word& w);

// hat p (t) = sum p_k/k! t^k and check p (t) = sum k! p_k t^k.
std::pair<UPoly, UPoly> transforms(const UPoly& p);
UPoly exp_transform(const UPoly& p);      // p_k -> p_k / k!
UPoly inv_exp_transform(const UPoly& p);  // p_k -> k! p_k

// Regularized values: p(1) (finite part of Li^- at z->1) and hat p(1)
// (finite part of H^- at n->infinity, where (n+k choose k) regularizes to
// 1/Gamma(k+1) by the Weierstrass product).
Rat zeta_sh_neg(const Word& w);
Rat gamma_neg(const Word& w);

enum class StirlingKind { First, Second };

// Signed first kind fixed by (x)_k = sum_j S1(k,j) x^j; Second kind by the
// usual partition recurrence. S1(3,2) = -3 in this convention.
Int stirling(StirlingKind kind, unsigned k, unsigned j);
Int stirling_unsigned_first(unsigned k, unsigned j);

// R_w in the star basis {(k x1)^*}: its coefficient vector is exactly
// lineg_coeffs(w) since Li_{(k x1)^*} = (1-z)^{-k}.
UPoly r_word(const Word& w);

// R'_{y_k} = sum_i i! S2(k,i) (x1^* - 1)^{sh i}; R_{y_k} = x1^* sh R'_{y_k}.
UPoly r_prime_letter(unsigned k);         // star basis
UPoly r_letter_via_stirling(unsigned k);  // star basis; equals r_word(y_k)

// Star-basis polynomial of the pointwise product Li^-_{y_k} Li^-_{y_l};
// star-basis multiplication is (i x1)^* (j x1)^* = ((i+j) x1)^*, so this is
// the plain product of the u-polynomials.
UPoly hadamard_square_index(unsigned k, unsigned l);

// Reports whether the printed inversion formula
//   (k x1)^* = 1 + R_{y0} + sum_{j=2}^k S1(k,j)/(k-1)! R_{y_{j+1}}
// holds; the index pattern is dimensionally odd, so this is verified, never
// assumed.
bool printed_star_inversion_holds(unsigned k);

}  // namespace pz

#endif
