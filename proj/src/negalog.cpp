#include "polyzeta/negalog.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace pz {

int UPoly::degree() const {
  for (size_t k = c.size(); k-- > 0;)
    if (!is_zero(c[k])) return static_cast<int>(k);
  return -1;
}

void UPoly::trim() {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

bool UPoly::operator==(const UPoly& o) const {
  if (basis != o.basis) return false;
  size_t n = std::max(c.size(), o.c.size());
  for (size_t k = 0; k < n; ++k)
    if (at(k) != o.at(k)) return false;
  return true;
}

std::string UPoly::str(const char* var) const {
  if (degree() < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    Rat a = c[k];
    if (first) {
      if (sgn(a) < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    if (k == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.basis = a.basis;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      Rat t = a.c[i] * b.c[j];
      r.c[i + j] += t;
    }
  }
  r.trim();
  return r;
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.basis = a.basis;
  r.c.assign(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t k = 0; k < r.c.size(); ++k) {
    Rat t = a.at(k) + b.at(k);
    r.c[k] = t;
  }
  r.trim();
  return r;
}

UPoly upoly_scale(const UPoly& a, const Rat& s) {
  UPoly r = a;
  for (auto& v : r.c) v *= s;
  r.trim();
  return r;
}

namespace {

// theta0 = z d/dz acts on u-polynomials as (u^2 - u) d/du.
void apply_theta0(std::vector<Rat>& p) {
  std::vector<Rat> out(p.size() + 1, Rat(0));
  for (size_t k = 1; k < p.size(); ++k) {
    if (is_zero(p[k])) continue;
    Rat kk = rat(static_cast<long>(k));
    Rat t = p[k] * kk;
    out[k + 1] += t;
    out[k] -= t;
  }
  p = std::move(out);
}

// prepend y0: multiply by z/(1-z) = u - 1.
void apply_shift(std::vector<Rat>& p) {
  std::vector<Rat> out(p.size() + 1, Rat(0));
  for (size_t k = 0; k < p.size(); ++k) {
    out[k + 1] += p[k];
    out[k] -= p[k];
  }
  p = std::move(out);
}

}  // namespace

UPoly lineg_coeffs(const Word& w) {
  if (w.alphabet() == Alphabet::X)
    throw std::invalid_argument("lineg_coeffs expects a Y0/Y word");
  if (w.empty()) throw std::invalid_argument("lineg_coeffs: empty word");
  std::vector<Rat> p{rat(1)};
  for (size_t i = w.length(); i-- > 0;) {
    apply_shift(p);
    for (unsigned char s = 0; s < w.letter(i); ++s) apply_theta0(p);
  }
  UPoly out;
  out.basis = UPoly::Basis::Monomial;
  out.c = std::move(p);
  out.trim();
  return out;
}

Rat hneg_value(const Word& w, long n) {
  UPoly p = lineg_coeffs(w);
  Rat acc(0);
  for (size_t k = 0; k < p.c.size(); ++k) {
    if (is_zero(p.c[k])) continue;
    Rat t = p.c[k] * binomial_shifted(rat(n), static_cast<unsigned>(k));
    acc += t;
  }
  return acc;
}

UPoly hneg_poly(const Word& w) {
  UPoly p = lineg_coeffs(w);
  p.basis = UPoly::Basis::Binomial;
  return p;
}

Rat c_minus(const Word& w) {
  if (w.empty()) throw std::invalid_argument("c_minus: empty word");
  Rat acc(1);
  for (size_t i = 0; i < w.length(); ++i) {
    Word v = w.suffix(i);
    Rat d = rat(v.weight() + static_cast<long>(v.length()));
    acc /= d;
  }
  return acc;
}

Int b_minus(const Word& w) {
  Rat b = c_minus(w);
  unsigned d = static_cast<unsigned>(w.weight() + static_cast<int>(w.length()));
  b *= factorial(d);
  if (!is_integer(b)) throw std::logic_error("B^- is not integral");
  return b.get_num();
}

UPoly exp_transform(const UPoly& p) {
  UPoly r = p;
  for (size_t k = 0; k < r.c.size(); ++k) r.c[k] /= factorial(static_cast<unsigned>(k));
  return r;
}

UPoly inv_exp_transform(const UPoly& p) {
  UPoly r = p;
  for (size_t k = 0; k < r.c.size(); ++k) r.c[k] *= factorial(static_cast<unsigned>(k));
  return r;
}

std::pair<UPoly, UPoly> transforms(const UPoly& p) {
  if (p.basis != UPoly::Basis::Monomial)
    throw std::invalid_argument("transforms expect the monomial basis");
  return {exp_transform(p), inv_exp_transform(p)};
}

Rat zeta_sh_neg(const Word& w) {
  UPoly p = lineg_coeffs(w);
  Rat acc(0);
  for (auto& v : p.c) acc += v;
  return acc;
}

Rat gamma_neg(const Word& w) {
  UPoly p = exp_transform(lineg_coeffs(w));
  Rat acc(0);
  for (auto& v : p.c) acc += v;
  return acc;
}

Int stirling(StirlingKind kind, unsigned k, unsigned j) {
  if (j > k) return Int(0);
  static std::map<std::pair<unsigned, unsigned>, Int> s1, s2;
  auto& memo = kind == StirlingKind::First ? s1 : s2;
  auto it = memo.find({k, j});
  if (it != memo.end()) return it->second;
  Int r;
  if (k == 0)
    r = (j == 0) ? 1 : 0;
  else if (j == 0)
    r = 0;
  else if (kind == StirlingKind::Second)
    r = Int(j) * stirling(kind, k - 1, j) + stirling(kind, k - 1, j - 1);
  else
    r = stirling(kind, k - 1, j - 1) - Int(k - 1) * stirling(kind, k - 1, j);
  memo.emplace(std::make_pair(k, j), r);
  return r;
}

Int stirling_unsigned_first(unsigned k, unsigned j) {
  Int s = stirling(StirlingKind::First, k, j);
  return abs(s);
}

UPoly r_word(const Word& w) {
  UPoly p = lineg_coeffs(w);
  p.basis = UPoly::Basis::Star;
  return p;
}

namespace {

// (x1^* - 1)^{sh i} in star coefficients: sum_j C(i,j) (-1)^{i-j} (j x1)^*.
UPoly star_minus_one_power(unsigned i) {
  UPoly r;
  r.basis = UPoly::Basis::Star;
  r.c.assign(i + 1, Rat(0));
  for (unsigned j = 0; j <= i; ++j) {
    Rat c(binomial(i, j));
    if ((i - j) % 2) c = -c;
    r.c[j] = c;
  }
  return r;
}

// x1^* sh (-): shifts every star index by one.
UPoly star_shift(const UPoly& p) {
  UPoly r;
  r.basis = UPoly::Basis::Star;
  r.c.assign(p.c.size() + 1, Rat(0));
  for (size_t k = 0; k < p.c.size(); ++k) r.c[k + 1] = p.c[k];
  r.trim();
  return r;
}

}  // namespace

UPoly r_prime_letter(unsigned k) {
  UPoly acc;
  acc.basis = UPoly::Basis::Star;
  for (unsigned i = 0; i <= k; ++i) {
    Int s2 = stirling(StirlingKind::Second, k, i);
    if (s2 == 0) continue;
    Rat c = Rat(s2) * factorial(i);
    acc = upoly_add(acc, upoly_scale(star_minus_one_power(i), c));
  }
  return acc;
}

UPoly r_letter_via_stirling(unsigned k) { return star_shift(r_prime_letter(k)); }

UPoly hadamard_square_index(unsigned k, unsigned l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("hadamard_square_index needs k, l >= 1");
  UPoly a = lineg_coeffs(Word(Alphabet::Y, {static_cast<unsigned char>(k)}));
  UPoly b = lineg_coeffs(Word(Alphabet::Y, {static_cast<unsigned char>(l)}));
  UPoly r = upoly_mul(a, b);
  r.basis = UPoly::Basis::Star;
  return r;
}

bool printed_star_inversion_holds(unsigned k) {
  UPoly lhs;
  lhs.basis = UPoly::Basis::Star;
  lhs.c.assign(k + 1, Rat(0));
  lhs.c[k] = rat(1);
  UPoly rhs;
  rhs.basis = UPoly::Basis::Star;
  rhs.c.assign(2, Rat(0));
  rhs.c[0] = rat(0);  // 1 + R_{y0} = x1^*
  rhs.c[1] = rat(1);
  for (unsigned j = 2; j <= k; ++j) {
    Rat c = Rat(stirling(StirlingKind::First, k, j)) / factorial(k - 1);
    if (is_zero(c)) continue;
    rhs = upoly_add(rhs, upoly_scale(r_word(Word(Alphabet::Y, {static_cast<unsigned char>(j + 1)})), c));
  }
  return lhs == rhs;
}

}  // namespace pz
