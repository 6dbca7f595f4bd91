#ifndef POLYZETA_COEFF_HPP
#define POLYZETA_COEFF_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polyzeta/rational.hpp"
#include "polyzeta/word.hpp"

namespace pz {

// Named symbols of the coefficient ring: gamma, zeta-symbols indexed by
// Lyndon words of either family, and the formal parameter t.
// Symbols are interned process-wide; a SymId is an index into the table.
enum class SymKind : uint8_t { Gamma, ZetaY, ZetaX, T };

using SymId = uint32_t;

struct SymbolInfo {
  SymKind kind;
  Word index;  // empty for Gamma and T
  int weight;  // gamma: 1, zY[l]: (l), zX[u]: |u|, t: 1
  std::string name;
};

SymId sym_gamma();
SymId sym_t();
SymId sym_zeta_y(const Word& lyndon_y);
SymId sym_zeta_x(const Word& lyndon_x);
const SymbolInfo& sym_info(SymId id);

// A monomial is a sorted exponent list; the empty list is 1.
struct Monomial {
  std::vector<std::pair<SymId, uint32_t>> factors;

  bool is_one() const { return factors.empty(); }
  int weight() const;
  uint32_t degree_of(SymId s) const;
  bool contains(SymId s) const { return degree_of(s) > 0; }

  bool operator==(const Monomial& o) const { return factors == o.factors; }
  bool operator<(const Monomial& o) const { return factors < o.factors; }
};

Monomial mono_of(SymId s, uint32_t e = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
// Removes s^e from m; e must not exceed the actual degree.
Monomial mono_div(const Monomial& m, SymId s, uint32_t e);

// Sparse multivariate polynomial over Q. Canonical: no zero coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Rat>;

  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(SymId s);
  static Poly monomial(const Monomial& m, const Rat& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Rat& c);
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // -1 when zero, otherwise the common weight; throws if inhomogeneous.
  int homogeneous_weight() const;
  bool depends_on(SymId s) const;

  // Replaces every occurrence of s by the polynomial value.
  Poly substitute(SymId s, const Poly& value) const;
  Poly evaluate(const std::function<Poly(SymId)>& value_of) const;

  std::string str() const;  // "3/2*zY[3] - zY[2 1]" style

 private:
  Terms terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

std::string mono_str(const Monomial& m);

}  // namespace pz

#endif
