#include "polyzeta/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pz {

namespace {

struct SymTable {
  std::vector<SymbolInfo> infos;
  std::unordered_map<std::string, SymId> by_name;

  SymId intern(SymKind kind, const Word& idx, int weight, std::string name) {
    auto it = by_name.find(name);
    if (it != by_name.end()) return it->second;
    SymId id = static_cast<SymId>(infos.size());
    infos.push_back({kind, idx, weight, name});
    by_name.emplace(std::move(name), id);
    return id;
  }
};

SymTable& table() {
  static SymTable t;
  return t;
}

}  // namespace

SymId sym_gamma() { return table().intern(SymKind::Gamma, Word(), 1, "g"); }
SymId sym_t() { return table().intern(SymKind::T, Word(), 1, "t"); }

SymId sym_zeta_y(const Word& l) {
  return table().intern(SymKind::ZetaY, l, l.weight(), "zY[" + l.text() + "]");
}

SymId sym_zeta_x(const Word& l) {
  return table().intern(SymKind::ZetaX, l, static_cast<int>(l.length()),
                        "zX[" + l.text() + "]");
}

const SymbolInfo& sym_info(SymId id) { return table().infos.at(id); }

int Monomial::weight() const {
  int w = 0;
  for (auto& [s, e] : factors) w += sym_info(s).weight * static_cast<int>(e);
  return w;
}

uint32_t Monomial::degree_of(SymId s) const {
  for (auto& [t, e] : factors)
    if (t == s) return e;
  return 0;
}

Monomial mono_of(SymId s, uint32_t e) {
  Monomial m;
  if (e) m.factors.emplace_back(s, e);
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first))
      m.factors.push_back(*ia++);
    else if (ia == a.factors.end() || ib->first < ia->first)
      m.factors.push_back(*ib++);
    else {
      m.factors.emplace_back(ia->first, ia->second + ib->second);
      ++ia, ++ib;
    }
  }
  return m;
}

Monomial mono_div(const Monomial& m, SymId s, uint32_t e) {
  Monomial out;
  bool found = false;
  for (auto& [t, d] : m.factors) {
    if (t == s) {
      found = true;
      if (d < e) throw std::invalid_argument("mono_div: exponent too small");
      if (d > e) out.factors.emplace_back(t, d - e);
    } else {
      out.factors.emplace_back(t, d);
    }
  }
  if (!found && e > 0) throw std::invalid_argument("mono_div: symbol absent");
  return out;
}

Poly::Poly(const Rat& c) {
  if (!pz::is_zero(c)) terms_.emplace(Monomial{}, c);
}

Poly::Poly(SymId s) { terms_.emplace(mono_of(s), rat(1)); }

Poly Poly::monomial(const Monomial& m, const Rat& c) {
  Poly p;
  if (!pz::is_zero(c)) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value of non-constant poly");
  return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (pz::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (pz::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  p += o;
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  p -= o;
  return p;
}

Poly Poly::operator-() const {
  Poly p;
  for (auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  Poly p;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) {
      Rat c = c1 * c2;
      p.add_term(mono_mul(m1, m2), c);
    }
  return p;
}

Poly& Poly::operator*=(const Rat& c) {
  if (pz::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator*(const Rat& c) const {
  Poly p = *this;
  p *= c;
  return p;
}

int Poly::homogeneous_weight() const {
  int w = -1;
  for (auto& [m, c] : terms_) {
    int mw = m.weight();
    if (w == -1)
      w = mw;
    else if (w != mw)
      throw std::logic_error("poly is not weight-homogeneous: " + str());
  }
  return w;
}

bool Poly::depends_on(SymId s) const {
  for (auto& [m, c] : terms_)
    if (m.contains(s)) return true;
  return false;
}

Poly Poly::substitute(SymId s, const Poly& value) const {
  Poly out;
  for (auto& [m, c] : terms_) {
    uint32_t e = m.degree_of(s);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    Poly rest = Poly::monomial(mono_div(m, s, e), c);
    for (uint32_t i = 0; i < e; ++i) rest = rest * value;
    out += rest;
  }
  return out;
}

Poly Poly::evaluate(const std::function<Poly(SymId)>& value_of) const {
  Poly out;
  for (auto& [m, c] : terms_) {
    Poly t(c);
    for (auto& [s, e] : m.factors) {
      Poly v = value_of(s);
      for (uint32_t i = 0; i < e; ++i) t = t * v;
    }
    out += t;
  }
  return out;
}

std::string mono_str(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, e] : m.factors) {
    if (!first) os << '*';
    first = false;
    os << sym_info(s).name;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rat a = c;
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
    if (m.is_one())
      os << rat_str(a);
    else if (a == 1)
      os << mono_str(m);
    else
      os << rat_str(a) << '*' << mono_str(m);
  }
  return os.str();
}

}  // namespace pz
