#include "zhu/exactmath/multipoly.hpp"

namespace zhu {

namespace {

void trim(MultiPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(unsigned index) {
  if (index == 0) throw std::invalid_argument("variables are numbered from 1");
  Exponents e(index, 0);
  e.back() = 1;
  MultiPoly p;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

unsigned MultiPoly::num_variables() const {
  unsigned n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, static_cast<unsigned>(e.size()));
  return n;
}

void MultiPoly::add_term(Exponents exponents, const Rational& c) {
  if (c.is_zero()) return;
  trim(exponents);
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] == 0) continue;
      term *= i < values.size() ? pow(values[i], e[i]) : Rational(0);
    }
    total += term;
  }
  return total;
}

Poly MultiPoly::substitute(const std::vector<Poly>& images) const {
  Poly total;
  for (const auto& [e, c] : terms_) {
    Poly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Poly base = i < images.size() ? images[i] : Poly();
      for (unsigned k = 0; k < e[i]; ++k) term *= base;
    }
    total += term;
  }
  return total;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os;
}

MultiPoly schur_poly(unsigned r) {
  std::vector<MultiPoly> p{MultiPoly(Rational(1))};
  for (unsigned s = 1; s <= r; ++s) {
    MultiPoly next;
    for (unsigned n = 1; n <= s; ++n) next += MultiPoly::variable(n) * p[s - n];
    p.push_back(next * Rational(Integer(1), Integer(s)));
  }
  return p[r];
}

Poly schur_specialize_alt(unsigned r) {
  std::vector<Poly> images;
  for (unsigned n = 1; n <= r; ++n) images.push_back(Poly::monomial(Rational(n % 2 == 1 ? 1 : -1), 1));
  return schur_poly(r).substitute(images);
}

}  // namespace zhu
