#include "zhu/smith/smith_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace zhu::smith {

Word parse_word(std::string_view letters) {
  Word word;
  word.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'A': word.push_back(Generator::A); break;
      case 'B': word.push_back(Generator::B); break;
      case 'H': word.push_back(Generator::H); break;
      default: throw std::invalid_argument(std::string("word letter must be A, B or H, got '") + c + "'");
    }
  }
  return word;
}

// ---------------------------------------------------------------------------
// NcElement

NcElement::NcElement(const Rational& scalar) { add_term({}, scalar); }

NcElement NcElement::monomial(const NcMonomial& mono, const Rational& c) {
  NcElement e;
  e.add_term(mono, c);
  return e;
}

NcElement NcElement::generator(Generator g) {
  switch (g) {
    case Generator::A: return monomial({0, 0, 1});
    case Generator::B: return monomial({1, 0, 0});
    case Generator::H: return monomial({0, 1, 0});
  }
  throw std::logic_error("unknown generator");
}

NcElement NcElement::in_h(const Poly& p) {
  NcElement e;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) e.add_term({0, static_cast<unsigned>(i), 0}, p.coeffs()[i]);
  return e;
}

Rational NcElement::coefficient(const NcMonomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcElement::add_term(const NcMonomial& mono, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> NcElement::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [mono, c] : terms_) {
    if (!degree) degree = mono.degree();
    else if (*degree != mono.degree()) return std::nullopt;
  }
  return degree.value_or(0);
}

NcElement& NcElement::operator+=(const NcElement& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

NcElement& NcElement::operator-=(const NcElement& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

NcElement& NcElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const NcElement& e) {
  if (e.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [mono, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (mono.m) os << "*B^" << mono.m;
    if (mono.n) os << "*H^" << mono.n;
    if (mono.k) os << "*A^" << mono.k;
  }
  return os;
}

// ---------------------------------------------------------------------------
// SmithAlgebra

Poly companion_polynomial(const Poly& g) {
  if (g.is_zero()) return {};
  const auto d = static_cast<unsigned>(g.degree());
  std::vector<Rational> diffs;
  for (unsigned i = 0; i <= d; ++i) diffs.push_back(g(Rational(i)));
  Poly u;
  for (unsigned r = 0; r <= d; ++r) {
    // diffs[0] now holds the r-th forward difference of g at 0.
    u += binom_poly(r + 1) * (Rational(2) * diffs[0]);
    for (unsigned i = 0; i + 1 < diffs.size() - r; ++i) diffs[i] = diffs[i + 1] - diffs[i];
  }
  return u;
}

SmithAlgebra::SmithAlgebra(Poly g) : g_(std::move(g)), u_(companion_polynomial(g_)) {}

Poly h_sum(const SmithAlgebra& alg, unsigned j) {
  Poly total;
  for (unsigned i = 0; i <= j; ++i) total += poly_shift(alg.g(), Rational(-static_cast<long>(i)));
  return total;
}

// ---------------------------------------------------------------------------
// Multiplication
//
// Internally an element is grouped as sum over (m, k) of B^m P(H) A^k with P a
// polynomial, which turns the commutation rules into polynomial shifts.

namespace {

using Grouped = std::map<std::pair<unsigned, unsigned>, Poly>;

void accumulate(Grouped& out, unsigned m, unsigned k, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = out.try_emplace({m, k}, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) out.erase(it);
}

Grouped group(const NcElement& e) {
  Grouped out;
  for (const auto& [mono, c] : e.terms()) accumulate(out, mono.m, mono.k, Poly::monomial(c, mono.n));
  return out;
}

NcElement ungroup(const Grouped& g) {
  NcElement e;
  for (const auto& [mk, p] : g) {
    for (std::size_t n = 0; n < p.coeffs().size(); ++n) e.add_term({mk.first, static_cast<unsigned>(n), mk.second}, p.coeffs()[n]);
  }
  return e;
}

class HCache {
 public:
  explicit HCache(const SmithAlgebra& alg) : alg_(alg) {}
  const Poly& operator()(unsigned j) {
    while (values_.size() <= j) {
      const auto next = static_cast<long>(values_.size());
      Poly shifted = poly_shift(alg_.g(), Rational(-next));
      values_.push_back(values_.empty() ? shifted : values_.back() + shifted);
    }
    return values_[j];
  }

 private:
  const SmithAlgebra& alg_;
  std::vector<Poly> values_;
};

// A * B^m P(H) A^k = B^m P(H-1) A^{k+1} + B^{m-1} h_{m-1}(H) P(H) A^k
Grouped left_mul_a(const Grouped& x, HCache& h) {
  Grouped out;
  for (const auto& [mk, p] : x) {
    const auto [m, k] = mk;
    accumulate(out, m, k + 1, poly_shift(p, Rational(-1)));
    if (m >= 1) accumulate(out, m - 1, k, h(m - 1) * p);
  }
  return out;
}

// Q(H) * B^m P(H) A^k = B^m Q(H-m) P(H) A^k
Grouped left_mul_h_poly(const Grouped& x, const Poly& q) {
  Grouped out;
  for (const auto& [mk, p] : x) accumulate(out, mk.first, mk.second, poly_shift(q, Rational(-static_cast<long>(mk.first))) * p);
  return out;
}

}  // namespace

NcElement nc_mul(const SmithAlgebra& alg, const NcElement& a, const NcElement& b) {
  const Grouped gb = group(b);
  HCache h(alg);
  Grouped result;
  for (const auto& [mono, c] : a.terms()) {
    Grouped cur = gb;
    for (unsigned i = 0; i < mono.k; ++i) cur = left_mul_a(cur, h);
    cur = left_mul_h_poly(cur, Poly::monomial(c, mono.n));
    for (const auto& [mk, p] : cur) accumulate(result, mk.first + mono.m, mk.second, p);
  }
  return ungroup(result);
}

NcElement nc_pow(const SmithAlgebra& alg, const NcElement& a, unsigned exponent) {
  NcElement result(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result = nc_mul(alg, result, a);
  return result;
}

NcElement commutator(const SmithAlgebra& alg, const NcElement& a, const NcElement& b) {
  return nc_mul(alg, a, b) - nc_mul(alg, b, a);
}

NcElement omega(const SmithAlgebra& alg) {
  const NcElement a = NcElement::generator(Generator::A);
  const NcElement b = NcElement::generator(Generator::B);
  const Poly half_sum = (poly_shift(alg.u(), Rational(1)) + alg.u()) * Rational(Integer(1), Integer(2));
  return nc_mul(alg, a, b) + nc_mul(alg, b, a) + NcElement::in_h(half_sum);
}

bool is_central(const SmithAlgebra& alg, const NcElement& e) {
  for (Generator g : {Generator::A, Generator::B, Generator::H}) {
    if (!commutator(alg, e, NcElement::generator(g)).is_zero()) return false;
  }
  return true;
}

bool casimir_factorization_check(const SmithAlgebra& alg, unsigned r) {
  const NcElement a_pow = NcElement::monomial({0, 0, r + 1});
  const NcElement b_pow = NcElement::monomial({r + 1, 0, 0});
  const NcElement lhs = nc_mul(alg, a_pow, b_pow) * pow(Rational(2), r + 1);

  const NcElement casimir = omega(alg);
  NcElement rhs(Rational(1));
  for (unsigned i = 0; i <= r; ++i) {
    const NcElement factor = casimir - NcElement::in_h(poly_shift(alg.u(), Rational(-static_cast<long>(i))));
    rhs = nc_mul(alg, rhs, factor);
  }
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const NcElement& e) {
  Json out = Json::array();
  for (const auto& [mono, c] : e.terms()) out.push_back({{"m", mono.m}, {"n", mono.n}, {"k", mono.k}, {"c", to_json(c)}});
  return out;
}

NcElement nc_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element must be a JSON array of terms");
  NcElement e;
  for (const auto& t : j) {
    e.add_term({t.at("m").get<unsigned>(), t.at("n").get<unsigned>(), t.at("k").get<unsigned>()},
               rational_from_json(t.at("c")));
  }
  return e;
}

}  // namespace zhu::smith
