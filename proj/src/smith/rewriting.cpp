#include <optional>
#include <stdexcept>

#include "zhu/smith/smith_algebra.hpp"

namespace zhu::smith {

namespace {

// PBW order: B < H < A.
int rank(Generator g) {
  switch (g) {
    case Generator::B: return 0;
    case Generator::H: return 1;
    case Generator::A: return 2;
  }
  return -1;
}

bool offending(Generator left, Generator right) { return rank(left) > rank(right); }

std::optional<std::size_t> find_offending(std::span<const Generator> word, RewriteStrategy strategy) {
  if (word.size() < 2) return std::nullopt;
  if (strategy == RewriteStrategy::LeftmostFirst) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (offending(word[i], word[i + 1])) return i;
  } else {
    for (std::size_t i = word.size() - 1; i-- > 0;)
      if (offending(word[i], word[i + 1])) return i;
  }
  return std::nullopt;
}

Word splice(std::span<const Generator> word, std::size_t position, std::initializer_list<Generator> middle,
            std::size_t extra_h = 0) {
  Word out(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), middle);
  out.insert(out.end(), extra_h, Generator::H);
  out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(position + 2), word.end());
  return out;
}

void add(std::map<Word, Rational>& combo, Word w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = combo.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) combo.erase(it);
}

NcMonomial as_monomial(const Word& w) {
  NcMonomial mono;
  for (Generator g : w) {
    switch (g) {
      case Generator::B: ++mono.m; break;
      case Generator::H: ++mono.n; break;
      case Generator::A: ++mono.k; break;
    }
  }
  return mono;
}

}  // namespace

std::map<Word, Rational> rewrite_at(const SmithAlgebra& alg, std::span<const Generator> word, std::size_t position) {
  if (position + 1 >= word.size() || !offending(word[position], word[position + 1])) {
    throw std::invalid_argument("no rewrite rule applies at this position");
  }
  const Generator left = word[position];
  const Generator right = word[position + 1];
  std::map<Word, Rational> out;
  if (left == Generator::A && right == Generator::H) {
    add(out, splice(word, position, {Generator::H, Generator::A}), Rational(1));
    add(out, splice(word, position, {Generator::A}), Rational(-1));
  } else if (left == Generator::H && right == Generator::B) {
    add(out, splice(word, position, {Generator::B, Generator::H}), Rational(1));
    add(out, splice(word, position, {Generator::B}), Rational(-1));
  } else {
    add(out, splice(word, position, {Generator::B, Generator::A}), Rational(1));
    const auto& g = alg.g().coeffs();
    for (std::size_t i = 0; i < g.size(); ++i) add(out, splice(word, position, {}, i), g[i]);
  }
  return out;
}

NcElement normal_form(const SmithAlgebra& alg, std::span<const Generator> word, RewriteStrategy strategy) {
  std::map<Word, Rational> pending;
  pending.emplace(Word(word.begin(), word.end()), Rational(1));
  NcElement result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational& c = node.mapped();
    const auto position = find_offending(w, strategy);
    if (!position) {
      result.add_term(as_monomial(w), c);
      continue;
    }
    for (auto& [next, d] : rewrite_at(alg, w, *position)) add(pending, next, c * d);
  }
  return result;
}

std::array<std::size_t, 3> inversion_measure(std::span<const Generator> word) {
  std::array<std::size_t, 3> measure{0, 0, 0};
  std::size_t a_seen = 0;
  std::size_t h_seen = 0;
  for (Generator g : word) {
    switch (g) {
      case Generator::A: ++a_seen; break;
      case Generator::H:
        measure[1] += a_seen;
        ++h_seen;
        break;
      case Generator::B:
        measure[0] += a_seen;
        measure[2] += h_seen;
        break;
    }
  }
  return measure;
}

}  // namespace zhu::smith
