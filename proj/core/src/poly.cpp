#include "pte/poly.hpp"

#include "pte/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pte {

int MultiPoly::degree_cap = 128;

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[Key(static_cast<std::size_t>(nvars), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw std::out_of_range("variable index out of range");
  MultiPoly p(nvars);
  Key k(static_cast<std::size_t>(nvars), 0);
  k[static_cast<std::size_t>(index)] = 1;
  p.terms_[k] = 1;
  return p;
}

int MultiPoly::total_degree() const {
  int deg = 0;
  for (const auto& [k, c] : terms_) {
    int d = 0;
    for (int e : k) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

void MultiPoly::set(const Key& k, const Rat& c) {
  if (c == 0)
    terms_.erase(k);
  else
    terms_[k] = c;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [k, c] : terms_) out.terms_[k] = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_)
    fail(ErrorCode::CardinalityMismatch, "mixing different variable contexts");
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  out += o;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  out -= o;
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    fail(ErrorCode::CardinalityMismatch, "mixing different variable contexts");
  MultiPoly out(nvars_);
  Key k(static_cast<std::size_t>(nvars_), 0);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      int deg = 0;
      for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = ka[i] + kb[i];
        deg += k[i];
      }
      if (deg > degree_cap)
        fail(ErrorCode::ExponentOverflow,
             "product exceeds the degree cap of " + std::to_string(degree_cap));
      auto it = out.terms_.find(k);
      if (it == out.terms_.end()) {
        Rat prod = ca * cb;
        if (prod != 0) out.terms_.emplace(k, std::move(prod));
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly acc = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Rat MultiPoly::eval(const std::vector<Rat>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    fail(ErrorCode::CardinalityMismatch,
         "evaluation needs one value per variable");
  Rat acc = 0;
  for (const auto& [k, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) term *= rat_pow(values[i], static_cast<unsigned>(k[i]));
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& replacement) const {
  if (replacement.nvars_ != nvars_)
    fail(ErrorCode::CardinalityMismatch, "mixing different variable contexts");
  if (var < 0 || var >= nvars_)
    throw std::out_of_range("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [k, c] : terms_) {
    Key rest = k;
    int e = rest[static_cast<std::size_t>(var)];
    rest[static_cast<std::size_t>(var)] = 0;
    MultiPoly term(nvars_);
    term.terms_[rest] = c;
    out += term * replacement.pow(static_cast<unsigned>(e));
  }
  return out;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Graded-lex: higher total degree first, then the exponent key.
  std::vector<std::pair<Key, Rat>> ordered(terms_.begin(), terms_.end());
  auto grade = [](const Key& k) {
    int d = 0;
    for (int e : k) d += e;
    return d;
  };
  std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    int da = grade(a.first), db = grade(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool has_vars = std::any_of(k.begin(), k.end(), [](int e) { return e > 0; });
    if (coeff != 1 || !has_vars) os << to_string(coeff);
    bool printed = coeff != 1 || !has_vars;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (printed) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (k[i] > 1) os << "^" << k[i];
      printed = true;
    }
  }
  return os.str();
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) {
  MultiPoly out(p.nvars());
  if (c == 0) return out;
  for (const auto& [k, coeff] : p.terms()) out.set(k, c * coeff);
  return out;
}

}  // namespace pte
