#include "nodalvf/localized.hpp"

#include <sstream>

#include "nodalvf/error.hpp"

namespace nvf {

IntPoly int_t() { return IntPoly::variable(kMaxVars, kSlotT); }
IntPoly int_x(std::size_t i) { return IntPoly::variable(kMaxVars, i); }
IntPoly int_const(long c) { return IntPoly::constant(kMaxVars, Integer(c)); }
IntPoly unit_poly(std::size_t i) { return int_const(1) + int_t() * int_x(i); }

// Writing p = sum_k p_k x_i^k and q = p / (1 + t x_i) = sum_k q_k x_i^k, the
// coefficients satisfy q_k = p_k - t q_{k-1}. The division is exact iff the
// recursion closes with q_d = 0 at the top degree d of p.
std::optional<IntPoly> divide_by_unit(const IntPoly& p, std::size_t i) {
  if (p.is_zero()) return p;
  const int lo = p.min_degree(i);
  const int hi = p.max_degree(i);
  const IntPoly t = int_t();
  IntPoly prev(kMaxVars);
  IntPoly quotient(kMaxVars);
  for (int k = lo; k <= hi; ++k) {
    IntPoly qk = p.slice(i, k) - t * prev;
    if (k == hi) {
      if (!qk.is_zero()) return std::nullopt;
      break;
    }
    quotient += qk.shifted(Exponent::unit(i, k));
    prev = std::move(qk);
  }
  return quotient;
}

LocalizedElement::LocalizedElement(IntPoly numerator, DenomExponents denom)
    : num_(std::move(numerator)), den_(denom) {
  for (int e : den_)
    if (e < 0) throw std::invalid_argument("LocalizedElement: negative denominator exponent");
  normalize();
}

LocalizedElement LocalizedElement::raw(IntPoly numerator, DenomExponents denom) {
  LocalizedElement r(std::move(numerator), denom, Canonical{});
  r.canonical_ = false;
  return r;
}

void LocalizedElement::normalize() {
  if (num_.is_zero()) {
    den_ = {};
  } else {
    for (std::size_t g = 0; g < kChartGens; ++g) {
      while (den_[g] > 0) {
        auto q = divide_by_unit(num_, g + 1);
        if (!q) break;
        num_ = std::move(*q);
        --den_[g];
      }
    }
  }
  canonical_ = true;
}

LocalizedElement localized_normalize(const LocalizedElement& e) {
  LocalizedElement r = e;
  r.normalize();
  return r;
}

IntPoly LocalizedElement::denominator() const {
  IntPoly d = int_const(1);
  for (std::size_t g = 0; g < kChartGens; ++g)
    if (den_[g] > 0) d = d * unit_poly(g + 1).pow(static_cast<unsigned>(den_[g]));
  return d;
}

namespace {

IntPoly unit_power_product(const LocalizedElement::DenomExponents& e) {
  IntPoly d = int_const(1);
  for (std::size_t g = 0; g < kChartGens; ++g)
    if (e[g] > 0) d = d * unit_poly(g + 1).pow(static_cast<unsigned>(e[g]));
  return d;
}

// Brings both operands over the common denominator prod (1+t x_i)^{max e_i}.
std::pair<IntPoly, IntPoly> common_numerators(const LocalizedElement& a, const LocalizedElement& b,
                                              LocalizedElement::DenomExponents& out) {
  LocalizedElement::DenomExponents ea{}, eb{};
  for (std::size_t g = 0; g < kChartGens; ++g) {
    out[g] = std::max(a.denom_exponents()[g], b.denom_exponents()[g]);
    ea[g] = out[g] - a.denom_exponents()[g];
    eb[g] = out[g] - b.denom_exponents()[g];
  }
  return {a.numerator() * unit_power_product(ea), b.numerator() * unit_power_product(eb)};
}

}  // namespace

LocalizedElement LocalizedElement::operator-() const {
  LocalizedElement r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
  LocalizedElement::DenomExponents d{};
  auto [na, nb] = common_numerators(a, b, d);
  return LocalizedElement(na + nb, d);
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) {
  LocalizedElement::DenomExponents d{};
  auto [na, nb] = common_numerators(a, b, d);
  return LocalizedElement(na - nb, d);
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
  LocalizedElement::DenomExponents d{};
  for (std::size_t g = 0; g < kChartGens; ++g)
    d[g] = a.denom_exponents()[g] + b.denom_exponents()[g];
  return LocalizedElement(a.numerator() * b.numerator(), d);
}

bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
  if (a.canonical_ && b.canonical_) return a.den_ == b.den_ && a.num_ == b.num_;
  LocalizedElement ca = localized_normalize(a), cb = localized_normalize(b);
  return ca.den_ == cb.den_ && ca.num_ == cb.num_;
}

LocalizedElement LocalizedElement::inverse() const {
  if (num_.is_zero()) throw NotInvertible("zero is not a unit");
  // Peel off unit factors from the numerator; what remains must be +-1.
  IntPoly rest = num_;
  DenomExponents peeled{};
  for (std::size_t g = 0; g < kChartGens; ++g) {
    while (true) {
      auto q = divide_by_unit(rest, g + 1);
      if (!q) break;
      rest = std::move(*q);
      ++peeled[g];
    }
  }
  const IntPoly one = int_const(1);
  const IntPoly minus_one = int_const(-1);
  if (!(rest == one) && !(rest == minus_one))
    throw NotInvertible("numerator " + int_poly_str(num_) + " is not a product of units 1+t*x_i");
  IntPoly new_num = denominator();
  if (rest == minus_one) new_num = -new_num;
  return LocalizedElement(new_num, peeled);
}

LocalizedElement LocalizedElement::substitute(
    const std::array<LocalizedElement, kChartGens>& images) const {
  // Powers are cached per generator as the numerator is walked term by term.
  LocalizedElement acc = LocalizedElement::constant(0);
  for (const auto& [e, c] : num_.terms()) {
    if (e[kSlotT] < 0) throw std::invalid_argument("negative power of t in localized numerator");
    LocalizedElement term(IntPoly::monomial(kMaxVars, Exponent::unit(kSlotT, e[kSlotT]), c));
    for (std::size_t g = 0; g < kChartGens; ++g) {
      int k = e[g + 1];
      if (k < 0) throw std::invalid_argument("negative power of chart generator");
      for (int j = 0; j < k; ++j) term = term * images[g];
    }
    acc = acc + term;
  }
  for (std::size_t g = 0; g < kChartGens; ++g) {
    if (den_[g] == 0) continue;
    LocalizedElement unit_image = LocalizedElement::constant(1) + LocalizedElement::t() * images[g];
    LocalizedElement inv = unit_image.inverse();
    for (int j = 0; j < den_[g]; ++j) acc = acc * inv;
  }
  return acc;
}

LocalizedElement LocalizedElement::at_t_zero() const {
  std::vector<IntPoly::Term> kept;
  for (const auto& t : num_.terms())
    if (t.first[kSlotT] == 0) kept.push_back(t);
  return LocalizedElement(IntPoly::from_terms(kMaxVars, std::move(kept)));
}

bool equal_by_cross_multiplication(const LocalizedElement& a, const LocalizedElement& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

std::string int_poly_str(const IntPoly& p) {
  if (p.is_zero()) return "0";
  static const char* names[] = {"t", "x1", "x2", "x3"};
  std::ostringstream os;
  bool first = true;
  // Print highest total degree last for readability: terms come lex-sorted.
  for (const auto& [e, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool mono = false;
    for (std::size_t i = 0; i < kMaxVars; ++i) mono = mono || e[i] != 0;
    if (!mono || mag != 1) {
      os << mag.get_str();
      if (mono) os << "*";
    }
    bool lead = true;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      if (!lead) os << "*";
      lead = false;
      os << names[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::string LocalizedElement::str() const {
  std::string n = int_poly_str(num_);
  bool has_den = false;
  for (int e : den_) has_den = has_den || e > 0;
  if (!has_den) return n;
  std::ostringstream os;
  os << "(" << n << ")/(";
  bool first = true;
  for (std::size_t g = 0; g < kChartGens; ++g) {
    if (den_[g] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "(1+t*x" << g + 1 << ")";
    if (den_[g] > 1) os << "^" << den_[g];
  }
  os << ")";
  return os.str();
}

}  // namespace nvf
