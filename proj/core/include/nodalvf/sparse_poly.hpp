#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nodalvf/error.hpp"

namespace nvf {

inline constexpr std::size_t kMaxVars = 4;

// Integer exponent tuple, possibly negative. Unused trailing slots stay zero,
// so lexicographic comparison over the full array equals comparison over the
// used prefix.
struct Exponent {
  std::array<int, kMaxVars> e{};

  Exponent() = default;
  Exponent(std::initializer_list<int> xs) {
    if (xs.size() > kMaxVars) throw RankTooLarge("exponent tuple longer than 4");
    std::copy(xs.begin(), xs.end(), e.begin());
  }

  int& operator[](std::size_t i) { return e[i]; }
  int operator[](std::size_t i) const { return e[i]; }

  friend Exponent operator+(Exponent a, const Exponent& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i) a.e[i] += b.e[i];
    return a;
  }
  friend Exponent operator-(Exponent a, const Exponent& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i) a.e[i] -= b.e[i];
    return a;
  }
  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

  static Exponent unit(std::size_t i, int k = 1) {
    Exponent x;
    x.e[i] = k;
    return x;
  }
};

// Sparse multivariate Laurent polynomial with terms kept sorted by
// lexicographic exponent order and no zero coefficients. The first term is
// therefore the lex-minimal one.
template <class Coeff>
class SparsePoly {
 public:
  using Term = std::pair<Exponent, Coeff>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) { check_rank(nvars); }

  static SparsePoly constant(std::size_t nvars, const Coeff& c) {
    return monomial(nvars, Exponent{}, c);
  }
  static SparsePoly monomial(std::size_t nvars, const Exponent& e, const Coeff& c) {
    SparsePoly p(nvars);
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }
  static SparsePoly variable(std::size_t nvars, std::size_t i) {
    return monomial(nvars, Exponent::unit(i), Coeff(1));
  }

  // Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static SparsePoly from_terms(std::size_t nvars, std::vector<Term> terms) {
    SparsePoly p(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  const Term& leading() const { return terms_.front(); }

  Coeff coeff(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return Coeff(0);
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    std::size_t nv = std::max(a.nvars_, b.nvars_);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.emplace_back(ea + eb, ca * cb);
    return from_terms(nv, std::move(out));
  }

  SparsePoly scaled(const Coeff& c) const {
    if (c == 0) return SparsePoly(nvars_);
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  SparsePoly shifted(const Exponent& e) const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.first = t.first + e;
    return r;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly r = constant(nvars_, Coeff(1)), b = *this;
    while (k) {
      if (k & 1u) r = r * b;
      b = b * b;
      k >>= 1u;
    }
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  // Highest exponent of variable i among all terms (0 for the zero polynomial).
  int max_degree(std::size_t i) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.first[i] > d) d = t.first[i];
      first = false;
    }
    return d;
  }
  int min_degree(std::size_t i) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.first[i] < d) d = t.first[i];
      first = false;
    }
    return d;
  }

  // Coefficient of var_i^k, as a polynomial in the remaining variables.
  SparsePoly slice(std::size_t i, int k) const {
    SparsePoly r(nvars_);
    for (const auto& t : terms_)
      if (t.first[i] == k) {
        Term u = t;
        u.first[i] = 0;
        r.terms_.push_back(std::move(u));
      }
    return r;  // sorted order survives zeroing a fixed slot
  }

  SparsePoly derivative(std::size_t i) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (t.first[i] != 0) {
        Term u = t;
        u.second *= Coeff(t.first[i]);
        u.first[i] -= 1;
        out.push_back(std::move(u));
      }
    return from_terms(nvars_, std::move(out));
  }

 private:
  static void check_rank(std::size_t n) {
    if (n > kMaxVars) throw RankTooLarge("at most 4 variables are supported");
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r(std::max(a.nvars_, b.nvars_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.push_back(*ib);
        if (subtract) r.terms_.back().second = -r.terms_.back().second;
        ++ib;
      } else {
        Coeff c = subtract ? Coeff(ia->second - ib->second) : Coeff(ia->second + ib->second);
        if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace nvf
