#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lgf/error.hpp"

namespace lgf {

// Laurent polynomial in λ with nonnegative integer coefficients.  Coefficients
// are dimensions of homology groups, so no subtraction is exposed here; the one
// computation that removes terms does so through a checked helper elsewhere.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;  // exponent -> coefficient > 0

  LaurentPoly() = default;

  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1) {
    LaurentPoly p;
    p.add_term(exponent, coefficient);
    return p;
  }

  // 1 + λ, the pair every h_1 = 0 expression carries on top.
  static LaurentPoly one_plus_lambda() {
    LaurentPoly p;
    p.add_term(0, 1);
    p.add_term(1, 1);
    return p;
  }

  void add_term(int exponent, std::int64_t count) {
    if (count < 0) fail(Errc::NegativeCoeff, "negative term count");
    if (count == 0) return;
    terms_[exponent] += count;
  }

  std::int64_t coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  int min_exponent() const {
    if (terms_.empty()) fail(Errc::Internal, "min_exponent of zero polynomial");
    return terms_.begin()->first;
  }

  int max_exponent() const {
    if (terms_.empty()) fail(Errc::Internal, "max_exponent of zero polynomial");
    return terms_.rbegin()->first;
  }

  bool operator==(const LaurentPoly&) const = default;
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  // Ascending exponents: "λ^-1 + 2 + 3λ + λ^2"; the zero polynomial is "0".
  std::string text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (e == 0) {
        out += std::to_string(c);
        continue;
      }
      if (c != 1) out += std::to_string(c);
      out += "λ";
      if (e != 1) {
        out += "^";
        out += std::to_string(e);
      }
    }
    return out;
  }

  // {"-1":1,"0":2} — exponent keys ascending, no whitespace.
  std::string json_text() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += ",";
      first = false;
      out += "\"";
      out += std::to_string(e);
      out += "\":";
      out += std::to_string(c);
    }
    out += "}";
    return out;
  }

 private:
  Terms terms_;
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

// Multiply by λ^k.
inline LaurentPoly shift(const LaurentPoly& p, int k) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e + k, c);
  return r;
}

// Palindrome: λ^k -> λ^-k.
inline LaurentPoly reverse(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

// a(λ) = λ·b(λ⁻¹).  Symmetric in its arguments because reverse is an involution.
inline bool one_shift_palindromic(const LaurentPoly& a, const LaurentPoly& b) {
  return a == shift(reverse(b), 1);
}

// a - b where the result must stay coefficientwise nonnegative.
inline LaurentPoly checked_sub(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::Terms t = a.terms();
  for (const auto& [e, c] : b.terms()) {
    auto it = t.find(e);
    if (it == t.end() || it->second < c)
      fail(Errc::NegativeCoeff, "coefficient of λ^" + std::to_string(e) + " would go negative");
    it->second -= c;
    if (it->second == 0) t.erase(it);
  }
  LaurentPoly r;
  for (const auto& [e, c] : t) r.add_term(e, c);
  return r;
}

// a ≤ b termwise?
inline bool dominated_by(const LaurentPoly& a, const LaurentPoly& b) {
  for (const auto& [e, c] : a.terms())
    if (c > b.coeff(e)) return false;
  return true;
}

}  // namespace lgf
