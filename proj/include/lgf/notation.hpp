#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "lgf/error.hpp"
#include "lgf/rational.hpp"

namespace lgf {

// One rational-link vector, written (2h_n, v_{n-1}^{q_{n-1}}, ..., v_1^{q_1}, 2h_1^{p_1}).
// Arrays are indexed by subscript minus one: h[0] = h_1, ..., h[n-1] = h_n.
struct LinkVector {
  std::vector<int> h;  // size n;   h_n..h_2 >= 1, h_1 >= 0
  std::vector<int> v;  // size n-1; all >= 1
  std::vector<int> p;  // size n;   0 <= p_i <= 2h_i, p_n == 0 (no flype slot on 2h_n)
  std::vector<int> q;  // size n-1; 0 <= q_i <= v_i

  int n() const { return static_cast<int>(h.size()); }

  int weight() const {
    int w = 0;
    for (int x : h) w += 2 * x;
    for (int x : v) w += x;
    return w;
  }

  bool operator==(const LinkVector&) const = default;
  bool operator<(const LinkVector& o) const {
    auto key = [](const LinkVector& a) { return std::tie(a.h, a.v, a.p, a.q); };
    return key(*this) < key(o);
  }
};

// A possibly swapped connect sum of link vectors.
struct LinkExpr {
  std::vector<LinkVector> components;
  bool swapped = false;

  bool operator==(const LinkExpr&) const = default;
  bool operator<(const LinkExpr& o) const {
    auto key = [](const LinkExpr& e) { return std::tie(e.swapped, e.components); };
    return key(*this) < key(o);
  }
};

inline LinkExpr single(LinkVector vec) { return LinkExpr{{std::move(vec)}, false}; }

inline void validate_vector(const LinkVector& vec, std::ptrdiff_t at = Error::no_offset) {
  const int n = vec.n();
  if (n < 1) fail(Errc::Validation, "even-length-vector: vector is empty", at);
  if (static_cast<int>(vec.v.size()) != n - 1 || static_cast<int>(vec.p.size()) != n ||
      static_cast<int>(vec.q.size()) != n - 1)
    fail(Errc::Internal, "link vector field sizes disagree");
  for (int i = 1; i < n; ++i)
    if (vec.h[i] < 1) fail(Errc::Validation, "zero-interior-entry: h_" + std::to_string(i + 1), at);
  if (vec.h[0] < 0) fail(Errc::Validation, "negative-entry: h_1", at);
  for (int i = 0; i < n - 1; ++i)
    if (vec.v[i] < 1) fail(Errc::Validation, "zero-interior-entry: v_" + std::to_string(i + 1), at);
  if (vec.p[n - 1] != 0)
    fail(Errc::Validation, "superscript-on-leading-entry: p_" + std::to_string(n), at);
  for (int i = 0; i < n; ++i)
    if (vec.p[i] < 0 || vec.p[i] > 2 * vec.h[i])
      fail(Errc::Validation, "flype-count-out-of-range: p_" + std::to_string(i + 1), at);
  for (int i = 0; i < n - 1; ++i)
    if (vec.q[i] < 0 || vec.q[i] > vec.v[i])
      fail(Errc::Validation, "flype-count-out-of-range: q_" + std::to_string(i + 1), at);
}

inline void validate_expr(const LinkExpr& e) {
  if (e.components.empty()) fail(Errc::Validation, "empty-expression");
  for (const auto& c : e.components) validate_vector(c);
}

namespace detail {

struct RawEntry {
  long long value = 0;
  long long sup = -1;  // -1 = no superscript written
  std::ptrdiff_t off = 0;
  std::ptrdiff_t sup_off = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LinkExpr run() {
    LinkExpr e;
    skip_ws();
    if (peek() == '~') {
      e.swapped = true;
      ++pos_;
    }
    e.components.push_back(vector());
    skip_ws();
    while (peek() == '#') {
      ++pos_;
      e.components.push_back(vector());
      skip_ws();
    }
    if (pos_ != text_.size())
      fail(Errc::Syntax, "unexpected trailing input", static_cast<std::ptrdiff_t>(pos_));
    return e;
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(Errc::Syntax, std::string("expected ") + what, static_cast<std::ptrdiff_t>(pos_));
    ++pos_;
  }

  long long uint_token() {
    skip_ws();
    std::ptrdiff_t at = static_cast<std::ptrdiff_t>(pos_);
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(Errc::Syntax, "expected unsigned integer", at);
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000LL) fail(Errc::Syntax, "number too large", at);
      ++pos_;
    }
    return value;
  }

  RawEntry entry() {
    RawEntry r;
    skip_ws();
    r.off = static_cast<std::ptrdiff_t>(pos_);
    r.value = uint_token();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      r.sup_off = static_cast<std::ptrdiff_t>(pos_);
      r.sup = uint_token();
    }
    return r;
  }

  LinkVector vector() {
    skip_ws();
    std::ptrdiff_t at = static_cast<std::ptrdiff_t>(pos_);
    expect('(', "'('");
    std::vector<RawEntry> raw;
    raw.push_back(entry());
    while (peek() == ',') {
      ++pos_;
      raw.push_back(entry());
    }
    expect(')', "')' or ','");
    return assemble(raw, at);
  }

  static LinkVector assemble(const std::vector<RawEntry>& raw, std::ptrdiff_t vec_off) {
    const int m = static_cast<int>(raw.size());
    if (m % 2 == 0) fail(Errc::Validation, "even-length-vector", vec_off);
    const int n = (m + 1) / 2;
    LinkVector vec;
    vec.h.assign(n, 0);
    vec.v.assign(n - 1, 0);
    vec.p.assign(n, 0);
    vec.q.assign(n - 1, 0);
    for (int k = 0; k < m; ++k) {
      const RawEntry& r = raw[k];
      if (k % 2 == 0) {
        // Horizontal slot: k = 0 holds 2h_n, the final slot holds 2h_1.
        const int i = n - k / 2;  // subscript
        if (r.value % 2 != 0)
          fail(Errc::Validation, "odd-horizontal-value: entry " + std::to_string(r.value), r.off);
        const long long hi = r.value / 2;
        if (i >= 2 && hi < 1) fail(Errc::Validation, "zero-interior-entry: h_" + std::to_string(i), r.off);
        vec.h[i - 1] = static_cast<int>(hi);
        if (k == 0) {
          if (r.sup >= 0) fail(Errc::Validation, "superscript-on-leading-entry", r.sup_off);
        } else if (r.sup >= 0) {
          if (r.sup > r.value)
            fail(Errc::Validation, "flype-count-out-of-range: p_" + std::to_string(i), r.sup_off);
          vec.p[i - 1] = static_cast<int>(r.sup);
        }
      } else {
        const int i = n - (k + 1) / 2;  // subscript
        if (r.value < 1) fail(Errc::Validation, "zero-interior-entry: v_" + std::to_string(i), r.off);
        vec.v[i - 1] = static_cast<int>(r.value);
        if (r.sup >= 0) {
          if (r.sup > r.value)
            fail(Errc::Validation, "flype-count-out-of-range: q_" + std::to_string(i), r.sup_off);
          vec.q[i - 1] = static_cast<int>(r.sup);
        }
      }
    }
    validate_vector(vec, vec_off);
    return vec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Grammar: expr := ["~"] term ; term := vector { "#" vector } ;
//          vector := "(" entry { "," entry } ")" ; entry := uint [ "^" uint ].
// Whitespace is ignored between tokens.
inline LinkExpr parse_link_expr(std::string_view text) { return detail::Parser(text).run(); }

inline std::string format_link_vector(const LinkVector& vec) {
  const int n = vec.n();
  std::string out = "(";
  out += std::to_string(2 * vec.h[n - 1]);
  for (int i = n - 1; i >= 1; --i) {
    out += ",";
    out += std::to_string(vec.v[i - 1]);
    if (vec.q[i - 1] > 0) out += "^" + std::to_string(vec.q[i - 1]);
    out += ",";
    out += std::to_string(2 * vec.h[i - 1]);
    if (vec.p[i - 1] > 0) out += "^" + std::to_string(vec.p[i - 1]);
  }
  out += ")";
  return out;
}

// Canonical text: no whitespace, zero flype counts omitted; parse∘format = id.
inline std::string format_link_expr(const LinkExpr& e) {
  std::string out;
  if (e.swapped) out += "~";
  bool first = true;
  for (const auto& c : e.components) {
    if (!first) out += "#";
    first = false;
    out += format_link_vector(c);
  }
  return out;
}

// 2h_1 + 1/(v_1 + 1/(2h_2 + ... + 1/(2h_n)...)), in lowest terms.
inline Rational rational_value(const LinkVector& vec) {
  const int n = vec.n();
  Rational r(2 * vec.h[n - 1]);
  for (int i = n - 1; i >= 1; --i) {
    r = Rational(vec.v[i - 1]) + r.reciprocal();
    r = Rational(2 * vec.h[i - 1]) + r.reciprocal();
  }
  return r;
}

// Apply only the equivalences that are actually proven:
//   (a) a vector with all p_i = 0 may drop all its q_i;
//   (b) q_{n-1} may always be dropped;
//   (c) p_1 only matters mod 2 — for single-vector expressions (the rotation
//       that proves this is blocked inside a connect sum).
inline LinkExpr normalize_equivalence(LinkExpr e) {
  validate_expr(e);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& c : e.components) {
      const int n = c.n();
      if (n >= 2 && c.q[n - 2] != 0) {  // (b)
        c.q[n - 2] = 0;
        changed = true;
      }
      bool all_p_zero = true;
      for (int x : c.p) all_p_zero = all_p_zero && x == 0;
      if (all_p_zero) {  // (a)
        for (int& x : c.q)
          if (x != 0) {
            x = 0;
            changed = true;
          }
      }
      if (e.components.size() == 1 && c.p.size() >= 2 && c.p[0] >= 2) {  // (c)
        c.p[0] %= 2;
        changed = true;
      }
    }
  }
  return e;
}

}  // namespace lgf
