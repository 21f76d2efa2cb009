#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgf/error.hpp"
#include "lgf/gamma.hpp"
#include "lgf/notation.hpp"
#include "lgf/rational.hpp"

namespace lgf {

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

// Presented entries as (value, flype count) pairs, for ordering and keys.
inline std::vector<std::pair<int, int>> presented(const LinkVector& vec) {
  std::vector<std::pair<int, int>> out;
  const int n = vec.n();
  out.emplace_back(2 * vec.h[n - 1], 0);
  for (int i = n - 1; i >= 1; --i) {
    out.emplace_back(vec.v[i - 1], vec.q[i - 1]);
    out.emplace_back(2 * vec.h[i - 1], vec.p[i - 1]);
  }
  return out;
}

// Entry values lexicographically, then flype counts (so a standard vector
// precedes its decorated variants).
inline bool presented_less(const LinkVector& a, const LinkVector& b) {
  auto pa = presented(a), pb = presented(b);
  auto value = [](const std::pair<int, int>& x) { return x.first; };
  auto sup = [](const std::pair<int, int>& x) { return x.second; };
  for (size_t k = 0; k < std::min(pa.size(), pb.size()); ++k)
    if (value(pa[k]) != value(pb[k])) return value(pa[k]) < value(pb[k]);
  if (pa.size() != pb.size()) return pa.size() < pb.size();
  for (size_t k = 0; k < pa.size(); ++k)
    if (sup(pa[k]) != sup(pb[k])) return sup(pa[k]) < sup(pb[k]);
  return false;
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

// All valid vectors of weight ≤ max_weight in lexicographic order; with
// flypes, every p assignment is included (q stays 0 — vertical flypes never
// move the polynomials, so the census would only repeat itself).
inline std::vector<LinkVector> enumerate_vectors(int max_weight, bool with_flypes) {
  if (max_weight < 2) fail(Errc::Validation, "max-weight-too-small: need >= 2");
  std::vector<LinkVector> out;
  for (int n = 1; 3 * (n - 1) <= max_weight; ++n) {
    LinkVector vec;
    vec.h.assign(n, 0);
    vec.v.assign(n - 1, 0);
    vec.p.assign(n, 0);
    vec.q.assign(n - 1, 0);
    // Budgeted fill of v_1..v_{n-1}, then h_1..h_n.
    std::function<void(int, int)> place = [&](int slot, int budget) {
      if (slot == 2 * n - 1) {
        out.push_back(vec);
        return;
      }
      if (slot < n - 1) {
        for (int val = 1; val <= budget; ++val) {
          vec.v[slot] = val;
          place(slot + 1, budget - val);
        }
      } else {
        const int i = slot - (n - 1);
        for (int val = i == 0 ? 0 : 1; 2 * val <= budget; ++val) {
          vec.h[i] = val;
          place(slot + 1, budget - 2 * val);
        }
      }
    };
    place(0, max_weight);
  }
  if (with_flypes) {
    std::vector<LinkVector> flyped;
    for (const auto& base : out) {
      LinkVector vec = base;
      std::function<void(int)> assign = [&](int i) {
        if (i == base.n() - 1) {
          flyped.push_back(vec);
          return;
        }
        for (int val = 0; val <= 2 * base.h[i]; ++val) {
          vec.p[i] = val;
          assign(i + 1);
        }
      };
      assign(0);
    }
    out = std::move(flyped);
  }
  std::sort(out.begin(), out.end(), detail::presented_less);
  return out;
}

// ---------------------------------------------------------------------------
// Records

struct CensusRecord {
  LinkExpr expr;
  GammaPair gammas;
  OrderVerdict verdict;
  Rational rational;
  int class_id = -1;  // GammaPair equivalence class, numbered by first occurrence
  int orbit_id = -1;  // flype/swap orbit of one standardized expression
};

// Flypes zeroed, swap dropped, summands sorted (connect sum is commutative):
// the label of the underlying topological type's flype/swap orbit.
inline LinkExpr standardized(LinkExpr e) {
  for (auto& c : e.components) {
    std::fill(c.p.begin(), c.p.end(), 0);
    std::fill(c.q.begin(), c.q.end(), 0);
  }
  std::sort(e.components.begin(), e.components.end());
  e.swapped = false;
  return e;
}

using OracleFn = std::function<GammaPair(const LinkExpr&)>;

// Turn expressions into census records.  When an oracle is supplied, a
// deterministic tenth of the records is recomputed geometrically and any
// disagreement with the closed form is fatal.
inline std::vector<CensusRecord> records_for(const std::vector<LinkExpr>& exprs,
                                             const OracleFn& oracle = {}) {
  std::vector<CensusRecord> out;
  out.reserve(exprs.size());
  std::map<GammaPair, int> classes;
  std::map<std::string, int> orbits;
  for (const auto& e : exprs) {
    CensusRecord r;
    r.expr = e;
    r.gammas = gamma_expr(e);
    r.verdict = orderedness(e);
    r.rational = Rational(0);
    for (const auto& c : e.components) r.rational = r.rational + rational_value(c);
    r.class_id = classes.try_emplace(r.gammas, static_cast<int>(classes.size())).first->second;
    r.orbit_id = orbits.try_emplace(format_link_expr(standardized(e)), static_cast<int>(orbits.size()))
                     .first->second;
    if (oracle && detail::fnv1a(format_link_expr(e)) % 10 == 0) {
      GammaPair geometric = oracle(e);
      if (!(geometric == r.gammas))
        fail(Errc::Internal, "oracle disagrees with closed form on " + format_link_expr(e));
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct CensusOptions {
  int max_weight = 6;
  bool with_flypes = false;
  bool with_swaps = false;
  OracleFn oracle;
};

inline std::vector<CensusRecord> build_census(const CensusOptions& opt) {
  std::vector<LinkExpr> exprs;
  for (const auto& vec : enumerate_vectors(opt.max_weight, opt.with_flypes)) {
    exprs.push_back(LinkExpr{{vec}, false});
    if (opt.with_swaps) exprs.push_back(LinkExpr{{vec}, true});
  }
  return records_for(exprs, opt.oracle);
}

// Partition of record indices by exact GammaPair equality, classes in order
// of first appearance.  Permuting the records permutes indices inside groups
// but yields the same partition of expressions.
inline std::vector<std::vector<std::size_t>> polynomial_classes(
    const std::vector<CensusRecord>& records) {
  std::vector<std::vector<std::size_t>> groups;
  std::map<GammaPair, std::size_t> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto [it, fresh] = seen.try_emplace(records[i].gammas, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

// ---------------------------------------------------------------------------
// Distinct subset sums

struct DssReport {
  std::vector<long long> set;
  bool is_dss = false;
  std::vector<long long> witness_a, witness_b;  // two equal-sum subsets when not d.s.s.
};

inline DssReport dss_check(const std::vector<long long>& set) {
  if (set.size() > 24) fail(Errc::Size, "dss_check set larger than 24 elements");
  for (long long x : set)
    if (x <= 0) fail(Errc::Validation, "dss-positive-entries");
  DssReport report;
  report.set = set;
  std::map<long long, std::uint32_t> first;  // subset sum -> first mask
  const std::uint32_t total = 1u << set.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    long long sum = 0;
    for (std::size_t i = 0; i < set.size(); ++i)
      if (mask & (1u << i)) sum += set[i];
    auto [it, fresh] = first.try_emplace(sum, mask);
    if (!fresh) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (it->second & (1u << i)) report.witness_a.push_back(set[i]);
        if (mask & (1u << i)) report.witness_b.push_back(set[i]);
      }
      return report;
    }
  }
  report.is_dss = true;
  return report;
}

// ---------------------------------------------------------------------------
// Distinctness lower bounds

struct LowerBoundReport {
  enum Status { Pass, Fail, HypothesisNotMet };
  Status status = HypothesisNotMet;
  int bound = 0;     // 2^{n-1}, the witness-family size
  int observed = 0;  // distinct polynomial pairs within the family
  std::vector<LinkExpr> family;
};

inline const char* to_string(LowerBoundReport::Status s) {
  switch (s) {
    case LowerBoundReport::Pass: return "PASS";
    case LowerBoundReport::Fail: return "FAIL";
    case LowerBoundReport::HypothesisNotMet: return "HYPOTHESIS_NOT_MET";
  }
  return "?";
}

// The witness family behind the distinctness bounds: all parity flypes for
// h_1 ≥ 1; for h_1 = 0 the p_1 slot is frozen and swaps fill the gap.
inline std::vector<LinkExpr> lower_bound_family(const LinkVector& standard) {
  std::vector<LinkExpr> family;
  LinkVector vec = standard;
  std::function<void(int)> assign = [&](int i) {
    if (i == standard.n() - 1) {
      family.push_back(LinkExpr{{vec}, false});
      if (standard.h[0] == 0) family.push_back(LinkExpr{{vec}, true});
      return;
    }
    for (int val = 0; val <= (standard.h[i] >= 1 ? 1 : 0); ++val) {
      vec.p[i] = val;
      assign(i + 1);
    }
  };
  assign(0);
  return family;
}

inline LowerBoundReport verify_lower_bounds(const LinkVector& standard) {
  validate_vector(standard);
  for (int x : standard.p)
    if (x != 0) fail(Errc::Validation, "standard-vector-required: nonzero p");
  for (int x : standard.q)
    if (x != 0) fail(Errc::Validation, "standard-vector-required: nonzero q");

  LowerBoundReport report;
  report.family = lower_bound_family(standard);
  report.bound = 1 << (standard.n() - 1);
  std::map<GammaPair, int> classes;
  for (const auto& e : report.family) classes.try_emplace(gamma_expr(e), 0);
  report.observed = static_cast<int>(classes.size());

  const int n = standard.n();
  bool hypothesis = false;
  if (n == 2) {
    hypothesis = true;
  } else if (n == 3) {
    hypothesis = standard.h[0] == 0 || standard.h[1] != standard.h[2] ||
                 standard.v[1] != 2 * standard.v[0];
  } else if (n >= 4) {
    std::vector<long long> hs;
    hs.push_back(std::max(standard.h[0], 1));
    for (int i = 1; i < n; ++i) hs.push_back(standard.h[i]);
    hypothesis = dss_check(hs).is_dss;
  }
  report.status = !hypothesis ? LowerBoundReport::HypothesisNotMet
                  : report.observed >= report.bound ? LowerBoundReport::Pass
                                                    : LowerBoundReport::Fail;
  return report;
}

// ---------------------------------------------------------------------------
// Open pairs

// Same polynomials, same rational number, same flype/swap orbit, yet not
// identified by the proven equivalences: the census's open questions.
inline std::vector<std::pair<LinkExpr, LinkExpr>> open_pairs(
    const std::vector<CensusRecord>& records) {
  std::vector<std::pair<LinkExpr, LinkExpr>> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const CensusRecord &a = records[i], &b = records[j];
      if (a.class_id != b.class_id || a.orbit_id != b.orbit_id) continue;
      if (!(a.rational == b.rational)) continue;
      if (normalize_equivalence(a.expr) == normalize_equivalence(b.expr)) continue;
      out.emplace_back(a.expr, b.expr);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

inline std::string census_json(const std::vector<CensusRecord>& records) {
  std::string out = "[\n";
  bool first = true;
  for (const auto& r : records) {
    if (!first) out += ",\n";
    first = false;
    out += "  {\"expr\":\"" + detail::json_escape(format_link_expr(r.expr)) + "\"";
    out += ",\"rational\":\"" + r.rational.str() + "\"";
    out += ",\"gamma_minus\":" + r.gammas.minus.json_text();
    out += ",\"gamma_plus\":" + r.gammas.plus.json_text();
    out += ",\"ordered\":\"" + std::string(to_string(r.verdict.status)) + "\"";
    out += ",\"class\":" + std::to_string(r.class_id);
    out += ",\"orbit\":" + std::to_string(r.orbit_id) + "}";
  }
  out += "\n]\n";
  return out;
}

inline std::string census_csv(const std::vector<CensusRecord>& records) {
  std::string out = "expr,rational,gamma_minus,gamma_plus,ordered,class,orbit\n";
  for (const auto& r : records) {
    out += detail::csv_field(format_link_expr(r.expr)) + ",";
    out += r.rational.str() + ",";
    out += detail::csv_field(r.gammas.minus.json_text()) + ",";
    out += detail::csv_field(r.gammas.plus.json_text()) + ",";
    out += std::string(to_string(r.verdict.status)) + ",";
    out += std::to_string(r.class_id) + ",";
    out += std::to_string(r.orbit_id) + "\n";
  }
  return out;
}

}  // namespace lgf
