#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "lgf/error.hpp"
#include "lgf/front.hpp"
#include "lgf/gamma.hpp"

namespace lgf {

struct OracleOptions {
  int grid_per_unit = 4096;  // slope-difference samples per unit of q
  double root_tol = 1e-9;    // bisection width for critical positions
  double value_tol = 1e-7;   // clustering width for critical values
};

// A transversal critical point of the sheet-difference function: one arc of
// each strand over a common q, with the difference value and its local shape.
struct CriticalPair {
  double q = 0;
  int arc1 = -1, arc0 = -1;  // strand-1 arc minus strand-0 arc
  double value = 0;          // z1 - z0, never zero for an embedded link
  int sign = 0;
  int graph_index = 0;    // 0 at a difference minimum, 1 at a maximum
  int shifted_index = 0;  // graph index plus the branch-level offset
};

namespace detail {

struct RootEvent {
  double q = 0;
  int graph_index = 0;
};

inline int sgn(double x) {
  if (x > 1e-13) return 1;
  if (x < -1e-13) return -1;
  return 0;
}

inline int classify(double before, double after, double q) {
  int sa = sgn(before), sb = sgn(after);
  if (sa < 0 && sb > 0) return 0;
  if (sa > 0 && sb < 0) return 1;
  fail(Errc::Degenerate,
       "indecisive critical point near q=" + std::to_string(q) + "; perturb the front");
}

// All slope-difference roots of one arc pair over [lo, hi].
inline std::vector<RootEvent> pair_roots(const Arc& a1, const Arc& a0, double lo, double hi,
                                         const OracleOptions& opts) {
  const int n = std::max(16, static_cast<int>(opts.grid_per_unit * (hi - lo)));
  const double step = (hi - lo) / n;
  auto f = [&](double q) { return arc_slope(a1, q) - arc_slope(a0, q); };
  std::vector<double> val(n + 1);
  for (int k = 0; k <= n; ++k) val[k] = f(lo + k * step);

  std::vector<RootEvent> roots;
  for (int k = 0; k <= n; ++k) {
    if (sgn(val[k]) != 0) continue;
    if (k == 0 || k == n || sgn(val[k - 1]) == 0 || sgn(val[k + 1]) == 0)
      fail(Errc::Degenerate, "flat slope difference near q=" + std::to_string(lo + k * step));
    roots.push_back({lo + k * step, classify(val[k - 1], val[k + 1], lo + k * step)});
  }
  for (int k = 0; k + 1 <= n; ++k) {
    if (sgn(val[k]) * sgn(val[k + 1]) >= 0) continue;
    double a = lo + k * step, b = a + step;
    double fa = val[k];
    while (b - a > opts.root_tol) {
      double mid = 0.5 * (a + b);
      double fm = f(mid);
      if ((fa < 0) == (fm < 0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    roots.push_back({0.5 * (a + b), classify(val[k], val[k + 1], a)});
  }
  std::sort(roots.begin(), roots.end(), [](const RootEvent& x, const RootEvent& y) {
    return x.q < y.q;
  });
  std::vector<RootEvent> merged;
  for (const auto& r : roots)
    if (merged.empty() || r.q - merged.back().q > 10 * opts.root_tol) merged.push_back(r);
  return merged;
}

}  // namespace detail

// Every critical pair of the diagram, ordered by position.
inline std::vector<CriticalPair> critical_pairs(const FrontDiagram& d,
                                                const OracleOptions& opts = {}) {
  auto idx1 = branch_indices(d, 1);
  auto idx0 = branch_indices(d, 0);
  std::vector<CriticalPair> out;
  for (int a1 = 0; a1 < static_cast<int>(d.arcs.size()); ++a1) {
    if (d.arcs[a1].strand != 1) continue;
    for (int a0 = 0; a0 < static_cast<int>(d.arcs.size()); ++a0) {
      if (d.arcs[a0].strand != 0) continue;
      double lo = std::max(d.arcs[a1].lo(), d.arcs[a0].lo());
      double hi = std::min(d.arcs[a1].hi(), d.arcs[a0].hi());
      if (hi - lo <= 10 * opts.root_tol) continue;
      for (const auto& r : detail::pair_roots(d.arcs[a1], d.arcs[a0], lo, hi, opts)) {
        double value = detail::arc_z(d.arcs[a1], r.q) - detail::arc_z(d.arcs[a0], r.q);
        if (std::fabs(value) <= detail::geom_tol)
          fail(Errc::Tangency, "strands touch with equal slope near q=" + std::to_string(r.q));
        CriticalPair cp;
        cp.q = r.q;
        cp.arc1 = a1;
        cp.arc0 = a0;
        cp.value = value;
        cp.sign = value > 0 ? 1 : -1;
        cp.graph_index = r.graph_index;
        cp.shifted_index = idx1.at(a1) - idx0.at(a0) + r.graph_index;
        out.push_back(cp);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CriticalPair& x, const CriticalPair& y) {
    if (x.q != y.q) return x.q < y.q;
    if (x.arc1 != y.arc1) return x.arc1 < y.arc1;
    return x.arc0 < y.arc0;
  });
  return out;
}

// One cluster of equal critical values sharing a shifted index.
struct Band {
  double value = 0;
  int mult = 0;
  int index = 0;
};

// Negative bands ascending by value, positive bands descending: both run from
// the outermost (largest gap) inward.
struct ValueLadder {
  std::vector<Band> lower, upper;
};

namespace detail {

inline std::string band_text(const std::vector<Band>& bands) {
  std::string s;
  char buf[64];
  for (const auto& b : bands) {
    std::snprintf(buf, sizeof buf, " %d@%d(%.6f)", b.mult, b.index, b.value);
    s += buf;
  }
  return s.empty() ? " -" : s;
}

inline std::string ladder_text(const ValueLadder& lad) {
  return "lower:" + band_text(lad.lower) + "; upper:" + band_text(lad.upper);
}

inline std::vector<Band> cluster(std::vector<CriticalPair> side, double tol) {
  std::vector<Band> bands;
  for (const auto& p : side) {
    if (!bands.empty() && std::fabs(p.value - bands.back().value) <= tol) {
      if (p.shifted_index != bands.back().index)
        fail(Errc::Inconclusive, "mixed band at value " + std::to_string(p.value) +
                                     ": indices " + std::to_string(bands.back().index) + " and " +
                                     std::to_string(p.shifted_index));
      bands.back().mult++;
    } else {
      bands.push_back({p.value, 1, p.shifted_index});
    }
  }
  return bands;
}

}  // namespace detail

inline ValueLadder build_ladder(const std::vector<CriticalPair>& pairs, double value_tol = 1e-7) {
  std::vector<CriticalPair> neg, pos;
  for (const auto& p : pairs) (p.sign < 0 ? neg : pos).push_back(p);
  std::sort(neg.begin(), neg.end(),
            [](const CriticalPair& a, const CriticalPair& b) { return a.value < b.value; });
  std::sort(pos.begin(), pos.end(),
            [](const CriticalPair& a, const CriticalPair& b) { return a.value > b.value; });
  ValueLadder lad;
  lad.lower = detail::cluster(std::move(neg), value_tol);
  lad.upper = detail::cluster(std::move(pos), value_tol);
  return lad;
}

// Read the pair of polynomials off the ladder. Every band either cancels
// against the matching band of the other sign one level up, or belongs to the
// unpaired top (or bottom) couple that survives on its own.
inline GammaPair read_ladder(const ValueLadder& lad) {
  const auto& lo = lad.lower;
  const auto& up = lad.upper;
  auto balanced = [&](std::size_t lo_at, std::size_t up_at) {
    if (lo.size() - lo_at != up.size() - up_at) return false;
    for (std::size_t t = 0; t + lo_at < lo.size(); ++t) {
      const Band& a = lo[lo_at + t];
      const Band& b = up[up_at + t];
      if (a.mult != b.mult || b.index != a.index + 1) return false;
    }
    return true;
  };

  bool ok = false;
  if (balanced(0, 0)) {
    ok = true;
  } else if (up.size() == lo.size() + 2 && up[0].mult == 1 && up[1].mult == 1 &&
             up[0].index == up[1].index + 1 && balanced(0, 2)) {
    ok = true;  // an unpaired couple on top
  } else if (lo.size() == up.size() + 2 && lo[0].mult == 1 && lo[1].mult == 1 &&
             lo[1].index == lo[0].index + 1 && balanced(2, 0)) {
    ok = true;  // an unpaired couple at the bottom
  }
  if (!ok)
    fail(Errc::Inconclusive, "value ladder matched no counting template; " +
                                 detail::ladder_text(lad));

  GammaPair g;
  for (const auto& b : lo) g.minus.add_term(b.index, b.mult);
  for (const auto& b : up) g.plus.add_term(b.index, b.mult);
  return g;
}

// Independent geometric computation of the polynomial pair: draw the front,
// find the critical pairs, band them by value and read the ladder.
inline GammaPair oracle_gamma(const LinkExpr& e, const OracleOptions& opts = {}) {
  FrontDiagram d = build_front(e);
  GammaPair g = read_ladder(build_ladder(critical_pairs(d, opts), opts.value_tol));
  LaurentPoly bound = add(shift(g.minus, 1), LaurentPoly::one_plus_lambda());
  if (!dominated_by(g.plus, bound))
    fail(Errc::NormalizationSuspect,
         "upper polynomial exceeds the shifted lower bound: " + g.plus.text() + " vs " +
             bound.text());
  return g;
}

}  // namespace lgf
