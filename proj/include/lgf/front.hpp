#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgf/error.hpp"
#include "lgf/notation.hpp"

namespace lgf {

// A Hermite knot: position, height, slope.
struct Knot {
  double q = 0, z = 0, m = 0;
};

// One single-valued graph piece of one strand, a piecewise-cubic Hermite curve.
struct Arc {
  int strand = 0;
  std::vector<Knot> knots;  // ascending q, within [0, 1]
  double lo() const { return knots.front().q; }
  double hi() const { return knots.back().q; }
};

struct Cusp {
  enum Kind { LEFT, RIGHT };
  double q = 0, z = 0, slope = 0;
  Kind kind = LEFT;
  int arc_upper = -1, arc_lower = -1;  // the two joined arcs, locally-upper first
};

// A named q-interval of the layout: oscillation zones H1..Hn, cusp columns
// V1..V(n-1), nesting slots S1..SW, left-moved crossing zones LP<i>, closure C
// and port P, per component.
struct BlockSpan {
  int component = 0;
  std::string label;
  double lo = 0, hi = 0;
};

struct FrontDiagram {
  std::vector<Arc> arcs;
  std::vector<Cusp> cusps;
  std::array<int, 2> basepoint = {-1, -1};  // reference arc per strand
  std::vector<BlockSpan> blocks;
};

namespace detail {

constexpr double geom_tol = 1e-9;

inline double hermite_z(const Knot& a, const Knot& b, double q) {
  const double h = b.q - a.q;
  const double t = (q - a.q) / h;
  const double t2 = t * t, t3 = t2 * t;
  return a.z * (2 * t3 - 3 * t2 + 1) + a.m * h * (t3 - 2 * t2 + t) +
         b.z * (-2 * t3 + 3 * t2) + b.m * h * (t3 - t2);
}

inline double hermite_slope(const Knot& a, const Knot& b, double q) {
  const double h = b.q - a.q;
  const double t = (q - a.q) / h;
  const double t2 = t * t;
  return (a.z * (6 * t2 - 6 * t) + b.z * (6 * t - 6 * t2)) / h +
         a.m * (3 * t2 - 4 * t + 1) + b.m * (3 * t2 - 2 * t);
}

inline std::size_t segment_of(const Arc& arc, double q) {
  std::size_t lo = 0, hi = arc.knots.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (arc.knots[mid].q <= q) lo = mid;
    else hi = mid;
  }
  return lo;
}

inline double arc_z(const Arc& arc, double q) {
  auto s = segment_of(arc, q);
  return hermite_z(arc.knots[s], arc.knots[s + 1], q);
}

inline double arc_slope(const Arc& arc, double q) {
  auto s = segment_of(arc, q);
  return hermite_slope(arc.knots[s], arc.knots[s + 1], q);
}

}  // namespace detail

struct StrandSample {
  int arc = -1;
  double z = 0, slope = 0;
};

// All branches of a strand over q, top first.
inline std::vector<StrandSample> eval_strand(const FrontDiagram& d, int strand, double q) {
  std::vector<StrandSample> out;
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    const Arc& arc = d.arcs[i];
    if (arc.strand != strand) continue;
    if (q < arc.lo() || q >= arc.hi()) continue;  // half-open so joints count once
    out.push_back({i, detail::arc_z(arc, q), detail::arc_slope(arc, q)});
  }
  std::sort(out.begin(), out.end(), [](const StrandSample& a, const StrandSample& b) {
    if (a.z != b.z) return a.z > b.z;
    return a.arc < b.arc;
  });
  return out;
}

inline const BlockSpan& block_span(const FrontDiagram& d, int component, const std::string& label) {
  for (const auto& b : d.blocks)
    if (b.component == component && b.label == label) return b;
  fail(Errc::Internal, "no such block: " + label);
}

// z = 0 passages of a strand as (q, arc id); an identically-flat strand reports none.
inline std::vector<std::pair<double, int>> zero_crossings(const FrontDiagram& d, int strand) {
  std::vector<std::pair<double, int>> out;
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    const Arc& arc = d.arcs[i];
    if (arc.strand != strand) continue;
    bool flat = true;
    for (const auto& k : arc.knots)
      if (std::fabs(k.z) > 1e-12) flat = false;
    if (flat) continue;
    for (std::size_t k = 1; k + 1 < arc.knots.size(); ++k)
      if (std::fabs(arc.knots[k].z) <= 1e-12) out.emplace_back(arc.knots[k].q, i);
    for (std::size_t k = 0; k + 1 < arc.knots.size(); ++k) {
      double za = arc.knots[k].z, zb = arc.knots[k + 1].z;
      if ((za > 1e-12 && zb < -1e-12) || (za < -1e-12 && zb > 1e-12)) {
        double lo = arc.knots[k].q, hi = arc.knots[k + 1].q;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (lo + hi);
          double zm = detail::hermite_z(arc.knots[k], arc.knots[k + 1], mid);
          if ((za < 0) == (zm < 0)) lo = mid;
          else hi = mid;
        }
        out.emplace_back(0.5 * (lo + hi), i);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Branch index per arc: 0 on the strand's basepoint arc, +1 for the locally
// upper arc across every cusp, constant across plain joints. Derived from the
// drawn geometry alone.
inline std::map<int, int> branch_indices(const FrontDiagram& d, int strand) {
  struct End {
    int arc;
    bool left;
    double q, z, m;
  };
  std::vector<End> ends;
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    if (d.arcs[i].strand != strand) continue;
    ids.push_back(i);
    const auto& ks = d.arcs[i].knots;
    ends.push_back({i, true, ks.front().q, ks.front().z, ks.front().m});
    ends.push_back({i, false, ks.back().q, ks.back().z, ks.back().m});
  }
  auto wrap = [](double q) {
    double w = q - std::floor(q);
    if (w > 1 - 1e-7) w = 0;
    return w;
  };
  auto same_point = [&](const End& a, const End& b) {
    return std::fabs(wrap(a.q) - wrap(b.q)) < 1e-7 && std::fabs(a.z - b.z) < 1e-7 &&
           std::fabs(a.m - b.m) < 1e-6;
  };
  struct Edge {
    int upper, lower, delta;  // index(upper) = index(lower) + delta
  };
  std::vector<Edge> edges;
  std::vector<bool> used(ends.size(), false);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (used[j]) continue;
      if (!same_point(ends[i], ends[j])) continue;
      used[i] = used[j] = true;
      if (ends[i].left != ends[j].left) {
        edges.push_back({ends[i].arc, ends[j].arc, 0});
      } else {
        const Arc& A = d.arcs[ends[i].arc];
        const Arc& B = d.arcs[ends[j].arc];
        double probe;
        if (ends[i].left) {
          double inner = std::min(A.knots[1].q, B.knots[1].q);
          probe = ends[i].q + 0.5 * (inner - ends[i].q);
        } else {
          double inner = std::max(A.knots[A.knots.size() - 2].q, B.knots[B.knots.size() - 2].q);
          probe = ends[i].q - 0.5 * (ends[i].q - inner);
        }
        double za = detail::arc_z(A, probe), zb = detail::arc_z(B, probe);
        if (std::fabs(za - zb) < detail::geom_tol)
          fail(Errc::Inconsistent, "cusp arcs indistinguishable near q=" + std::to_string(probe));
        if (za > zb) edges.push_back({ends[i].arc, ends[j].arc, 1});
        else edges.push_back({ends[j].arc, ends[i].arc, 1});
      }
      break;
    }
  }
  for (std::size_t i = 0; i < ends.size(); ++i)
    if (!used[i])
      fail(Errc::Inconsistent, "dangling arc endpoint on strand " + std::to_string(strand));

  std::map<int, int> index;
  int base = d.basepoint[strand];
  if (base < 0 || base >= static_cast<int>(d.arcs.size()) || d.arcs[base].strand != strand)
    fail(Errc::Inconsistent, "missing basepoint for strand " + std::to_string(strand));
  index[base] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : edges) {
      auto iu = index.find(e.upper), il = index.find(e.lower);
      if (iu != index.end() && il == index.end()) {
        index[e.lower] = iu->second - e.delta;
        changed = true;
      } else if (il != index.end() && iu == index.end()) {
        index[e.upper] = il->second + e.delta;
        changed = true;
      } else if (iu != index.end() && il != index.end() && iu->second != il->second + e.delta) {
        fail(Errc::Inconsistent, "branch index circuit does not close");
      }
    }
  }
  for (int id : ids)
    if (!index.count(id)) fail(Errc::Inconsistent, "arc unreachable from the basepoint");
  return index;
}

// ---------------------------------------------------------------------------
// Construction

namespace detail {

constexpr int kAuto = 0, kZero = 1, kCross = 2, kFixed = 3;

struct BKnot {
  double q = 0, z = 0;
  int mode = kAuto;
  double m = 0;  // meaningful when mode == kFixed
};

struct BranchPlan {
  std::vector<BKnot> pts;
  int cusp_start = -1, cusp_end = -1;
  bool upper_start = false, upper_end = false;
  bool closed = false;
  std::vector<int> arcs;
};

struct CuspPlan {
  double q = 0, z = 0, delta = 0;
  Cusp::Kind kind = Cusp::LEFT;
};

struct CompLayout {
  LinkVector vec;
  double scale = 1;
  int W = 0;
  std::vector<int> D;           // D[i] = v_1 + ... + v_{i-1}
  std::vector<bool> lens_flip;  // per lens depth, from the left-moved crossings
  std::vector<int> ell_cusp, r_cusp;
  std::vector<double> zone_lo, zone_hi, lp_lo, lp_hi;
  bool hump = false;
};

class Builder {
 public:
  explicit Builder(const LinkExpr& e) : expr_(e) {}

  FrontDiagram run() {
    layout();
    place_cusps();
    tune_arrivals();
    build_exterior();
    for (int j = 0; j < static_cast<int>(comps_.size()); ++j) build_deep(j);
    return assemble();
  }

 private:
  const LinkExpr& expr_;
  std::vector<CompLayout> comps_;
  std::vector<CuspPlan> cusps_;
  std::vector<BranchPlan> branches_;
  std::vector<BlockSpan> blocks_;
  std::vector<int> cuts_;  // components owning at least one lens
  int exterior_of_comp0_ = -1;
  double s_top_ = 1.0;

  static int column_of_depth(const LinkVector& v, int d) {
    int acc = 0;
    for (int i = 1; i < v.n(); ++i) {
      acc += v.v[i - 1];
      if (d <= acc) return i;
    }
    fail(Errc::Internal, "lens depth out of range");
  }

  void layout() {
    const int m = static_cast<int>(expr_.components.size());
    bool all_first_zero = true;
    for (const auto& c : expr_.components)
      if (c.h[0] != 0) all_first_zero = false;
    int carrier = -1;
    if (all_first_zero) {
      for (int j = 0; j < m && carrier < 0; ++j) {
        int W = 0;
        for (int x : expr_.components[j].v) W += x;
        if (W > 0) carrier = j;
      }
      if (carrier < 0) carrier = 0;
    }

    struct Col {
      int comp;
      std::string label;
      double units;
    };
    std::vector<Col> cols;
    for (int j = 0; j < m; ++j) {
      const LinkVector& vec = expr_.components[j];
      const int n = vec.n();
      CompLayout L;
      L.vec = vec;
      L.scale = std::pow(4.0, -j);
      L.D.assign(n + 1, 0);
      for (int i = 2; i <= n; ++i) L.D[i] = L.D[i - 1] + vec.v[i - 2];
      L.W = L.D[n];
      L.hump = all_first_zero && j == carrier;
      L.lens_flip.assign(L.W + 1, false);
      for (int d = 1; d <= L.W; ++d) {
        int g = column_of_depth(vec, d);
        int par = 0;
        for (int t = 1; t <= g; ++t) par += vec.p[t - 1];
        L.lens_flip[d] = par % 2 == 1;
      }
      L.zone_lo.assign(n + 1, 0);
      L.zone_hi.assign(n + 1, 0);
      L.lp_lo.assign(n + 1, 0);
      L.lp_hi.assign(n + 1, 0);
      L.ell_cusp.assign(L.W + 1, -1);
      L.r_cusp.assign(L.W + 1, -1);
      comps_.push_back(L);

      for (int d = 1; d <= L.W; ++d) {
        double u = 1.8;
        for (int i = 1; i < n; ++i)
          if (L.D[i] + 1 == d && vec.p[i - 1] > 0) u += vec.p[i - 1] + 2.0;
        cols.push_back({j, "S" + std::to_string(d), u});
      }
      for (int i = n; i >= 1; --i) {
        double u = 2.0 * vec.h[i - 1] - (i < n ? vec.p[i - 1] : 0) + 4.0;
        if (L.hump && i == 1) u += 3.0;
        cols.push_back({j, "H" + std::to_string(i), u});
        if (i >= 2) cols.push_back({j, "V" + std::to_string(i - 1), 1.6 * vec.v[i - 2] + 1.0});
      }
      cols.push_back({j, "C", 2.0});
      cols.push_back({j, "P", 2.5});
    }

    double total = 0;
    for (const auto& c : cols) total += c.units;
    double at = 0;
    for (const auto& c : cols) {
      double lo = at / total, hi = (at + c.units) / total;
      at += c.units;
      blocks_.push_back({c.comp, c.label, lo, hi});
      if (c.label[0] == 'H') {
        int i = std::stoi(c.label.substr(1));
        comps_[c.comp].zone_lo[i] = lo;
        comps_[c.comp].zone_hi[i] = hi;
      }
    }
    for (int j = 0; j < m; ++j)
      if (comps_[j].W > 0) cuts_.push_back(j);
  }

  const BlockSpan& span(int comp, const std::string& label) const {
    for (const auto& b : blocks_)
      if (b.component == comp && b.label == label) return b;
    fail(Errc::Internal, "missing layout column " + label);
  }

  int add_cusp(double q, double z, double delta, Cusp::Kind kind) {
    cusps_.push_back({q, z, delta, kind});
    return static_cast<int>(cusps_.size()) - 1;
  }

  void place_cusps() {
    for (int j = 0; j < static_cast<int>(comps_.size()); ++j) {
      CompLayout& L = comps_[j];
      const int n = L.vec.n();
      for (int d = 1; d <= L.W; ++d) {
        const BlockSpan& slot = span(j, "S" + std::to_string(d));
        double w = slot.hi - slot.lo;
        double zl = L.scale * (0.32 - 0.003 * d);
        if (L.hump && d == 1) zl = 1.1 * s_top_;
        L.ell_cusp[d] = add_cusp(slot.lo + 0.22 * w, zl, 0.13 * w, Cusp::LEFT);
        for (int i = 1; i < n; ++i)
          if (L.D[i] + 1 == d && L.vec.p[i - 1] > 0) {
            L.lp_lo[i] = slot.lo + 0.45 * w;
            L.lp_hi[i] = slot.hi - 0.05 * w;
            blocks_.push_back({j, "LP" + std::to_string(i), L.lp_lo[i], L.lp_hi[i]});
          }
      }
      for (int i = 1; i < n; ++i) {
        const BlockSpan& col = span(j, "V" + std::to_string(i));
        double w = col.hi - col.lo;
        const int v = L.vec.v[i - 1];
        std::vector<int> depths;  // left to right, deepest first
        for (int d = L.D[i + 1]; d >= L.D[i] + 1; --d) depths.push_back(d);
        int twist = L.vec.q[i - 1];
        if (twist >= 1) std::reverse(depths.begin(), depths.begin() + std::min(twist, v));
        for (int k = 0; k < v; ++k) {
          double q = col.lo + (k + 0.7) * w / (v + 0.6);
          double zr = L.scale * (0.12 - 0.003 * depths[k]);
          L.r_cusp[depths[k]] = add_cusp(q, zr, 0.18 * w / (v + 0.6), Cusp::RIGHT);
        }
      }
    }
  }

  // The exterior branch strictly descends into the closing cusp of the next
  // summand's tangle, so that cusp must sit below everything the branch
  // passed since its last feature.
  void tune_arrivals() {
    const int m = static_cast<int>(comps_.size());
    for (std::size_t ci = 0; ci < cuts_.size(); ++ci) {
      int k = cuts_[ci];
      int k2 = cuts_[(ci + 1) % cuts_.size()];
      double last = 0.65 * cusps_[comps_[k].ell_cusp[1]].z;
      for (int t = 0;; ++t) {
        int j = (k + t) % m;
        if (t > 0 && j == k2) break;
        const CompLayout& L = comps_[j];
        if (L.hump) last = 2.2 * s_top_;
        else if (L.vec.h[0] > 0) last = 0.8 * L.scale;
      }
      CuspPlan& arrival = cusps_[comps_[k2].r_cusp[1]];
      arrival.z = std::min(arrival.z, 0.4 * last);
    }
  }

  int new_branch() {
    branches_.emplace_back();
    return static_cast<int>(branches_.size()) - 1;
  }

  void start_at_cusp(BranchPlan& b, int cusp, bool upper) {
    const CuspPlan& c = cusps_[cusp];
    b.cusp_start = cusp;
    b.upper_start = upper;
    b.pts.push_back({c.q, c.z, kFixed, -0.25 * c.z / c.delta});
    b.pts.push_back({c.q + c.delta, c.z * (1 - (upper ? 0.15 : 0.35)), kAuto, 0});
  }

  void end_at_cusp(BranchPlan& b, int cusp, bool upper, double shift) {
    const CuspPlan& c = cusps_[cusp];
    b.cusp_end = cusp;
    b.upper_end = upper;
    b.pts.push_back({c.q + shift - c.delta, c.z * (1 + (upper ? 0.35 : 0.15)), kAuto, 0});
    b.pts.push_back({c.q + shift, c.z, kFixed, -0.25 * c.z / c.delta});
  }

  // Extrema first..last of a 2h-oscillation laid into [lo, hi]. The pattern
  // starts with a minimum; one crossing on the enter side keeps the block's
  // z = 0 count at 2h without disturbing the descending cusp arrivals.
  void osc_piece(BranchPlan& b, double lo, double hi, int first, int last, double A) {
    const double w = hi - lo;
    const int count = last - first + 1;
    b.pts.push_back({lo + 0.05 * w, 0, kCross, 0});
    for (int k = 0; k < count; ++k) {
      const bool is_min = (first + k) % 2 == 1;
      double q = lo + 0.10 * w + (k + 0.5) * 0.8 * w / count;
      b.pts.push_back({q, is_min ? -A : A, kZero, 0});
      if (k + 1 < count) b.pts.push_back({q + 0.4 * 0.8 * w / count, 0, kCross, 0});
    }
  }

  void emit_block(BranchPlan& b, int j, int i, double shift) {
    const CompLayout& L = comps_[j];
    const int n = L.vec.n();
    const int h = L.vec.h[i - 1];
    const int p = i < n ? L.vec.p[i - 1] : 0;
    if (h == 0) {
      if (i == 1 && L.hump) {
        double lo = L.zone_lo[1] + shift, hi = L.zone_hi[1] + shift;
        b.pts.push_back({lo + 0.30 * (hi - lo), 0.9 * s_top_, kZero, 0});
        b.pts.push_back({lo + 0.65 * (hi - lo), 2.2 * s_top_, kZero, 0});
      }
      return;
    }
    const double A = L.scale * (0.4 + 0.4 * std::pow(2.0, 1 - i));
    if (p > 0) osc_piece(b, L.lp_lo[i] + shift, L.lp_hi[i] + shift, 1, p, A);
    if (p < 2 * h) osc_piece(b, L.zone_lo[i] + shift, L.zone_hi[i] + shift, p + 1, 2 * h, A);
  }

  void build_exterior() {
    const int m = static_cast<int>(comps_.size());
    if (cuts_.empty()) {
      int bid = new_branch();
      BranchPlan& loop = branches_[bid];
      loop.closed = true;
      bool any_hump = false;
      double last_scale = comps_[0].scale;
      for (const auto& L : comps_) {
        if (L.hump) any_hump = true;
        if (L.vec.h[0] > 0) last_scale = L.scale;
      }
      double zs = any_hump ? 1.4 * s_top_ : 0.18 * last_scale;
      loop.pts.push_back({0.0, zs, kAuto, 0});
      for (int j = 0; j < m; ++j) emit_block(loop, j, 1, 0.0);
      loop.pts.push_back({1.0, zs, kAuto, 0});
      exterior_of_comp0_ = bid;
      return;
    }
    for (std::size_t ci = 0; ci < cuts_.size(); ++ci) {
      int k = cuts_[ci];
      int k2 = cuts_[(ci + 1) % cuts_.size()];
      int bid = new_branch();
      start_at_cusp(branches_[bid], comps_[k].ell_cusp[1], !comps_[k].lens_flip[1]);
      for (int t = 0;; ++t) {
        int j = (k + t) % m;
        double shift = (k + t) >= m ? 1.0 : 0.0;
        if (t > 0 && j == k2) {
          end_at_cusp(branches_[bid], comps_[k2].r_cusp[1], !comps_[k2].lens_flip[1], shift);
          break;
        }
        emit_block(branches_[bid], j, 1, shift);
        if (j == 0) exterior_of_comp0_ = bid;
      }
    }
  }

  void build_deep(int j) {
    const CompLayout& L = comps_[j];
    const int n = L.vec.n();
    for (int d = 1; d + 1 <= L.W; ++d) {
      int rb = new_branch();
      start_at_cusp(branches_[rb], L.ell_cusp[d + 1], !L.lens_flip[d + 1]);
      for (int i = 2; i < n; ++i)
        if (L.D[i] == d) emit_block(branches_[rb], j, i, 0.0);
      end_at_cusp(branches_[rb], L.r_cusp[d], L.lens_flip[d], 0.0);

      int lb = new_branch();
      start_at_cusp(branches_[lb], L.ell_cusp[d], L.lens_flip[d]);
      end_at_cusp(branches_[lb], L.r_cusp[d + 1], !L.lens_flip[d + 1], 0.0);
    }
    if (L.W > 0) {
      int bb = new_branch();
      start_at_cusp(branches_[bb], L.ell_cusp[L.W], L.lens_flip[L.W]);
      emit_block(branches_[bb], j, n, 0.0);
      end_at_cusp(branches_[bb], L.r_cusp[L.W], L.lens_flip[L.W], 0.0);
    }
  }

  static double harmonic(double a, double b) {
    if (a * b <= 0) return 0;
    return 2 * a * b / (a + b);
  }

  void resolve_slopes(BranchPlan& b) const {
    auto& p = b.pts;
    const std::size_t n = p.size();
    std::vector<double> sec(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (p[i + 1].q - p[i].q <= 1e-12) fail(Errc::Internal, "knots out of order");
      sec[i] = (p[i + 1].z - p[i].z) / (p[i + 1].q - p[i].q);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i].mode == kFixed) continue;
      if (p[i].mode == kZero) {
        p[i].m = 0;
        continue;
      }
      double sl, sr;
      if (i == 0 || i + 1 == n) {
        if (!b.closed) fail(Errc::Internal, "open branch without cusp slopes");
        sl = sec[n - 2];
        sr = sec[0];
      } else {
        sl = sec[i - 1];
        sr = sec[i];
      }
      p[i].m = harmonic(sl, sr);
      if (p[i].mode == kCross && p[i].m == 0)
        fail(Errc::Internal, "flat slope at a strand crossing");
    }
    if (b.closed) p[n - 1].m = p[0].m;
  }

  FrontDiagram assemble() {
    FrontDiagram out;
    const int curvy = expr_.swapped ? 0 : 1;
    const int flat = 1 - curvy;
    Arc flat_arc;
    flat_arc.strand = flat;
    flat_arc.knots = {{0, 0, 0}, {1, 0, 0}};
    out.arcs.push_back(flat_arc);
    out.basepoint[flat] = 0;

    for (auto& b : branches_) {
      resolve_slopes(b);
      std::vector<std::vector<Knot>> pieces(1);
      for (std::size_t i = 0; i < b.pts.size(); ++i) {
        const BKnot& k = b.pts[i];
        if (k.q > 1.0 + 1e-12 && pieces.size() == 1) {
          const BKnot& a = b.pts[i - 1];
          if (std::fabs(a.q - 1.0) > 1e-12) {
            Knot ka{a.q, a.z, a.m}, kb{k.q, k.z, k.m};
            double z1 = hermite_z(ka, kb, 1.0), m1 = hermite_slope(ka, kb, 1.0);
            pieces[0].push_back({1.0, z1, m1});
            pieces.push_back({{0.0, z1, m1}});
          } else {
            pieces.push_back({{0.0, a.z, a.m}});
          }
        }
        double shift = pieces.size() == 2 ? 1.0 : 0.0;
        pieces.back().push_back({k.q - shift, k.z, k.m});
      }
      for (auto& piece : pieces) {
        Arc arc;
        arc.strand = curvy;
        arc.knots = std::move(piece);
        b.arcs.push_back(static_cast<int>(out.arcs.size()));
        out.arcs.push_back(std::move(arc));
      }
    }

    for (std::size_t c = 0; c < cusps_.size(); ++c) {
      Cusp rec;
      rec.q = cusps_[c].q;
      rec.z = cusps_[c].z;
      rec.slope = -0.25 * cusps_[c].z / cusps_[c].delta;
      rec.kind = cusps_[c].kind;
      for (const auto& b : branches_) {
        if (b.cusp_start == static_cast<int>(c))
          (b.upper_start ? rec.arc_upper : rec.arc_lower) = b.arcs.front();
        if (b.cusp_end == static_cast<int>(c))
          (b.upper_end ? rec.arc_upper : rec.arc_lower) = b.arcs.back();
      }
      if (rec.arc_upper < 0 || rec.arc_lower < 0) fail(Errc::Geometry, "cusp with a missing side");
      out.cusps.push_back(rec);
    }

    double qm = 0.5 * (comps_[0].zone_lo[1] + comps_[0].zone_hi[1]);
    for (int arc_id : branches_[exterior_of_comp0_].arcs)
      if (out.arcs[arc_id].lo() <= qm && qm < out.arcs[arc_id].hi()) out.basepoint[curvy] = arc_id;
    if (out.basepoint[curvy] < 0) fail(Errc::Geometry, "no basepoint arc over the first block");

    out.blocks = blocks_;
    validate(out, curvy);
    return out;
  }

  void validate(const FrontDiagram& d, int curvy) const {
    for (const auto& arc : d.arcs) {
      if (arc.knots.size() < 2) fail(Errc::Geometry, "degenerate arc");
      for (std::size_t i = 0; i + 1 < arc.knots.size(); ++i)
        if (arc.knots[i + 1].q - arc.knots[i].q <= 1e-12)
          fail(Errc::Geometry, "arc is not a graph over q");
      if (arc.lo() < -1e-12 || arc.hi() > 1 + 1e-12) fail(Errc::Geometry, "arc leaves [0,1]");
      for (const auto& k : arc.knots)
        if (!std::isfinite(k.z) || !std::isfinite(k.m)) fail(Errc::Geometry, "non-finite knot");
    }
    int lefts = 0, rights = 0, expect = 0;
    for (const auto& c : d.cusps) (c.kind == Cusp::LEFT ? lefts : rights)++;
    for (const auto& L : comps_) expect += L.W;
    if (lefts != expect || rights != expect)
      fail(Errc::Geometry, "cusp counts do not match the twist totals");

    int crossings = 0, expect_x = 0;
    for (const auto& [q, arc] : zero_crossings(d, curvy)) {
      if (std::fabs(arc_slope(d.arcs[arc], q)) < 1e-9)
        fail(Errc::Geometry, "non-transversal strand crossing");
      ++crossings;
    }
    for (const auto& L : comps_)
      for (int x : L.vec.h) expect_x += 2 * x;
    if (crossings != expect_x) fail(Errc::Geometry, "crossing count does not match the tangle");

    for (const auto& blk : d.blocks) {
      double q = 0.5 * (blk.lo + blk.hi);
      for (int s : {0, 1}) {
        auto hits = eval_strand(d, s, q);
        if (hits.empty() || hits.size() % 2 == 0)
          fail(Errc::Geometry, "even strand coverage over " + blk.label);
      }
    }
    try {
      branch_indices(d, 0);
      branch_indices(d, 1);
    } catch (const Error& err) {
      fail(Errc::Geometry, std::string("branch structure invalid: ") + err.what());
    }
  }
};

}  // namespace detail

// Build the standard-position front of a link expression: a flat strand plus a
// nested-lens curve carrying each summand's oscillation blocks, closing
// staircase and cusp columns side by side around the circle.
inline FrontDiagram build_front(const LinkExpr& e) {
  validate_expr(e);
  detail::Builder builder(e);
  return builder.run();
}

}  // namespace lgf
