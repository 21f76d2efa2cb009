#pragma once

// Sweep generators shared by the test binaries.  Kept independent of
// lgf/census.hpp on purpose: the census enumerator is itself under test.

#include <functional>
#include <vector>

#include "lgf/notation.hpp"

namespace lgf_test {

inline std::vector<lgf::LinkVector> standard_vectors(int max_weight) {
  std::vector<lgf::LinkVector> out;
  for (int n = 1; 3 * (n - 1) <= max_weight; ++n) {
    lgf::LinkVector vec;
    vec.h.assign(n, 0);
    vec.v.assign(n - 1, 0);
    vec.p.assign(n, 0);
    vec.q.assign(n - 1, 0);
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
        int i = slot - (n - 1);
        int lo = i == 0 ? 0 : 1;
        for (int val = lo; 2 * val <= budget; ++val) {
          vec.h[i] = val;
          place(slot + 1, budget - 2 * val);
        }
      }
    };
    place(0, max_weight);
  }
  return out;
}

// Every horizontal flype assignment: p_i ∈ {0..2h_i} for i = 1..n-1.
inline std::vector<lgf::LinkVector> all_flypes(const lgf::LinkVector& base) {
  std::vector<lgf::LinkVector> out;
  lgf::LinkVector vec = base;
  std::function<void(int)> place = [&](int i) {
    if (i == base.n() - 1) {
      out.push_back(vec);
      return;
    }
    for (int val = 0; val <= 2 * base.h[i]; ++val) {
      vec.p[i] = val;
      place(i + 1);
    }
  };
  place(0);
  return out;
}

// The 2^{n-1} parity assignments p_i ∈ {0,1} (p_i forced to 0 when h_i = 0).
inline std::vector<lgf::LinkVector> parity_flypes(const lgf::LinkVector& base) {
  std::vector<lgf::LinkVector> out;
  lgf::LinkVector vec = base;
  std::function<void(int)> place = [&](int i) {
    if (i == base.n() - 1) {
      out.push_back(vec);
      return;
    }
    for (int val = 0; val <= (base.h[i] >= 1 ? 1 : 0); ++val) {
      vec.p[i] = val;
      place(i + 1);
    }
  };
  place(0);
  return out;
}

// Every vertical flype assignment with Σ q_i ≤ max_total.
inline std::vector<lgf::LinkVector> vertical_flypes(const lgf::LinkVector& base, int max_total) {
  std::vector<lgf::LinkVector> out;
  lgf::LinkVector vec = base;
  std::function<void(int, int)> place = [&](int i, int budget) {
    if (i == base.n() - 1) {
      out.push_back(vec);
      return;
    }
    for (int val = 0; val <= std::min(base.v[i], budget); ++val) {
      vec.q[i] = val;
      place(i + 1, budget - val);
    }
  };
  place(0, max_total);
  return out;
}

}  // namespace lgf_test
