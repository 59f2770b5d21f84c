#pragma once

// Deliberately simple reference implementations used to derive expected values.
// They share no code with the library: plain strings, vectors and exhaustive loops.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace naive {

using Bits = std::string;  // "0110"
using Edges = std::vector<std::pair<int, int>>;

inline int ones(const Bits& s) { return static_cast<int>(std::count(s.begin(), s.end(), '1')); }

inline int mu0(const Bits& x, const Bits& xhat) {
  int c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) c += x[i] == '1' && xhat[i] == '0';
  return c;
}

inline int mu1(const Bits& x, const Bits& xhat) {
  int c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) c += x[i] == '0' && xhat[i] == '1';
  return c;
}

inline std::int64_t asg_cost(std::int64_t t, const Bits& x, const Bits& y) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] == '1') {
      c += 1;
    } else if (x[i] == '1') {
      c += t;
    }
  }
  return c;
}

// nullopt encodes an infinite cost.
inline std::optional<std::int64_t> asg_inf_cost(const Bits& x, const Bits& y) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == '1' && y[i] == '0') return std::nullopt;
    c += y[i] == '1';
  }
  return c;
}

inline Bits mask_bits(std::uint32_t mask, int n) {
  Bits s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((mask >> (n - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

// Minimum number of ones over feasible selections of n items, by enumeration.
inline std::optional<int> min_ones(int n, const std::function<bool(const Bits&)>& feasible) {
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Bits y = mask_bits(mask, n);
    if (feasible(y) && (!best || ones(y) < *best)) best = ones(y);
  }
  return best;
}

inline bool is_cover(const Edges& edges, const Bits& y) {
  for (auto [u, v] : edges) {
    if (y[u] == '0' && y[v] == '0') return false;
  }
  return true;
}

inline bool dominates(int n, const Edges& edges, const Bits& y) {
  for (int v = 0; v < n; ++v) {
    if (y[v] == '1') continue;
    bool covered = false;
    for (auto [a, b] : edges) {
      if ((a == v && y[b] == '1') || (b == v && y[a] == '1')) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

// Proper k-coloring of the vertices with y == '0', by trying every assignment.
inline bool kept_colorable(int n, const Edges& edges, const Bits& y, int k) {
  std::vector<int> kept;
  for (int v = 0; v < n; ++v) {
    if (y[v] == '0') kept.push_back(v);
  }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::function<bool(std::size_t)> go = [&](std::size_t p) {
    if (p == kept.size()) {
      for (auto [a, b] : edges) {
        if (color[a] >= 0 && color[a] == color[b]) return false;
      }
      return true;
    }
    for (int c = 0; c < k; ++c) {
      color[kept[p]] = c;
      if (go(p + 1)) return true;
    }
    color[kept[p]] = -1;
    return false;
  };
  return go(0);
}

// Open intervals: (a,b) and (c,d) meet iff a < d and c < b.
inline bool meet(std::pair<int, int> s, std::pair<int, int> r) { return s.first < r.second && r.first < s.second; }

inline bool kept_disjoint(const std::vector<std::pair<int, int>>& iv, const Bits& y) {
  for (std::size_t i = 0; i < iv.size(); ++i) {
    for (std::size_t j = i + 1; j < iv.size(); ++j) {
      if (y[i] == '0' && y[j] == '0' && meet(iv[i], iv[j])) return false;
    }
  }
  return true;
}

// Clause as two signed 1-based literals.
inline int unsatisfied(const std::vector<std::pair<int, int>>& clauses, const Bits& assignment) {
  auto value = [&](int lit) {
    bool v = assignment[static_cast<std::size_t>(std::abs(lit) - 1)] == '1';
    return lit > 0 ? v : !v;
  };
  int c = 0;
  for (auto [a, b] : clauses) c += !(value(a) || value(b));
  return c;
}

struct LfdResult {
  int faults = 0;
  Bits labels;
};

// Belady from an empty cache; ties (including never-again pages) evict the smallest page.
inline LfdResult lfd(const std::vector<int>& trace, int k) {
  LfdResult r;
  r.labels.assign(trace.size(), '0');
  std::map<int, std::size_t> cached;  // page -> index of its latest request
  for (std::size_t i = 0; i < trace.size(); ++i) {
    int p = trace[i];
    if (cached.count(p)) {
      cached[p] = i;
      continue;
    }
    ++r.faults;
    if (static_cast<int>(cached.size()) == k) {
      int victim = -1;
      std::size_t victim_next = 0;
      for (auto [q, last] : cached) {
        std::size_t next = std::numeric_limits<std::size_t>::max();
        for (std::size_t j = i + 1; j < trace.size(); ++j) {
          if (trace[j] == q) {
            next = j;
            break;
          }
        }
        if (victim < 0 || next > victim_next) {
          victim = q;
          victim_next = next;
        }
      }
      r.labels[cached[victim]] = '1';
      cached.erase(victim);
    }
    cached[p] = i;
  }
  return r;
}

}  // namespace naive
