// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Slow, literal implementations of the definitions. Tests compare the library
// against these; none of them share code with src/.

#ifndef MATROIDCAT_TESTS_ORACLES_HPP_
#define MATROIDCAT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Set = std::uint32_t;

inline int Card(Set s) { return __builtin_popcount(s); }
inline bool Sub(Set a, Set b) { return (a & ~b) == 0; }
inline Set Full(int n) { return (Set{1} << n) - 1; }

inline bool Contains(const std::vector<Set>& fam, Set s) {
  return std::find(fam.begin(), fam.end(), s) != fam.end();
}

// Independence axioms, with augmentation checked over all pairs.
inline bool IndependentsValid(const std::vector<Set>& fam) {
  if (!Contains(fam, 0)) return false;
  for (Set i : fam) {
    for (Set j = 0; j <= i; ++j) {
      if (Sub(j, i) && !Contains(fam, j)) return false;
    }
  }
  for (Set i : fam) {
    for (Set j : fam) {
      if (Card(i) >= Card(j)) continue;
      bool ok = false;
      for (int e = 0; e < 32; ++e) {
        Set b = Set{1} << e;
        if ((j & b) && !(i & b) && Contains(fam, i | b)) ok = true;
      }
      if (!ok) return false;
    }
  }
  return true;
}

// Flat axioms: top, pairwise intersections, and minimal-cover partition.
inline bool FlatsValid(int n, const std::vector<Set>& fam) {
  if (!Contains(fam, Full(n))) return false;
  for (Set f : fam) {
    for (Set g : fam) {
      if (!Contains(fam, f & g)) return false;
    }
  }
  for (Set f : fam) {
    std::vector<Set> covers;
    for (Set g : fam) {
      if (g == f || !Sub(f, g)) continue;
      bool minimal = true;
      for (Set h : fam) {
        if (h != f && h != g && Sub(f, h) && Sub(h, g)) minimal = false;
      }
      if (minimal) covers.push_back(g);
    }
    Set seen = 0;
    for (Set g : covers) {
      if (seen & (g & ~f)) return false;
      seen |= g & ~f;
    }
    if (seen != (Full(n) & ~f)) return false;
  }
  return true;
}

inline int RankFromIndependents(const std::vector<Set>& fam, Set x) {
  int best = 0;
  for (Set i : fam) {
    if (Sub(i, x)) best = std::max(best, Card(i));
  }
  return best;
}

inline Set Closure(int n, const std::vector<int>& rank, Set x) {
  Set c = 0;
  for (int e = 0; e < n; ++e) {
    if (rank[x | (Set{1} << e)] == rank[x]) c |= Set{1} << e;
  }
  return c;
}

// Rank axioms over all pairs, not just local ones.
inline bool RankValid(int n, const std::vector<int>& r) {
  if (r[0] != 0) return false;
  for (Set x = 0; x <= Full(n); ++x) {
    if (r[x] < 0 || r[x] > Card(x)) return false;
    for (Set y = 0; y <= Full(n); ++y) {
      if (Sub(x, y) && r[x] > r[y]) return false;
      if (r[x | y] + r[x & y] > r[x] + r[y]) return false;
    }
  }
  return true;
}

inline Set Preimage(const std::vector<int>& f, Set g) {
  Set out = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (g & (Set{1} << f[i])) out |= Set{1} << i;
  }
  return out;
}

inline Set Image(const std::vector<int>& f, Set x) {
  Set out = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (x & (Set{1} << i)) out |= Set{1} << f[i];
  }
  return out;
}

// Literal flat-preimage test.
inline bool StrongByFlats(const std::vector<int>& f,
                          const std::vector<Set>& dom_flats,
                          const std::vector<Set>& cod_flats) {
  for (Set g : cod_flats) {
    if (!Contains(dom_flats, Preimage(f, g))) return false;
  }
  return true;
}

// Literal rank-difference test over every nested pair.
inline bool StrongByRank(const std::vector<int>& f, int n,
                         const std::vector<int>& rm,
                         const std::vector<int>& rn) {
  for (Set x = 0; x <= Full(n); ++x) {
    for (Set y = x;; y = (y + 1) | x) {
      if (rn[Image(f, y)] - rn[Image(f, x)] > rm[y] - rm[x]) return false;
      if (y == Full(n)) break;
    }
  }
  return true;
}

// Every function {0..n-1} -> {0..m-1} in lexicographic order.
inline std::vector<std::vector<int>> AllFunctions(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> f(n, 0);
  while (true) {
    out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

}  // namespace oracle

#endif  // MATROIDCAT_TESTS_ORACLES_HPP_
