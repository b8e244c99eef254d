// Copyright 2026 The Vincular Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementations used only by the tests. Nothing
// here calls into the library: patterns stay strings, occurrences come from
// walking every increasing index tuple, and symmetries are string edits.

#ifndef VINCULAR_TESTS_ORACLE_HPP_
#define VINCULAR_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Pattern {
  std::vector<int> letters;
  // glued[i]: letters i and i+1 must sit on adjacent positions.
  std::vector<bool> glued;
};

inline Pattern parse(const std::string& text) {
  Pattern p;
  bool dash = true;
  for (char c : text) {
    if (c == '-') {
      dash = true;
      continue;
    }
    if (!p.letters.empty()) p.glued.push_back(!dash);
    p.letters.push_back(c - '0');
    dash = false;
  }
  return p;
}

// All increasing k-tuples of 0-based positions in [0, n).
inline std::vector<std::vector<std::size_t>> tuples(std::size_t n,
                                                    std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> t(k);
  std::iota(t.begin(), t.end(), 0);
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

inline bool matches(const std::vector<int>& w, const Pattern& p,
                    const std::vector<std::size_t>& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (p.glued[i] && t[i + 1] != t[i] + 1) return false;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if ((w[t[i]] < w[t[j]]) != (p.letters[i] < p.letters[j])) return false;
    }
  }
  return true;
}

// 1-based position tuples in lexicographic order.
inline std::vector<std::vector<std::size_t>> occurrences(
    const std::vector<int>& w, const Pattern& p) {
  std::vector<std::vector<std::size_t>> out;
  if (p.letters.empty()) return out;
  for (auto t : tuples(w.size(), p.letters.size())) {
    if (!matches(w, p, t)) continue;
    for (auto& x : t) ++x;
    out.push_back(t);
  }
  return out;
}

inline bool contains(const std::vector<int>& w, const Pattern& p) {
  if (p.letters.empty()) return true;
  for (const auto& t : tuples(w.size(), p.letters.size())) {
    if (matches(w, p, t)) return true;
  }
  return false;
}

inline bool contains(const std::vector<int>& w, const std::string& p) {
  return contains(w, parse(p));
}

inline bool avoids_all(const std::vector<int>& w,
                       const std::vector<Pattern>& ps) {
  return std::none_of(ps.begin(), ps.end(),
                      [&](const Pattern& p) { return contains(w, p); });
}

inline std::vector<Pattern> parse_all(const std::vector<std::string>& ps) {
  std::vector<Pattern> out;
  for (const auto& s : ps) out.push_back(parse(s));
  return out;
}

inline std::vector<std::vector<int>> avoiders(
    int n, const std::vector<std::string>& patterns) {
  const auto ps = parse_all(patterns);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (avoids_all(w, ps)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::uint64_t count(int n, const std::vector<std::string>& patterns) {
  return avoiders(n, patterns).size();
}

inline std::vector<int> reverse(std::vector<int> w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline std::vector<int> complement(std::vector<int> w) {
  const int n = static_cast<int>(w.size());
  for (int& x : w) x = n + 1 - x;
  return w;
}

inline std::string reverse(std::string p) {
  std::reverse(p.begin(), p.end());
  return p;
}

inline std::string complement(std::string p) {
  const int k = static_cast<int>(std::count_if(
      p.begin(), p.end(), [](char c) { return c != '-'; }));
  for (char& c : p) {
    if (c != '-') c = static_cast<char>('0' + k + 1 - (c - '0'));
  }
  return p;
}

inline const std::vector<std::string>& twelve() {
  static const std::vector<std::string> all = {
      "1-23", "12-3", "1-32", "13-2", "3-12", "31-2",
      "2-13", "21-3", "2-31", "23-1", "3-21", "32-1"};
  return all;
}

using StringSet = std::set<std::string>;

inline StringSet image(const StringSet& s, bool r, bool c) {
  StringSet out;
  for (std::string p : s) {
    if (r) p = reverse(p);
    if (c) p = complement(p);
    out.insert(p);
  }
  return out;
}

// Number of orbits of k-subsets of the twelve patterns under {id,r,c,rc}.
inline std::size_t orbit_count(int k) {
  std::set<std::set<StringSet>> orbits;
  const auto& all = twelve();
  for (unsigned mask = 0; mask < (1u << 12); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    StringSet s;
    for (int i = 0; i < 12; ++i) {
      if (mask & (1u << i)) s.insert(all[static_cast<std::size_t>(i)]);
    }
    orbits.insert({s, image(s, true, false), image(s, false, true),
                   image(s, true, true)});
  }
  return orbits.size();
}

}  // namespace oracle

#endif  // VINCULAR_TESTS_ORACLE_HPP_
