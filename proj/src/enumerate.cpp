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

#include "vincular/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "vincular/error.hpp"

namespace vincular {
namespace {

void require_length(int n, int limit, const char* what) {
  if (n < 1 || n > limit) {
    throw_range_error(std::string(what) + ": length " + std::to_string(n) +
                      " outside 1.." + std::to_string(limit));
  }
}

// Decides whether appending the last entry of a prefix created a new
// occurrence. Every new occurrence must put its last letter on the new
// position, so length-3 patterns of type (1,2) and (2,1) need one scan.
class PrefixChecker {
 public:
  explicit PrefixChecker(const PatternSet& patterns) {
    for (const auto& p : patterns) kernels_.push_back(make_kernel(p));
  }

  bool last_entry_clean(std::span<const int> prefix) const {
    for (const Kernel& k : kernels_) {
      if (k.hits(prefix)) return false;
    }
    return true;
  }

 private:
  struct Kernel {
    enum class Kind { kSingleThenPair, kPairThenSingle, kGeneric };
    Kind kind;
    bool ab, ac, bc;  // letter comparisons a<b, a<c, b<c
    const VincularPattern* pattern;

    bool hits(std::span<const int> w) const {
      const std::size_t z = w.size() - 1;
      switch (kind) {
        case Kind::kSingleThenPair: {
          // x - y z with y = z-1
          if (z < 2) return false;
          const int vy = w[z - 1];
          const int vz = w[z];
          if ((vy < vz) != bc) return false;
          for (std::size_t x = 0; x + 1 < z; ++x) {
            if ((w[x] < vy) == ab && (w[x] < vz) == ac) return true;
          }
          return false;
        }
        case Kind::kPairThenSingle: {
          // x y - z with y < z
          const int vz = w[z];
          for (std::size_t x = 0; x + 2 <= z; ++x) {
            const int vx = w[x];
            const int vy = w[x + 1];
            if ((vx < vy) == ab && (vx < vz) == ac && (vy < vz) == bc) {
              return true;
            }
          }
          return false;
        }
        case Kind::kGeneric:
          return contains(w, *pattern);
      }
      return false;
    }
  };

  static Kernel make_kernel(const VincularPattern& p) {
    Kernel k{Kernel::Kind::kGeneric, false, false, false, &p};
    if (p.size() == 3 && p.block_count() == 2) {
      const auto l = p.letters();
      k.ab = l[0] < l[1];
      k.ac = l[0] < l[2];
      k.bc = l[1] < l[2];
      k.kind = p.type()[0] == 1 ? Kernel::Kind::kSingleThenPair
                                : Kernel::Kind::kPairThenSingle;
    }
    return k;
  }

  std::vector<Kernel> kernels_;
};

// Depth-first extension over unused values in increasing order, so leaves
// come out in lexicographic order.
class AvoiderSearch {
 public:
  AvoiderSearch(int n, const PrefixChecker& checker)
      : n_(n), checker_(checker) {}

  template <typename Leaf>
  bool run_from(int first, Leaf& leaf) {
    prefix_[0] = first;
    if (!checker_.last_entry_clean(std::span<const int>(prefix_.data(), 1))) {
      return true;
    }
    return descend(1, 1u << first, leaf);
  }

  template <typename Leaf>
  bool run(Leaf& leaf) {
    for (int v = 1; v <= n_; ++v) {
      if (!run_from(v, leaf)) return false;
    }
    return true;
  }

 private:
  // Returns false to abort the whole search.
  template <typename Leaf>
  bool descend(int depth, std::uint32_t used, Leaf& leaf) {
    if (depth == n_) return leaf(std::span<const int>(prefix_.data(), n_));
    for (int v = 1; v <= n_; ++v) {
      if (used & (1u << v)) continue;
      prefix_[depth] = v;
      if (!checker_.last_entry_clean(
              std::span<const int>(prefix_.data(), depth + 1))) {
        continue;
      }
      if (!descend(depth + 1, used | (1u << v), leaf)) return false;
    }
    return true;
  }

  int n_;
  const PrefixChecker& checker_;
  std::array<int, kMaxCountLength + 1> prefix_{};
};

}  // namespace

std::uint64_t count_avoiders(int n, const PatternSet& patterns,
                             const EnumerationOptions& options) {
  require_length(n, kMaxCountLength, "count_avoiders");
  const PrefixChecker checker(patterns);
  std::vector<std::uint64_t> per_root(static_cast<std::size_t>(n), 0);
  detail::parallel_for(per_root.size(), options.workers, [&](std::size_t i) {
    AvoiderSearch search(n, checker);
    std::uint64_t count = 0;
    auto leaf = [&count](std::span<const int>) {
      ++count;
      return true;
    };
    search.run_from(static_cast<int>(i) + 1, leaf);
    per_root[i] = count;
  });
  return std::accumulate(per_root.begin(), per_root.end(), std::uint64_t{0});
}

bool for_each_avoider(int n, const PatternSet& patterns,
                      const std::function<bool(std::span<const int>)>& visit) {
  require_length(n, kMaxListLength, "for_each_avoider");
  const PrefixChecker checker(patterns);
  AvoiderSearch search(n, checker);
  auto leaf = [&visit](std::span<const int> perm) { return visit(perm); };
  return search.run(leaf);
}

std::vector<Permutation> list_avoiders(int n, const PatternSet& patterns) {
  require_length(n, kMaxListLength, "list_avoiders");
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&out](std::span<const int> perm) {
    out.emplace_back(std::vector<int>(perm.begin(), perm.end()));
    return true;
  });
  return out;
}

std::uint64_t count_avoiders_naive(int n, const PatternSet& patterns) {
  require_length(n, kMaxNaiveLength, "count_avoiders_naive");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    if (avoids_all(std::span<const int>(perm), patterns)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

CountingSequence counting_sequence(int max_n, const PatternSet& patterns,
                                   const EnumerationOptions& options) {
  require_length(max_n, kMaxSequenceLength, "counting_sequence");
  CountingSequence seq{patterns, {}};
  seq.counts.reserve(static_cast<std::size_t>(max_n));
  bool exhausted = false;
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t c = exhausted ? 0 : count_avoiders(n, patterns, options);
    exhausted = exhausted || c == 0;
    seq.counts.push_back(c);
  }
  return seq;
}

}  // namespace vincular
