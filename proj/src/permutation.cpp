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

#include "vincular/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "vincular/error.hpp"

namespace vincular {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n > kMaxLength) {
    throw_range_error("permutation length " + std::to_string(n) +
                      " exceeds the limit of " + std::to_string(kMaxLength));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw_range_error("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = values_.size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch < '1' || ch > '9') {
        throw_parse_error(text, i, "expected a digit 1-9");
      }
      values.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view field = text.substr(start, end - start);
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw_parse_error(text, start, "expected a positive integer");
      }
      values.push_back(value);
      start = end + 1;
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse,
                "cannot parse '" + std::string(text) + "': " + e.what(), 0);
  }
}

Permutation standardize(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) {
      throw_range_error("cannot standardize a word with repeated entries");
    }
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return Permutation(std::move(ranks));
}

}  // namespace vincular
