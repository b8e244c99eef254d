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

#include "vincular/pattern.hpp"

#include <algorithm>

#include "vincular/error.hpp"

namespace vincular {
namespace {

std::string format_pattern(std::span<const int> letters,
                           std::span<const int> blocks) {
  std::string text;
  std::size_t at = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) text += '-';
    for (int j = 0; j < blocks[b]; ++j) text += static_cast<char>('0' + letters[at++]);
  }
  return text;
}

// Backtracking matcher: one start position per block, order-isomorphism
// checked letter by letter against everything already placed.
class BlockMatcher {
 public:
  BlockMatcher(std::span<const int> word, const VincularPattern& pattern)
      : word_(word), pattern_(pattern), positions_(pattern.size()) {}

  // Calls `visit(positions)` for each occurrence in lexicographic order
  // until it returns true. Returns true if stopped early.
  template <typename Visit>
  bool run(Visit&& visit) {
    if (pattern_.size() > word_.size()) return false;
    return search(0, 0, 0, visit);
  }

 private:
  template <typename Visit>
  bool search(std::size_t block, std::size_t letter, std::size_t min_start,
              Visit& visit) {
    if (block == pattern_.block_count()) return visit(positions_);
    const auto len = static_cast<std::size_t>(pattern_.type()[block]);
    const std::size_t remaining = pattern_.size() - letter;
    for (std::size_t start = min_start; start + remaining <= word_.size();
         ++start) {
      if (place(letter, start, len) &&
          search(block + 1, letter + len, start + len, visit)) {
        return true;
      }
    }
    return false;
  }

  bool place(std::size_t letter, std::size_t start, std::size_t len) {
    const auto letters = pattern_.letters();
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t idx = letter + i;
      const std::size_t pos = start + i;
      const int value = word_[pos];
      for (std::size_t j = 0; j < idx; ++j) {
        if ((word_[positions_[j]] < value) != (letters[j] < letters[idx])) {
          return false;
        }
      }
      positions_[idx] = pos;
    }
    return true;
  }

  std::span<const int> word_;
  const VincularPattern& pattern_;
  std::vector<std::size_t> positions_;
};

}  // namespace

VincularPattern::VincularPattern(std::vector<int> letters,
                                 std::vector<int> block_sizes)
    : letters_(std::move(letters)), blocks_(std::move(block_sizes)) {
  const std::size_t k = letters_.size();
  if (k == 0 || k > kMaxLength) {
    throw_range_error("pattern length must be between 1 and 9");
  }
  std::vector<bool> seen(k + 1, false);
  for (int v : letters_) {
    if (v < 1 || static_cast<std::size_t>(v) > k || seen[v]) {
      throw_range_error("pattern letters are not a permutation of 1.." +
                        std::to_string(k));
    }
    seen[v] = true;
  }
  int total = 0;
  for (int b : blocks_) {
    if (b <= 0) throw_range_error("pattern blocks must be non-empty");
    total += b;
  }
  if (static_cast<std::size_t>(total) != k) {
    throw_range_error("pattern block sizes do not cover the letters");
  }
  text_ = format_pattern(letters_, blocks_);
}

bool VincularPattern::joined_to_next(std::size_t i) const {
  std::size_t end = 0;
  for (int b : blocks_) {
    end += static_cast<std::size_t>(b);
    if (i + 1 < end) return true;
    if (i + 1 == end) return false;
  }
  return false;
}

VincularPattern parse_pattern(std::string_view text) {
  if (text.empty()) throw_parse_error(text, 0, "empty pattern");
  std::vector<int> letters;
  std::vector<int> blocks;
  std::vector<std::size_t> offsets;
  int current = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '-') {
      if (i == 0) throw_parse_error(text, i, "leading dash");
      if (i + 1 == text.size()) throw_parse_error(text, i, "trailing dash");
      if (current == 0) throw_parse_error(text, i, "consecutive dashes");
      blocks.push_back(current);
      current = 0;
    } else if (ch >= '1' && ch <= '9') {
      letters.push_back(ch - '0');
      offsets.push_back(i);
      ++current;
    } else {
      throw_parse_error(text, i, "expected a digit 1-9 or '-'");
    }
  }
  blocks.push_back(current);
  const std::size_t k = letters.size();
  std::vector<bool> seen(10, false);
  for (std::size_t i = 0; i < k; ++i) {
    const int v = letters[i];
    if (static_cast<std::size_t>(v) > k) {
      throw_parse_error(text, offsets[i],
                        "letters must form a permutation of 1.." +
                            std::to_string(k));
    }
    if (seen[v]) throw_parse_error(text, offsets[i], "repeated letter");
    seen[v] = true;
  }
  return VincularPattern(std::move(letters), std::move(blocks));
}

bool contains(std::span<const int> word, const VincularPattern& pattern) {
  BlockMatcher matcher(word, pattern);
  return matcher.run([](const std::vector<std::size_t>&) { return true; });
}

bool contains(const Permutation& perm, const VincularPattern& pattern) {
  return contains(perm.values(), pattern);
}

std::vector<Occurrence> occurrences(const Permutation& perm,
                                    const VincularPattern& pattern) {
  std::vector<Occurrence> found;
  BlockMatcher matcher(perm.values(), pattern);
  matcher.run([&](const std::vector<std::size_t>& positions) {
    Occurrence occ(positions.size());
    std::transform(positions.begin(), positions.end(), occ.begin(),
                   [](std::size_t p) { return p + 1; });
    found.push_back(std::move(occ));
    return false;
  });
  return found;
}

PatternSet::PatternSet(std::initializer_list<VincularPattern> patterns)
    : PatternSet(std::vector<VincularPattern>(patterns)) {}

PatternSet::PatternSet(std::vector<VincularPattern> patterns)
    : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  std::size_t base = static_cast<std::size_t>(body.data() - text.data());
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw_parse_error(text, text.size() - 1, "missing '}'");
    body = body.substr(1, body.size() - 2);
    ++base;
  }
  std::vector<VincularPattern> patterns;
  if (trim(body).empty()) return PatternSet();
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view item = trim(body.substr(start, end - start));
    try {
      patterns.push_back(parse_pattern(item));
    } catch (const Error& e) {
      const std::size_t offset =
          base + static_cast<std::size_t>(item.data() - body.data()) +
          e.position().value_or(0);
      throw_parse_error(text, offset, e.what());
    }
    start = end + 1;
  }
  return PatternSet(std::move(patterns));
}

bool PatternSet::contains(const VincularPattern& pattern) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), pattern);
}

bool PatternSet::is_subset_of(const PatternSet& other) const {
  return std::includes(other.patterns_.begin(), other.patterns_.end(),
                       patterns_.begin(), patterns_.end());
}

PatternSet PatternSet::with(const VincularPattern& pattern) const {
  std::vector<VincularPattern> all = patterns_;
  all.push_back(pattern);
  return PatternSet(std::move(all));
}

PatternSet PatternSet::minus(const PatternSet& other) const {
  std::vector<VincularPattern> out;
  std::set_difference(patterns_.begin(), patterns_.end(),
                      other.patterns_.begin(), other.patterns_.end(),
                      std::back_inserter(out));
  return PatternSet(std::move(out));
}

std::vector<std::string> PatternSet::to_strings() const {
  std::vector<std::string> out;
  out.reserve(patterns_.size());
  for (const auto& p : patterns_) out.push_back(p.to_string());
  return out;
}

std::string PatternSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += ',';
    out += patterns_[i].to_string();
  }
  out += '}';
  return out;
}

const std::vector<VincularPattern>& length_three_patterns() {
  static const std::vector<VincularPattern> patterns = [] {
    std::vector<VincularPattern> out;
    for (const char* text : {"1-23", "12-3", "1-32", "13-2", "3-12", "31-2",
                             "2-13", "21-3", "2-31", "23-1", "3-21", "32-1"}) {
      out.push_back(parse_pattern(text));
    }
    return out;
  }();
  return patterns;
}

const PatternSet& length_three_pattern_set() {
  static const PatternSet set(length_three_patterns());
  return set;
}

bool is_length_three_pattern(const VincularPattern& pattern) {
  return length_three_pattern_set().contains(pattern);
}

bool avoids_all(std::span<const int> word, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const VincularPattern& p) { return contains(word, p); });
}

bool avoids_all(const Permutation& perm, const PatternSet& patterns) {
  return avoids_all(perm.values(), patterns);
}

}  // namespace vincular
