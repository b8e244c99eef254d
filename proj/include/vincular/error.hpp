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

#ifndef VINCULAR_ERROR_HPP_
#define VINCULAR_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vincular {

enum class ErrorCode {
  kParse,     // malformed pattern, permutation or pattern-set text
  kRange,     // a length or size guard was violated
  kData,      // table data missing or inconsistent
  kInternal,  // an internal consistency check failed
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library are reported as `Error`. Parse
// errors carry the 0-based offset into the offending text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

[[noreturn]] void throw_parse_error(std::string_view text, std::size_t position,
                                    std::string_view what);
[[noreturn]] void throw_range_error(const std::string& what);

}  // namespace vincular

#endif  // VINCULAR_ERROR_HPP_
