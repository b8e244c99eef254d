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

#include "vincular/error.hpp"

namespace vincular {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kRange:
      return "range error";
    case ErrorCode::kData:
      return "data error";
    case ErrorCode::kInternal:
      return "internal error";
  }
  return "error";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(message), code_(code), position_(position) {}

void throw_parse_error(std::string_view text, std::size_t position,
                       std::string_view what) {
  std::string message = "cannot parse '";
  message.append(text);
  message += "' at position ";
  message += std::to_string(position + 1);
  message += ": ";
  message.append(what);
  throw Error(ErrorCode::kParse, message, position);
}

void throw_range_error(const std::string& what) {
  throw Error(ErrorCode::kRange, what);
}

}  // namespace vincular
