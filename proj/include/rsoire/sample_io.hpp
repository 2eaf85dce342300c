// Copyright 2026 The rsoire Authors
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

// Sample files: UTF-8 text, one word per line, tokens separated by single
// spaces, an empty line is the empty word, '#' starts a comment line.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsoire/expr.hpp"
#include "rsoire/soa.hpp"

namespace rsoire {

/// Throws SyntaxError (offset into `text`) on a malformed line.
Sample parse_sample(std::string_view text);

/// Reads and parses a file; throws std::runtime_error if it cannot be read.
Sample read_sample_file(const std::string& path);

void write_sample(std::ostream& out, const Sample& s);

std::string read_text_file(const std::string& path);

/// Raised when the sample cap would drop words of length two or less.
class SampleCapError : public std::runtime_error {
public:
    explicit SampleCapError(std::size_t cap)
        : std::runtime_error("sample cap " + std::to_string(cap) +
                             " reached before all words of length <= 2 were covered") {}
};

inline constexpr std::size_t kDefaultSampleCap = 5000;

/// The first `cap` words of the language of `e` up to `max_len` (default:
/// alphabet size + 2) in shortlex order.
Sample characteristic_sample(const Expr& e, std::optional<std::size_t> max_len = std::nullopt,
                             std::size_t cap = kDefaultSampleCap);

/// The default bound used by characteristic_sample: |alphabet(e)| + 2.
std::size_t default_sample_length(const Expr& e);

}  // namespace rsoire
