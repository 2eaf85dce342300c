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

// Subcommands of the rsoire tool. Each writes to the given streams and
// returns the process exit code.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsoire/lang.hpp"
#include "rsoire/sample_io.hpp"

namespace rsoire::cli {

enum ExitCode : int {
    kOk = 0,
    kDifferent = 1,  // equiv --fail-on-diff, or a failed repro check
    kSyntax = 2,     // malformed expression, word or sample file; unreadable file
    kEmptySample = 4,
    kStuck = 5,
    kCapExceeded = 6,
    kBadXml = 7,
};

struct LearnOptions {
    std::string sample_path;
    std::optional<std::string> trace_path;
    std::optional<std::string> dot_path;
};

int learn(const LearnOptions& opts, std::ostream& out, std::ostream& err);
int classify(const std::string& expr, std::ostream& out, std::ostream& err);
int match(const std::string& expr, const std::string& word, std::ostream& out, std::ostream& err);
int enumerate(const std::string& expr, std::size_t max_len, std::size_t cap, std::ostream& out,
              std::ostream& err);
int equiv(const std::string& e1, const std::string& e2, std::size_t max_len, bool fail_on_diff,
          std::size_t cap, std::ostream& out, std::ostream& err);
int sample(const std::string& expr, std::optional<std::size_t> max_len, std::size_t cap, std::ostream& out,
           std::ostream& err);
int xml_extract(const std::vector<std::string>& inputs, const std::string& out_dir, std::ostream& out,
                std::ostream& err);
int repro(const std::optional<std::string>& json_path, std::ostream& out, std::ostream& err);

}  // namespace rsoire::cli
