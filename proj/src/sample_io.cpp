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

#include "rsoire/sample_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "rsoire/lang.hpp"

namespace rsoire {

namespace {

Word parse_line(std::string_view line, std::size_t base, std::size_t lineno) {
    Word w;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw SyntaxError("line " + std::to_string(lineno) + ": " + msg, base + i);
    };
    while (i < line.size()) {
        std::size_t start = i;
        while (i < line.size() && is_symbol_char(line[i])) ++i;
        if (i == start) fail(line[i] == ' ' ? "expected a symbol, found a space" : "invalid character in token");
        std::string_view tok = line.substr(start, i - start);
        if (!is_valid_symbol_name(tok)) {
            i = start;
            fail("reserved token '" + std::string(tok) + "'");
        }
        w.emplace_back(std::string(tok));
        if (i == line.size()) break;
        if (line[i] != ' ') fail("invalid character in token");
        ++i;
        if (i == line.size()) fail("trailing space");
    }
    return w;
}

}  // namespace

Sample parse_sample(std::string_view text) {
    std::vector<Word> words;
    std::size_t pos = 0;
    std::size_t lineno = 1;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (line.empty() || line.front() != '#') words.push_back(parse_line(line, pos, lineno));
        pos = end + 1;
        ++lineno;
    }
    return Sample::from_words(std::move(words));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Sample read_sample_file(const std::string& path) { return parse_sample(read_text_file(path)); }

void write_sample(std::ostream& out, const Sample& s) {
    for (const auto& w : s.words) out << to_string(w) << '\n';
}

std::size_t default_sample_length(const Expr& e) { return alphabet(e).size() + 2; }

Sample characteristic_sample(const Expr& e, std::optional<std::size_t> max_len, std::size_t cap) {
    const std::size_t n = max_len.value_or(default_sample_length(e));
    ShortlexPrefix p = shortlex_words(e, n, cap);
    if (p.first_dropped_length && *p.first_dropped_length <= 2) throw SampleCapError(cap);
    return Sample::from_words(std::move(p.words));
}

}  // namespace rsoire
