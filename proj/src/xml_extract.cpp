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

#include "rsoire/xml_extract.hpp"

#include <algorithm>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace rsoire {

namespace {

namespace pt = boost::property_tree;

bool is_markup_key(const std::string& key) {
    return key == "<xmlattr>" || key == "<xmlcomment>" || key == "<xmltext>";
}

void walk(const std::string& name, const pt::ptree& node, std::map<std::string, std::vector<Word>>& out) {
    Word children;
    for (const auto& [key, child] : node) {
        if (is_markup_key(key)) continue;
        children.emplace_back(escape_name(key));
    }
    out[escape_name(name)].push_back(std::move(children));
    for (const auto& [key, child] : node) {
        if (!is_markup_key(key)) walk(key, child, out);
    }
}

}  // namespace

std::string escape_name(std::string_view name) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    const bool all_underscore =
        !name.empty() && std::all_of(name.begin(), name.end(), [](char c) { return c == '_'; });
    for (std::size_t i = 0; i < name.size(); ++i) {
        const auto c = static_cast<unsigned char>(name[i]);
        const bool escape = c == '.' || !is_symbol_char(static_cast<char>(c)) || (all_underscore && i == 0);
        if (escape) {
            out += '.';
            out += hex[c >> 4];
            out += hex[c & 0xF];
        } else {
            out += static_cast<char>(c);
        }
    }
    return out;
}

void extract_child_sequences(const std::string& xml_text, const std::string& source_name,
                             std::map<std::string, std::vector<Word>>& out) {
    pt::ptree doc;
    std::istringstream in(xml_text);
    try {
        pt::read_xml(in, doc);
    } catch (const pt::xml_parser_error& e) {
        throw XmlError(source_name + ":" + std::to_string(e.line()) + ": " + e.message());
    }
    std::size_t roots = 0;
    for (const auto& [key, child] : doc) {
        if (is_markup_key(key)) continue;
        ++roots;
        walk(key, child, out);
    }
    if (roots == 0) throw XmlError(source_name + ": no root element");
}

}  // namespace rsoire
