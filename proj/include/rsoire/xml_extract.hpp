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

// Child-element sequences of XML documents, one sample per element name.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsoire/soa.hpp"

namespace rsoire {

class XmlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Maps an XML name into the symbol token class. Bytes outside
/// [A-Za-z0-9_:-] are written as ".HH" (uppercase hex), so '.' itself
/// becomes ".2E"; a name of only underscores gets its first '_' escaped.
/// The mapping is injective.
std::string escape_name(std::string_view name);

/// For every element occurrence, appends the sequence of its child element
/// names (text, comments and attributes ignored) to the word list of the
/// element's escaped name. Documents are processed in order; words keep
/// document order. Throws XmlError with file and line on malformed input.
void extract_child_sequences(const std::string& xml_text, const std::string& source_name,
                             std::map<std::string, std::vector<Word>>& out);

}  // namespace rsoire
