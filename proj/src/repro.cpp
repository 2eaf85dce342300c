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

#include "rsoire/repro.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "rsoire/infer.hpp"
#include "rsoire/lang.hpp"
#include "rsoire/sample_io.hpp"

namespace rsoire {

namespace {

const std::vector<std::pair<ReproGroup, std::string>>& case_list() {
    static const std::vector<std::pair<ReproGroup, std::string>> cases = {
        {ReproGroup::StarOnSymbolsOnly, "(a b)+"},
        {ReproGroup::StarOnSymbolsOnly, "(a|b)+"},
        {ReproGroup::StarOnSymbolsOnly, "(a|b&c)+"},
        {ReproGroup::StarOnSymbolsOnly, "(a&b)+"},
        {ReproGroup::StarOnSymbolsOnly, "((a|b)&(c|d)&(e|f))*"},
        {ReproGroup::NestedInterleaving, "a&(b (c&d))"},
        {ReproGroup::RoundTrip, "(a+|b) (c&d)"},
        {ReproGroup::RoundTrip, "a d&(b|c*)"},
        {ReproGroup::RoundTrip, "a+|b+&c*"},
    };
    return cases;
}

}  // namespace

std::string_view to_string(ReproGroup g) {
    switch (g) {
        case ReproGroup::StarOnSymbolsOnly: return "star-on-symbols-only";
        case ReproGroup::NestedInterleaving: return "nested-interleaving";
        case ReproGroup::RoundTrip: return "round-trip";
    }
    return "?";
}

bool ReproReport::all_passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const ReproCase& c) { return c.passed; });
}

bool unary_ops_on_symbols_only(const Expr& e) {
    if ((e.is(Kind::Star) || e.is(Kind::Plus)) && !e.kid(0).is(Kind::Sym)) return false;
    return std::all_of(e.kids().begin(), e.kids().end(), unary_ops_on_symbols_only);
}

ReproCase run_repro_case(ReproGroup group, const std::string& target) {
    ReproCase c;
    c.group = group;
    c.target = target;
    try {
        const Expr t = parse(target);
        c.max_len = default_sample_length(t);
        const Sample s = characteristic_sample(t);
        c.sample_size = s.words.size();
        std::ostringstream src;
        src << "shortlex words of the target up to length " << c.max_len << " (cap " << kDefaultSampleCap << ")";
        c.sample_source = src.str();

        const LearnResult r = learn(s);
        c.learnt = print(r.expression);
        c.learnt_class = r.classification;
        c.unary_on_symbols_only = unary_ops_on_symbols_only(r.expression);
        const EquivResult v = bounded_equiv(r.expression, t, c.max_len);
        if (const auto* ce = std::get_if<Counterexample>(&v)) {
            c.counterexample = ce->word;
        } else {
            c.equal = true;
        }

        const bool in_class = c.learnt_class == SoClass::Rsoire;
        switch (group) {
            case ReproGroup::StarOnSymbolsOnly:
                c.passed = in_class && c.unary_on_symbols_only && !c.equal;
                break;
            case ReproGroup::NestedInterleaving: c.passed = in_class && !c.equal; break;
            case ReproGroup::RoundTrip: c.passed = in_class && c.equal; break;
        }
    } catch (const std::exception& e) {
        c.error = e.what();
        c.passed = false;
    }
    return c;
}

ReproReport run_repro() {
    ReproReport r;
    for (const auto& [group, target] : case_list()) r.cases.push_back(run_repro_case(group, target));
    return r;
}

std::string repro_markdown(const ReproReport& r) {
    std::ostringstream out;
    out << "# Learner reproduction report\n\n";
    out << "| group | target | N | sample | learnt | class | *,+ on symbols only | verdict | counterexample | status |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& c : r.cases) {
        out << "| " << to_string(c.group) << " | `" << c.target << "` | " << c.max_len << " | " << c.sample_size
            << " words | `" << c.learnt << "` | " << to_string(c.learnt_class) << " | "
            << (c.unary_on_symbols_only ? "yes" : "no") << " | " << (c.equal ? "Equal" : "NotEqual") << " | "
            << (c.counterexample ? "`" + display(*c.counterexample) + "`" : std::string("-")) << " | "
            << (c.passed ? "PASS" : "FAIL") << " |\n";
    }
    for (const auto& c : r.cases) {
        if (!c.error.empty()) out << "\nerror in `" << c.target << "`: " << c.error << "\n";
    }
    out << "\n" << (r.all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return out.str();
}

std::string repro_json(const ReproReport& r) {
    nlohmann::ordered_json doc;
    doc["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
        nlohmann::ordered_json j;
        j["name"] = c.target;
        j["group"] = to_string(c.group);
        j["sample_source"] = c.sample_source;
        j["sample_size"] = c.sample_size;
        j["max_len"] = c.max_len;
        j["learnt"] = c.learnt;
        j["class"] = to_string(c.learnt_class);
        j["unary_on_symbols_only"] = c.unary_on_symbols_only;
        j["verdict"] = c.equal ? "Equal" : "NotEqual";
        j["counterexample"] = c.counterexample ? nlohmann::ordered_json(to_string(*c.counterexample)) : nullptr;
        j["passed"] = c.passed;
        if (!c.error.empty()) j["error"] = c.error;
        doc["cases"].push_back(std::move(j));
    }
    doc["all_passed"] = r.all_passed();
    return doc.dump(2) + "\n";
}

}  // namespace rsoire
