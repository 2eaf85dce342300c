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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsoire/commands.hpp"

namespace cli = rsoire::cli;

int main(int argc, char** argv) {
    CLI::App app{"Learn and analyse single-occurrence regular expressions with interleaving"};
    app.require_subcommand(1);

    int rc = 0;

    auto* learn = app.add_subcommand("learn", "Learn an expression from a sample file");
    cli::LearnOptions learn_opts;
    std::string trace_path, dot_path;
    learn->add_option("--sample", learn_opts.sample_path, "Sample file (one word per line)")->required();
    learn->add_option("--trace", trace_path, "Write the rewrite trace as JSON");
    learn->add_option("--dot", dot_path, "Write the initial automaton in DOT format");
    learn->callback([&] {
        if (!trace_path.empty()) learn_opts.trace_path = trace_path;
        if (!dot_path.empty()) learn_opts.dot_path = dot_path;
        rc = cli::learn(learn_opts, std::cout, std::cerr);
    });

    std::string expr, expr2, word;
    auto* classify = app.add_subcommand("classify", "Print not-soire, soire or rsoire");
    classify->add_option("EXPR", expr)->required();
    classify->callback([&] { rc = cli::classify(expr, std::cout, std::cerr); });

    auto* match = app.add_subcommand("match", "Test membership of a space-separated word");
    match->add_option("EXPR", expr)->required();
    match->add_option("WORD", word, "Tokens separated by spaces; empty for epsilon")->required();
    match->callback([&] { rc = cli::match(expr, word, std::cout, std::cerr); });

    std::size_t max_len = 0;
    std::size_t cap = rsoire::kDefaultWordCap;
    auto* enumerate = app.add_subcommand("enumerate", "List the words up to a length in shortlex order");
    enumerate->add_option("EXPR", expr)->required();
    enumerate->add_option("--max-len", max_len)->required();
    enumerate->add_option("--cap", cap, "Word budget")->capture_default_str();
    enumerate->callback([&] { rc = cli::enumerate(expr, max_len, cap, std::cout, std::cerr); });

    bool fail_on_diff = false;
    auto* equiv = app.add_subcommand("equiv", "Compare two languages up to a length");
    equiv->add_option("EXPR1", expr)->required();
    equiv->add_option("EXPR2", expr2)->required();
    equiv->add_option("--max-len", max_len)->required();
    equiv->add_option("--cap", cap, "State budget")->capture_default_str();
    equiv->add_flag("--fail-on-diff", fail_on_diff, "Exit 1 when the languages differ");
    equiv->callback([&] { rc = cli::equiv(expr, expr2, max_len, fail_on_diff, cap, std::cout, std::cerr); });

    std::optional<std::size_t> sample_len;
    std::size_t sample_cap = rsoire::kDefaultSampleCap;
    auto* sample = app.add_subcommand("sample", "Write a shortlex sample of an expression");
    sample->add_option("EXPR", expr)->required();
    sample->add_option("--max-len", sample_len, "Default: alphabet size + 2");
    sample->add_option("--cap", sample_cap, "Maximum number of words")->capture_default_str();
    sample->callback([&] { rc = cli::sample(expr, sample_len, sample_cap, std::cout, std::cerr); });

    std::vector<std::string> xml_inputs;
    std::string out_dir;
    auto* xml = app.add_subcommand("xml-extract", "Write one sample file per XML element name");
    xml->add_option("--input", xml_inputs, "XML documents")->required()->expected(1, -1);
    xml->add_option("--out", out_dir, "Output directory")->required();
    xml->callback([&] { rc = cli::xml_extract(xml_inputs, out_dir, std::cout, std::cerr); });

    std::string repro_out;
    auto* repro = app.add_subcommand("repro", "Run the built-in learnability experiment");
    repro->add_option("--out", repro_out, "Write the report as JSON");
    repro->callback([&] {
        std::optional<std::string> path;
        if (!repro_out.empty()) path = repro_out;
        rc = cli::repro(path, std::cout, std::cerr);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kSyntax;
    }
    return rc;
}
