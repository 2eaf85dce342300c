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

#include "rsoire/commands.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include "rsoire/infer.hpp"
#include "rsoire/repro.hpp"
#include "rsoire/xml_extract.hpp"

namespace rsoire::cli {

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

// Maps library exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << "\n";
        return kSyntax;
    } catch (const EmptySampleError& e) {
        err << "error: " << e.what() << "\n";
        return kEmptySample;
    } catch (const StuckStateError& e) {
        err << "error: " << e.what() << "\n" << e.dot();
        return kStuck;
    } catch (const EnumerationCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const SampleCapError& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const XmlError& e) {
        err << "malformed XML: " << e.what() << "\n";
        return kBadXml;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kSyntax;
    }
}

}  // namespace

int learn(const LearnOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Sample s = read_sample_file(opts.sample_path);
        if (s.words.empty()) throw EmptySampleError();
        if (opts.dot_path) write_file(*opts.dot_path, to_dot(build_2t_inf(s)));
        const LearnResult r = rsoire::learn(s);
        if (opts.trace_path) write_file(*opts.trace_path, trace_json(s, r));
        out << print(r.expression) << "\n";
        return int{kOk};
    });
}

int classify(const std::string& expr, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        out << to_string(rsoire::classify(parse(expr))) << "\n";
        return int{kOk};
    });
}

int match(const std::string& expr, const std::string& word, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Expr e = parse(expr);
        out << (matches(e, parse_word(word)) ? "true" : "false") << "\n";
        return int{kOk};
    });
}

int enumerate(const std::string& expr, std::size_t max_len, std::size_t cap, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        const BoundedLang lang = rsoire::enumerate(parse(expr), max_len, cap);
        for (const auto& w : lang.words) out << to_string(w) << "\n";
        return int{kOk};
    });
}

int equiv(const std::string& e1, const std::string& e2, std::size_t max_len, bool fail_on_diff,
          std::size_t cap, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Expr a = parse(e1);
        const Expr b = parse(e2);
        const EquivResult r = bounded_equiv(a, b, max_len, cap);
        if (const auto* ce = std::get_if<Counterexample>(&r)) {
            out << "diff: " << display(ce->word) << "\n";
            return fail_on_diff ? int{kDifferent} : int{kOk};
        }
        out << "equal@" << max_len << "\n";
        return int{kOk};
    });
}

int sample(const std::string& expr, std::optional<std::size_t> max_len, std::size_t cap, std::ostream& out,
           std::ostream& err) {
    return guarded(err, [&] {
        write_sample(out, characteristic_sample(parse(expr), max_len, cap));
        return int{kOk};
    });
}

int xml_extract(const std::vector<std::string>& inputs, const std::string& out_dir, std::ostream& out,
                std::ostream& err) {
    return guarded(err, [&] {
        std::map<std::string, std::vector<Word>> samples;
        for (const auto& path : inputs) extract_child_sequences(read_text_file(path), path, samples);
        std::filesystem::create_directories(out_dir);
        for (const auto& [name, words] : samples) {
            const auto path = std::filesystem::path(out_dir) / (name + ".sample");
            std::ofstream f(path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + path.string());
            write_sample(f, Sample::from_words(words));
            out << path.string() << "\t" << words.size() << "\n";
        }
        return int{kOk};
    });
}

int repro(const std::optional<std::string>& json_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ReproReport r = run_repro();
        out << repro_markdown(r);
        if (json_path) write_file(*json_path, repro_json(r));
        return r.all_passed() ? int{kOk} : int{kDifferent};
    });
}

}  // namespace rsoire::cli
