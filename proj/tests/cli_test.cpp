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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "rsoire/commands.hpp"
#include "rsoire/infer.hpp"
#include "rsoire/repro.hpp"
#include "rsoire/sample_io.hpp"
#include "rsoire/xml_extract.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace rsoire {
namespace {

using testing::W;

class TempDir {
public:
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "rsoire-test-XXXXXX").string();
        path_ = mkdtemp(tmpl.data());
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

void write(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

struct Outcome {
    int code;
    std::string out;
};

// Runs the installed tool through the shell, capturing stdout.
Outcome tool(const std::string& args) {
    TempDir tmp;
    const auto out = tmp / "stdout";
    const std::string cmd = std::string(RSOIRE_TOOL) + " " + args + " >" + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_text_file(out.string())};
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

TEST(SampleFile, ParsesWordsEpsilonAndComments) {
    const Sample s = parse_sample("# header\na b\n\nc\n");
    EXPECT_EQ(s.words, (std::vector<Word>{W("a b"), W(""), W("c")}));
    EXPECT_EQ(s.alphabet, (std::vector<Symbol>{Symbol("a"), Symbol("b"), Symbol("c")}));
}

TEST(SampleFile, RoundTripsModuloComments) {
    const std::string text = "title author author\n\nx:y-1 z.2\n";
    std::ostringstream out;
    write_sample(out, parse_sample("# c\n" + text));
    EXPECT_EQ(out.str(), text);
}

TEST(SampleFile, ErrorsCarryLineAndOffset) {
    try {
        parse_sample("a b\na  b\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.offset(), 6u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_sample("a b \n"), SyntaxError);
    EXPECT_THROW(parse_sample(" a\n"), SyntaxError);
    EXPECT_THROW(parse_sample("a|b\n"), SyntaxError);
    EXPECT_THROW(parse_sample("_\n"), SyntaxError);
}

TEST(CharacteristicSample, Examples) {
    EXPECT_EQ(characteristic_sample(parse("a+"), 3).words, (std::vector<Word>{W("a"), W("a a"), W("a a a")}));
    EXPECT_EQ(characteristic_sample(parse("a&b")).words, (std::vector<Word>{W("a b"), W("b a")}));

    const Sample s = characteristic_sample(parse("(a+|b) (c&d)"));
    EXPECT_EQ(s.words.size(), 10u);
    const auto oracle = enumerate(parse("(a+|b) (c&d)"), 6).words;
    EXPECT_EQ(s.words, std::vector<Word>(oracle.begin(), oracle.end()));
    EXPECT_EQ(s.words[0], W("a c d"));
    EXPECT_EQ(s.words[4], W("a a c d"));
}

TEST(CharacteristicSample, CapBelowLengthTwoCoverageFails) {
    EXPECT_THROW(characteristic_sample(parse("(a|b|c)*"), 4, 5), SampleCapError);
    EXPECT_EQ(characteristic_sample(parse("(a|b|c)*"), 4, 20).words.size(), 20u);
}

TEST(XmlExtract, Examples) {
    std::map<std::string, std::vector<Word>> m;
    extract_child_sequences("<r><a/><b/></r>", "t.xml", m);
    EXPECT_EQ(m["r"], std::vector<Word>{W("a b")});

    std::map<std::string, std::vector<Word>> e;
    extract_child_sequences("<r/>", "t.xml", e);
    EXPECT_EQ(e["r"], std::vector<Word>{W("")});

    std::map<std::string, std::vector<Word>> two;
    extract_child_sequences("<d><r><a/><b/></r><r><b/><a/></r></d>", "t.xml", two);
    EXPECT_EQ(two["r"], (std::vector<Word>{W("a b"), W("b a")}));
    EXPECT_EQ(print(learn(Sample::from_words(two["r"])).expression), "a&b");
}

TEST(XmlExtract, IgnoresTextAttributesAndComments) {
    std::map<std::string, std::vector<Word>> m;
    extract_child_sequences("<r x=\"1\">hi<!-- c --><a>t</a> more <b/></r>", "t.xml", m);
    EXPECT_EQ(m["r"], std::vector<Word>{W("a b")});
    EXPECT_EQ(m["a"], std::vector<Word>{W("")});
}

TEST(XmlExtract, EscapesNamesOutsideTheTokenClass) {
    EXPECT_EQ(escape_name("ns:item-2"), "ns:item-2");
    EXPECT_EQ(escape_name("a.b"), "a.2Eb");
    EXPECT_EQ(escape_name("\xC3\xA9t\xC3\xA9"), ".C3.A9t.C3.A9");
    EXPECT_EQ(escape_name("_"), ".5F");
    EXPECT_EQ(escape_name("_x"), "_x");
    EXPECT_NE(escape_name("a.2E"), escape_name("a."));
}

TEST(XmlExtract, MalformedInputReportsLocation) {
    std::map<std::string, std::vector<Word>> m;
    try {
        extract_child_sequences("<r>\n<a>\n</r>", "bad.xml", m);
        FAIL();
    } catch (const XmlError& e) {
        EXPECT_NE(std::string(e.what()).find("bad.xml:"), std::string::npos);
    }
}

TEST(Command, LearnPrintsExpression) {
    TempDir tmp;
    write(tmp / "ab.sample", "a b\na b a b\n");
    write(tmp / "chain.sample", "a b\n");
    write(tmp / "empty.sample", "# nothing\n");
    write(tmp / "bad.sample", "a  b\n");
    EXPECT_EQ(tool("learn --sample " + quote(tmp / "ab.sample")).out, "a+&b+\n");
    EXPECT_EQ(tool("learn --sample " + quote(tmp / "chain.sample")).out, "a b\n");
    EXPECT_EQ(tool("learn --sample " + std::string(RSOIRE_DATA_DIR) + "/samples/nested.sample").out, "(b c)&a&d\n");
    EXPECT_EQ(tool("learn --sample " + quote(tmp / "empty.sample")).code, cli::kEmptySample);
    EXPECT_EQ(tool("learn --sample " + quote(tmp / "bad.sample")).code, cli::kSyntax);
    EXPECT_EQ(tool("learn --sample " + quote(tmp / "missing.sample")).code, cli::kSyntax);
}

TEST(Command, LearnWritesTraceAndDot) {
    TempDir tmp;
    write(tmp / "ab.sample", "a b\na b a b\n");
    const Outcome r = tool("learn --sample " + quote(tmp / "ab.sample") + " --trace " + quote(tmp / "t.json") +
                       " --dot " + quote(tmp / "g.dot"));
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(read_text_file((tmp / "t.json").string()));
    EXPECT_EQ(doc["result"], "a+&b+");
    EXPECT_NE(read_text_file((tmp / "g.dot").string()).find("digraph"), std::string::npos);
}

TEST(Command, Classify) {
    EXPECT_EQ(tool("classify 'a d&(b|c*)'").out, "rsoire\n");
    EXPECT_EQ(tool("classify '((a|b&c) d?)*'").out, "soire\n");
    EXPECT_EQ(tool("classify 'a a'").out, "not-soire\n");
    EXPECT_EQ(tool("classify '(a|'").code, cli::kSyntax);
}

TEST(Command, MatchEnumerateEquiv) {
    EXPECT_EQ(tool("match '(a b)+' 'a b a b'").out, "true\n");
    EXPECT_EQ(tool("match '(a b)+' 'b a'").out, "false\n");
    EXPECT_EQ(tool("match 'a?' ''").out, "true\n");
    EXPECT_EQ(tool("enumerate 'a&b' --max-len 2").out, "a b\nb a\n");
    EXPECT_EQ(tool("enumerate 'a?' --max-len 1").out, "\na\n");
    EXPECT_EQ(tool("enumerate '(a|b|c)*' --max-len 12 --cap 100").code, cli::kCapExceeded);
    EXPECT_EQ(tool("equiv '(a b)+' 'a+&b+' --max-len 4").out, "diff: b a\n");
    EXPECT_EQ(tool("equiv '(a b)+' 'a+&b+' --max-len 4").code, 0);
    EXPECT_EQ(tool("equiv '(a b)+' 'a+&b+' --max-len 4 --fail-on-diff").code, cli::kDifferent);
    EXPECT_EQ(tool("equiv 'a*' 'a+' --max-len 3").out, "diff: _\n");
    EXPECT_EQ(tool("equiv 'a&b' 'b&a' --max-len 4 --fail-on-diff").out, "equal@4\n");
    EXPECT_EQ(tool("equiv 'a&' 'b' --max-len 4").code, cli::kSyntax);
}

TEST(Command, Sample) {
    EXPECT_EQ(tool("sample 'a+' --max-len 3").out, "a\na a\na a a\n");
    EXPECT_EQ(tool("sample 'a&b'").out, "a b\nb a\n");
    EXPECT_EQ(tool("sample '(a|b|c)*' --max-len 4 --cap 5").code, cli::kCapExceeded);
}

TEST(Command, UsageErrors) {
    EXPECT_EQ(tool("").code, cli::kSyntax);
    EXPECT_EQ(tool("frobnicate").code, cli::kSyntax);
    EXPECT_EQ(tool("enumerate 'a'").code, cli::kSyntax);
    EXPECT_EQ(tool("--help").code, 0);
}

TEST(Command, XmlExtractThenLearn) {
    TempDir tmp;
    write(tmp / "d.xml", "<d><r><a/><b/></r><r><b/><a/></r></d>");
    const Outcome r = tool("xml-extract --input " + quote(tmp / "d.xml") + " --out " + quote(tmp / "out"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(read_text_file((tmp / "out" / "r.sample").string()), "a b\nb a\n");
    EXPECT_EQ(tool("learn --sample " + quote(tmp / "out" / "r.sample")).out, "a&b\n");

    write(tmp / "bad.xml", "<d><r></d>");
    EXPECT_EQ(tool("xml-extract --input " + quote(tmp / "bad.xml") + " --out " + quote(tmp / "o2")).code,
              cli::kBadXml);
}

TEST(Command, ShippedCorpusNeverGetsStuck) {
    TempDir tmp;
    std::string inputs;
    for (const auto& entry : fs::directory_iterator(std::string(RSOIRE_DATA_DIR) + "/xml"))
        inputs += " " + quote(entry.path());
    ASSERT_EQ(tool("xml-extract --input" + inputs + " --out " + quote(tmp / "out")).code, 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(tmp / "out")) {
        const Outcome r = tool("learn --sample " + quote(entry.path()));
        EXPECT_EQ(r.code, 0) << entry.path();
        const Expr e = parse(r.out.substr(0, r.out.size() - 1));
        EXPECT_EQ(print(e) + "\n", r.out);
        for (const auto& w : read_sample_file(entry.path().string()).words) EXPECT_TRUE(matches(e, w));
        ++files;
    }
    EXPECT_GT(files, 10u);
    for (const auto& entry : fs::directory_iterator(std::string(RSOIRE_DATA_DIR) + "/samples"))
        EXPECT_EQ(tool("learn --sample " + quote(entry.path())).code, 0) << entry.path();
}

TEST(Command, ReproPasses) {
    TempDir tmp;
    const Outcome r = tool("repro --out " + quote(tmp / "r.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
    const auto doc = nlohmann::ordered_json::parse(read_text_file((tmp / "r.json").string()));
    ASSERT_EQ(doc["cases"].size(), 9u);
    EXPECT_EQ(doc["cases"][0]["name"], "(a b)+");
    EXPECT_EQ(doc["cases"][0]["learnt"], "a+&b+");
    EXPECT_EQ(doc["cases"][0]["counterexample"], "b a");
    EXPECT_EQ(doc["cases"][5]["learnt"], "(b c)&a&d");
    EXPECT_EQ(doc["cases"][6]["verdict"], "Equal");
    EXPECT_TRUE(doc["all_passed"]);
}

TEST(Repro, NestedCounterexampleIsOutsideTheTarget) {
    const ReproCase c = run_repro_case(ReproGroup::NestedInterleaving, "a&(b (c&d))");
    ASSERT_TRUE(c.counterexample.has_value());
    const Word w = *c.counterexample;
    EXPECT_TRUE(matches(parse(c.learnt), w));
    EXPECT_FALSE(matches(parse("a&(b (c&d))"), w));
    EXPECT_TRUE(matches(parse(c.learnt), W("d b c a")));
    EXPECT_FALSE(matches(parse("a&(b (c&d))"), W("d b c a")));
}

}  // namespace
}  // namespace rsoire
