#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sentree/treebank.hpp"
#include "test_helpers.hpp"
#include "text_util.hpp"

using namespace sentree;

namespace {

const char* kTinySentence =
    "1\tWell\twell\tINTJ\t_\t_\t3\tdiscourse\t_\t_\n"
    "2\tI\tI\tPRON\t_\t_\t3\tnsubj\t_\t_\n"
    "3\tfound\tfind\tVERB\t_\t_\t0\troot\t_\t_\n";

}  // namespace

TEST_CASE("head of token 2 is token 3") {
    auto trees = parse_conllu(kTinySentence);
    REQUIRE(trees.size() == 1);
    const DependencyTree& t = trees[0];
    CHECK(t.root_id() == 3);
    CHECK(t.token(2).head == 3);
    CHECK(t.token(2).deprel == "nsubj");
}

TEST_CASE("empty input yields no trees") {
    CHECK(parse_conllu("").empty());
    CHECK(parse_conllu("\n\n\n").empty());
}

TEST_CASE("cycle 1->2->1 is a sentence-level error") {
    const char* text =
        "1\ta\t_\tX\t_\t_\t2\tdep\t_\t_\n"
        "2\tb\t_\tX\t_\t_\t1\tdep\t_\t_\n"
        "3\tc\t_\tX\t_\t_\t0\troot\t_\t_\n";
    std::vector<std::string> warnings;
    auto trees = parse_conllu(text, {}, &warnings);
    CHECK(trees.empty());
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("cycle") != std::string::npos);

    CHECK_THROWS_WITH_AS(parse_conllu(text, {.strict = true}), doctest::Contains("cycle"),
                         std::runtime_error);
}

TEST_CASE("multiword ranges and empty nodes are skipped with warnings") {
    const char* text =
        "1\tHe\the\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
        "2-3\tcannot\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "2\tcan\tcan\tAUX\t_\t_\t3\taux\t_\t_\n"
        "3\tgo\tgo\tVERB\t_\t_\t0\troot\t_\t_\n"
        "3.1\telided\t_\t_\t_\t_\t_\t_\t_\t_\n";
    std::vector<std::string> warnings;
    auto trees = parse_conllu(text, {}, &warnings);
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].size() == 3);
    REQUIRE(warnings.size() == 2);
    CHECK(warnings[0].find("line 2") != std::string::npos);
    CHECK(warnings[0].find("range") != std::string::npos);
    CHECK(warnings[1].find("line 5") != std::string::npos);
    CHECK(warnings[1].find("empty node") != std::string::npos);
}

TEST_CASE("malformed lines carry line numbers") {
    SUBCASE("wrong column count") {
        std::vector<std::string> warnings;
        auto trees = parse_conllu("1\tonly\tthree\n", {}, &warnings);
        CHECK(trees.empty());
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("line 1") != std::string::npos);
        CHECK(warnings[0].find("10 columns") != std::string::npos);
    }
    SUBCASE("non-integer head") {
        const char* text = "1\ta\t_\tX\t_\t_\tzero\tdep\t_\t_\n";
        std::vector<std::string> warnings;
        CHECK(parse_conllu(text, {}, &warnings).empty());
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("non-integer head") != std::string::npos);
    }
    SUBCASE("rootless sentences always contain a cycle") {
        const char* text =
            "1\ta\t_\tX\t_\t_\t2\tdep\t_\t_\n"
            "2\tb\t_\tX\t_\t_\t1\tdep\t_\t_\n";
        std::vector<std::string> warnings;
        CHECK(parse_conllu(text, {}, &warnings).empty());
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("cycle") != std::string::npos);
    }
    SUBCASE("multiple roots") {
        const char* text =
            "1\ta\t_\tX\t_\t_\t0\troot\t_\t_\n"
            "2\tb\t_\tX\t_\t_\t0\troot\t_\t_\n";
        std::vector<std::string> warnings;
        CHECK(parse_conllu(text, {}, &warnings).empty());
        CHECK(warnings[0].find("multiple roots") != std::string::npos);
    }
    SUBCASE("head out of range") {
        const char* text = "1\ta\t_\tX\t_\t_\t9\tdep\t_\t_\n";
        std::vector<std::string> warnings;
        CHECK(parse_conllu(text, {}, &warnings).empty());
        CHECK(warnings[0].find("head out of range") != std::string::npos);
    }
}

TEST_CASE("batch mode skips bad sentences and keeps good ones") {
    std::string text = std::string(kTinySentence) + "\n" +
                       "1\tbroken\t_\tX\t_\t_\t5\tdep\t_\t_\n" + "\n" + kTinySentence;
    std::vector<std::string> warnings;
    auto trees = parse_conllu(text, {}, &warnings);
    CHECK(trees.size() == 2);
    CHECK(warnings.size() == 1);
}

TEST_CASE("fixture treebank parses strictly and round-trips byte for byte") {
    std::string text = util::read_file(testutil::data_path("fixture.conllu"));
    auto trees = parse_conllu(text, {.strict = true});
    CHECK(trees.size() >= 50);
    for (const auto& t : trees) t.validate();
    CHECK(write_conllu(trees) == text);
}

TEST_CASE("writer emits '_' for empty fields") {
    DependencyTree tree;
    tree.tokens.push_back(testutil::make_token(1, "word", "", 0, "root"));
    std::string out = write_conllu(tree);
    CHECK(out == "1\tword\t_\t_\t_\t_\t0\troot\t_\t_\n");
}

TEST_CASE("writer separates trees with exactly one blank line and ends with a newline") {
    DependencyTree a;
    a.tokens.push_back(testutil::make_token(1, "a", "X", 0, "root"));
    DependencyTree b;
    b.tokens.push_back(testutil::make_token(1, "b", "X", 0, "root"));
    std::string out = write_conllu({a, b});
    CHECK(out ==
          "1\ta\t_\tX\t_\t_\t0\troot\t_\t_\n"
          "\n"
          "1\tb\t_\tX\t_\t_\t0\troot\t_\t_\n");
    auto back = parse_conllu(out, {.strict = true});
    CHECK(back.size() == 2);
}

TEST_CASE("token count equals surviving word lines") {
    std::string text = util::read_file(testutil::data_path("fixture.conllu"));
    auto trees = parse_conllu(text, {.strict = true});
    size_t expected = 0;
    for (const auto& line : util::split(text, '\n')) {
        if (line.empty() || line[0] == '#') continue;
        ++expected;
    }
    size_t actual = 0;
    for (const auto& t : trees) actual += static_cast<size_t>(t.size());
    CHECK(actual == expected);
}

TEST_CASE("fuzzed parser never returns an invalid tree") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coin(0, 9);
    for (int round = 0; round < 300; ++round) {
        // Mix structured token lines with garbage.
        std::string text;
        int lines = coin(rng) + 1;
        for (int l = 0; l < lines; ++l) {
            switch (coin(rng)) {
                case 0: text += "\n"; break;
                case 1: text += "# comment\n"; break;
                case 2: text += "garbage line\n"; break;
                case 3: text += "1\ta\n"; break;
                default: {
                    int id = coin(rng);
                    int head = coin(rng) - 2;
                    text += std::to_string(id) + "\tw\t_\tX\t_\t_\t" + std::to_string(head) +
                            "\tdep\t_\t_\n";
                }
            }
        }
        std::vector<std::string> warnings;
        auto trees = parse_conllu(text, {}, &warnings);
        for (const auto& t : trees) CHECK_NOTHROW(t.validate());
    }
}

TEST_CASE("simple_tokenize splits sentences and detaches punctuation") {
    auto s = simple_tokenize("This hotel is awesome.");
    REQUIRE(s.size() == 1);
    CHECK(s[0] == std::vector<std::string>{"This", "hotel", "is", "awesome", "."});

    CHECK(simple_tokenize("").empty());
    CHECK(simple_tokenize("   \n ").empty());

    auto two = simple_tokenize("Good! Bad?");
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<std::string>{"Good", "!"});
    CHECK(two[1] == std::vector<std::string>{"Bad", "?"});

    auto inner = simple_tokenize("don't stop (ever).");
    REQUIRE(inner.size() == 1);
    CHECK(inner[0] == std::vector<std::string>{"don't", "stop", "(", "ever", ")", "."});

    // No split inside numbers; deterministic on repeated calls.
    auto nums = simple_tokenize("It costs 4.5 euros.");
    REQUIRE(nums.size() == 1);
    CHECK(nums[0] == std::vector<std::string>{"It", "costs", "4.5", "euros", "."});
    CHECK(simple_tokenize("It costs 4.5 euros.") == nums);
}

TEST_CASE("sent_id comment is picked up and written back") {
    const char* text =
        "# sent_id = demo-42\n"
        "# text = Hi .\n"
        "1\tHi\thi\tINTJ\t_\t_\t0\troot\t_\t_\n"
        "2\t.\t.\tPUNCT\t_\t_\t1\tpunct\t_\t_\n";
    auto trees = parse_conllu(text, {.strict = true});
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].sentence_id == "demo-42");
    CHECK(write_conllu(trees) == text);
}
