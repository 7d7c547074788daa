// Dependency tree data model and CoNLL-U reading/writing.
//
// Trees are plain value types, immutable by convention once built.
// parse_conllu() never returns an invalid tree: a sentence either satisfies
// every tree invariant or it is skipped (batch mode) / aborts (strict mode).

#ifndef SENTREE_TREEBANK_HPP
#define SENTREE_TREEBANK_HPP

#include <string>
#include <string_view>
#include <vector>

namespace sentree {

struct Token {
    int id = 0;            // 1-based position in the sentence
    std::string form;
    std::string lemma;     // empty means CoNLL-U '_'
    std::string upos;      // empty means '_'
    std::string xpos;      // opaque, preserved verbatim
    std::string feats;     // opaque
    int head = 0;          // 0 = syntactic root
    std::string deprel;
    std::string deps;      // opaque
    std::string misc;      // opaque
};

struct DependencyTree {
    std::string sentence_id;             // from "# sent_id = ..." when present
    std::vector<std::string> comments;   // verbatim '#' lines
    std::vector<Token> tokens;           // ids are exactly 1..n

    int size() const { return static_cast<int>(tokens.size()); }
    const Token& token(int id) const { return tokens[static_cast<size_t>(id - 1)]; }

    // Id of the unique token with head 0. Returns 0 for an empty tree.
    int root_id() const;

    // Dependents of each token, indexed by head id; index 0 holds the root.
    std::vector<std::vector<int>> children_by_id() const;

    // Throws std::runtime_error naming the violated invariant:
    // ids not 1..n, no root, multiple roots, head out of range,
    // self-headed token, or cycle.
    void validate() const;
};

struct ConlluOptions {
    bool strict = false;   // abort on the first bad sentence instead of skipping it
};

// Parses CoNLL-U text into trees. Multiword-token ranges ("3-4") and empty
// nodes ("5.1") are dropped with a recorded warning. Sentences with malformed
// lines or invariant violations are skipped with a recorded warning in batch
// mode and raise std::runtime_error in strict mode; messages carry the 1-based
// line number.
std::vector<DependencyTree> parse_conllu(std::string_view text,
                                         const ConlluOptions& options = {},
                                         std::vector<std::string>* warnings = nullptr);

// 10-column output, '_' for empty fields, one blank line between sentences,
// trailing newline. Round-trips through parse_conllu.
std::string write_conllu(const std::vector<DependencyTree>& trees);
std::string write_conllu(const DependencyTree& tree);

// Naive sentence splitter / tokenizer for raw review text. Sentences end at
// '.', '!' or '?' followed by whitespace or end of input; tokens split on
// whitespace with leading/trailing punctuation detached as separate tokens.
std::vector<std::vector<std::string>> simple_tokenize(std::string_view text);

}  // namespace sentree

#endif  // SENTREE_TREEBANK_HPP
