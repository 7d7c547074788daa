// Tree linearization: encode dependency trees as one label per token and
// decode arbitrary label sequences back into valid trees.
//
// Three encodings locate each token's head by absolute position, by signed
// offset, or by (UPOS tag, k-th occurrence). Encoding a valid tree and
// decoding the result reproduces the tree exactly; decoding is total over
// arbitrary label sequences via a fixed repair procedure, so the decoder
// never fails and never emits an invalid tree.

#ifndef SENTREE_LINEARIZER_HPP
#define SENTREE_LINEARIZER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sentree/treebank.hpp"

namespace sentree {

enum class Encoding { Absolute, Relative, PosBased };

// Accepts "abs", "rel", "pos"; throws std::runtime_error otherwise.
Encoding encoding_from_name(std::string_view name);
std::string_view encoding_name(Encoding encoding);

struct Label {
    bool root = false;          // ROOT sentinel in rel/pos; abs encodes root as head 0
    bool unresolvable = false;  // malformed source label; decoder treats it as headless
    int head = 0;               // Absolute: absolute head position, >= 0
    int offset = 0;             // Relative/PosBased: signed displacement, nonzero unless root
    std::string head_tag;       // PosBased: UPOS of the head
    std::string deprel;
};

struct LabeledToken {
    std::string form;
    std::string upos;   // empty means unknown ('_' in label files)
    Label label;
};

struct LabelSequence {
    Encoding encoding = Encoding::Relative;
    std::vector<LabeledToken> items;

    std::size_t size() const { return items.size(); }
};

// Textual label form: abs "3@nsubj", rel "+1@nsubj" / "R@root",
// pos "VERB:-1@obj" / "R@root".
std::string format_label(const Label& label, Encoding encoding);

// Total: malformed text yields an unresolvable label with deprel "dep".
Label parse_label(std::string_view text, Encoding encoding);

// Requires a valid tree; the pos encoding additionally requires a non-empty
// UPOS on every token (throws naming the first offending token id).
LabelSequence encode(const DependencyTree& tree, Encoding encoding);

struct DecodeStats {
    std::size_t headless = 0;         // locators out of range, self-pointing, or unresolvable
    std::size_t cycles_broken = 0;    // arcs dropped by the cycle check
    std::size_t extra_roots = 0;      // later root claimants reattached to the first
    std::size_t promoted_roots = 0;   // sentences without a root label
    std::size_t reattached = 0;       // headless tokens attached to the root

    std::size_t repairs() const { return headless + cycles_broken + extra_roots + promoted_roots; }
};

// Never fails; the result satisfies every DependencyTree invariant.
DependencyTree decode(const LabelSequence& labels, DecodeStats* stats = nullptr);

// encode(decode(labels), to); repairs apply first when locators do not resolve.
LabelSequence convert(const LabelSequence& labels, Encoding to);

// Label TSV: ID FORM UPOS LABEL, tab separated, blank line between sentences.
// Malformed labels are recorded as warnings and decoded via repair.
std::vector<LabelSequence> read_labels(std::string_view text, Encoding encoding,
                                       std::vector<std::string>* warnings = nullptr);
std::string write_labels(const std::vector<LabelSequence>& sequences);

}  // namespace sentree

#endif  // SENTREE_LINEARIZER_HPP
