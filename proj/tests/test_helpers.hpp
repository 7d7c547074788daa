// Shared fixtures and generators for the test suites.

#ifndef SENTREE_TEST_HELPERS_HPP
#define SENTREE_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "sentree/linearizer.hpp"
#include "sentree/treebank.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(SENTREE_DATA_DIR) + "/" + name;
}

inline sentree::Token make_token(int id, std::string form, std::string upos, int head,
                                 std::string deprel, std::string lemma = "") {
    sentree::Token t;
    t.id = id;
    t.form = std::move(form);
    t.lemma = std::move(lemma);
    t.upos = std::move(upos);
    t.head = head;
    t.deprel = std::move(deprel);
    return t;
}

// Uniform random attachment: nodes join the tree one by one, each picking an
// already-attached parent, so the result is always a valid tree.
inline sentree::DependencyTree random_tree(std::mt19937& rng, int n) {
    static const std::vector<std::string> kUpos = {"NOUN", "VERB", "ADJ", "ADV", "DET", "PRON", "PUNCT"};
    static const std::vector<std::string> kDeprels = {"nsubj", "obj", "det", "advmod", "conj",
                                                      "amod",  "obl", "case", "punct"};
    static const std::vector<std::string> kForms = {"alpha", "bravo", "charlie", "delta", "echo",
                                                    "fox",   "golf",  "hotel",   "india", "juliet"};

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> heads(static_cast<size_t>(n) + 1, 0);
    std::vector<int> attached;
    attached.push_back(order[0]);
    for (size_t k = 1; k < order.size(); ++k) {
        int node = order[k];
        int parent = attached[std::uniform_int_distribution<size_t>(0, attached.size() - 1)(rng)];
        heads[static_cast<size_t>(node)] = parent;
        attached.push_back(node);
    }

    sentree::DependencyTree tree;
    for (int id = 1; id <= n; ++id) {
        auto pick = [&](const std::vector<std::string>& pool) {
            return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
        };
        int head = heads[static_cast<size_t>(id)];
        tree.tokens.push_back(make_token(id, pick(kForms), pick(kUpos), head,
                                         head == 0 ? "root" : pick(kDeprels)));
    }
    tree.validate();
    return tree;
}

// Arbitrary (usually invalid) label sequence: locators uniform in [-2n, 2n],
// a root sentinel with the given probability, random deprels.
inline sentree::LabelSequence random_labels(std::mt19937& rng, int n, sentree::Encoding encoding,
                                            double root_prob = 0.1) {
    static const std::vector<std::string> kUpos = {"NOUN", "VERB", "ADJ", "ADV", "DET"};
    static const std::vector<std::string> kDeprels = {"nsubj", "obj", "det", "advmod", "root", "dep"};

    sentree::LabelSequence seq;
    seq.encoding = encoding;
    std::uniform_int_distribution<int> locator(-2 * n, 2 * n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pick = [&](const std::vector<std::string>& pool) {
        return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
    };

    for (int j = 1; j <= n; ++j) {
        sentree::LabeledToken item;
        item.form = "w" + std::to_string(j);
        item.upos = pick(kUpos);
        sentree::Label& label = item.label;
        label.deprel = pick(kDeprels);
        if (unit(rng) < root_prob) {
            label.root = true;
            if (encoding == sentree::Encoding::Absolute) label.head = 0;
        } else {
            int x = locator(rng);
            switch (encoding) {
                case sentree::Encoding::Absolute:
                    label.head = x < 0 ? -x : x;
                    label.root = (label.head == 0);
                    break;
                case sentree::Encoding::Relative:
                    label.offset = x;
                    break;
                case sentree::Encoding::PosBased:
                    label.head_tag = pick(kUpos);
                    label.offset = x;
                    break;
            }
        }
        seq.items.push_back(std::move(item));
    }
    return seq;
}

inline bool same_arcs(const sentree::DependencyTree& a, const sentree::DependencyTree& b) {
    if (a.size() != b.size()) return false;
    for (int i = 1; i <= a.size(); ++i) {
        if (a.token(i).head != b.token(i).head) return false;
        if (a.token(i).deprel != b.token(i).deprel) return false;
    }
    return true;
}

}  // namespace testutil

#endif  // SENTREE_TEST_HELPERS_HPP
