#include "sentree/treebank.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace sentree {

namespace {

const char* kEmptyMarker = "_";

std::string field_or_marker(const std::string& s) {
    return s.empty() ? kEmptyMarker : s;
}

std::string unmark(std::string s) {
    return s == kEmptyMarker ? std::string() : s;
}

bool is_integer_id(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool is_range_id(std::string_view s) {
    size_t dash = s.find('-');
    return dash != std::string_view::npos && dash > 0 &&
           is_integer_id(s.substr(0, dash)) && is_integer_id(s.substr(dash + 1));
}

bool is_empty_node_id(std::string_view s) {
    size_t dot = s.find('.');
    return dot != std::string_view::npos && dot > 0 &&
           is_integer_id(s.substr(0, dot)) && is_integer_id(s.substr(dot + 1));
}

struct SentenceBlock {
    std::vector<std::string> comments;
    std::vector<std::pair<size_t, std::string>> token_lines;  // (line number, line)
    size_t first_line = 0;
};

// Builds a tree from one block; throws std::runtime_error on any defect.
DependencyTree build_tree(const SentenceBlock& block, std::vector<std::string>* warnings) {
    DependencyTree tree;
    tree.comments = block.comments;
    for (const std::string& comment : block.comments) {
        std::string_view body = util::trim(std::string_view(comment).substr(1));
        if (body.rfind("sent_id", 0) == 0) {
            size_t eq = body.find('=');
            if (eq != std::string_view::npos)
                tree.sentence_id = std::string(util::trim(body.substr(eq + 1)));
        }
    }

    for (const auto& [line_no, line] : block.token_lines) {
        std::vector<std::string> cols = util::split(line, '\t');
        if (cols.size() != 10) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 10 columns, got " +
                                     std::to_string(cols.size()));
        }
        const std::string& id_col = cols[0];
        if (is_range_id(id_col)) {
            if (warnings)
                warnings->push_back("line " + std::to_string(line_no) + ": skipped multiword token range " + id_col);
            continue;
        }
        if (is_empty_node_id(id_col)) {
            if (warnings)
                warnings->push_back("line " + std::to_string(line_no) + ": skipped empty node " + id_col);
            continue;
        }
        if (!is_integer_id(id_col)) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": non-integer token id '" + id_col + "'");
        }
        long head = 0;
        if (!util::parse_int(cols[6], head) || head < 0) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": non-integer head '" + cols[6] + "'");
        }

        Token token;
        token.id = static_cast<int>(std::stol(id_col));
        token.form = cols[1];
        token.lemma = unmark(cols[2]);
        token.upos = unmark(cols[3]);
        token.xpos = cols[4];
        token.feats = cols[5];
        token.head = static_cast<int>(head);
        token.deprel = unmark(cols[7]);
        token.deps = cols[8];
        token.misc = cols[9];
        if (token.deprel.empty()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": empty deprel");
        }
        tree.tokens.push_back(std::move(token));
    }

    if (tree.tokens.empty()) {
        throw std::runtime_error("line " + std::to_string(block.first_line) + ": sentence has no basic word lines");
    }
    tree.validate();
    return tree;
}

}  // namespace

int DependencyTree::root_id() const {
    for (const Token& t : tokens)
        if (t.head == 0) return t.id;
    return 0;
}

std::vector<std::vector<int>> DependencyTree::children_by_id() const {
    std::vector<std::vector<int>> kids(tokens.size() + 1);
    for (const Token& t : tokens) kids[static_cast<size_t>(t.head)].push_back(t.id);
    return kids;
}

void DependencyTree::validate() const {
    const int n = size();
    std::string where = sentence_id.empty() ? std::string("sentence") : "sentence " + sentence_id;
    for (int i = 0; i < n; ++i) {
        if (tokens[static_cast<size_t>(i)].id != i + 1)
            throw std::runtime_error(where + ": token ids are not 1.." + std::to_string(n));
    }
    for (const Token& t : tokens) {
        if (t.head < 0 || t.head > n)
            throw std::runtime_error(where + ": head out of range for token " + std::to_string(t.id));
        if (t.head == t.id)
            throw std::runtime_error(where + ": cycle (token " + std::to_string(t.id) + " is its own head)");
    }
    // Walk head chains; every token must reach 0 without revisiting a node.
    // Checked before the root count so a rootless cycle is reported as a cycle.
    std::vector<int> state(static_cast<size_t>(n) + 1, 0);  // 0 new, 1 on path, 2 done
    for (int start = 1; start <= n; ++start) {
        int v = start;
        std::vector<int> path;
        while (v != 0 && state[static_cast<size_t>(v)] == 0) {
            state[static_cast<size_t>(v)] = 1;
            path.push_back(v);
            v = token(v).head;
        }
        if (v != 0 && state[static_cast<size_t>(v)] == 1)
            throw std::runtime_error(where + ": cycle involving token " + std::to_string(v));
        for (int u : path) state[static_cast<size_t>(u)] = 2;
    }
    int roots = 0;
    for (const Token& t : tokens)
        if (t.head == 0) ++roots;
    if (roots == 0) throw std::runtime_error(where + ": no root");
    if (roots > 1) throw std::runtime_error(where + ": multiple roots");
}

std::vector<DependencyTree> parse_conllu(std::string_view text, const ConlluOptions& options,
                                         std::vector<std::string>* warnings) {
    // Strip a UTF-8 BOM if present.
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<DependencyTree> trees;
    SentenceBlock block;
    size_t line_no = 0;
    size_t pos = 0;

    auto flush = [&]() {
        if (block.comments.empty() && block.token_lines.empty()) return;
        if (!block.token_lines.empty()) {
            try {
                trees.push_back(build_tree(block, warnings));
            } catch (const std::runtime_error& e) {
                if (options.strict) throw;
                if (warnings) warnings->push_back(std::string("skipped sentence: ") + e.what());
            }
        }
        block = SentenceBlock{};
    };

    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos) ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        if (util::is_blank(line)) {
            flush();
        } else if (line.front() == '#') {
            if (block.token_lines.empty() && block.comments.empty()) block.first_line = line_no;
            block.comments.emplace_back(line);
        } else {
            if (block.token_lines.empty() && block.comments.empty()) block.first_line = line_no;
            block.token_lines.emplace_back(line_no, std::string(line));
        }

        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    flush();
    return trees;
}

std::string write_conllu(const std::vector<DependencyTree>& trees) {
    std::ostringstream out;
    bool first = true;
    for (const DependencyTree& tree : trees) {
        if (!first) out << '\n';
        first = false;
        if (tree.comments.empty() && !tree.sentence_id.empty())
            out << "# sent_id = " << tree.sentence_id << '\n';
        for (const std::string& comment : tree.comments) out << comment << '\n';
        for (const Token& t : tree.tokens) {
            out << t.id << '\t' << t.form << '\t' << field_or_marker(t.lemma) << '\t'
                << field_or_marker(t.upos) << '\t' << field_or_marker(t.xpos) << '\t'
                << field_or_marker(t.feats) << '\t' << t.head << '\t' << field_or_marker(t.deprel)
                << '\t' << field_or_marker(t.deps) << '\t' << field_or_marker(t.misc) << '\n';
        }
    }
    return out.str();
}

std::string write_conllu(const DependencyTree& tree) {
    return write_conllu(std::vector<DependencyTree>{tree});
}

std::vector<std::vector<std::string>> simple_tokenize(std::string_view text) {
    std::vector<std::vector<std::string>> sentences;

    auto is_punct = [](char c) {
        unsigned char u = static_cast<unsigned char>(c);
        return u < 0x80 && std::ispunct(u);
    };

    auto tokenize_chunk = [&](std::string_view chunk) {
        std::vector<std::string> tokens;
        size_t i = 0;
        while (i < chunk.size()) {
            while (i < chunk.size() && std::isspace(static_cast<unsigned char>(chunk[i]))) ++i;
            size_t j = i;
            while (j < chunk.size() && !std::isspace(static_cast<unsigned char>(chunk[j]))) ++j;
            if (j == i) break;
            std::string_view word = chunk.substr(i, j - i);
            size_t lead = 0;
            while (lead < word.size() && is_punct(word[lead])) ++lead;
            size_t tail = word.size();
            while (tail > lead && is_punct(word[tail - 1])) --tail;
            for (size_t k = 0; k < lead; ++k) tokens.emplace_back(1, word[k]);
            if (tail > lead) tokens.emplace_back(word.substr(lead, tail - lead));
            for (size_t k = tail; k < word.size(); ++k) tokens.emplace_back(1, word[k]);
            i = j;
        }
        return tokens;
    };

    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool is_end = (c == '.' || c == '!' || c == '?') &&
                      (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])));
        if (is_end) {
            auto tokens = tokenize_chunk(text.substr(start, i - start + 1));
            if (!tokens.empty()) sentences.push_back(std::move(tokens));
            start = i + 1;
        }
    }
    if (start < text.size()) {
        auto tokens = tokenize_chunk(text.substr(start));
        if (!tokens.empty()) sentences.push_back(std::move(tokens));
    }
    return sentences;
}

}  // namespace sentree
