#include "sentree/linearizer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace sentree {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Optional sign, at least one digit, whole string.
bool parse_signed(std::string_view s, long& out) {
    if (s.empty()) return false;
    std::string_view digits = s;
    if (digits.front() == '+' || digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits)) return false;
    return util::parse_int(s[0] == '+' ? s.substr(1) : s, out);
}

Label malformed_label() {
    Label l;
    l.unresolvable = true;
    l.deprel = "dep";
    return l;
}

}  // namespace

Encoding encoding_from_name(std::string_view name) {
    if (name == "abs") return Encoding::Absolute;
    if (name == "rel") return Encoding::Relative;
    if (name == "pos") return Encoding::PosBased;
    throw std::runtime_error("unknown encoding '" + std::string(name) + "' (expected abs, rel or pos)");
}

std::string_view encoding_name(Encoding encoding) {
    switch (encoding) {
        case Encoding::Absolute: return "abs";
        case Encoding::Relative: return "rel";
        case Encoding::PosBased: return "pos";
    }
    return "?";
}

std::string format_label(const Label& label, Encoding encoding) {
    std::string locator;
    if (label.unresolvable) {
        locator = "?";
    } else if (encoding == Encoding::Absolute) {
        locator = std::to_string(label.head);
    } else if (label.root) {
        locator = "R";
    } else if (encoding == Encoding::Relative) {
        locator = (label.offset > 0 ? "+" : "") + std::to_string(label.offset);
    } else {
        locator = label.head_tag + ":" + (label.offset > 0 ? "+" : "") + std::to_string(label.offset);
    }
    return locator + "@" + label.deprel;
}

Label parse_label(std::string_view text, Encoding encoding) {
    size_t at = text.find('@');
    if (at == std::string_view::npos || at + 1 == text.size()) return malformed_label();
    std::string_view locator = text.substr(0, at);
    std::string deprel(text.substr(at + 1));

    Label label;
    label.deprel = deprel;

    if (encoding == Encoding::Absolute) {
        long head = 0;
        if (!all_digits(locator) || !util::parse_int(locator, head)) return malformed_label();
        label.head = static_cast<int>(head);
        label.root = (head == 0);
        return label;
    }

    if (locator == "R") {
        label.root = true;
        return label;
    }

    std::string_view offset_part = locator;
    if (encoding == Encoding::PosBased) {
        size_t colon = locator.find(':');
        if (colon == std::string_view::npos || colon == 0) return malformed_label();
        label.head_tag = std::string(locator.substr(0, colon));
        offset_part = locator.substr(colon + 1);
    }
    long offset = 0;
    if (!parse_signed(offset_part, offset) || offset == 0) return malformed_label();
    label.offset = static_cast<int>(offset);
    return label;
}

LabelSequence encode(const DependencyTree& tree, Encoding encoding) {
    tree.validate();
    const int n = tree.size();
    if (encoding == Encoding::PosBased) {
        for (const Token& t : tree.tokens)
            if (t.upos.empty())
                throw std::runtime_error("pos encoding requires a UPOS on every token; token " +
                                         std::to_string(t.id) + " has none");
    }

    LabelSequence seq;
    seq.encoding = encoding;
    seq.items.reserve(static_cast<size_t>(n));
    for (const Token& t : tree.tokens) {
        Label label;
        label.deprel = t.deprel;
        if (t.head == 0) {
            label.root = true;  // abs keeps head 0 as well
        } else if (encoding == Encoding::Absolute) {
            label.head = t.head;
        } else if (encoding == Encoding::Relative) {
            label.offset = t.head - t.id;
        } else {
            const std::string& tag = tree.token(t.head).upos;
            label.head_tag = tag;
            int count = 0;
            if (t.head > t.id) {
                for (int k = t.id + 1; k <= t.head; ++k)
                    if (tree.token(k).upos == tag) ++count;
                label.offset = count;
            } else {
                for (int k = t.id - 1; k >= t.head; --k)
                    if (tree.token(k).upos == tag) ++count;
                label.offset = -count;
            }
        }
        seq.items.push_back({t.form, t.upos, std::move(label)});
    }
    return seq;
}

DependencyTree decode(const LabelSequence& labels, DecodeStats* stats) {
    DecodeStats local;
    DecodeStats& st = stats ? *stats : local;
    const int n = static_cast<int>(labels.size());

    DependencyTree tree;
    tree.tokens.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const LabeledToken& item = labels.items[static_cast<size_t>(j - 1)];
        Token t;
        t.id = j;
        t.form = item.form;
        t.upos = item.upos;
        t.deprel = item.label.deprel.empty() ? "dep" : item.label.deprel;
        tree.tokens.push_back(std::move(t));
    }
    if (n == 0) return tree;

    // Step 1: resolve each locator to a candidate head (0 = headless).
    std::vector<int> candidate(static_cast<size_t>(n) + 1, 0);
    std::vector<bool> claims_root(static_cast<size_t>(n) + 1, false);
    for (int j = 1; j <= n; ++j) {
        const Label& label = labels.items[static_cast<size_t>(j - 1)].label;
        if (!label.unresolvable && (label.root || (labels.encoding == Encoding::Absolute && label.head == 0))) {
            claims_root[static_cast<size_t>(j)] = true;
            continue;
        }
        int h = 0;
        if (label.unresolvable) {
            h = 0;
        } else if (labels.encoding == Encoding::Absolute) {
            h = label.head;
        } else if (labels.encoding == Encoding::Relative) {
            h = label.offset == 0 ? 0 : j + label.offset;
        } else {
            int remaining = std::abs(label.offset);
            int step = label.offset > 0 ? 1 : -1;
            if (remaining > 0) {
                for (int k = j + step; k >= 1 && k <= n; k += step) {
                    if (labels.items[static_cast<size_t>(k - 1)].upos == label.head_tag && --remaining == 0) {
                        h = k;
                        break;
                    }
                }
            }
        }
        if (h >= 1 && h <= n && h != j) {
            candidate[static_cast<size_t>(j)] = h;
        } else {
            ++st.headless;
        }
    }

    // Step 2: add candidate arcs in (head, dependent) order, dropping any arc
    // that would close a cycle.
    std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> arcs;  // (head, dependent)
    for (int j = 1; j <= n; ++j)
        if (candidate[static_cast<size_t>(j)] != 0) arcs.emplace_back(candidate[static_cast<size_t>(j)], j);
    std::sort(arcs.begin(), arcs.end());
    for (const auto& [h, d] : arcs) {
        bool cycle = false;
        for (int v = h; v != 0; v = parent[static_cast<size_t>(v)]) {
            if (v == d) {
                cycle = true;
                break;
            }
        }
        if (cycle) {
            ++st.cycles_broken;
        } else {
            parent[static_cast<size_t>(d)] = h;
        }
    }

    // Step 3: pick the root. First claimant wins; later claimants reattach to
    // it. Without a claimant, the first headless token is promoted.
    int root_id = 0;
    for (int j = 1; j <= n; ++j) {
        if (!claims_root[static_cast<size_t>(j)]) continue;
        if (root_id == 0) {
            root_id = j;
        } else {
            parent[static_cast<size_t>(j)] = root_id;
            ++st.extra_roots;
        }
    }
    if (root_id == 0) {
        for (int j = 1; j <= n; ++j) {
            if (parent[static_cast<size_t>(j)] == 0) {
                root_id = j;
                break;
            }
        }
        if (root_id == 0) root_id = 1;  // unreachable: a full parent map would be cyclic
        tree.tokens[static_cast<size_t>(root_id - 1)].deprel = "root";
        parent[static_cast<size_t>(root_id)] = 0;
        ++st.promoted_roots;
    }

    // Step 4: attach every remaining headless token to the root.
    for (int j = 1; j <= n; ++j) {
        if (j == root_id) continue;
        if (parent[static_cast<size_t>(j)] == 0 && !claims_root[static_cast<size_t>(j)]) {
            parent[static_cast<size_t>(j)] = root_id;
            ++st.reattached;
        }
    }

    for (int j = 1; j <= n; ++j) tree.tokens[static_cast<size_t>(j - 1)].head = parent[static_cast<size_t>(j)];
    tree.validate();
    return tree;
}

LabelSequence convert(const LabelSequence& labels, Encoding to) {
    return encode(decode(labels), to);
}

std::vector<LabelSequence> read_labels(std::string_view text, Encoding encoding,
                                       std::vector<std::string>* warnings) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<LabelSequence> sequences;
    LabelSequence current;
    current.encoding = encoding;
    size_t line_no = 0;
    size_t pos = 0;

    auto flush = [&]() {
        if (!current.items.empty()) sequences.push_back(std::move(current));
        current = LabelSequence{};
        current.encoding = encoding;
    };

    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos) ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        if (util::is_blank(line)) {
            flush();
        } else {
            std::vector<std::string> cols = util::split(line, '\t');
            LabeledToken item;
            if (cols.size() == 4) {
                item.form = cols[1];
                item.upos = cols[2] == "_" ? std::string() : cols[2];
                item.label = parse_label(cols[3], encoding);
                if (item.label.unresolvable && warnings)
                    warnings->push_back("line " + std::to_string(line_no) + ": malformed label '" + cols[3] +
                                        "' treated as unresolvable");
            } else {
                if (cols.size() > 1) item.form = cols[1];
                if (cols.size() > 2 && cols[2] != "_") item.upos = cols[2];
                item.label = malformed_label();
                if (warnings)
                    warnings->push_back("line " + std::to_string(line_no) + ": expected 4 columns, got " +
                                        std::to_string(cols.size()));
            }
            current.items.push_back(std::move(item));
        }

        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    flush();
    return sequences;
}

std::string write_labels(const std::vector<LabelSequence>& sequences) {
    std::ostringstream out;
    bool first = true;
    for (const LabelSequence& seq : sequences) {
        if (!first) out << '\n';
        first = false;
        int id = 0;
        for (const LabeledToken& item : seq.items) {
            out << ++id << '\t' << item.form << '\t' << (item.upos.empty() ? "_" : item.upos) << '\t'
                << format_label(item.label, seq.encoding) << '\n';
        }
    }
    return out.str();
}

}  // namespace sentree
