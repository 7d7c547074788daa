#include "sentree/tagger.hpp"

#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace sentree {

namespace {

using Counts = std::map<std::string, std::map<std::string, long>>;

// Most frequent value; ties break toward the smaller key (map order).
std::string argmax(const std::map<std::string, long>& counts) {
    std::string best;
    long best_count = -1;
    for (const auto& [value, count] : counts) {
        if (count > best_count) {
            best = value;
            best_count = count;
        }
    }
    return best;
}

std::map<std::string, std::string> argmax_all(const Counts& counts) {
    std::map<std::string, std::string> out;
    for (const auto& [key, values] : counts) out[key] = argmax(values);
    return out;
}

}  // namespace

FrequencyModel train_frequency_model(const std::vector<DependencyTree>& treebank, Encoding encoding) {
    if (treebank.empty()) throw std::runtime_error("cannot train a frequency model on an empty treebank");

    Counts word_label, upos_label, word_upos;
    std::map<std::string, long> label_totals, upos_totals;

    for (const DependencyTree& tree : treebank) {
        LabelSequence seq = encode(tree, encoding);
        for (size_t i = 0; i < seq.items.size(); ++i) {
            const LabeledToken& item = seq.items[i];
            std::string word = util::to_lower(item.form);
            std::string label = format_label(item.label, encoding);
            ++word_label[word][label];
            ++upos_label[item.upos][label];
            ++word_upos[word][item.upos];
            ++label_totals[label];
            ++upos_totals[item.upos];
        }
    }

    FrequencyModel model;
    model.encoding = encoding;
    model.word_label = argmax_all(word_label);
    model.upos_label = argmax_all(upos_label);
    model.word_upos = argmax_all(word_upos);
    model.fallback_label = argmax(label_totals);
    model.fallback_upos = argmax(upos_totals);
    return model;
}

FrequencyModel fallback_only(const FrequencyModel& model) {
    FrequencyModel stripped;
    stripped.encoding = model.encoding;
    stripped.fallback_label = model.fallback_label;
    stripped.fallback_upos = model.fallback_upos;
    return stripped;
}

LabelSequence predict(const FrequencyModel& model, const std::vector<std::string>& forms) {
    LabelSequence seq;
    seq.encoding = model.encoding;
    seq.items.reserve(forms.size());
    for (const std::string& form : forms) {
        std::string word = util::to_lower(form);
        auto upos_it = model.word_upos.find(word);
        std::string upos = upos_it != model.word_upos.end() ? upos_it->second : model.fallback_upos;

        std::string label_str;
        auto word_it = model.word_label.find(word);
        if (word_it != model.word_label.end()) {
            label_str = word_it->second;
        } else {
            auto tag_it = model.upos_label.find(upos);
            label_str = tag_it != model.upos_label.end() ? tag_it->second : model.fallback_label;
        }
        seq.items.push_back({form, upos, parse_label(label_str, model.encoding)});
    }
    return seq;
}

namespace {

const char* kHeader = "sentree-tagger-model v1";

void write_section(std::ostringstream& out, const char* name,
                   const std::map<std::string, std::string>& entries) {
    out << '[' << name << "]\n";
    for (const auto& [key, value] : entries) out << key << '\t' << value << '\n';
}

}  // namespace

std::string serialize_model(const FrequencyModel& model) {
    std::ostringstream out;
    out << kHeader << '\n';
    out << "encoding\t" << encoding_name(model.encoding) << '\n';
    out << "[fallback]\n";
    out << "label\t" << model.fallback_label << '\n';
    out << "upos\t" << model.fallback_upos << '\n';
    write_section(out, "word_label", model.word_label);
    write_section(out, "upos_label", model.upos_label);
    write_section(out, "word_upos", model.word_upos);
    return out.str();
}

FrequencyModel deserialize_model(std::string_view text) {
    FrequencyModel model;
    bool saw_header = false;
    bool saw_encoding = false;
    bool saw_fallback_label = false;
    bool saw_fallback_upos = false;
    std::string section;

    size_t line_no = 0;
    size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("model file line " + std::to_string(line_no) + ": " + what);
    };

    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos) ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        bool last = (nl == std::string_view::npos);

        if (!line.empty()) {
            if (!saw_header) {
                if (line != kHeader) fail("expected header '" + std::string(kHeader) + "'");
                saw_header = true;
            } else if (line.front() == '[' && line.back() == ']') {
                section = std::string(line.substr(1, line.size() - 2));
                if (section != "fallback" && section != "word_label" && section != "upos_label" &&
                    section != "word_upos")
                    fail("unknown section [" + section + "]");
            } else {
                size_t tab = line.find('\t');
                if (tab == std::string_view::npos) fail("expected key<TAB>value");
                std::string key(line.substr(0, tab));
                std::string value(line.substr(tab + 1));
                if (section.empty()) {
                    if (key == "encoding") {
                        model.encoding = encoding_from_name(value);
                        saw_encoding = true;
                    } else {
                        fail("unexpected key '" + key + "' before any section");
                    }
                } else if (section == "fallback") {
                    if (key == "label") {
                        model.fallback_label = value;
                        saw_fallback_label = true;
                    } else if (key == "upos") {
                        model.fallback_upos = value;
                        saw_fallback_upos = true;
                    } else {
                        fail("unknown fallback key '" + key + "'");
                    }
                } else if (section == "word_label") {
                    model.word_label[key] = value;
                } else if (section == "upos_label") {
                    model.upos_label[key] = value;
                } else {
                    model.word_upos[key] = value;
                }
            }
        }
        if (last) break;
        pos = nl + 1;
    }

    if (!saw_header) throw std::runtime_error("model file is empty");
    if (!saw_encoding) throw std::runtime_error("model file has no encoding line");
    if (!saw_fallback_label || !saw_fallback_upos)
        throw std::runtime_error("model file has no [fallback] section with label and upos");
    if (parse_label(model.fallback_label, model.encoding).unresolvable)
        throw std::runtime_error("model fallback label '" + model.fallback_label + "' does not parse");
    return model;
}

void save_model(const FrequencyModel& model, const std::string& path) {
    util::write_file(path, serialize_model(model));
}

FrequencyModel load_model(const std::string& path) {
    return deserialize_model(util::read_file(path));
}

}  // namespace sentree
