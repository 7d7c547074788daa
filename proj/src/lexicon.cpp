#include "sentree/lexicon.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "sentree/treebank.hpp"
#include "text_util.hpp"

namespace sentree {

namespace {

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    std::string buf(s);
    char* end = nullptr;
    double value = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return false;
    out = value;
    return true;
}

// Iterates non-blank, non-comment lines as (line number, line).
template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos) ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        std::string_view trimmed = util::trim(line);
        if (!trimmed.empty() && trimmed.front() != '#') fn(line_no, trimmed);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

bool has_whitespace(std::string_view s) {
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

}  // namespace

std::optional<double> Lexicon::score_of(std::string_view word) const {
    auto it = entries.find(std::string(word));
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

std::optional<double> ModifierLexicon::factor_of(std::string_view word) const {
    auto it = factors.find(std::string(word));
    if (it == factors.end()) return std::nullopt;
    return it->second;
}

bool NegationSet::contains(std::string_view word) const {
    return words.count(std::string(word)) > 0;
}

Lexicon load_lexicon_text(std::string_view text, std::string name, std::vector<std::string>* warnings) {
    Lexicon lex;
    lex.name = std::move(name);
    for_each_data_line(text, [&](size_t line_no, std::string_view line) {
        size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw std::runtime_error(lex.name + " line " + std::to_string(line_no) + ": expected word<TAB>score");
        std::string key = util::to_lower(util::trim(line.substr(0, tab)));
        double score = 0;
        if (key.empty() || has_whitespace(key) || !parse_double(util::trim(line.substr(tab + 1)), score))
            throw std::runtime_error(lex.name + " line " + std::to_string(line_no) + ": expected word<TAB>score");
        if (score < -5.0 || score > 5.0)
            throw std::runtime_error(lex.name + " line " + std::to_string(line_no) + ": score " +
                                     util::format_double(score) + " outside [-5, 5]");
        if (warnings && lex.entries.count(key))
            warnings->push_back(lex.name + " line " + std::to_string(line_no) + ": duplicate key '" + key +
                                "', last value wins");
        lex.entries[key] = score;
    });
    return lex;
}

Lexicon load_lexicon(const std::string& path, std::vector<std::string>* warnings) {
    return load_lexicon_text(util::read_file(path), path, warnings);
}

ModifierLexicon load_modifiers_text(std::string_view text, std::string name,
                                    std::vector<std::string>* warnings) {
    ModifierLexicon lex;
    lex.name = std::move(name);
    for_each_data_line(text, [&](size_t line_no, std::string_view line) {
        size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw std::runtime_error(lex.name + " line " + std::to_string(line_no) + ": expected word<TAB>factor");
        std::string key = util::to_lower(util::trim(line.substr(0, tab)));
        double factor = 0;
        if (key.empty() || !parse_double(util::trim(line.substr(tab + 1)), factor))
            throw std::runtime_error(lex.name + " line " + std::to_string(line_no) + ": expected word<TAB>factor");
        if (factor <= 0.0)
            throw std::runtime_error(lex.name + " line " + std::to_string(line_no) + ": factor must be positive");
        if (warnings && lex.factors.count(key))
            warnings->push_back(lex.name + " line " + std::to_string(line_no) + ": duplicate key '" + key +
                                "', last value wins");
        lex.factors[key] = factor;
    });
    return lex;
}

ModifierLexicon load_modifiers(const std::string& path, std::vector<std::string>* warnings) {
    return load_modifiers_text(util::read_file(path), path, warnings);
}

NegationSet load_negations_text(std::string_view text, std::vector<std::string>* warnings) {
    NegationSet set;
    for_each_data_line(text, [&](size_t line_no, std::string_view line) {
        std::string word = util::to_lower(line);
        if (warnings && set.words.count(word))
            warnings->push_back("negations line " + std::to_string(line_no) + ": duplicate word '" + word + "'");
        set.words.insert(std::move(word));
    });
    return set;
}

NegationSet load_negations(const std::string& path, std::vector<std::string>* warnings) {
    return load_negations_text(util::read_file(path), warnings);
}

std::string write_lexicon(const Lexicon& lexicon) {
    std::ostringstream out;
    if (!lexicon.name.empty()) out << "# " << lexicon.name << '\n';
    for (const auto& [key, score] : lexicon.entries) out << key << '\t' << util::format_double(score) << '\n';
    return out.str();
}

Lexicon merge_lexicons(const Lexicon& base, const std::vector<Lexicon>& extras) {
    Lexicon merged = base;
    for (const Lexicon& extra : extras) {
        merged.name += "+" + extra.name;
        for (const auto& [key, score] : extra.entries) merged.entries.emplace(key, score);
    }
    return merged;
}

Lexicon build_title_dictionary(const std::vector<TitleReview>& reviews, TitleMode mode,
                               double sdv_threshold, int min_count,
                               std::vector<std::string>* warnings, std::vector<TitleStats>* stats) {
    std::map<std::string, std::vector<int>> judgments;

    size_t record_no = 0;
    for (const TitleReview& review : reviews) {
        ++record_no;
        if (review.stars < 1 || review.stars > 5) {
            if (warnings)
                warnings->push_back("review " + std::to_string(record_no) + ": stars " +
                                    std::to_string(review.stars) + " outside 1..5, record rejected");
            continue;
        }
        std::set<std::string> words;  // one judgment per review containing the word
        for (const auto& sentence : simple_tokenize(review.title)) {
            for (const std::string& token : sentence) {
                bool punct = true;
                for (char c : token)
                    if (!std::ispunct(static_cast<unsigned char>(c))) punct = false;
                if (!punct) words.insert(util::to_lower(token));
            }
        }
        if (mode == TitleMode::ShortOnly && words.size() != 1) continue;
        for (const std::string& word : words) judgments[word].push_back(review.stars);
    }

    Lexicon lex;
    lex.name = mode == TitleMode::ShortOnly ? "titles-short" : "titles-all";
    for (const auto& [word, stars] : judgments) {
        TitleStats ts;
        ts.word = word;
        ts.count = static_cast<int>(stars.size());
        double sum = 0;
        for (int s : stars) sum += s;
        ts.mean = sum / static_cast<double>(stars.size());
        double var = 0;
        for (int s : stars) var += (s - ts.mean) * (s - ts.mean);
        ts.sdv = std::sqrt(var / static_cast<double>(stars.size()));
        if (stats) stats->push_back(ts);
        if (ts.count >= min_count && ts.sdv < sdv_threshold) {
            // Affine map [1,5] -> [-5,+5]: the inverse of the 1-5 normalization.
            lex.entries[word] = (ts.mean - 1.0) / 4.0 * 10.0 - 5.0;
        }
    }
    return lex;
}

}  // namespace sentree
