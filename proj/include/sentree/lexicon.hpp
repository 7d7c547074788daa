// Sentiment dictionaries, modifier weights, negation word sets, and the
// title-based dictionary builder.
//
// Word scores live on the [-5, +5] scale. Dictionary merging is ordered:
// the earliest dictionary owns a key and later ones only add missing words.

#ifndef SENTREE_LEXICON_HPP
#define SENTREE_LEXICON_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sentree {

struct Lexicon {
    std::string name;
    std::map<std::string, double> entries;  // lowercase key -> score in [-5, +5]

    std::optional<double> score_of(std::string_view word) const;
};

struct ModifierLexicon {
    std::string name;
    std::map<std::string, double> factors;  // lowercase key -> factor > 0

    std::optional<double> factor_of(std::string_view word) const;
};

struct NegationSet {
    std::set<std::string> words;  // lowercase

    bool contains(std::string_view word) const;
};

// TSV "word<TAB>score"; '#' comments and blank lines allowed; keys lowercased;
// duplicate keys keep the last value with a warning. Scores outside [-5, +5]
// raise std::runtime_error naming the line.
Lexicon load_lexicon_text(std::string_view text, std::string name,
                          std::vector<std::string>* warnings = nullptr);
Lexicon load_lexicon(const std::string& path, std::vector<std::string>* warnings = nullptr);

// TSV "word<TAB>factor"; factors must be > 0.
ModifierLexicon load_modifiers_text(std::string_view text, std::string name,
                                    std::vector<std::string>* warnings = nullptr);
ModifierLexicon load_modifiers(const std::string& path, std::vector<std::string>* warnings = nullptr);

// One word per line.
NegationSet load_negations_text(std::string_view text, std::vector<std::string>* warnings = nullptr);
NegationSet load_negations(const std::string& path, std::vector<std::string>* warnings = nullptr);

std::string write_lexicon(const Lexicon& lexicon);

// Ordered merge: base wins every conflict, then extras in the listed order.
// The result name records provenance ("base+extra1+extra2").
Lexicon merge_lexicons(const Lexicon& base, const std::vector<Lexicon>& extras);

struct TitleStats {
    std::string word;
    int count = 0;     // number of reviews whose title contains the word
    double mean = 0;   // mean star judgment, in [1, 5]
    double sdv = 0;    // population standard deviation of the judgments
};

enum class TitleMode { ShortOnly, All };

struct TitleReview {
    std::string title;
    int stars = 0;  // 1..5
};

// Collects star judgments per title word and keeps words with at least
// min_count judgments and population sdv below the threshold. ShortOnly uses
// only titles that reduce to a single word after tokenization. Scores map the
// mean star affinely from [1,5] onto [-5,+5]. Records with stars outside 1..5
// are rejected with a warning.
Lexicon build_title_dictionary(const std::vector<TitleReview>& reviews, TitleMode mode,
                               double sdv_threshold = 0.6, int min_count = 5,
                               std::vector<std::string>* warnings = nullptr,
                               std::vector<TitleStats>* stats = nullptr);

}  // namespace sentree

#endif  // SENTREE_LEXICON_HPP
