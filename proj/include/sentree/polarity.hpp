// Compositional polarity over dependency trees.
//
// Scores propagate bottom-up: a node's subtree score is its own dictionary
// score plus the subtree scores of its content dependents, scaled by the
// factors of its modifier dependents (advmod words from the modifier
// lexicon) and sign-flipped once per negator dependent (words from the
// negation set under any relation). Modifier and negator dependents
// contribute no score of their own. Every node records a trace, so any
// sentence score can be recomputed and explained from the traces alone.

#ifndef SENTREE_POLARITY_HPP
#define SENTREE_POLARITY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentree/lexicon.hpp"
#include "sentree/treebank.hpp"

namespace sentree {

enum class Polarity { Negative, Neutral, Positive };

std::string_view to_string(Polarity p);
Polarity polarity_from_name(std::string_view name);  // throws on unknown names

class ScaleSpec {
public:
    // Throws std::invalid_argument unless max_in > min_in and max_out > min_out.
    ScaleSpec(double min_in, double max_in, double min_out, double max_out);

    double min_in() const { return min_in_; }
    double max_in() const { return max_in_; }
    double min_out() const { return min_out_; }
    double max_out() const { return max_out_; }

    // The [-5,+5] -> [1,5] map used for review scores.
    static ScaleSpec socal_to_rating();

private:
    double min_in_, max_in_, min_out_, max_out_;
};

struct NodeTrace {
    int token_id = 0;
    double base_score = 0;
    std::vector<std::pair<std::string, double>> modifier_factors;  // (modifier form, factor)
    std::vector<std::string> negated_by;                           // negator forms
    double subtree_score = 0;
};

struct PolarityResult {
    double sentence_score = 0;
    std::vector<NodeTrace> traces;  // ordered by token id

    const NodeTrace& trace_of(int token_id) const { return traces[static_cast<size_t>(token_id - 1)]; }
};

struct ReviewResult {
    std::vector<double> sentence_scores;
    double raw_score = 0;
    double five_scale = 0;  // in [1, 5]
    Polarity label = Polarity::Neutral;
};

PolarityResult score_sentence(const DependencyTree& tree, const Lexicon& lexicon,
                              const ModifierLexicon& modifiers, const NegationSet& negations);

// Affine rescale with input clamping; the result lies in [min_out, max_out].
double normalize(double value, const ScaleSpec& spec);

// Interval buckets [-5,-3) -> 1, [-3,-1) -> 2, [-1,+1) -> 3, [+1,+3) -> 4,
// [+3,+5] -> 5. Throws outside [-5, 5].
int socal_to_five(double value);

// [0,2) -> Negative, [2,3] -> Neutral, (3,5] -> Positive. Throws outside [0,5].
Polarity label_of_five_scale(double p);

// 1,2 -> Negative; 3 -> Neutral; 4,5 -> Positive.
Polarity label_of_stars(int stars);

// c <= -0.05 -> Negative; |c| < 0.05 -> Neutral; c >= 0.05 -> Positive.
Polarity label_of_vader_compound(double c);

// Strict majority, otherwise Neutral. Throws on an empty list.
Polarity majority_label(const std::vector<Polarity>& labels);

// Sum of sentence scores, clamped to [-5,5], rescaled to [1,5] and labeled.
ReviewResult score_review(const std::vector<DependencyTree>& trees, const Lexicon& lexicon,
                          const ModifierLexicon& modifiers, const NegationSet& negations);

// Alternative aggregation: per-sentence labels combined by strict majority.
Polarity majority_review_label(const std::vector<double>& sentence_scores);

}  // namespace sentree

#endif  // SENTREE_POLARITY_HPP
