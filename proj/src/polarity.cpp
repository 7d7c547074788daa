#include "sentree/polarity.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_util.hpp"

namespace sentree {

std::string_view to_string(Polarity p) {
    switch (p) {
        case Polarity::Negative: return "Negative";
        case Polarity::Neutral: return "Neutral";
        case Polarity::Positive: return "Positive";
    }
    return "?";
}

Polarity polarity_from_name(std::string_view name) {
    std::string lower = util::to_lower(name);
    if (lower == "negative") return Polarity::Negative;
    if (lower == "neutral") return Polarity::Neutral;
    if (lower == "positive") return Polarity::Positive;
    throw std::runtime_error("unknown polarity label '" + std::string(name) + "'");
}

ScaleSpec::ScaleSpec(double min_in, double max_in, double min_out, double max_out)
    : min_in_(min_in), max_in_(max_in), min_out_(min_out), max_out_(max_out) {
    if (!(max_in > min_in) || !(max_out > min_out))
        throw std::invalid_argument("degenerate scale: input and output ranges must be increasing");
}

ScaleSpec ScaleSpec::socal_to_rating() {
    return ScaleSpec(-5.0, 5.0, 1.0, 5.0);
}

PolarityResult score_sentence(const DependencyTree& tree, const Lexicon& lexicon,
                              const ModifierLexicon& modifiers, const NegationSet& negations) {
    const int n = tree.size();
    PolarityResult result;
    result.traces.resize(static_cast<size_t>(n));
    if (n == 0) return result;

    std::vector<std::vector<int>> children = tree.children_by_id();

    // Explicit post-order walk; trees can be deep on long reviews.
    enum class Phase { Descend, Combine };
    std::vector<std::pair<int, Phase>> stack;
    stack.emplace_back(tree.root_id(), Phase::Descend);

    while (!stack.empty()) {
        auto [id, phase] = stack.back();
        stack.pop_back();
        if (phase == Phase::Descend) {
            stack.emplace_back(id, Phase::Combine);
            for (int child : children[static_cast<size_t>(id)]) stack.emplace_back(child, Phase::Descend);
            continue;
        }

        const Token& token = tree.token(id);
        NodeTrace& trace = result.traces[static_cast<size_t>(id - 1)];
        trace.token_id = id;

        // Dictionary lookup: lemma first, then surface form.
        std::optional<double> score;
        if (!token.lemma.empty()) score = lexicon.score_of(util::to_lower(token.lemma));
        if (!score) score = lexicon.score_of(util::to_lower(token.form));
        trace.base_score = score.value_or(0.0);

        double sum = trace.base_score;
        double factor = 1.0;
        int negations_seen = 0;
        for (int child : children[static_cast<size_t>(id)]) {
            const Token& dep = tree.token(child);
            std::string dep_word = util::to_lower(dep.form);
            std::optional<double> mod = modifiers.factor_of(dep_word);
            if (mod && dep.deprel == "advmod") {
                trace.modifier_factors.emplace_back(dep.form, *mod);
                factor *= *mod;
            } else if (negations.contains(dep_word)) {
                trace.negated_by.push_back(dep.form);
                ++negations_seen;
            } else {
                sum += result.traces[static_cast<size_t>(child - 1)].subtree_score;
            }
        }
        double value = factor * sum;
        if (negations_seen % 2 == 1) value = -value;
        trace.subtree_score = value;
    }

    result.sentence_score = result.traces[static_cast<size_t>(tree.root_id() - 1)].subtree_score;
    return result;
}

double normalize(double value, const ScaleSpec& spec) {
    double clamped = std::clamp(value, spec.min_in(), spec.max_in());
    return (clamped - spec.min_in()) / (spec.max_in() - spec.min_in()) * (spec.max_out() - spec.min_out()) +
           spec.min_out();
}

int socal_to_five(double value) {
    if (value < -5.0 || value > 5.0)
        throw std::runtime_error("score " + util::format_double(value) + " outside [-5, 5]");
    if (value < -3.0) return 1;
    if (value < -1.0) return 2;
    if (value < 1.0) return 3;
    if (value < 3.0) return 4;
    return 5;
}

Polarity label_of_five_scale(double p) {
    if (p < 0.0 || p > 5.0)
        throw std::runtime_error("rating " + util::format_double(p) + " outside [0, 5]");
    if (p < 2.0) return Polarity::Negative;
    if (p <= 3.0) return Polarity::Neutral;
    return Polarity::Positive;
}

Polarity label_of_stars(int stars) {
    if (stars < 1 || stars > 5)
        throw std::runtime_error("stars " + std::to_string(stars) + " outside 1..5");
    if (stars <= 2) return Polarity::Negative;
    if (stars == 3) return Polarity::Neutral;
    return Polarity::Positive;
}

Polarity label_of_vader_compound(double c) {
    if (c < -1.0 || c > 1.0)
        throw std::runtime_error("compound score " + util::format_double(c) + " outside [-1, 1]");
    if (c <= -0.05) return Polarity::Negative;
    if (c < 0.05) return Polarity::Neutral;
    return Polarity::Positive;
}

Polarity majority_label(const std::vector<Polarity>& labels) {
    if (labels.empty()) throw std::runtime_error("majority label of an empty list");
    int counts[3] = {0, 0, 0};
    for (Polarity p : labels) ++counts[static_cast<int>(p)];
    for (int i = 0; i < 3; ++i) {
        bool strict = true;
        for (int j = 0; j < 3; ++j)
            if (j != i && counts[j] >= counts[i]) strict = false;
        if (strict) return static_cast<Polarity>(i);
    }
    return Polarity::Neutral;
}

ReviewResult score_review(const std::vector<DependencyTree>& trees, const Lexicon& lexicon,
                          const ModifierLexicon& modifiers, const NegationSet& negations) {
    if (trees.empty()) throw std::runtime_error("cannot score an empty review");
    ReviewResult result;
    for (const DependencyTree& tree : trees)
        result.sentence_scores.push_back(score_sentence(tree, lexicon, modifiers, negations).sentence_score);
    for (double s : result.sentence_scores) result.raw_score += s;
    result.five_scale = normalize(result.raw_score, ScaleSpec::socal_to_rating());
    result.label = label_of_five_scale(result.five_scale);
    return result;
}

Polarity majority_review_label(const std::vector<double>& sentence_scores) {
    std::vector<Polarity> labels;
    labels.reserve(sentence_scores.size());
    for (double s : sentence_scores)
        labels.push_back(label_of_five_scale(normalize(s, ScaleSpec::socal_to_rating())));
    return majority_label(labels);
}

}  // namespace sentree
