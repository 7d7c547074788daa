// Parsing metrics, classification metrics, and throughput measurement.

#ifndef SENTREE_EVALUATION_HPP
#define SENTREE_EVALUATION_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sentree/polarity.hpp"
#include "sentree/treebank.hpp"

namespace sentree {

struct ParseMetrics {
    double uas = 0;            // percent of tokens with the correct head
    double las = 0;            // percent with correct head and deprel
    std::size_t token_count = 0;
};

// Requires the same sentence count and identical tokenization (token count
// and forms) per sentence; throws naming the first divergent sentence.
// All tokens count, punctuation included.
ParseMetrics eval_parse(const std::vector<DependencyTree>& gold, const std::vector<DependencyTree>& pred);

struct ClassMetrics {
    double accuracy = 0;  // percent
    std::vector<std::string> class_names;
    std::vector<std::vector<std::size_t>> confusion;  // [gold][pred]
    std::map<std::string, double> per_class_f1;       // percent
};

ClassMetrics eval_ternary(const std::vector<Polarity>& gold, const std::vector<Polarity>& pred);
ClassMetrics eval_stars(const std::vector<int>& gold, const std::vector<int>& pred);

struct Throughput {
    double instances_per_sec = 0;
    double sentences_per_sec = 0;
    double tokens_per_sec = 0;
    double wall_seconds = 0;
};

// Rates from counted work and elapsed wall time.
Throughput make_throughput(std::size_t instances, std::size_t sentences, std::size_t tokens,
                           double wall_seconds);

// Lower median: the element at index (n-1)/2 after sorting.
double median_of(std::vector<double> values);

// Runs the pipeline once untimed as warm-up, then `repetitions` timed passes,
// and reports rates for the median wall time. Throws on repetitions < 1 or
// empty input counts.
Throughput bench(const std::function<void()>& pipeline, std::size_t instances, std::size_t sentences,
                 std::size_t tokens, int repetitions);

std::string format_parse_metrics(const ParseMetrics& m);
std::string format_class_metrics(const ClassMetrics& m);
std::string format_throughput(const Throughput& t, const std::string& hardware_note);

}  // namespace sentree

#endif  // SENTREE_EVALUATION_HPP
