// Count-based baseline tagger: memorizes the most frequent label per word
// form and per UPOS, with global fallbacks. Predictions always decode into a
// valid tree via the repairing decoder, so the pipeline is total even on
// fully out-of-vocabulary input.

#ifndef SENTREE_TAGGER_HPP
#define SENTREE_TAGGER_HPP

#include <map>
#include <string>
#include <vector>

#include "sentree/linearizer.hpp"
#include "sentree/treebank.hpp"

namespace sentree {

struct FrequencyModel {
    Encoding encoding = Encoding::Relative;
    std::map<std::string, std::string> word_label;  // lowercase form -> label string
    std::map<std::string, std::string> upos_label;  // UPOS -> label string
    std::map<std::string, std::string> word_upos;   // lowercase form -> UPOS
    std::string fallback_label;
    std::string fallback_upos;
};

// Argmax by count; ties break toward the lexicographically smaller value, so
// training is insensitive to sentence order. Throws on an empty treebank.
FrequencyModel train_frequency_model(const std::vector<DependencyTree>& treebank, Encoding encoding);

// A model that keeps only the fallback entries (baseline for comparisons).
FrequencyModel fallback_only(const FrequencyModel& model);

// Lookup chain: word -> label; otherwise UPOS (word -> UPOS, else fallback
// UPOS) -> label; otherwise fallback label. Output length equals input length.
LabelSequence predict(const FrequencyModel& model, const std::vector<std::string>& forms);

// Line-oriented text format with a versioned header; save/load round-trips.
std::string serialize_model(const FrequencyModel& model);
FrequencyModel deserialize_model(std::string_view text);  // throws with line number

void save_model(const FrequencyModel& model, const std::string& path);
FrequencyModel load_model(const std::string& path);

}  // namespace sentree

#endif  // SENTREE_TAGGER_HPP
