#include "sentree/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace sentree {

ParseMetrics eval_parse(const std::vector<DependencyTree>& gold, const std::vector<DependencyTree>& pred) {
    if (gold.size() != pred.size())
        throw std::runtime_error("sentence count mismatch: gold has " + std::to_string(gold.size()) +
                                 ", prediction has " + std::to_string(pred.size()));
    if (gold.empty()) throw std::runtime_error("cannot evaluate an empty treebank");

    std::size_t tokens = 0, heads_ok = 0, arcs_ok = 0;
    for (size_t s = 0; s < gold.size(); ++s) {
        const DependencyTree& g = gold[s];
        const DependencyTree& p = pred[s];
        std::string where = g.sentence_id.empty() ? "sentence " + std::to_string(s + 1)
                                                  : "sentence " + g.sentence_id;
        if (g.size() != p.size())
            throw std::runtime_error("tokenization mismatch at " + where + ": " + std::to_string(g.size()) +
                                     " vs " + std::to_string(p.size()) + " tokens");
        for (int i = 1; i <= g.size(); ++i) {
            if (g.token(i).form != p.token(i).form)
                throw std::runtime_error("tokenization mismatch at " + where + ", token " + std::to_string(i) +
                                         ": '" + g.token(i).form + "' vs '" + p.token(i).form + "'");
            ++tokens;
            if (g.token(i).head == p.token(i).head) {
                ++heads_ok;
                if (g.token(i).deprel == p.token(i).deprel) ++arcs_ok;
            }
        }
    }

    ParseMetrics m;
    m.token_count = tokens;
    m.uas = 100.0 * static_cast<double>(heads_ok) / static_cast<double>(tokens);
    m.las = 100.0 * static_cast<double>(arcs_ok) / static_cast<double>(tokens);
    return m;
}

namespace {

ClassMetrics eval_classes(const std::vector<int>& gold, const std::vector<int>& pred,
                          std::vector<std::string> names) {
    if (gold.size() != pred.size())
        throw std::runtime_error("label count mismatch: gold has " + std::to_string(gold.size()) +
                                 ", prediction has " + std::to_string(pred.size()));
    if (gold.empty()) throw std::runtime_error("cannot evaluate an empty label list");

    const size_t k = names.size();
    ClassMetrics m;
    m.class_names = std::move(names);
    m.confusion.assign(k, std::vector<std::size_t>(k, 0));
    std::size_t hits = 0;
    for (size_t i = 0; i < gold.size(); ++i) {
        int g = gold[i];
        int p = pred[i];
        if (g < 0 || g >= static_cast<int>(k) || p < 0 || p >= static_cast<int>(k))
            throw std::runtime_error("class index out of range at item " + std::to_string(i + 1));
        ++m.confusion[static_cast<size_t>(g)][static_cast<size_t>(p)];
        if (g == p) ++hits;
    }
    m.accuracy = 100.0 * static_cast<double>(hits) / static_cast<double>(gold.size());

    for (size_t c = 0; c < k; ++c) {
        std::size_t tp = m.confusion[c][c];
        std::size_t gold_total = 0, pred_total = 0;
        for (size_t j = 0; j < k; ++j) {
            gold_total += m.confusion[c][j];
            pred_total += m.confusion[j][c];
        }
        double f1 = 0;
        if (tp > 0) {
            double precision = static_cast<double>(tp) / static_cast<double>(pred_total);
            double recall = static_cast<double>(tp) / static_cast<double>(gold_total);
            f1 = 200.0 * precision * recall / (precision + recall);
        }
        m.per_class_f1[m.class_names[c]] = f1;
    }
    return m;
}

}  // namespace

ClassMetrics eval_ternary(const std::vector<Polarity>& gold, const std::vector<Polarity>& pred) {
    std::vector<int> g, p;
    g.reserve(gold.size());
    p.reserve(pred.size());
    for (Polarity x : gold) g.push_back(static_cast<int>(x));
    for (Polarity x : pred) p.push_back(static_cast<int>(x));
    return eval_classes(g, p, {"Negative", "Neutral", "Positive"});
}

ClassMetrics eval_stars(const std::vector<int>& gold, const std::vector<int>& pred) {
    std::vector<int> g, p;
    g.reserve(gold.size());
    p.reserve(pred.size());
    for (int x : gold) g.push_back(x - 1);
    for (int x : pred) p.push_back(x - 1);
    return eval_classes(g, p, {"1", "2", "3", "4", "5"});
}

Throughput make_throughput(std::size_t instances, std::size_t sentences, std::size_t tokens,
                           double wall_seconds) {
    if (wall_seconds <= 0) throw std::runtime_error("wall time must be positive");
    Throughput t;
    t.wall_seconds = wall_seconds;
    t.instances_per_sec = static_cast<double>(instances) / wall_seconds;
    t.sentences_per_sec = static_cast<double>(sentences) / wall_seconds;
    t.tokens_per_sec = static_cast<double>(tokens) / wall_seconds;
    return t;
}

double median_of(std::vector<double> values) {
    if (values.empty()) throw std::runtime_error("median of an empty list");
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

Throughput bench(const std::function<void()>& pipeline, std::size_t instances, std::size_t sentences,
                 std::size_t tokens, int repetitions) {
    if (repetitions < 1) throw std::runtime_error("repetitions must be >= 1");
    if (instances == 0 || sentences == 0 || tokens == 0)
        throw std::runtime_error("cannot benchmark empty input");

    pipeline();  // warm-up, untimed

    std::vector<double> times;
    times.reserve(static_cast<size_t>(repetitions));
    for (int r = 0; r < repetitions; ++r) {
        auto start = std::chrono::steady_clock::now();
        pipeline();
        auto stop = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(stop - start).count();
        times.push_back(secs > 0 ? secs : 1e-9);
    }
    return make_throughput(instances, sentences, tokens, median_of(times));
}

std::string format_parse_metrics(const ParseMetrics& m) {
    std::ostringstream out;
    out << "tokens: " << m.token_count << '\n';
    out << "UAS: " << util::format_fixed(m.uas, 2) << '\n';
    out << "LAS: " << util::format_fixed(m.las, 2) << '\n';
    return out.str();
}

std::string format_class_metrics(const ClassMetrics& m) {
    std::ostringstream out;
    out << "accuracy: " << util::format_fixed(m.accuracy, 2) << '\n';
    out << "confusion (gold rows, predicted columns):\n";
    out << "          ";
    for (const std::string& name : m.class_names) out << '\t' << name;
    out << '\n';
    for (size_t g = 0; g < m.class_names.size(); ++g) {
        out << m.class_names[g];
        for (size_t p = 0; p < m.class_names.size(); ++p) out << '\t' << m.confusion[g][p];
        out << '\n';
    }
    for (const auto& [name, f1] : m.per_class_f1)
        out << "F1 " << name << ": " << util::format_fixed(f1, 2) << '\n';
    return out.str();
}

std::string format_throughput(const Throughput& t, const std::string& hardware_note) {
    std::ostringstream out;
    out << "instances/sec: " << util::format_fixed(t.instances_per_sec, 2) << '\n';
    out << "sentences/sec: " << util::format_fixed(t.sentences_per_sec, 2) << '\n';
    out << "tokens/sec: " << util::format_fixed(t.tokens_per_sec, 2) << '\n';
    out << "wall seconds (median): " << util::format_fixed(t.wall_seconds, 4) << '\n';
    if (!hardware_note.empty()) out << "hardware: " << hardware_note << '\n';
    return out.str();
}

}  // namespace sentree
