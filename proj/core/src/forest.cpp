#include "valence/forest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "valence/error.hpp"

namespace valence {
namespace {

using json = nlohmann::json;

void collect_features(const Sentence& sentence, std::set<std::string>& out) {
    for (const Token& token : sentence.tokens) {
        if (token.pos != PosTag::Punct) {
            out.insert("stem:" + token.stem);
        }
        out.insert("pos:" + std::string(to_string(token.pos)));
    }
}

// splitmix64; decorrelates per-tree seeds derived from the forest seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Bounded draw via modulo: biased in general but identical on every
// platform, which matters more here than uniformity.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

double gini(const std::array<std::uint32_t, kTernaryCount>& counts, std::uint32_t total) {
    if (total == 0) return 0.0;
    double sum_sq = 0.0;
    for (std::uint32_t c : counts) {
        const double p = static_cast<double>(c) / total;
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

std::size_t argmax_label(const std::array<std::uint32_t, kTernaryCount>& counts) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i] > counts[best]) best = i;
    }
    return best;
}

struct TreeBuilder {
    const std::vector<std::vector<std::uint32_t>>& rows;  // sorted feature ids
    const std::vector<TernaryLabel>& labels;
    std::size_t vocab_size;
    std::size_t max_depth;
    std::size_t candidates_per_split;
    std::mt19937_64& rng;
    std::vector<std::uint32_t> pool;  // scratch for candidate sampling
    std::vector<ForestModel::Node>* nodes = nullptr;

    bool row_has(std::size_t row, std::uint32_t feature) const {
        const auto& ids = rows[row];
        return std::binary_search(ids.begin(), ids.end(), feature);
    }

    std::array<std::uint32_t, kTernaryCount> label_counts(
        const std::vector<std::size_t>& samples) const {
        std::array<std::uint32_t, kTernaryCount> counts{};
        for (std::size_t s : samples) {
            counts[static_cast<std::size_t>(labels[s])] += 1;
        }
        return counts;
    }

    void sample_candidates(std::vector<std::uint32_t>& out) {
        out.clear();
        const std::size_t k = std::min(candidates_per_split, vocab_size);
        pool.resize(vocab_size);
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + draw(rng, vocab_size - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
    }

    std::uint32_t build(const std::vector<std::size_t>& samples, std::size_t depth) {
        const std::uint32_t index = static_cast<std::uint32_t>(nodes->size());
        nodes->push_back({});

        const auto counts = label_counts(samples);
        const auto total = static_cast<std::uint32_t>(samples.size());
        const double node_gini = gini(counts, total);

        bool make_leaf = depth >= max_depth || samples.size() < 2 || node_gini == 0.0;
        std::int32_t best_feature = -1;

        if (!make_leaf) {
            std::vector<std::uint32_t> candidates;
            sample_candidates(candidates);

            double best_score = node_gini - 1e-12;
            for (std::uint32_t feature : candidates) {
                std::array<std::uint32_t, kTernaryCount> yes_counts{};
                std::uint32_t yes_total = 0;
                for (std::size_t s : samples) {
                    if (row_has(s, feature)) {
                        yes_counts[static_cast<std::size_t>(labels[s])] += 1;
                        ++yes_total;
                    }
                }
                if (yes_total == 0 || yes_total == total) continue;
                std::array<std::uint32_t, kTernaryCount> no_counts{};
                for (std::size_t i = 0; i < kTernaryCount; ++i) {
                    no_counts[i] = counts[i] - yes_counts[i];
                }
                const std::uint32_t no_total = total - yes_total;
                const double score = (yes_total * gini(yes_counts, yes_total) +
                                      no_total * gini(no_counts, no_total)) /
                                     total;
                if (score < best_score) {
                    best_score = score;
                    best_feature = static_cast<std::int32_t>(feature);
                }
            }
            if (best_feature < 0) make_leaf = true;
        }

        if (make_leaf) {
            (*nodes)[index].counts = counts;
            return index;
        }

        std::vector<std::size_t> yes_samples;
        std::vector<std::size_t> no_samples;
        for (std::size_t s : samples) {
            (row_has(s, static_cast<std::uint32_t>(best_feature)) ? yes_samples : no_samples)
                .push_back(s);
        }
        const std::uint32_t yes_child = build(yes_samples, depth + 1);
        const std::uint32_t no_child = build(no_samples, depth + 1);
        (*nodes)[index].feature = best_feature;
        (*nodes)[index].yes = yes_child;
        (*nodes)[index].no = no_child;
        return index;
    }
};

json node_to_json(const ForestModel::Node& node) {
    if (node.feature < 0) {
        return json{{"c", node.counts}};
    }
    return json{{"f", node.feature}, {"y", node.yes}, {"n", node.no}};
}

constexpr const char* kModelFormat = "valence-forest";
constexpr int kModelVersion = 1;

}  // namespace

FeatureVector extract_features(const Sentence& sentence) {
    std::set<std::string> features;
    collect_features(sentence, features);
    return {features.begin(), features.end()};
}

FeatureVector extract_features(std::span<const Sentence> sentences) {
    std::set<std::string> features;
    for (const Sentence& sentence : sentences) {
        collect_features(sentence, features);
    }
    return {features.begin(), features.end()};
}

ForestModel ForestModel::train(std::span<const LabeledExample> examples,
                               const ForestConfig& config) {
    if (examples.empty()) {
        throw TrainingError("no training examples");
    }
    std::set<TernaryLabel> distinct;
    for (const auto& example : examples) distinct.insert(example.label);
    if (distinct.size() < 2) {
        throw TrainingError("training data contains fewer than two distinct labels");
    }
    if (config.tree_count == 0) {
        throw TrainingError("tree_count must be positive");
    }

    ForestModel model;
    model.config_ = config;

    std::set<std::string> vocab;
    for (const auto& example : examples) {
        vocab.insert(example.features.begin(), example.features.end());
    }
    model.vocabulary_.assign(vocab.begin(), vocab.end());

    std::vector<std::vector<std::uint32_t>> rows(examples.size());
    for (std::size_t i = 0; i < examples.size(); ++i) {
        for (const std::string& feature : examples[i].features) {
            const auto it = std::lower_bound(model.vocabulary_.begin(),
                                             model.vocabulary_.end(), feature);
            rows[i].push_back(
                static_cast<std::uint32_t>(it - model.vocabulary_.begin()));
        }
        // vocabulary insertion order keeps these sorted already
    }
    std::vector<TernaryLabel> labels(examples.size());
    for (std::size_t i = 0; i < examples.size(); ++i) labels[i] = examples[i].label;

    const std::size_t vocab_size = model.vocabulary_.size();
    const std::size_t candidates =
        config.features_per_split.value_or(static_cast<std::size_t>(
            std::ceil(std::sqrt(static_cast<double>(vocab_size)))));

    model.trees_.reserve(config.tree_count);
    for (std::size_t t = 0; t < config.tree_count; ++t) {
        std::mt19937_64 rng(mix_seed(config.seed, t));
        std::vector<std::size_t> samples(examples.size());
        if (config.bootstrap) {
            for (auto& s : samples) s = draw(rng, examples.size());
        } else {
            std::iota(samples.begin(), samples.end(), std::size_t{0});
        }
        std::vector<Node> nodes;
        TreeBuilder builder{rows,       labels, vocab_size, config.max_depth,
                            candidates, rng,    {},         &nodes};
        builder.build(samples, 0);
        model.trees_.push_back(std::move(nodes));
    }
    return model;
}

ForestModel ForestModel::majority(std::span<const LabeledExample> examples) {
    std::array<std::uint32_t, kTernaryCount> counts{};
    for (const auto& example : examples) {
        counts[static_cast<std::size_t>(example.label)] += 1;
    }
    ForestModel model;
    model.config_.tree_count = 1;
    model.config_.bootstrap = false;
    Node leaf;
    leaf.counts = counts;
    model.trees_.push_back({leaf});
    return model;
}

Prediction ForestModel::predict(const FeatureVector& features) const {
    std::vector<std::uint32_t> ids;
    for (const std::string& feature : features) {
        const auto it =
            std::lower_bound(vocabulary_.begin(), vocabulary_.end(), feature);
        if (it != vocabulary_.end() && *it == feature) {
            ids.push_back(static_cast<std::uint32_t>(it - vocabulary_.begin()));
        }
    }

    std::array<std::uint32_t, kTernaryCount> votes{};
    for (const auto& tree : trees_) {
        std::uint32_t at = 0;
        while (tree[at].feature >= 0) {
            const auto feature = static_cast<std::uint32_t>(tree[at].feature);
            const bool has = std::binary_search(ids.begin(), ids.end(), feature);
            at = has ? tree[at].yes : tree[at].no;
        }
        votes[argmax_label(tree[at].counts)] += 1;
    }

    Prediction prediction;
    prediction.label = static_cast<TernaryLabel>(argmax_label(votes));
    const auto total = static_cast<double>(trees_.size());
    for (std::size_t i = 0; i < kTernaryCount; ++i) {
        prediction.scores[i] = votes[i] / total;
    }
    return prediction;
}

std::string ForestModel::to_json() const {
    json doc;
    doc["format"] = kModelFormat;
    doc["version"] = kModelVersion;
    doc["config"] = {{"tree_count", config_.tree_count},
                     {"max_depth", config_.max_depth},
                     {"seed", config_.seed},
                     {"bootstrap", config_.bootstrap}};
    if (config_.features_per_split) {
        doc["config"]["features_per_split"] = *config_.features_per_split;
    }
    doc["vocabulary"] = vocabulary_;
    json trees = json::array();
    for (const auto& tree : trees_) {
        json nodes = json::array();
        for (const Node& node : tree) nodes.push_back(node_to_json(node));
        trees.push_back(std::move(nodes));
    }
    doc["trees"] = std::move(trees);
    return doc.dump();
}

ForestModel ForestModel::from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw LoadError(std::string("model is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kModelFormat) {
            throw LoadError("unrecognized model format");
        }
        if (doc.at("version").get<int>() != kModelVersion) {
            throw LoadError("unsupported model version");
        }
        ForestModel model;
        const json& config = doc.at("config");
        model.config_.tree_count = config.at("tree_count").get<std::size_t>();
        model.config_.max_depth = config.at("max_depth").get<std::size_t>();
        model.config_.seed = config.at("seed").get<std::uint64_t>();
        model.config_.bootstrap = config.at("bootstrap").get<bool>();
        if (config.contains("features_per_split")) {
            model.config_.features_per_split =
                config.at("features_per_split").get<std::size_t>();
        }
        model.vocabulary_ = doc.at("vocabulary").get<std::vector<std::string>>();
        if (!std::is_sorted(model.vocabulary_.begin(), model.vocabulary_.end())) {
            throw LoadError("model vocabulary is not sorted");
        }

        for (const json& tree : doc.at("trees")) {
            std::vector<Node> nodes;
            for (const json& entry : tree) {
                Node node;
                if (entry.contains("c")) {
                    const auto counts =
                        entry.at("c").get<std::vector<std::uint32_t>>();
                    if (counts.size() != kTernaryCount) {
                        throw LoadError("leaf must carry one count per label");
                    }
                    std::copy(counts.begin(), counts.end(), node.counts.begin());
                } else {
                    node.feature = entry.at("f").get<std::int32_t>();
                    node.yes = entry.at("y").get<std::uint32_t>();
                    node.no = entry.at("n").get<std::uint32_t>();
                    if (node.feature < 0 ||
                        static_cast<std::size_t>(node.feature) >=
                            model.vocabulary_.size()) {
                        throw LoadError("split references unknown feature");
                    }
                }
                nodes.push_back(node);
            }
            if (nodes.empty()) {
                throw LoadError("empty tree");
            }
            for (const Node& node : nodes) {
                if (node.feature >= 0 &&
                    (node.yes >= nodes.size() || node.no >= nodes.size())) {
                    throw LoadError("split child index out of range");
                }
            }
            model.trees_.push_back(std::move(nodes));
        }
        if (model.trees_.empty()) {
            throw LoadError("model has no trees");
        }
        return model;
    } catch (const json::exception& e) {
        throw LoadError(std::string("malformed model document: ") + e.what());
    }
}

void ForestModel::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw LoadError("cannot open model file for writing: " + path.string());
    }
    out << to_json() << '\n';
    if (!out.flush()) {
        throw LoadError("failed writing model file: " + path.string());
    }
}

ForestModel ForestModel::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LoadError("cannot open model file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

bool operator==(const ForestModel& a, const ForestModel& b) {
    auto nodes_equal = [](const ForestModel::Node& x, const ForestModel::Node& y) {
        return x.feature == y.feature && x.yes == y.yes && x.no == y.no &&
               x.counts == y.counts;
    };
    if (a.vocabulary_ != b.vocabulary_ || a.trees_.size() != b.trees_.size()) {
        return false;
    }
    for (std::size_t t = 0; t < a.trees_.size(); ++t) {
        if (!std::equal(a.trees_[t].begin(), a.trees_[t].end(), b.trees_[t].begin(),
                        b.trees_[t].end(), nodes_equal)) {
            return false;
        }
    }
    return true;
}

CvResult cross_validate(std::span<const LabeledExample> examples, std::size_t k,
                        std::uint64_t seed, const ForestConfig& config) {
    if (k < 2) {
        throw TrainingError("cross-validation needs at least two folds");
    }
    if (examples.size() < k) {
        throw TrainingError("fewer examples than folds");
    }

    std::vector<std::size_t> order(examples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = order.size() - 1; i > 0; --i) {
        std::swap(order[i], order[static_cast<std::size_t>(rng() % (i + 1))]);
    }

    CvResult result;
    result.folds.assign(k, {});
    for (std::size_t i = 0; i < order.size(); ++i) {
        result.folds[i % k].push_back(order[i]);
    }

    std::size_t correct_total = 0;
    for (std::size_t f = 0; f < k; ++f) {
        std::vector<bool> held_out(examples.size(), false);
        for (std::size_t index : result.folds[f]) held_out[index] = true;

        std::vector<LabeledExample> training;
        training.reserve(examples.size() - result.folds[f].size());
        std::set<TernaryLabel> distinct;
        for (std::size_t i = 0; i < examples.size(); ++i) {
            if (!held_out[i]) {
                training.push_back(examples[i]);
                distinct.insert(examples[i].label);
            }
        }

        const ForestModel model = distinct.size() < 2
                                      ? ForestModel::majority(training)
                                      : ForestModel::train(training, config);

        std::size_t correct = 0;
        for (std::size_t index : result.folds[f]) {
            if (model.predict(examples[index].features).label ==
                examples[index].label) {
                ++correct;
            }
        }
        correct_total += correct;
        result.fold_accuracy.push_back(static_cast<double>(correct) /
                                       result.folds[f].size());
    }
    result.accuracy = static_cast<double>(correct_total) / examples.size();
    return result;
}

}  // namespace valence
