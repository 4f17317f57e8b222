#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "valence/text.hpp"
#include "valence/types.hpp"

namespace valence {

// Binary presence features: "stem:<stem>" per distinct non-punctuation stem
// and "pos:<TAG>" per distinct tag.  Sorted and deduplicated.
using FeatureVector = std::vector<std::string>;

FeatureVector extract_features(const Sentence& sentence);
FeatureVector extract_features(std::span<const Sentence> sentences);

struct LabeledExample {
    FeatureVector features;
    TernaryLabel label = TernaryLabel::Neutral;
};

struct ForestConfig {
    std::size_t tree_count = 100;
    std::size_t max_depth = 16;
    std::uint64_t seed = 42;
    bool bootstrap = true;
    // Candidate features per split; defaults to ceil(sqrt(vocabulary size)).
    std::optional<std::size_t> features_per_split;
};

struct Prediction {
    TernaryLabel label = TernaryLabel::Neutral;
    std::array<double, kTernaryCount> scores{};  // vote shares, sum to 1
};

// Random forest over binary presence features, Gini-grown, fully
// deterministic for a given seed.
class ForestModel {
  public:
    struct Node {
        std::int32_t feature = -1;  // -1 marks a leaf
        std::uint32_t yes = 0;
        std::uint32_t no = 0;
        std::array<std::uint32_t, kTernaryCount> counts{};
    };

    // Throws TrainingError when fewer than two distinct labels are present.
    static ForestModel train(std::span<const LabeledExample> examples,
                             const ForestConfig& config = {});

    // Degenerate single-class fallback: always predicts the majority label
    // of `examples` (ties: positive > negative > neutral).
    static ForestModel majority(std::span<const LabeledExample> examples);

    Prediction predict(const FeatureVector& features) const;

    std::string to_json() const;
    static ForestModel from_json(std::string_view text);
    void save(const std::filesystem::path& path) const;
    static ForestModel load(const std::filesystem::path& path);

    const std::vector<std::string>& vocabulary() const { return vocabulary_; }
    std::size_t tree_count() const { return trees_.size(); }
    std::uint64_t seed() const { return config_.seed; }
    const ForestConfig& config() const { return config_; }

    friend bool operator==(const ForestModel&, const ForestModel&);

  private:
    ForestConfig config_;
    std::vector<std::string> vocabulary_;
    std::vector<std::vector<Node>> trees_;
};

struct CvResult {
    double accuracy = 0.0;
    std::vector<double> fold_accuracy;
    // Example indices per fold: disjoint, near-equal, cover the input.
    std::vector<std::vector<std::size_t>> folds;
};

// Seeded k-fold cross-validation.  Folds with single-label training data
// fall back to the majority model instead of failing.
CvResult cross_validate(std::span<const LabeledExample> examples, std::size_t k,
                        std::uint64_t seed, const ForestConfig& config = {});

}  // namespace valence
