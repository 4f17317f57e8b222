#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <set>
#include <vector>

#include "support/synthetic.hpp"
#include "valence/error.hpp"
#include "valence/eval.hpp"
#include "valence/forest.hpp"

using namespace valence;
using namespace valence::testsupport;

namespace {

std::vector<LabeledExample> synthetic_examples(std::size_t count, std::uint64_t seed) {
    const Pipeline pipeline;
    return to_examples(pipeline, separable_corpus(count, seed));
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE("forest") {

TEST_CASE("feature extraction yields sorted unique stem and pos features") {
    Pipeline pipeline;
    const std::vector<Sentence> sentences = pipeline.process("Good good, very good.");
    REQUIRE(sentences.size() == 1);
    const FeatureVector features = extract_features(sentences[0]);
    CHECK(std::is_sorted(features.begin(), features.end()));
    CHECK(std::adjacent_find(features.begin(), features.end()) == features.end());
    CHECK(std::count(features.begin(), features.end(), "stem:good") == 1);
    CHECK(std::count(features.begin(), features.end(), "pos:PUNCT") == 1);
    // Punctuation contributes a tag feature but no stem feature.
    for (const std::string& feature : features) CHECK(feature != "stem:,");
}

TEST_CASE("training memorizes a small separable sample") {
    const std::vector<LabeledExample> examples = synthetic_examples(60, 7);
    const ForestModel model = ForestModel::train(examples, {.tree_count = 32, .seed = 1});
    std::size_t correct = 0;
    for (const LabeledExample& example : examples) {
        if (model.predict(example.features).label == example.label) ++correct;
    }
    CHECK(correct == examples.size());
}

TEST_CASE("prediction scores are a distribution over the three labels") {
    const std::vector<LabeledExample> examples = synthetic_examples(30, 3);
    const ForestModel model = ForestModel::train(examples, {.tree_count = 16, .seed = 9});
    const Prediction prediction = model.predict({"stem:unseen", "pos:NOUN"});
    double sum = 0.0;
    for (double score : prediction.scores) {
        CHECK(score >= 0.0);
        sum += score;
    }
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("training is deterministic per seed") {
    const std::vector<LabeledExample> examples = synthetic_examples(45, 11);
    const ForestConfig config{.tree_count = 24, .max_depth = 12, .seed = 99};
    const ForestModel first = ForestModel::train(examples, config);
    const ForestModel second = ForestModel::train(examples, config);
    CHECK(first == second);
    CHECK(first.to_json() == second.to_json());

    const ForestModel reseeded =
        ForestModel::train(examples, {.tree_count = 24, .max_depth = 12, .seed = 100});
    CHECK(reseeded.to_json() != first.to_json());
}

TEST_CASE("single-label training data is rejected; majority model covers it") {
    std::vector<LabeledExample> examples;
    for (int i = 0; i < 5; ++i) {
        examples.push_back({{"stem:fine"}, TernaryLabel::Positive});
    }
    CHECK_THROWS_AS(ForestModel::train(examples), TrainingError);

    const ForestModel fallback = ForestModel::majority(examples);
    CHECK(fallback.predict({"stem:anything"}).label == TernaryLabel::Positive);

    // Tie between labels resolves positive > negative > neutral.
    std::vector<LabeledExample> tied;
    tied.push_back({{"stem:x"}, TernaryLabel::Neutral});
    tied.push_back({{"stem:y"}, TernaryLabel::Negative});
    CHECK(ForestModel::majority(tied).predict({}).label == TernaryLabel::Negative);
}

TEST_CASE("model save and load round-trips") {
    const std::vector<LabeledExample> examples = synthetic_examples(36, 17);
    const ForestModel model = ForestModel::train(examples, {.tree_count = 8, .seed = 5});

    TempFile file("valence_forest_roundtrip.json");
    model.save(file.path);
    const ForestModel loaded = ForestModel::load(file.path);
    CHECK(loaded == model);
    CHECK(loaded.to_json() == model.to_json());
    for (const LabeledExample& example : examples) {
        CHECK(loaded.predict(example.features).label ==
              model.predict(example.features).label);
    }
}

TEST_CASE("corrupt model files are rejected") {
    CHECK_THROWS_AS(ForestModel::from_json("not json at all"), LoadError);
    CHECK_THROWS_AS(ForestModel::from_json("{}"), LoadError);
    CHECK_THROWS_AS(ForestModel::load("/nonexistent/model.json"), LoadError);
}

TEST_CASE("cross-validation folds partition the examples") {
    const std::vector<LabeledExample> examples = synthetic_examples(50, 23);
    const CvResult result = cross_validate(examples, 10, 42, {.tree_count = 8});

    REQUIRE(result.folds.size() == 10);
    REQUIRE(result.fold_accuracy.size() == 10);

    std::vector<std::size_t> seen;
    std::size_t smallest = examples.size();
    std::size_t largest = 0;
    for (const std::vector<std::size_t>& fold : result.folds) {
        smallest = std::min(smallest, fold.size());
        largest = std::max(largest, fold.size());
        seen.insert(seen.end(), fold.begin(), fold.end());
    }
    CHECK(largest - smallest <= 1);  // near-equal fold sizes
    CHECK(seen.size() == examples.size());
    std::sort(seen.begin(), seen.end());
    std::vector<std::size_t> everything(examples.size());
    std::iota(everything.begin(), everything.end(), 0);
    CHECK(seen == everything);  // disjoint and complete
}

TEST_CASE("cross-validation is reproducible per seed") {
    const std::vector<LabeledExample> examples = synthetic_examples(40, 29);
    const CvResult first = cross_validate(examples, 5, 7, {.tree_count = 8});
    const CvResult second = cross_validate(examples, 5, 7, {.tree_count = 8});
    CHECK(first.accuracy == second.accuracy);
    CHECK(first.fold_accuracy == second.fold_accuracy);
    CHECK(first.folds == second.folds);

    const CvResult shuffled = cross_validate(examples, 5, 8, {.tree_count = 8});
    CHECK(shuffled.folds != first.folds);
}

TEST_CASE("cross-validation rejects a k the data cannot fill") {
    const std::vector<LabeledExample> examples = synthetic_examples(6, 1);
    CHECK_THROWS_AS(cross_validate(examples, 1, 42), TrainingError);
    CHECK_THROWS_AS(cross_validate(examples, 7, 42), TrainingError);
}

}  // TEST_SUITE
