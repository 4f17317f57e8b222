#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "valence/analyzer.hpp"
#include "valence/forest.hpp"
#include "valence/types.hpp"

namespace valence {

// Six per-emotion scores in [0,100], indexed by EmotionLabel value, plus
// the optional graded valence column in [-100,100] some distributions add.
struct EmotionScores {
    std::array<double, 6> scores{};
    std::optional<double> valence;

    double operator[](EmotionLabel label) const {
        return scores[static_cast<std::size_t>(label)];
    }
};

// One evaluation record: exactly one of the two gold forms is present.
struct GoldRecord {
    std::string id;
    std::string text;
    std::optional<TernaryLabel> ternary;
    std::optional<EmotionScores> emotions;
};

// `id<TAB>label<TAB>text` lines, label in {positive, negative, neutral}.
std::vector<GoldRecord> read_ternary_dataset(std::istream& in);
std::vector<GoldRecord> read_ternary_dataset_file(const std::filesystem::path& path);

// Headline file `id<TAB>text` joined on id with gold file
// `id anger disgust fear joy sadness surprise [valence]` (space-separated,
// scores in [0,100], valence in [-100,100]).  Ids must match one-to-one.
std::vector<GoldRecord> read_affective_dataset(std::istream& text_in, std::istream& gold_in);
std::vector<GoldRecord> read_affective_dataset_file(const std::filesystem::path& text_path,
                                                    const std::filesystem::path& gold_path);

// Ternary gold if present; otherwise argmax of the six scores (ties in the
// detector priority order) mapped through emotion_to_valence, with the
// all-zero vector counting as neutral.
TernaryLabel gold_to_ternary(const GoldRecord& record);

struct EvalReport {
    std::string engine_id;
    std::string dataset_id;
    std::size_t correct = 0;
    std::size_t total = 0;
    double accuracy = 0.0;
    // confusion[gold][predicted]; row sums equal per-label gold counts.
    std::array<std::array<std::size_t, kTernaryCount>, kTernaryCount> confusion{};
    // cross_domain_eval only: train/test records sharing an id.
    std::size_t id_overlap = 0;
};

using EngineFn = std::function<TernaryLabel(const std::string& text)>;

// Document-level ternary adapter shared by every engine.
EngineFn make_engine_fn(const Analyzer& analyzer, Engine engine);

// Throws std::invalid_argument on an empty record list.
EvalReport evaluate(const EngineFn& engine, const std::vector<GoldRecord>& records,
                    std::string engine_id = {}, std::string dataset_id = {});

// Feature extraction for classifier training over gold records.
LabeledExample to_example(const Pipeline& pipeline, const GoldRecord& record);
std::vector<LabeledExample> to_examples(const Pipeline& pipeline,
                                        const std::vector<GoldRecord>& records);

// Trains on all of `train`, evaluates on `test`; id overlap is counted and
// reported, never silently ignored.
EvalReport cross_domain_eval(const std::vector<GoldRecord>& train,
                             const std::vector<GoldRecord>& test, const Pipeline& pipeline,
                             const ForestConfig& config = {});

std::string format_report_text(const EvalReport& report);
std::string format_report_kv(const EvalReport& report);

}  // namespace valence
