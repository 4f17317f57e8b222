#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "valence/analyzer.hpp"
#include "valence/types.hpp"

namespace valence {

// Rows of the linguistic-phenomenon inventory the bundled corpus is
// organized around.
enum class Phenomenon {
    Negation = 0,
    Irrealis,
    Presupposition,
    WordSense,
    PointOfView,
    CommonSense,
    MultipleEntities,
    MultipleAspects,
    MultipleHolders,
    MultipleTime,
};

inline constexpr std::size_t kPhenomenonCount = 10;

std::string_view to_string(Phenomenon phenomenon);
std::optional<Phenomenon> phenomenon_from_string(std::string_view name);

// `supported` marks cases the shipped rule set is claimed to handle; the
// rest are documented limitations and only reported on.
struct PhenomenonCase {
    std::string id;
    Phenomenon phenomenon = Phenomenon::Negation;
    std::string text;
    TernaryLabel expected = TernaryLabel::Neutral;
    bool supported = false;
};

// TSV `id<TAB>phenomenon<TAB>supported<TAB>expected<TAB>text`.
std::vector<PhenomenonCase> load_corpus(std::istream& in);
std::vector<PhenomenonCase> load_corpus_file(const std::filesystem::path& path);
const std::vector<PhenomenonCase>& builtin_corpus();

struct PhenomenonBucket {
    std::size_t correct = 0;
    std::size_t total = 0;

    double accuracy() const {
        return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
    }
};

struct PhenomenonReport {
    Engine engine = Engine::Symbolic;
    PhenomenonBucket overall;
    PhenomenonBucket supported;
    PhenomenonBucket unsupported;
    std::array<PhenomenonBucket, kPhenomenonCount> per_phenomenon{};
    // The rule-free reference run over the same cases.
    PhenomenonBucket baseline;

    // Engine-over-baseline gain in percentage points.
    double gain_points() const {
        return (overall.accuracy() - baseline.accuracy()) * 100.0;
    }
};

// Runs the requested engine and the lexical baseline over the corpus.
// Throws std::invalid_argument on an empty corpus.
PhenomenonReport run_phenomenon_suite(const Analyzer& analyzer, Engine engine,
                                      const std::vector<PhenomenonCase>& corpus);

std::string format_phenomenon_report(const PhenomenonReport& report);

}  // namespace valence
