#include "valence/phenomenon.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "builtin_data.hpp"
#include "tsv.hpp"
#include "valence/error.hpp"

namespace valence {
namespace {

constexpr std::array<std::string_view, kPhenomenonCount> kPhenomenonNames = {
    "negation",          "irrealis",         "presupposition",   "word_sense",
    "point_of_view",     "common_sense",     "multiple_entities", "multiple_aspects",
    "multiple_holders",  "multiple_time",
};

}  // namespace

std::string_view to_string(Phenomenon phenomenon) {
    return kPhenomenonNames[static_cast<std::size_t>(phenomenon)];
}

std::optional<Phenomenon> phenomenon_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kPhenomenonNames.size(); ++i) {
        if (kPhenomenonNames[i] == name) return static_cast<Phenomenon>(i);
    }
    return std::nullopt;
}

std::vector<PhenomenonCase> load_corpus(std::istream& in) {
    std::vector<PhenomenonCase> cases;
    std::set<std::string> ids;
    detail::for_each_tsv_line(in, [&](std::size_t line, const std::vector<std::string>& fields) {
        if (fields.size() != 5) {
            throw LoadError("expected id<TAB>phenomenon<TAB>supported<TAB>expected<TAB>text, got " +
                                std::to_string(fields.size()) + " fields",
                            line);
        }
        PhenomenonCase entry;
        entry.id = fields[0];
        if (entry.id.empty()) throw LoadError("empty id", line);
        if (!ids.insert(entry.id).second) {
            throw LoadError("duplicate id '" + entry.id + "'", line);
        }
        const auto phenomenon = phenomenon_from_string(fields[1]);
        if (!phenomenon) throw LoadError("unknown phenomenon '" + fields[1] + "'", line);
        entry.phenomenon = *phenomenon;
        if (fields[2] == "yes") {
            entry.supported = true;
        } else if (fields[2] == "no") {
            entry.supported = false;
        } else {
            throw LoadError("supported flag must be 'yes' or 'no', got '" + fields[2] + "'",
                            line);
        }
        const auto expected = ternary_from_string(fields[3]);
        if (!expected) throw LoadError("unknown label '" + fields[3] + "'", line);
        entry.expected = *expected;
        entry.text = fields[4];
        if (entry.text.empty()) throw LoadError("empty text", line);
        cases.push_back(std::move(entry));
    });
    return cases;
}

std::vector<PhenomenonCase> load_corpus_file(const std::filesystem::path& path) {
    auto in = detail::open_file(path);
    return load_corpus(in);
}

const std::vector<PhenomenonCase>& builtin_corpus() {
    static const std::vector<PhenomenonCase> corpus = [] {
        std::istringstream in{std::string(builtin_data::phenomenon_corpus())};
        return load_corpus(in);
    }();
    return corpus;
}

PhenomenonReport run_phenomenon_suite(const Analyzer& analyzer, Engine engine,
                                      const std::vector<PhenomenonCase>& corpus) {
    if (corpus.empty()) {
        throw std::invalid_argument("phenomenon corpus is empty");
    }
    PhenomenonReport report;
    report.engine = engine;

    for (const PhenomenonCase& entry : corpus) {
        const TernaryLabel predicted =
            analyzer.analyze(entry.text, engine).document_valence.label;
        const TernaryLabel reference =
            analyzer.analyze(entry.text, Engine::Lexical).document_valence.label;
        const bool hit = predicted == entry.expected;

        report.overall.total += 1;
        report.overall.correct += hit ? 1 : 0;
        PhenomenonBucket& split = entry.supported ? report.supported : report.unsupported;
        split.total += 1;
        split.correct += hit ? 1 : 0;
        PhenomenonBucket& row = report.per_phenomenon[static_cast<std::size_t>(entry.phenomenon)];
        row.total += 1;
        row.correct += hit ? 1 : 0;

        report.baseline.total += 1;
        report.baseline.correct += reference == entry.expected ? 1 : 0;
    }
    return report;
}

std::string format_phenomenon_report(const PhenomenonReport& report) {
    std::ostringstream out;
    auto line = [&](std::string_view name, const PhenomenonBucket& bucket) {
        if (bucket.total == 0) return;
        char text[128];
        std::snprintf(text, sizeof(text), "%-18s %3zu/%-3zu  %6.2f%%\n",
                      std::string(name).c_str(), bucket.correct, bucket.total,
                      bucket.accuracy() * 100.0);
        out << text;
    };
    out << "engine: " << to_string(report.engine) << "\n";
    line("overall", report.overall);
    line("supported", report.supported);
    line("unsupported", report.unsupported);
    out << "per phenomenon:\n";
    for (std::size_t i = 0; i < kPhenomenonCount; ++i) {
        line(to_string(static_cast<Phenomenon>(i)), report.per_phenomenon[i]);
    }
    line("lexical baseline", report.baseline);
    char gain[64];
    std::snprintf(gain, sizeof(gain), "gain over baseline: %+.2f points\n",
                  report.gain_points());
    out << gain;
    return out.str();
}

}  // namespace valence
