#include "valence/eval.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tsv.hpp"
#include "valence/emotion.hpp"
#include "valence/error.hpp"

namespace valence {
namespace {

std::vector<std::string> split_whitespace(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

// Gold column order of the affective distribution, mapped onto EmotionLabel.
constexpr std::array<EmotionLabel, 6> kGoldColumns = {
    EmotionLabel::Anger,   EmotionLabel::Disgust, EmotionLabel::Fear,
    EmotionLabel::Joy,     EmotionLabel::Sadness, EmotionLabel::Surprise,
};

}  // namespace

std::vector<GoldRecord> read_ternary_dataset(std::istream& in) {
    std::vector<GoldRecord> records;
    detail::for_each_tsv_line(in, [&](std::size_t line, const std::vector<std::string>& fields) {
        if (fields.size() != 3) {
            throw LoadError("expected id<TAB>label<TAB>text, got " +
                                std::to_string(fields.size()) + " fields",
                            line);
        }
        if (fields[0].empty()) throw LoadError("empty id", line);
        const auto label = ternary_from_string(fields[1]);
        if (!label) throw LoadError("unknown label '" + fields[1] + "'", line);
        GoldRecord record;
        record.id = fields[0];
        record.ternary = *label;
        record.text = fields[2];
        records.push_back(std::move(record));
    });
    return records;
}

std::vector<GoldRecord> read_ternary_dataset_file(const std::filesystem::path& path) {
    auto in = detail::open_file(path);
    return read_ternary_dataset(in);
}

std::vector<GoldRecord> read_affective_dataset(std::istream& text_in, std::istream& gold_in) {
    std::vector<GoldRecord> records;
    std::map<std::string, std::size_t> index;  // id -> position in records

    detail::for_each_tsv_line(
        text_in, [&](std::size_t line, const std::vector<std::string>& fields) {
            if (fields.size() != 2) {
                throw LoadError("expected id<TAB>headline, got " +
                                    std::to_string(fields.size()) + " fields",
                                line);
            }
            if (fields[0].empty()) throw LoadError("empty id", line);
            if (!index.emplace(fields[0], records.size()).second) {
                throw LoadError("duplicate id '" + fields[0] + "'", line);
            }
            GoldRecord record;
            record.id = fields[0];
            record.text = fields[1];
            records.push_back(std::move(record));
        });

    std::set<std::string> scored;
    std::string line;
    std::size_t number = 0;
    while (std::getline(gold_in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        const std::vector<std::string> fields = split_whitespace(line);
        if (fields.size() != 7 && fields.size() != 8) {
            throw LoadError("expected id + 6 emotion scores [+ valence], got " +
                                std::to_string(fields.size()) + " fields",
                            number);
        }
        const auto at = index.find(fields[0]);
        if (at == index.end()) {
            throw LoadError("gold id '" + fields[0] + "' missing from the text file",
                            number);
        }
        if (!scored.insert(fields[0]).second) {
            throw LoadError("duplicate gold id '" + fields[0] + "'", number);
        }

        EmotionScores gold;
        for (std::size_t column = 0; column < 6; ++column) {
            const double value = detail::parse_double(fields[column + 1], number);
            if (value < 0.0 || value > 100.0) {
                throw LoadError("emotion score " + fields[column + 1] +
                                    " outside [0,100]",
                                number);
            }
            gold.scores[static_cast<std::size_t>(kGoldColumns[column])] = value;
        }
        if (fields.size() == 8) {
            const double value = detail::parse_double(fields[7], number);
            if (value < -100.0 || value > 100.0) {
                throw LoadError("valence score " + fields[7] + " outside [-100,100]",
                                number);
            }
            gold.valence = value;
        }
        records[at->second].emotions = gold;
    }

    for (const GoldRecord& record : records) {
        if (!record.emotions) {
            throw LoadError("id '" + record.id + "' has no gold scores");
        }
    }
    return records;
}

std::vector<GoldRecord> read_affective_dataset_file(const std::filesystem::path& text_path,
                                                    const std::filesystem::path& gold_path) {
    auto text_in = detail::open_file(text_path);
    auto gold_in = detail::open_file(gold_path);
    return read_affective_dataset(text_in, gold_in);
}

TernaryLabel gold_to_ternary(const GoldRecord& record) {
    if (record.ternary) return *record.ternary;
    if (!record.emotions) {
        throw std::invalid_argument("record '" + record.id + "' carries no gold label");
    }
    double best = 0.0;
    EmotionLabel winner = EmotionLabel::Neutral;
    for (EmotionLabel label : kEmotionPriority) {
        const double score = (*record.emotions)[label];
        if (score > best) {
            best = score;
            winner = label;
        }
    }
    return emotion_to_valence(winner).label;
}

EngineFn make_engine_fn(const Analyzer& analyzer, Engine engine) {
    return [&analyzer, engine](const std::string& text) {
        return analyzer.analyze(text, engine).document_valence.label;
    };
}

EvalReport evaluate(const EngineFn& engine, const std::vector<GoldRecord>& records,
                    std::string engine_id, std::string dataset_id) {
    if (records.empty()) {
        throw std::invalid_argument("no records to evaluate");
    }
    EvalReport report;
    report.engine_id = std::move(engine_id);
    report.dataset_id = std::move(dataset_id);
    report.total = records.size();
    for (const GoldRecord& record : records) {
        const TernaryLabel gold = gold_to_ternary(record);
        const TernaryLabel predicted = engine(record.text);
        report.confusion[static_cast<std::size_t>(gold)][static_cast<std::size_t>(predicted)] += 1;
        if (gold == predicted) ++report.correct;
    }
    report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.total);
    return report;
}

LabeledExample to_example(const Pipeline& pipeline, const GoldRecord& record) {
    const std::vector<Sentence> sentences = pipeline.process(record.text);
    return {extract_features(std::span<const Sentence>(sentences)), gold_to_ternary(record)};
}

std::vector<LabeledExample> to_examples(const Pipeline& pipeline,
                                        const std::vector<GoldRecord>& records) {
    std::vector<LabeledExample> examples;
    examples.reserve(records.size());
    for (const GoldRecord& record : records) examples.push_back(to_example(pipeline, record));
    return examples;
}

EvalReport cross_domain_eval(const std::vector<GoldRecord>& train,
                             const std::vector<GoldRecord>& test, const Pipeline& pipeline,
                             const ForestConfig& config) {
    if (train.empty() || test.empty()) {
        throw std::invalid_argument("cross-domain evaluation needs non-empty train and test sets");
    }
    const std::vector<LabeledExample> examples = to_examples(pipeline, train);
    const ForestModel model = ForestModel::train(examples, config);

    EvalReport report = evaluate(
        [&](const std::string& text) {
            const std::vector<Sentence> sentences = pipeline.process(text);
            return model.predict(extract_features(std::span<const Sentence>(sentences))).label;
        },
        test, "statistical", "cross-domain");

    std::set<std::string> train_ids;
    for (const GoldRecord& record : train) train_ids.insert(record.id);
    for (const GoldRecord& record : test) {
        if (train_ids.count(record.id) > 0) ++report.id_overlap;
    }
    return report;
}

std::string format_report_text(const EvalReport& report) {
    std::ostringstream out;
    if (!report.engine_id.empty()) out << "engine: " << report.engine_id << "\n";
    if (!report.dataset_id.empty()) out << "dataset: " << report.dataset_id << "\n";
    char accuracy[32];
    std::snprintf(accuracy, sizeof(accuracy), "%.4f", report.accuracy);
    out << "accuracy: " << accuracy << " (" << report.correct << "/" << report.total << ")\n";
    out << "confusion (rows = gold, columns = predicted):\n";
    out << "          ";
    for (std::size_t p = 0; p < kTernaryCount; ++p) {
        char cell[16];
        std::snprintf(cell, sizeof(cell), "%10s",
                      std::string(to_string(static_cast<TernaryLabel>(p))).c_str());
        out << cell;
    }
    out << "\n";
    for (std::size_t g = 0; g < kTernaryCount; ++g) {
        char head[16];
        std::snprintf(head, sizeof(head), "%10s",
                      std::string(to_string(static_cast<TernaryLabel>(g))).c_str());
        out << head;
        for (std::size_t p = 0; p < kTernaryCount; ++p) {
            char cell[16];
            std::snprintf(cell, sizeof(cell), "%10zu", report.confusion[g][p]);
            out << cell;
        }
        out << "\n";
    }
    if (report.id_overlap > 0) {
        out << "id overlap between train and test: " << report.id_overlap << "\n";
    }
    return out.str();
}

std::string format_report_kv(const EvalReport& report) {
    std::ostringstream out;
    out << "engine=" << report.engine_id << "\n";
    out << "dataset=" << report.dataset_id << "\n";
    out << "correct=" << report.correct << "\n";
    out << "total=" << report.total << "\n";
    out << "accuracy=" << detail::format_double(report.accuracy) << "\n";
    for (std::size_t g = 0; g < kTernaryCount; ++g) {
        for (std::size_t p = 0; p < kTernaryCount; ++p) {
            out << "confusion_" << to_string(static_cast<TernaryLabel>(g)) << "_"
                << to_string(static_cast<TernaryLabel>(p)) << "="
                << report.confusion[g][p] << "\n";
        }
    }
    out << "id_overlap=" << report.id_overlap << "\n";
    return out.str();
}

}  // namespace valence
