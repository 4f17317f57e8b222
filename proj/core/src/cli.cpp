#include "valence/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "valence/config.hpp"
#include "valence/emotionml.hpp"
#include "valence/error.hpp"
#include "valence/eval.hpp"
#include "valence/forest.hpp"
#include "valence/phenomenon.hpp"
#include "valence/service.hpp"
#include "valence/symbolic.hpp"

namespace valence {
namespace {

// Flag values shared by several subcommands; empty string means unset so
// that flags keep precedence over VALENCE_* variables and the config file.
struct CommonOpts {
    std::string config;
    std::string polarity;
    std::string emotion;
    std::string rules;
    std::string keyphrases;
    std::string model;
    std::string emoticons;
    std::string tag_lexicon;
    std::string translator;
};

void add_resource_flags(CLI::App* cmd, CommonOpts& opts, bool with_model = true) {
    cmd->add_option("--config", opts.config, "key = value configuration file");
    cmd->add_option("--polarity-lexicon", opts.polarity, "prior polarity lexicon (TSV)");
    cmd->add_option("--emotion-lexicon", opts.emotion, "emotion lexicon (TSV)");
    cmd->add_option("--rules", opts.rules, "valence shifter rule table (TSV)");
    cmd->add_option("--keyphrases", opts.keyphrases, "emotion keyphrase table (TSV)");
    if (with_model)
        cmd->add_option("--model", opts.model, "trained classifier model (JSON)");
    cmd->add_option("--emoticons", opts.emoticons, "emoticon table (TSV)");
    cmd->add_option("--tag-lexicon", opts.tag_lexicon, "tagger lexicon (TSV)");
    cmd->add_option("--translator", opts.translator,
                    "\"identity\" or \"mapping:<lang>:<path>\"");
}

Settings make_settings(const CommonOpts& opts) {
    Settings settings;
    if (!opts.config.empty()) settings.apply_file(opts.config);
    settings.apply_env();
    if (!opts.polarity.empty()) settings.polarity_lexicon = opts.polarity;
    if (!opts.emotion.empty()) settings.emotion_lexicon = opts.emotion;
    if (!opts.rules.empty()) settings.rules = opts.rules;
    if (!opts.keyphrases.empty()) settings.keyphrases = opts.keyphrases;
    if (!opts.model.empty()) settings.model = opts.model;
    if (!opts.emoticons.empty()) settings.emoticons = opts.emoticons;
    if (!opts.tag_lexicon.empty()) settings.tag_lexicon = opts.tag_lexicon;
    if (!opts.translator.empty()) settings.translator = opts.translator;
    return settings;
}

Engine parse_engine(const std::string& name) {
    auto engine = engine_from_string(name);
    if (!engine) throw CLI::ValidationError("--engine", "unknown engine: " + name);
    return *engine;
}

const std::vector<std::string> kEngineNames = {"lexical", "symbolic", "statistical",
                                               "emotion"};

std::string join_words(const std::vector<std::string>& words) {
    std::string text;
    for (const auto& word : words) {
        if (!text.empty()) text += ' ';
        text += word;
    }
    return text;
}

std::vector<GoldRecord> load_records(const std::string& dataset, const std::string& gold) {
    if (gold.empty()) return read_ternary_dataset_file(dataset);
    return read_affective_dataset_file(dataset, gold);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw LoadError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw LoadError("failed writing " + path);
}

std::string format_phenomenon_kv(const PhenomenonReport& report) {
    char buf[64];
    std::string out;
    auto add = [&](const std::string& key, const PhenomenonBucket& bucket) {
        std::snprintf(buf, sizeof buf, "%zu/%zu %.4f", bucket.correct, bucket.total,
                      bucket.accuracy());
        out += key + "=" + buf + "\n";
    };
    out += "engine=" + std::string(to_string(report.engine)) + "\n";
    add("overall", report.overall);
    add("supported", report.supported);
    add("unsupported", report.unsupported);
    add("baseline", report.baseline);
    std::snprintf(buf, sizeof buf, "%.2f", report.gain_points());
    out += "gain_points=" + std::string(buf) + "\n";
    for (std::size_t i = 0; i < kPhenomenonCount; ++i) {
        add(std::string(to_string(static_cast<Phenomenon>(i))), report.per_phenomenon[i]);
    }
    return out;
}

int run_analyze(const CommonOpts& opts, const std::vector<std::string>& words,
                const std::string& engine_name, const std::string& lang, bool trace,
                std::ostream& out, std::ostream& err) {
    const Engine engine = parse_engine(engine_name);
    const Settings settings = make_settings(opts);
    const Analyzer analyzer = make_analyzer(settings);

    std::string text = join_words(words);
    if (!is_english(lang)) {
        text = make_translator(settings)->translate(text, lang);
    }

    const AnalysisResult result = analyzer.analyze(text, engine);
    if (trace) {
        for (const auto& sentence : result.sentences) {
            err << trace_to_text(sentence.trace, sentence.sentence);
        }
    }
    out << serialize(analyzer.to_emotionml(result));
    return 0;
}

int run_evaluate(const CommonOpts& opts, const std::string& dataset, const std::string& gold,
                 const std::string& engine_name, const std::string& report_path,
                 std::ostream& out) {
    const Engine engine = parse_engine(engine_name);
    const Settings settings = make_settings(opts);
    const Analyzer analyzer = make_analyzer(settings);

    if (dataset == "phenomenon") {
        const PhenomenonReport report =
            run_phenomenon_suite(analyzer, engine, builtin_corpus());
        out << format_phenomenon_report(report);
        if (!report_path.empty()) write_file(report_path, format_phenomenon_kv(report));
        return 0;
    }

    const auto records = load_records(dataset, gold);
    const EvalReport report = evaluate(make_engine_fn(analyzer, engine), records,
                                       std::string(to_string(engine)), dataset);
    out << format_report_text(report);
    if (!report_path.empty()) write_file(report_path, format_report_kv(report));
    return 0;
}

int run_train(const CommonOpts& opts, const std::string& input, const std::string& model_path,
              const ForestConfig& config, std::ostream& out) {
    const Settings settings = make_settings(opts);
    const Analyzer analyzer = make_analyzer(settings);

    const auto records = read_ternary_dataset_file(input);
    const auto examples = to_examples(analyzer.pipeline(), records);
    const ForestModel model = ForestModel::train(examples, config);
    model.save(model_path);
    out << "trained " << config.tree_count << " trees on " << examples.size()
        << " examples (vocabulary " << model.vocabulary().size() << "); saved to "
        << model_path << "\n";
    return 0;
}

int run_cv(const CommonOpts& opts, const std::string& input, int k, std::uint64_t seed,
           const ForestConfig& config, std::ostream& out) {
    const Settings settings = make_settings(opts);
    const Analyzer analyzer = make_analyzer(settings);

    const auto records = read_ternary_dataset_file(input);
    const auto examples = to_examples(analyzer.pipeline(), records);
    const CvResult result = cross_validate(examples, static_cast<std::size_t>(k), seed, config);

    char buf[32];
    out << "examples=" << examples.size() << "\n";
    out << "k=" << k << "\n";
    out << "seed=" << seed << "\n";
    std::snprintf(buf, sizeof buf, "%.4f", result.accuracy);
    out << "accuracy=" << buf << "\n";
    for (std::size_t i = 0; i < result.fold_accuracy.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.4f", result.fold_accuracy[i]);
        out << "fold_" << i + 1 << "=" << buf << "\n";
    }
    return 0;
}

int run_serve(const CommonOpts& opts, const std::string& host, int port_flag,
              std::ostream& out) {
    Settings settings = make_settings(opts);
    if (port_flag >= 0) settings.port = port_flag;

    ServiceConfig config;
    config.host = host;
    config.port = settings.port;
    config.default_window = settings.window_seconds;

    Service service(make_analyzer(settings), make_translator(settings), config);
    const int port = service.start();
    out << "listening on " << host << ":" << port << "\n" << std::flush;
    while (service.running()) {
        std::this_thread::sleep_for(std::chrono::milliseconds(200));
    }
    return 0;
}

// Deterministic offline walkthrough of the sliding gauge: synthetic
// messages arrive one per second and the gauge is sampled as it moves.
int run_gauge_demo(int messages, std::uint64_t seed, double window, std::ostream& out) {
    Channel channel;
    std::mt19937_64 rng(seed);
    const double scores[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    char buf[32];

    for (int i = 0; i < messages; ++i) {
        const double t = static_cast<double>(i);
        const double score = scores[rng() % 5];
        const auto emotion = static_cast<EmotionLabel>(rng() % kEmotionCount);
        channel.add_message(t, score, emotion);
        if ((i + 1) % 10 == 0 || i + 1 == messages) {
            const GaugeReading reading = channel.gauge_value(window, t);
            const EmotionHistogram histogram = channel.dominant_emotion(window, t);
            std::snprintf(buf, sizeof buf, "%.4f", reading.empty ? 0.5 : (reading.mean + 1) / 2);
            out << "t=" << t << " messages=" << reading.count << " gauge=" << buf
                << " dominant=" << to_string(histogram.dominant) << "\n";
        }
    }
    return 0;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"textual sentiment and emotion analysis", "valence"};
    app.require_subcommand(1);

    CommonOpts opts;
    int exit_code = 0;

    auto* analyze = app.add_subcommand("analyze", "analyze text and print EmotionML");
    std::vector<std::string> words;
    std::string engine_name = "symbolic";
    std::string lang = "en";
    bool trace = false;
    analyze->add_option("text", words, "text to analyze")->required();
    analyze->add_option("--engine", engine_name, "lexical|symbolic|statistical|emotion")
        ->check(CLI::IsMember(kEngineNames));
    analyze->add_option("--lang", lang, "input language tag (default en)");
    analyze->add_flag("--trace", trace, "print rule traces to stderr");
    add_resource_flags(analyze, opts);
    analyze->callback(
        [&] { exit_code = run_analyze(opts, words, engine_name, lang, trace, out, err); });

    auto* evaluate = app.add_subcommand("evaluate", "score an engine against gold labels");
    std::string dataset;
    std::string gold;
    std::string report_path;
    evaluate
        ->add_option("--dataset", dataset,
                     "ternary TSV, headline file (with --gold), or \"phenomenon\"")
        ->required();
    evaluate->add_option("--gold", gold, "six-emotion gold score file");
    evaluate->add_option("--engine", engine_name, "lexical|symbolic|statistical|emotion")
        ->check(CLI::IsMember(kEngineNames));
    evaluate->add_option("--report", report_path, "also write key=value report here");
    add_resource_flags(evaluate, opts);
    evaluate->callback(
        [&] { exit_code = run_evaluate(opts, dataset, gold, engine_name, report_path, out); });

    auto* train = app.add_subcommand("train", "train the classifier on a ternary TSV");
    std::string input;
    std::string model_out;
    ForestConfig forest;
    train->add_option("--input", input, "ternary TSV training data")->required();
    train->add_option("--model", model_out, "output model path")->required();
    train->add_option("--trees", forest.tree_count, "number of trees");
    train->add_option("--depth", forest.max_depth, "maximum tree depth");
    train->add_option("--seed", forest.seed, "random seed");
    train->add_flag("--no-bootstrap", [&](std::int64_t) { forest.bootstrap = false; },
                    "train every tree on the full sample");
    add_resource_flags(train, opts, /*with_model=*/false);
    train->callback([&] { exit_code = run_train(opts, input, model_out, forest, out); });

    auto* cv = app.add_subcommand("cv", "k-fold cross-validation on a ternary TSV");
    int folds = 10;
    std::uint64_t cv_seed = 42;
    cv->add_option("--input", input, "ternary TSV training data")->required();
    cv->add_option("--k", folds, "fold count")->check(CLI::PositiveNumber);
    cv->add_option("--seed", cv_seed, "shuffle seed");
    cv->add_option("--trees", forest.tree_count, "number of trees");
    cv->add_option("--depth", forest.max_depth, "maximum tree depth");
    add_resource_flags(cv, opts, /*with_model=*/false);
    cv->callback([&] { exit_code = run_cv(opts, input, folds, cv_seed, forest, out); });

    auto* serve = app.add_subcommand("serve", "run the HTTP service");
    std::string host = "127.0.0.1";
    int port_flag = -1;
    serve->add_option("--host", host, "bind address");
    serve->add_option("--port", port_flag, "bind port (0 picks a free port)");
    add_resource_flags(serve, opts);
    serve->callback([&] { exit_code = run_serve(opts, host, port_flag, out); });

    auto* demo = app.add_subcommand("gauge-demo", "offline sliding-gauge walkthrough");
    int demo_messages = 50;
    std::uint64_t demo_seed = 7;
    double demo_window = 60.0;
    demo->add_option("--messages", demo_messages, "messages to feed")
        ->check(CLI::PositiveNumber);
    demo->add_option("--seed", demo_seed, "random seed");
    demo->add_option("--window", demo_window, "window seconds")->check(CLI::PositiveNumber);
    demo->callback([&] { exit_code = run_gauge_demo(demo_messages, demo_seed, demo_window, out); });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    } catch (const LoadError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TrainingError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TranslationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelUnavailableError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace valence
