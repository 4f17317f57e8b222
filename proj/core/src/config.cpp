#include "valence/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>

#include "tsv.hpp"
#include "valence/error.hpp"

namespace valence {
namespace {

std::string trim(std::string_view text) {
    const auto begin = text.find_first_not_of(" \t");
    if (begin == std::string_view::npos) return {};
    const auto end = text.find_last_not_of(" \t");
    return std::string(text.substr(begin, end - begin + 1));
}

int parse_port(const std::string& value, std::size_t line = 0) {
    int port = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), port);
    if (ec != std::errc() || ptr != value.data() + value.size() || port < 1 || port > 65535) {
        throw LoadError("port must be an integer in [1,65535], got '" + value + "'", line);
    }
    return port;
}

}  // namespace

void Settings::apply_file(const std::filesystem::path& path) {
    std::ifstream in = detail::open_file(path);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw LoadError("expected key = value, got '" + stripped + "'", number);
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw LoadError("empty key or value", number);
        }

        if (key == "port") {
            port = parse_port(value, number);
        } else if (key == "polarity_lexicon") {
            polarity_lexicon = value;
        } else if (key == "emotion_lexicon") {
            emotion_lexicon = value;
        } else if (key == "rules") {
            rules = value;
        } else if (key == "model") {
            model = value;
        } else if (key == "keyphrases") {
            keyphrases = value;
        } else if (key == "emoticons") {
            emoticons = value;
        } else if (key == "tag_lexicon") {
            tag_lexicon = value;
        } else if (key == "translator") {
            translator = value;
        } else if (key == "window_seconds") {
            window_seconds = detail::parse_double(value, number);
            if (window_seconds <= 0.0) {
                throw LoadError("window_seconds must be positive", number);
            }
        } else {
            throw LoadError("unknown key '" + key + "'", number);
        }
    }
}

void Settings::apply_env() {
    if (const char* value = std::getenv("VALENCE_PORT")) {
        port = parse_port(value);
    }
    if (const char* value = std::getenv("VALENCE_POLARITY_LEXICON")) {
        polarity_lexicon = std::filesystem::path(value);
    }
    if (const char* value = std::getenv("VALENCE_EMOTION_LEXICON")) {
        emotion_lexicon = std::filesystem::path(value);
    }
    if (const char* value = std::getenv("VALENCE_RULES")) {
        rules = std::filesystem::path(value);
    }
    if (const char* value = std::getenv("VALENCE_MODEL")) {
        model = std::filesystem::path(value);
    }
}

Analyzer make_analyzer(const Settings& settings) {
    Analyzer analyzer;
    if (settings.emoticons || settings.tag_lexicon) {
        EmoticonTable emoticons = settings.emoticons
                                      ? EmoticonTable::load_file(*settings.emoticons)
                                      : EmoticonTable::builtin();
        TagLexicon tags = settings.tag_lexicon ? TagLexicon::load_file(*settings.tag_lexicon)
                                               : TagLexicon::builtin();
        analyzer.set_pipeline(Pipeline(std::move(emoticons), std::move(tags)));
    }
    if (settings.polarity_lexicon) {
        analyzer.set_polarity_lexicon(PolarityLexicon::load_file(*settings.polarity_lexicon));
    }
    if (settings.emotion_lexicon) {
        analyzer.set_emotion_lexicon(EmotionLexicon::load_file(*settings.emotion_lexicon));
    }
    if (settings.rules) {
        analyzer.set_rules(RuleSet::load_file(*settings.rules));
    }
    if (settings.keyphrases) {
        analyzer.set_keyphrases(KeyphraseTable::load_file(*settings.keyphrases));
    }
    if (settings.model) {
        analyzer.set_model(ForestModel::load(*settings.model));
    }
    return analyzer;
}

std::unique_ptr<Translator> make_translator(const Settings& settings) {
    if (settings.translator == "identity") {
        return std::make_unique<IdentityTranslator>();
    }
    constexpr std::string_view kMappingPrefix = "mapping:";
    if (settings.translator.starts_with(kMappingPrefix)) {
        const std::string rest = settings.translator.substr(kMappingPrefix.size());
        const auto colon = rest.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 >= rest.size()) {
            throw LoadError("translator mapping needs the form mapping:<lang>:<path>");
        }
        const std::string lang = rest.substr(0, colon);
        auto in = detail::open_file(rest.substr(colon + 1));
        std::map<std::string, std::string> words;
        detail::for_each_tsv_line(
            in, [&](std::size_t line, const std::vector<std::string>& fields) {
                if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
                    throw LoadError("expected word<TAB>translation", line);
                }
                words[fields[0]] = fields[1];
            });
        return std::make_unique<MappingTranslator>(lang, std::move(words));
    }
    throw LoadError("unknown translator '" + settings.translator + "'");
}

}  // namespace valence
