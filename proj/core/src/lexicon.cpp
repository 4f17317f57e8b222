#include <cmath>
#include <sstream>
#include <string>

#include "tsv.hpp"
#include "builtin_data.hpp"
#include "valence/lexicon.hpp"

namespace valence {
namespace {

std::string ascii_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
    return out;
}

}  // namespace

PolarityLexicon PolarityLexicon::builtin() {
    std::istringstream in{std::string(builtin_data::polarity_lexicon())};
    return load(in);
}

PolarityLexicon PolarityLexicon::load(std::istream& in, std::vector<std::string>* warnings) {
    PolarityLexicon lexicon;
    detail::for_each_tsv_line(in, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 2) throw LoadError("expected 'word<TAB>valence'", line);
        if (f[0].empty()) throw LoadError("empty key", line);
        double value = detail::parse_double(f[1], line);
        if (!(value >= -1.0 && value <= 1.0))
            throw LoadError("valence " + f[1] + " outside [-1, 1]", line);
        std::string key = ascii_lower(f[0]);
        auto [it, inserted] = lexicon.entries_.insert_or_assign(std::move(key), value);
        if (!inserted && warnings)
            warnings->push_back("line " + std::to_string(line) + ": duplicate entry '" +
                                f[0] + "', last value wins");
    });
    return lexicon;
}

PolarityLexicon PolarityLexicon::load_file(const std::filesystem::path& path,
                                           std::vector<std::string>* warnings) {
    auto in = detail::open_file(path);
    return load(in, warnings);
}

std::optional<double> PolarityLexicon::lookup(const Token& token) const {
    if (auto hit = lookup_key(ascii_lower(token.surface))) return hit;
    return lookup_key(token.stem);
}

std::optional<double> PolarityLexicon::lookup_key(std::string_view key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string PolarityLexicon::serialize() const {
    std::string out;
    for (const auto& [key, value] : entries_) {
        out += key;
        out += '\t';
        out += detail::format_double(value);
        out += '\n';
    }
    return out;
}

EmotionLexicon EmotionLexicon::builtin() {
    std::istringstream in{std::string(builtin_data::emotion_lexicon())};
    return load(in);
}

EmotionLexicon EmotionLexicon::load(std::istream& in, std::vector<std::string>* warnings) {
    EmotionLexicon lexicon;
    detail::for_each_tsv_line(in, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 2) throw LoadError("expected 'word<TAB>emotion'", line);
        if (f[0].empty()) throw LoadError("empty key", line);
        auto emotion = emotion_from_string(f[1]);
        if (!emotion || *emotion == EmotionLabel::Neutral)
            throw LoadError("unknown emotion '" + f[1] + "'", line);
        std::string key = ascii_lower(f[0]);
        auto [it, inserted] = lexicon.entries_.insert_or_assign(std::move(key), *emotion);
        if (!inserted && warnings)
            warnings->push_back("line " + std::to_string(line) + ": duplicate entry '" +
                                f[0] + "', last value wins");
    });
    return lexicon;
}

EmotionLexicon EmotionLexicon::load_file(const std::filesystem::path& path,
                                         std::vector<std::string>* warnings) {
    auto in = detail::open_file(path);
    return load(in, warnings);
}

std::optional<EmotionLabel> EmotionLexicon::lookup(const Token& token) const {
    if (auto hit = lookup_key(ascii_lower(token.surface))) return hit;
    return lookup_key(token.stem);
}

std::optional<EmotionLabel> EmotionLexicon::lookup_key(std::string_view key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string EmotionLexicon::serialize() const {
    std::string out;
    for (const auto& [key, value] : entries_) {
        out += key;
        out += '\t';
        out += to_string(value);
        out += '\n';
    }
    return out;
}

}  // namespace valence
