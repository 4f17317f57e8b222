#include "valence/translate.hpp"

#include <cctype>

#include "valence/error.hpp"

namespace valence {
namespace {

std::string lower_ascii(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Primary subtag, lowercased: "es-MX" -> "es".
std::string primary_subtag(std::string_view lang) {
    const auto cut = lang.find_first_of("-_");
    return lower_ascii(cut == std::string_view::npos ? lang : lang.substr(0, cut));
}

}  // namespace

bool is_english(std::string_view lang) {
    return lang.empty() || primary_subtag(lang) == "en";
}

std::string IdentityTranslator::translate(std::string_view text,
                                          std::string_view lang) const {
    if (!is_english(lang)) {
        throw TranslationError("translation unavailable for language '" +
                               std::string(lang) + "'");
    }
    return std::string(text);
}

MappingTranslator::MappingTranslator(std::string lang,
                                     std::map<std::string, std::string> words)
    : lang_(lower_ascii(lang)), words_(std::move(words)) {}

std::string MappingTranslator::translate(std::string_view text,
                                         std::string_view lang) const {
    if (is_english(lang)) return std::string(text);
    if (primary_subtag(lang) != lang_) {
        throw TranslationError("translation unavailable for language '" +
                               std::string(lang) + "'");
    }

    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            out += text[i++];
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        const std::string word = lower_ascii(text.substr(i, end - i));
        const auto it = words_.find(word);
        out += it != words_.end() ? it->second : std::string(text.substr(i, end - i));
        i = end;
    }
    return out;
}

}  // namespace valence
