#pragma once

#include <map>
#include <string>
#include <string_view>

namespace valence {

// True for "en" and any en-* variant; empty tags default to English.
bool is_english(std::string_view lang);

// Source-language to English bridge in front of the analyzers.  Backends
// throw TranslationError instead of passing foreign text through silently.
class Translator {
  public:
    virtual ~Translator() = default;

    virtual std::string id() const = 0;
    virtual std::string translate(std::string_view text, std::string_view lang) const = 0;
};

// Always available: English in, English out, everything else refused.
class IdentityTranslator : public Translator {
  public:
    std::string id() const override { return "identity"; }
    std::string translate(std::string_view text, std::string_view lang) const override;
};

// Word-for-word substitution for one source language. Serves as the test
// backend and as a template for wiring a real MT service.
class MappingTranslator : public Translator {
  public:
    MappingTranslator(std::string lang, std::map<std::string, std::string> words);

    std::string id() const override { return "mapping:" + lang_; }
    std::string translate(std::string_view text, std::string_view lang) const override;

  private:
    std::string lang_;
    std::map<std::string, std::string> words_;
};

}  // namespace valence
