#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valence/text.hpp"
#include "valence/types.hpp"

namespace valence {

// Prior word polarities in [-1, 1], keyed by lowercase surface or stem.
// Lookups try the lowercased surface first, then the token's stem.
class PolarityLexicon {
  public:
    static PolarityLexicon builtin();
    static PolarityLexicon load(std::istream& in, std::vector<std::string>* warnings = nullptr);
    static PolarityLexicon load_file(const std::filesystem::path& path,
                                     std::vector<std::string>* warnings = nullptr);

    std::optional<double> lookup(const Token& token) const;
    std::optional<double> lookup_key(std::string_view key) const;

    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, double, std::less<>>& entries() const { return entries_; }

    // Writes entries back out in loadable form (sorted by key).
    std::string serialize() const;

  private:
    std::map<std::string, double, std::less<>> entries_;
};

// Word -> emotion category mapping with the same key and lookup policy.
class EmotionLexicon {
  public:
    static EmotionLexicon builtin();
    static EmotionLexicon load(std::istream& in, std::vector<std::string>* warnings = nullptr);
    static EmotionLexicon load_file(const std::filesystem::path& path,
                                    std::vector<std::string>* warnings = nullptr);

    std::optional<EmotionLabel> lookup(const Token& token) const;
    std::optional<EmotionLabel> lookup_key(std::string_view key) const;

    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, EmotionLabel, std::less<>>& entries() const { return entries_; }

    std::string serialize() const;

  private:
    std::map<std::string, EmotionLabel, std::less<>> entries_;
};

}  // namespace valence
