#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valence/types.hpp"

namespace valence {

// Half-open byte range [begin, end) into the normalized source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

enum class PosTag {
    Noun,
    Verb,
    Adj,
    Adv,
    Part,
    Pron,
    Det,
    Adp,
    Conj,
    Num,
    Punct,
    Emoticon,
    Other,
};

std::string_view to_string(PosTag tag);
std::optional<PosTag> pos_from_string(std::string_view name);

struct Token {
    std::string surface;
    std::string stem;
    PosTag pos = PosTag::Noun;
    Span span;
    std::size_t index = 0;

    friend bool operator==(const Token&, const Token&) = default;
};

enum class Relation { Neg, Amod, Dobj, Nsubj, Advmod, ConjBut };

std::string_view to_string(Relation relation);
std::optional<Relation> relation_from_string(std::string_view name);

struct DependencyEdge {
    Relation relation = Relation::Neg;
    std::size_t governor = 0;
    std::size_t dependent = 0;

    friend bool operator==(const DependencyEdge&, const DependencyEdge&) = default;
    friend auto operator<=>(const DependencyEdge&, const DependencyEdge&) = default;
};

struct Sentence {
    std::vector<Token> tokens;
    std::vector<DependencyEdge> edges;
    Span source_span;
};

// Deterministic Porter stem of the lowercased surface.  Surfaces containing
// anything but ASCII letters come back lowercased but otherwise unchanged.
std::string stem(std::string_view surface);

// Composes common Latin letter + combining diacritic sequences into their
// precomposed forms.  ASCII text passes through untouched.  All spans
// produced by the pipeline index into the composed string.
std::string normalize(std::string_view text);

// Fixed emoticon inventory; each entry carries the coarse emotion used by
// the keyword-spotting detector.
class EmoticonTable {
  public:
    static EmoticonTable builtin();
    static EmoticonTable load(std::istream& in);
    static EmoticonTable load_file(const std::filesystem::path& path);

    bool contains(std::string_view surface) const;
    std::optional<EmotionLabel> emotion(std::string_view surface) const;
    // Surfaces ordered longest first so the tokenizer can greedy-match.
    const std::vector<std::string>& by_length() const { return by_length_; }
    std::size_t size() const { return entries_.size(); }

  private:
    std::map<std::string, EmotionLabel, std::less<>> entries_;
    std::vector<std::string> by_length_;

    void rebuild_index();
};

// Open-class word -> coarse tag mapping consulted before the suffix
// heuristics.  Closed-class words are handled by fixed tables in the tagger.
class TagLexicon {
  public:
    static TagLexicon builtin();
    static TagLexicon load(std::istream& in, std::vector<std::string>* warnings = nullptr);
    static TagLexicon load_file(const std::filesystem::path& path,
                                std::vector<std::string>* warnings = nullptr);

    std::optional<PosTag> lookup(std::string_view lowercase_surface) const;
    std::size_t size() const { return entries_.size(); }

  private:
    std::map<std::string, PosTag, std::less<>> entries_;
};

class Pipeline {
  public:
    Pipeline();
    Pipeline(EmoticonTable emoticons, TagLexicon tags);

    // Surfaces and spans only; input is normalized internally, spans index
    // the normalized text.
    std::vector<Token> tokenize(std::string_view text) const;

    // Sentence spans over the normalized text; boundaries require one of
    // {. ! ?} followed by whitespace and an uppercase letter, with an
    // abbreviation stop-list.  Spans cover all non-whitespace text.
    static std::vector<Span> split_sentences(std::string_view text);

    // Fills Token::pos.  Pure function of each token's surface.
    void pos_tag(std::vector<Token>& tokens) const;

    // Adjacency-pattern dependency edges over a tagged sentence.
    std::vector<DependencyEdge> shallow_parse(const std::vector<Token>& tokens) const;

    // Full run: normalize, split, tokenize, stem, tag, parse.  Token spans
    // are absolute offsets into the normalized document.
    std::vector<Sentence> process(std::string_view text) const;

    const EmoticonTable& emoticons() const { return emoticons_; }
    const TagLexicon& tags() const { return tags_; }

  private:
    EmoticonTable emoticons_;
    TagLexicon tags_;
};

// True for the surfaces that open a negation scope (not, n't, no, never,
// nobody).  Shared by the shallow parser and the emotion detector.
bool is_negation_word(std::string_view lowercase_surface);

}  // namespace valence
