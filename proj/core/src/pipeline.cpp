#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "tsv.hpp"
#include "builtin_data.hpp"
#include "valence/error.hpp"
#include "valence/text.hpp"

namespace valence {

std::string_view to_string(TernaryLabel label) {
    switch (label) {
        case TernaryLabel::Positive: return "positive";
        case TernaryLabel::Negative: return "negative";
        case TernaryLabel::Neutral: return "neutral";
    }
    return "neutral";
}

std::optional<TernaryLabel> ternary_from_string(std::string_view name) {
    if (name == "positive") return TernaryLabel::Positive;
    if (name == "negative") return TernaryLabel::Negative;
    if (name == "neutral") return TernaryLabel::Neutral;
    return std::nullopt;
}

Valence Valence::from_score(double score, double tau) {
    Valence v;
    v.score = score;
    if (score > tau)
        v.label = TernaryLabel::Positive;
    else if (score < -tau)
        v.label = TernaryLabel::Negative;
    else
        v.label = TernaryLabel::Neutral;
    return v;
}

std::string_view to_string(EmotionLabel label) {
    switch (label) {
        case EmotionLabel::Joy: return "joy";
        case EmotionLabel::Fear: return "fear";
        case EmotionLabel::Sadness: return "sadness";
        case EmotionLabel::Anger: return "anger";
        case EmotionLabel::Disgust: return "disgust";
        case EmotionLabel::Surprise: return "surprise";
        case EmotionLabel::Neutral: return "neutral";
    }
    return "neutral";
}

std::optional<EmotionLabel> emotion_from_string(std::string_view name) {
    if (name == "joy") return EmotionLabel::Joy;
    if (name == "fear") return EmotionLabel::Fear;
    if (name == "sadness") return EmotionLabel::Sadness;
    if (name == "anger") return EmotionLabel::Anger;
    if (name == "disgust") return EmotionLabel::Disgust;
    if (name == "surprise") return EmotionLabel::Surprise;
    if (name == "neutral") return EmotionLabel::Neutral;
    return std::nullopt;
}

std::string_view to_string(PosTag tag) {
    switch (tag) {
        case PosTag::Noun: return "NOUN";
        case PosTag::Verb: return "VERB";
        case PosTag::Adj: return "ADJ";
        case PosTag::Adv: return "ADV";
        case PosTag::Part: return "PART";
        case PosTag::Pron: return "PRON";
        case PosTag::Det: return "DET";
        case PosTag::Adp: return "ADP";
        case PosTag::Conj: return "CONJ";
        case PosTag::Num: return "NUM";
        case PosTag::Punct: return "PUNCT";
        case PosTag::Emoticon: return "EMOTICON";
        case PosTag::Other: return "OTHER";
    }
    return "OTHER";
}

std::optional<PosTag> pos_from_string(std::string_view name) {
    static constexpr std::pair<std::string_view, PosTag> table[] = {
        {"NOUN", PosTag::Noun},   {"VERB", PosTag::Verb}, {"ADJ", PosTag::Adj},
        {"ADV", PosTag::Adv},     {"PART", PosTag::Part}, {"PRON", PosTag::Pron},
        {"DET", PosTag::Det},     {"ADP", PosTag::Adp},   {"CONJ", PosTag::Conj},
        {"NUM", PosTag::Num},     {"PUNCT", PosTag::Punct},
        {"EMOTICON", PosTag::Emoticon}, {"OTHER", PosTag::Other},
    };
    for (auto [key, tag] : table)
        if (name == key) return tag;
    return std::nullopt;
}

std::string_view to_string(Relation relation) {
    switch (relation) {
        case Relation::Neg: return "neg";
        case Relation::Amod: return "amod";
        case Relation::Dobj: return "dobj";
        case Relation::Nsubj: return "nsubj";
        case Relation::Advmod: return "advmod";
        case Relation::ConjBut: return "conj_but";
    }
    return "neg";
}

std::optional<Relation> relation_from_string(std::string_view name) {
    if (name == "neg") return Relation::Neg;
    if (name == "amod") return Relation::Amod;
    if (name == "dobj") return Relation::Dobj;
    if (name == "nsubj") return Relation::Nsubj;
    if (name == "advmod") return Relation::Advmod;
    if (name == "conj_but") return Relation::ConjBut;
    return std::nullopt;
}

EmoticonTable EmoticonTable::builtin() {
    std::istringstream in{std::string(builtin_data::emoticons())};
    return load(in);
}

EmoticonTable EmoticonTable::load(std::istream& in) {
    EmoticonTable table;
    detail::for_each_tsv_line(in, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 2) throw LoadError("expected 'surface<TAB>emotion'", line);
        auto emotion = emotion_from_string(f[1]);
        if (!emotion) throw LoadError("unknown emotion '" + f[1] + "'", line);
        if (f[0].empty()) throw LoadError("empty emoticon surface", line);
        table.entries_[f[0]] = *emotion;
    });
    table.rebuild_index();
    return table;
}

EmoticonTable EmoticonTable::load_file(const std::filesystem::path& path) {
    auto in = detail::open_file(path);
    return load(in);
}

bool EmoticonTable::contains(std::string_view surface) const {
    return entries_.find(surface) != entries_.end();
}

std::optional<EmotionLabel> EmoticonTable::emotion(std::string_view surface) const {
    auto it = entries_.find(surface);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void EmoticonTable::rebuild_index() {
    by_length_.clear();
    for (const auto& [surface, _] : entries_) by_length_.push_back(surface);
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [](const std::string& a, const std::string& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a < b;
                     });
}

TagLexicon TagLexicon::builtin() {
    std::istringstream in{std::string(builtin_data::tag_lexicon())};
    return load(in);
}

TagLexicon TagLexicon::load(std::istream& in, std::vector<std::string>* warnings) {
    TagLexicon lexicon;
    detail::for_each_tsv_line(in, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 2) throw LoadError("expected 'surface<TAB>tag'", line);
        auto tag = pos_from_string(f[1]);
        if (!tag) throw LoadError("unknown tag '" + f[1] + "'", line);
        if (f[0].empty()) throw LoadError("empty surface", line);
        auto [it, inserted] = lexicon.entries_.insert_or_assign(f[0], *tag);
        if (!inserted && warnings)
            warnings->push_back("line " + std::to_string(line) + ": duplicate entry '" +
                                f[0] + "', last value wins");
    });
    return lexicon;
}

TagLexicon TagLexicon::load_file(const std::filesystem::path& path,
                                 std::vector<std::string>* warnings) {
    auto in = detail::open_file(path);
    return load(in, warnings);
}

std::optional<PosTag> TagLexicon::lookup(std::string_view lowercase_surface) const {
    auto it = entries_.find(lowercase_surface);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

Pipeline::Pipeline() : emoticons_(EmoticonTable::builtin()), tags_(TagLexicon::builtin()) {}

Pipeline::Pipeline(EmoticonTable emoticons, TagLexicon tags)
    : emoticons_(std::move(emoticons)), tags_(std::move(tags)) {}

std::vector<Sentence> Pipeline::process(std::string_view text) const {
    std::string normalized = normalize(text);
    std::vector<Sentence> sentences;
    for (Span span : split_sentences(normalized)) {
        Sentence sentence;
        sentence.source_span = span;
        sentence.tokens =
            tokenize(std::string_view(normalized).substr(span.begin, span.end - span.begin));
        for (Token& token : sentence.tokens) {
            token.span.begin += span.begin;
            token.span.end += span.begin;
            token.stem = stem(token.surface);
        }
        pos_tag(sentence.tokens);
        sentence.edges = shallow_parse(sentence.tokens);
        sentences.push_back(std::move(sentence));
    }
    return sentences;
}

}  // namespace valence
