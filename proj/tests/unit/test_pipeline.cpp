#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "porter_fixture.hpp"
#include "valence/error.hpp"
#include "valence/text.hpp"

using namespace valence;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const Token& token : tokens) out.push_back(token.surface);
    return out;
}

const DependencyEdge* find_edge(const Sentence& sentence, Relation relation) {
    for (const DependencyEdge& edge : sentence.edges) {
        if (edge.relation == relation) return &edge;
    }
    return nullptr;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("stemmer matches the frozen reference table") {
    for (const PorterFixture& fixture : kPorterFixtures) {
        CAPTURE(fixture.word);
        CHECK(stem(fixture.word) == fixture.stem);
    }
}

TEST_CASE("stemmer lowercases and leaves non-alphabetic surfaces alone") {
    CHECK(stem("Running") == stem("running"));
    CHECK(stem("123") == "123");
    CHECK(stem(":-)") == ":-)");
    CHECK(stem("") == "");
}

TEST_CASE("normalize composes combining acute accents and passes ASCII through") {
    CHECK(normalize("plain ascii") == "plain ascii");
    CHECK(normalize("cafe\xCC\x81") == "caf\xC3\xA9");  // e + U+0301 -> é
    CHECK(normalize("caf\xC3\xA9") == "caf\xC3\xA9");   // already composed
}

TEST_CASE("tokenizer splits clitics") {
    Pipeline pipeline;
    CHECK(surfaces(pipeline.tokenize("don't")) == std::vector<std::string>{"do", "n't"});
    CHECK(surfaces(pipeline.tokenize("it's")) == std::vector<std::string>{"it", "'s"});
    CHECK(surfaces(pipeline.tokenize("we're I'm you'll")) ==
          std::vector<std::string>{"we", "'re", "I", "'m", "you", "'ll"});
}

TEST_CASE("tokenizer separates punctuation and keeps emoticons whole") {
    Pipeline pipeline;
    CHECK(surfaces(pipeline.tokenize("good, bad.")) ==
          std::vector<std::string>{"good", ",", "bad", "."});
    CHECK(surfaces(pipeline.tokenize("nice :-)")) == std::vector<std::string>{"nice", ":-)"});
    CHECK(surfaces(pipeline.tokenize("ouch >:(")) == std::vector<std::string>{"ouch", ">:("});

    const std::vector<Token> tokens = pipeline.tokenize("great :-) day");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[1].surface == ":-)");
}

TEST_CASE("token spans are ordered, non-overlapping and index the input") {
    Pipeline pipeline;
    const std::string text = "I don't like Mondays :( at all.";
    const std::vector<Token> tokens = pipeline.tokenize(text);
    REQUIRE(!tokens.empty());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& token = tokens[i];
        CHECK(token.span.begin < token.span.end);
        CHECK(token.index == i);
        CHECK(text.substr(token.span.begin, token.span.end - token.span.begin) ==
              token.surface);
        if (i > 0) CHECK(tokens[i - 1].span.end <= token.span.begin);
    }
}

TEST_CASE("sentence splitting requires terminator, space and uppercase") {
    CHECK(Pipeline::split_sentences("First one. Second one!").size() == 2);
    CHECK(Pipeline::split_sentences("Really? Yes.").size() == 2);
    CHECK(Pipeline::split_sentences("one. two. three.").size() == 1);  // lowercase follow-on
    CHECK(Pipeline::split_sentences("it rained; We left").size() == 1);
    CHECK(Pipeline::split_sentences("Mr. Smith arrived. He sat down.").size() == 2);
    CHECK(Pipeline::split_sentences("See Dr. Jones today.").size() == 1);
    CHECK(Pipeline::split_sentences("").empty());
}

TEST_CASE("sentence spans cover all non-whitespace text") {
    const std::string text = "  First one.  Second one!  ";
    const std::vector<Span> spans = Pipeline::split_sentences(text);
    REQUIRE(spans.size() == 2);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == ' ') continue;
        bool covered = false;
        for (const Span& span : spans) covered |= (i >= span.begin && i < span.end);
        CHECK(covered);
    }
    CHECK(spans[0].end <= spans[1].begin);
}

TEST_CASE("tagger resolves closed-class words, lexicon entries and suffix guesses") {
    Pipeline pipeline;
    auto tag_of = [&](const std::string& text, std::size_t index) {
        std::vector<Token> tokens = pipeline.tokenize(text);
        for (Token& token : tokens) token.stem = stem(token.surface);
        pipeline.pos_tag(tokens);
        REQUIRE(index < tokens.size());
        return tokens[index].pos;
    };

    CHECK(tag_of("not", 0) == PosTag::Part);
    CHECK(tag_of("don't", 1) == PosTag::Part);  // n't
    CHECK(tag_of("never", 0) == PosTag::Part);
    CHECK(tag_of("would", 0) == PosTag::Verb);
    CHECK(tag_of("if", 0) == PosTag::Conj);
    CHECK(tag_of("good", 0) == PosTag::Adj);       // tag lexicon
    CHECK(tag_of("think", 0) == PosTag::Verb);     // tag lexicon
    CHECK(tag_of("quickly", 0) == PosTag::Adv);    // -ly guess
    CHECK(tag_of("walking", 0) == PosTag::Verb);   // -ing guess
    CHECK(tag_of("marvelous", 0) == PosTag::Adj);  // -ous guess
    CHECK(tag_of("zorp", 0) == PosTag::Noun);      // default
    CHECK(tag_of("42", 0) == PosTag::Num);
    CHECK(tag_of(",", 0) == PosTag::Punct);
}

TEST_CASE("emoticon tag is used exactly for emoticon-table surfaces") {
    Pipeline pipeline;
    const std::vector<Sentence> sentences =
        pipeline.process("Nice :-) but the queue :( was long.");
    REQUIRE(!sentences.empty());
    for (const Sentence& sentence : sentences) {
        for (const Token& token : sentence.tokens) {
            CHECK((token.pos == PosTag::Emoticon) ==
                  pipeline.emoticons().contains(token.surface));
        }
    }
}

TEST_CASE("stems are lowercase and non-empty for lettered surfaces") {
    Pipeline pipeline;
    const std::vector<Sentence> sentences =
        pipeline.process("The Quick BROWN fox, 42 times, jumped :-) over Mr. Hyde.");
    for (const Sentence& sentence : sentences) {
        for (const Token& token : sentence.tokens) {
            bool has_letter = false;
            for (char c : token.surface) {
                if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) has_letter = true;
            }
            if (has_letter) CHECK(!token.stem.empty());
            for (char c : token.stem) CHECK(!(c >= 'A' && c <= 'Z'));
        }
    }
}

TEST_CASE("negation edge points at the nearest following content head") {
    Pipeline pipeline;
    const std::vector<Sentence> sentences = pipeline.process("This is not good.");
    REQUIRE(sentences.size() == 1);
    const Sentence& sentence = sentences[0];
    const DependencyEdge* neg = find_edge(sentence, Relation::Neg);
    REQUIRE(neg != nullptr);
    CHECK(sentence.tokens[neg->dependent].surface == "not");
    CHECK(sentence.tokens[neg->governor].surface == "good");
}

TEST_CASE("clitic negation attaches to the following verb") {
    Pipeline pipeline;
    const std::vector<Sentence> sentences = pipeline.process("I don't think so.");
    REQUIRE(sentences.size() == 1);
    const Sentence& sentence = sentences[0];
    const DependencyEdge* neg = find_edge(sentence, Relation::Neg);
    REQUIRE(neg != nullptr);
    CHECK(sentence.tokens[neg->dependent].surface == "n't");
    CHECK(sentence.tokens[neg->governor].surface == "think");
}

TEST_CASE("participle before noun yields a modifier edge") {
    Pipeline pipeline;
    const std::vector<Sentence> sentences = pipeline.process("a missed opportunity");
    REQUIRE(sentences.size() == 1);
    const Sentence& sentence = sentences[0];
    const DependencyEdge* amod = find_edge(sentence, Relation::Amod);
    REQUIRE(amod != nullptr);
    CHECK(sentence.tokens[amod->dependent].surface == "missed");
    CHECK(sentence.tokens[amod->governor].surface == "opportunity");
}

TEST_CASE("patterns do not cross a but-clause boundary") {
    Pipeline pipeline;
    const std::vector<Sentence> sentences = pipeline.process("It is not ideal but good.");
    REQUIRE(sentences.size() == 1);
    const Sentence& sentence = sentences[0];
    const DependencyEdge* neg = find_edge(sentence, Relation::Neg);
    REQUIRE(neg != nullptr);
    // "good" sits after "but"; the negation must bind inside its own clause.
    CHECK(sentence.tokens[neg->governor].surface == "ideal");
}

TEST_CASE("full run produces absolute spans into the normalized document") {
    Pipeline pipeline;
    const std::string text = "First bit is fine. Second bit is not.";
    const std::vector<Sentence> sentences = pipeline.process(text);
    REQUIRE(sentences.size() == 2);
    const std::string normalized = normalize(text);
    for (const Sentence& sentence : sentences) {
        for (const Token& token : sentence.tokens) {
            CHECK(normalized.substr(token.span.begin, token.span.end - token.span.begin) ==
                  token.surface);
            CHECK(token.span.begin >= sentence.source_span.begin);
            CHECK(token.span.end <= sentence.source_span.end);
        }
    }
}

TEST_CASE("negation word inventory") {
    CHECK(is_negation_word("not"));
    CHECK(is_negation_word("n't"));
    CHECK(is_negation_word("no"));
    CHECK(is_negation_word("never"));
    CHECK(is_negation_word("nobody"));
    CHECK(!is_negation_word("nothing_else"));
    CHECK(!is_negation_word("good"));
}

TEST_CASE("emoticon table loads and rejects bad rows") {
    {
        std::istringstream in(":)\tjoy\n:(\tsadness\n");
        const EmoticonTable table = EmoticonTable::load(in);
        CHECK(table.size() == 2);
        CHECK(table.emotion(":)") == EmotionLabel::Joy);
        CHECK(!table.contains(":-|"));
    }
    {
        std::istringstream in(":)\tbliss\n");
        CHECK_THROWS_AS(EmoticonTable::load(in), LoadError);
    }
}

TEST_CASE("tag lexicon rejects unknown tags") {
    std::istringstream in("word\tBOGUS\n");
    CHECK_THROWS_AS(TagLexicon::load(in), LoadError);
}

}  // TEST_SUITE
