#include "valence/emotionml.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>

#include "tsv.hpp"
#include "valence/error.hpp"

namespace valence {
namespace {

struct XmlAttr {
    std::string name;
    std::string value;
};

struct XmlNode {
    std::string name;
    std::vector<XmlAttr> attrs;
    std::vector<XmlNode> children;
};

struct MalformedXml {
    std::string message;
};

// Minimal non-validating parser covering the EmotionML subset this engine
// emits: prolog, comments, elements, attributes, character references.
// No DOCTYPE, CDATA or processing instructions; text content is skipped.
class XmlParser {
  public:
    explicit XmlParser(std::string_view text) : text_(text) {}

    XmlNode parse_document() {
        skip_prolog();
        if (eof() || peek() != '<') fail("expected a root element");
        XmlNode root = parse_element();
        skip_misc();
        if (!eof()) fail("content after the root element");
        return root;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] static void fail(const std::string& message) {
        throw MalformedXml{message};
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool starts_with(std::string_view prefix) const {
        return text_.substr(pos_).starts_with(prefix);
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void skip_comment() {
        const auto end = text_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
    }

    void skip_misc() {
        for (;;) {
            skip_ws();
            if (starts_with("<!--")) {
                skip_comment();
            } else {
                return;
            }
        }
    }

    void skip_prolog() {
        skip_ws();
        if (starts_with("<?xml")) {
            const auto end = text_.find("?>", pos_);
            if (end == std::string_view::npos) fail("unterminated XML declaration");
            pos_ = end + 2;
        }
        skip_misc();
        if (starts_with("<!")) fail("document type declarations are not supported");
    }

    static bool is_name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
    }
    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
               c == '-' || c == '.';
    }

    std::string parse_name() {
        if (eof() || !is_name_start(peek())) fail("expected a name");
        const std::size_t start = pos_++;
        while (!eof() && is_name_char(peek())) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    static void append_utf8(std::string& out, std::uint32_t cp) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    static std::string decode(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            const auto end = raw.find(';', i);
            if (end == std::string_view::npos) fail("unterminated character reference");
            const std::string_view entity = raw.substr(i + 1, end - i - 1);
            if (entity == "amp") {
                out += '&';
            } else if (entity == "lt") {
                out += '<';
            } else if (entity == "gt") {
                out += '>';
            } else if (entity == "quot") {
                out += '"';
            } else if (entity == "apos") {
                out += '\'';
            } else if (entity.starts_with("#")) {
                std::string_view digits = entity.substr(1);
                int base = 10;
                if (digits.starts_with("x") || digits.starts_with("X")) {
                    digits = digits.substr(1);
                    base = 16;
                }
                std::uint32_t cp = 0;
                const auto [ptr, ec] =
                    std::from_chars(digits.data(), digits.data() + digits.size(), cp, base);
                if (ec != std::errc() || ptr != digits.data() + digits.size() ||
                    cp > 0x10FFFF || digits.empty()) {
                    fail("invalid numeric character reference");
                }
                append_utf8(out, cp);
            } else {
                fail("unknown entity '&" + std::string(entity) + ";'");
            }
            i = end;
        }
        return out;
    }

    std::string parse_attr_value() {
        if (eof() || (peek() != '"' && peek() != '\'')) {
            fail("expected a quoted attribute value");
        }
        const char quote = peek();
        const std::size_t start = ++pos_;
        while (!eof() && peek() != quote) {
            if (peek() == '<') fail("'<' inside an attribute value");
            ++pos_;
        }
        if (eof()) fail("unterminated attribute value");
        std::string value = decode(text_.substr(start, pos_ - start));
        ++pos_;
        return value;
    }

    XmlNode parse_element() {
        ++pos_;  // consume '<'
        XmlNode node;
        node.name = parse_name();
        for (;;) {
            const std::size_t before = pos_;
            skip_ws();
            if (eof()) fail("unterminated start tag <" + node.name + ">");
            if (peek() == '/') {
                ++pos_;
                if (eof() || peek() != '>') fail("malformed empty-element tag");
                ++pos_;
                return node;
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            if (before == pos_) fail("expected whitespace before attribute");
            XmlAttr attr;
            attr.name = parse_name();
            skip_ws();
            if (eof() || peek() != '=') fail("expected '=' after attribute name");
            ++pos_;
            skip_ws();
            attr.value = parse_attr_value();
            for (const XmlAttr& existing : node.attrs) {
                if (existing.name == attr.name) {
                    fail("duplicate attribute '" + attr.name + "'");
                }
            }
            node.attrs.push_back(std::move(attr));
        }
        for (;;) {
            while (!eof() && peek() != '<') ++pos_;  // character data is ignored
            if (eof()) fail("unterminated element <" + node.name + ">");
            if (starts_with("<!--")) {
                skip_comment();
                continue;
            }
            if (starts_with("</")) {
                pos_ += 2;
                const std::string name = parse_name();
                if (name != node.name) {
                    fail("mismatched end tag </" + name + "> for <" + node.name + ">");
                }
                skip_ws();
                if (eof() || peek() != '>') fail("malformed end tag");
                ++pos_;
                return node;
            }
            if (starts_with("<!") || starts_with("<?")) {
                fail("unsupported markup inside <" + node.name + ">");
            }
            node.children.push_back(parse_element());
        }
    }
};

std::pair<std::string_view, std::string_view> split_name(std::string_view name) {
    const auto colon = name.find(':');
    if (colon == std::string_view::npos) return {std::string_view{}, name};
    return {name.substr(0, colon), name.substr(colon + 1)};
}

const std::string* find_attr(const XmlNode& node, std::string_view name) {
    for (const XmlAttr& attr : node.attrs) {
        if (attr.name == name) return &attr.value;
    }
    return nullptr;
}

std::optional<double> parse_number(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

bool in_unit_range(double value) { return value >= 0.0 && value <= 1.0; }

std::string escape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void check_descriptors(const EmotionDocument& doc, const VocabularyRegistry& registry,
                       std::vector<std::string>& errors) {
    if (doc.categories.empty() && doc.dimensions.empty()) {
        errors.push_back("no-descriptor: emotion carries neither a category nor a dimension");
    }

    if (!doc.categories.empty()) {
        if (doc.category_vocabulary.empty()) {
            errors.push_back("unknown-vocabulary: no category vocabulary declared");
        } else if (const VocabularyRef* vocab = registry.find(doc.category_vocabulary)) {
            for (const EmotionCategory& category : doc.categories) {
                if (std::find(vocab->items.begin(), vocab->items.end(), category.name) ==
                    vocab->items.end()) {
                    errors.push_back("unknown-name: category '" + category.name +
                                     "' is not in " + doc.category_vocabulary);
                }
            }
        } else {
            errors.push_back("unknown-vocabulary: '" + doc.category_vocabulary +
                             "' is not declared locally");
        }
    }
    for (const EmotionCategory& category : doc.categories) {
        if (category.confidence && !in_unit_range(*category.confidence)) {
            errors.push_back("out-of-range: confidence of category '" + category.name +
                             "' is outside [0,1]");
        }
    }

    if (!doc.dimensions.empty()) {
        if (doc.dimension_vocabulary.empty()) {
            errors.push_back("unknown-vocabulary: no dimension vocabulary declared");
        } else if (const VocabularyRef* vocab = registry.find(doc.dimension_vocabulary)) {
            for (const EmotionDimension& dimension : doc.dimensions) {
                if (std::find(vocab->items.begin(), vocab->items.end(), dimension.name) ==
                    vocab->items.end()) {
                    errors.push_back("unknown-name: dimension '" + dimension.name +
                                     "' is not in " + doc.dimension_vocabulary);
                }
            }
        } else {
            errors.push_back("unknown-vocabulary: '" + doc.dimension_vocabulary +
                             "' is not declared locally");
        }
    }
    for (const EmotionDimension& dimension : doc.dimensions) {
        if (!in_unit_range(dimension.value)) {
            errors.push_back("out-of-range: value of dimension '" + dimension.name +
                             "' is outside [0,1]");
        }
        if (dimension.confidence && !in_unit_range(*dimension.confidence)) {
            errors.push_back("out-of-range: confidence of dimension '" + dimension.name +
                             "' is outside [0,1]");
        }
    }
}

}  // namespace

const VocabularyRegistry& VocabularyRegistry::builtin() {
    static const VocabularyRegistry registry = [] {
        VocabularyRegistry r;
        r.declare({std::string(kBig6Vocabulary),
                   {"anger", "disgust", "fear", "joy", "sadness", "surprise"}});
        r.declare({std::string(kFsreDimensionVocabulary),
                   {"valence", "potency", "arousal", "unpredictability"}});
        return r;
    }();
    return registry;
}

void VocabularyRegistry::declare(VocabularyRef ref) {
    for (VocabularyRef& existing : entries_) {
        if (existing.uri == ref.uri) {
            existing = std::move(ref);
            return;
        }
    }
    entries_.push_back(std::move(ref));
}

const VocabularyRef* VocabularyRegistry::find(std::string_view uri) const {
    for (const VocabularyRef& entry : entries_) {
        if (entry.uri == uri) return &entry;
    }
    return nullptr;
}

EmotionDocument emit_dimension_doc(Valence valence,
                                   std::string_view dimension_vocabulary) {
    EmotionDocument doc;
    doc.dimension_vocabulary = std::string(dimension_vocabulary);
    doc.dimensions.push_back({"valence", (valence.score + 1.0) / 2.0, std::nullopt});
    return doc;
}

EmotionDocument emit_category_doc(EmotionLabel label, double confidence,
                                  std::string_view category_vocabulary,
                                  std::string_view dimension_vocabulary) {
    if (label == EmotionLabel::Neutral) {
        // Big-six has no "neutral"; fall back to a midpoint valence dimension.
        EmotionDocument doc = emit_dimension_doc(Valence{}, dimension_vocabulary);
        doc.dimensions.front().confidence = confidence;
        return doc;
    }
    EmotionDocument doc;
    doc.category_vocabulary = std::string(category_vocabulary);
    doc.categories.push_back({std::string(to_string(label)), confidence});
    return doc;
}

std::string serialize(const EmotionDocument& doc, const VocabularyRegistry& registry) {
    std::vector<std::string> errors;
    check_descriptors(doc, registry, errors);
    if (doc.categories.empty() && !doc.category_vocabulary.empty()) {
        errors.push_back(
            "unknown-vocabulary: category vocabulary declared without categories");
    }
    if (doc.dimensions.empty() && !doc.dimension_vocabulary.empty()) {
        errors.push_back(
            "unknown-vocabulary: dimension vocabulary declared without dimensions");
    }
    if (!errors.empty()) {
        throw EmotionmlError("cannot serialize: " + errors.front());
    }

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<emotionml xmlns=\"";
    out += kEmotionmlNamespace;
    out += "\" version=\"1.0\"";
    if (!doc.categories.empty()) {
        out += " category-set=\"" + escape(doc.category_vocabulary) + "\"";
    }
    if (!doc.dimensions.empty()) {
        out += " dimension-set=\"" + escape(doc.dimension_vocabulary) + "\"";
    }
    out += ">\n  <emotion>\n";
    for (const EmotionCategory& category : doc.categories) {
        out += "    <category name=\"" + escape(category.name) + "\"";
        if (category.confidence) {
            out += " confidence=\"" + detail::format_double(*category.confidence) + "\"";
        }
        out += "/>\n";
    }
    for (const EmotionDimension& dimension : doc.dimensions) {
        out += "    <dimension name=\"" + escape(dimension.name) + "\"";
        out += " value=\"" + detail::format_double(dimension.value) + "\"";
        if (dimension.confidence) {
            out += " confidence=\"" + detail::format_double(*dimension.confidence) + "\"";
        }
        out += "/>\n";
    }
    out += "  </emotion>\n</emotionml>\n";
    return out;
}

ParseOutcome parse_and_validate(std::string_view xml, const VocabularyRegistry& registry) {
    ParseOutcome outcome;

    XmlNode root;
    try {
        root = XmlParser(xml).parse_document();
    } catch (const MalformedXml& e) {
        outcome.errors.push_back("malformed-xml: " + e.message);
        return outcome;
    }

    const auto [prefix, local] = split_name(root.name);
    if (local != "emotionml") {
        outcome.errors.push_back("wrong-namespace: root element <" + root.name +
                                 "> is not <emotionml>");
        return outcome;
    }
    const std::string xmlns_name =
        prefix.empty() ? "xmlns" : "xmlns:" + std::string(prefix);
    const std::string* ns = find_attr(root, xmlns_name);
    if (!ns) {
        outcome.errors.push_back("wrong-namespace: missing namespace declaration");
        return outcome;
    }
    if (*ns != kEmotionmlNamespace) {
        outcome.errors.push_back("wrong-namespace: '" + *ns + "'");
        return outcome;
    }
    if (const std::string* version = find_attr(root, "version");
        version && *version != "1.0") {
        outcome.errors.push_back("malformed-xml: unsupported EmotionML version '" +
                                 *version + "'");
        return outcome;
    }

    std::vector<const XmlNode*> emotions;
    for (const XmlNode& child : root.children) {
        const auto [child_prefix, child_local] = split_name(child.name);
        if (child_prefix != prefix) {
            outcome.errors.push_back("wrong-namespace: element <" + child.name +
                                     "> is outside the EmotionML namespace");
            return outcome;
        }
        if (child_local != "emotion") {
            outcome.errors.push_back("malformed-xml: unsupported element <" +
                                     child.name + ">");
            return outcome;
        }
        emotions.push_back(&child);
    }
    if (emotions.size() != 1) {
        outcome.errors.push_back("malformed-xml: expected exactly one <emotion> element, found " +
                                 std::to_string(emotions.size()));
        return outcome;
    }
    const XmlNode& emotion = *emotions.front();

    EmotionDocument doc;
    std::vector<std::string>& errors = outcome.errors;

    for (const XmlNode& child : emotion.children) {
        const auto [child_prefix, child_local] = split_name(child.name);
        if (child_prefix != prefix) {
            errors.push_back("wrong-namespace: element <" + child.name +
                             "> is outside the EmotionML namespace");
            return outcome;
        }
        const std::string* name = find_attr(child, "name");
        if (child_local == "category") {
            if (!name) {
                errors.push_back("malformed-xml: <category> requires a name attribute");
                return outcome;
            }
            EmotionCategory category{*name, std::nullopt};
            if (const std::string* confidence = find_attr(child, "confidence")) {
                if (const auto parsed = parse_number(*confidence)) {
                    category.confidence = *parsed;
                } else {
                    errors.push_back("out-of-range: confidence '" + *confidence +
                                     "' of category '" + *name + "' is not a number");
                }
            }
            doc.categories.push_back(std::move(category));
        } else if (child_local == "dimension") {
            if (!name) {
                errors.push_back("malformed-xml: <dimension> requires a name attribute");
                return outcome;
            }
            const std::string* value = find_attr(child, "value");
            if (!value) {
                errors.push_back("malformed-xml: <dimension> requires a value attribute");
                return outcome;
            }
            EmotionDimension dimension{*name, 0.0, std::nullopt};
            if (const auto parsed = parse_number(*value)) {
                dimension.value = *parsed;
            } else {
                errors.push_back("out-of-range: value '" + *value + "' of dimension '" +
                                 *name + "' is not a number");
            }
            if (const std::string* confidence = find_attr(child, "confidence")) {
                if (const auto parsed = parse_number(*confidence)) {
                    dimension.confidence = *parsed;
                } else {
                    errors.push_back("out-of-range: confidence '" + *confidence +
                                     "' of dimension '" + *name + "' is not a number");
                }
            }
            doc.dimensions.push_back(std::move(dimension));
        } else {
            errors.push_back("malformed-xml: unsupported element <" + child.name + ">");
            return outcome;
        }
    }

    // Closest declaration wins: the emotion element may override the root.
    auto effective_set = [&](const char* attr) -> std::string {
        if (const std::string* on_emotion = find_attr(emotion, attr)) return *on_emotion;
        if (const std::string* on_root = find_attr(root, attr)) return *on_root;
        return {};
    };
    if (!doc.categories.empty()) doc.category_vocabulary = effective_set("category-set");
    if (!doc.dimensions.empty()) doc.dimension_vocabulary = effective_set("dimension-set");

    check_descriptors(doc, registry, errors);
    if (errors.empty()) {
        outcome.document = std::move(doc);
    }
    return outcome;
}

}  // namespace valence
