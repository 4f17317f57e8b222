#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "valence/text.hpp"

namespace valence {
namespace {

std::string ascii_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
    return out;
}

const std::unordered_map<std::string_view, PosTag>& closed_class() {
    static const std::unordered_map<std::string_view, PosTag> table = {
        // determiners
        {"the", PosTag::Det}, {"a", PosTag::Det}, {"an", PosTag::Det},
        {"this", PosTag::Det}, {"that", PosTag::Det}, {"these", PosTag::Det},
        {"those", PosTag::Det}, {"each", PosTag::Det}, {"every", PosTag::Det},
        {"either", PosTag::Det}, {"neither", PosTag::Det}, {"some", PosTag::Det},
        {"any", PosTag::Det}, {"another", PosTag::Det}, {"such", PosTag::Det},
        {"both", PosTag::Det}, {"all", PosTag::Det}, {"few", PosTag::Det},
        {"many", PosTag::Det}, {"much", PosTag::Det}, {"more", PosTag::Det},
        {"most", PosTag::Det}, {"several", PosTag::Det},
        // pronouns
        {"i", PosTag::Pron}, {"you", PosTag::Pron}, {"he", PosTag::Pron},
        {"she", PosTag::Pron}, {"it", PosTag::Pron}, {"we", PosTag::Pron},
        {"they", PosTag::Pron}, {"me", PosTag::Pron}, {"him", PosTag::Pron},
        {"her", PosTag::Pron}, {"us", PosTag::Pron}, {"them", PosTag::Pron},
        {"mine", PosTag::Pron}, {"yours", PosTag::Pron}, {"his", PosTag::Pron},
        {"hers", PosTag::Pron}, {"ours", PosTag::Pron}, {"theirs", PosTag::Pron},
        {"my", PosTag::Pron}, {"your", PosTag::Pron}, {"its", PosTag::Pron},
        {"our", PosTag::Pron}, {"their", PosTag::Pron},
        {"myself", PosTag::Pron}, {"yourself", PosTag::Pron},
        {"himself", PosTag::Pron}, {"herself", PosTag::Pron},
        {"itself", PosTag::Pron}, {"ourselves", PosTag::Pron},
        {"yourselves", PosTag::Pron}, {"themselves", PosTag::Pron},
        {"who", PosTag::Pron}, {"whom", PosTag::Pron}, {"whose", PosTag::Pron},
        {"which", PosTag::Pron}, {"what", PosTag::Pron},
        {"someone", PosTag::Pron}, {"somebody", PosTag::Pron},
        {"anyone", PosTag::Pron}, {"anybody", PosTag::Pron},
        {"everyone", PosTag::Pron}, {"everybody", PosTag::Pron},
        {"nobody", PosTag::Pron}, {"none", PosTag::Pron}, {"one", PosTag::Pron},
        {"something", PosTag::Pron}, {"anything", PosTag::Pron},
        {"everything", PosTag::Pron}, {"nothing", PosTag::Pron},
        // adpositions
        {"in", PosTag::Adp}, {"on", PosTag::Adp}, {"at", PosTag::Adp},
        {"of", PosTag::Adp}, {"to", PosTag::Adp}, {"for", PosTag::Adp},
        {"with", PosTag::Adp}, {"from", PosTag::Adp}, {"by", PosTag::Adp},
        {"about", PosTag::Adp}, {"into", PosTag::Adp}, {"onto", PosTag::Adp},
        {"over", PosTag::Adp}, {"under", PosTag::Adp}, {"between", PosTag::Adp},
        {"among", PosTag::Adp}, {"through", PosTag::Adp}, {"during", PosTag::Adp},
        {"before", PosTag::Adp}, {"after", PosTag::Adp}, {"above", PosTag::Adp},
        {"below", PosTag::Adp}, {"across", PosTag::Adp}, {"against", PosTag::Adp},
        {"around", PosTag::Adp}, {"behind", PosTag::Adp}, {"beside", PosTag::Adp},
        {"besides", PosTag::Adp}, {"near", PosTag::Adp}, {"off", PosTag::Adp},
        {"out", PosTag::Adp}, {"up", PosTag::Adp}, {"down", PosTag::Adp},
        {"upon", PosTag::Adp}, {"within", PosTag::Adp}, {"without", PosTag::Adp},
        {"toward", PosTag::Adp}, {"towards", PosTag::Adp}, {"per", PosTag::Adp},
        {"via", PosTag::Adp},
        // conjunctions
        {"and", PosTag::Conj}, {"but", PosTag::Conj}, {"or", PosTag::Conj},
        {"nor", PosTag::Conj}, {"because", PosTag::Conj},
        {"although", PosTag::Conj}, {"though", PosTag::Conj},
        {"while", PosTag::Conj}, {"if", PosTag::Conj}, {"unless", PosTag::Conj},
        {"whether", PosTag::Conj}, {"than", PosTag::Conj}, {"as", PosTag::Conj},
        {"when", PosTag::Conj}, {"where", PosTag::Conj}, {"whereas", PosTag::Conj},
        {"once", PosTag::Conj}, {"until", PosTag::Conj}, {"since", PosTag::Conj},
        {"yet", PosTag::Conj},
        // auxiliaries, modals, copulas and their clitic forms
        {"am", PosTag::Verb}, {"is", PosTag::Verb}, {"are", PosTag::Verb},
        {"was", PosTag::Verb}, {"were", PosTag::Verb}, {"be", PosTag::Verb},
        {"been", PosTag::Verb}, {"being", PosTag::Verb}, {"do", PosTag::Verb},
        {"does", PosTag::Verb}, {"did", PosTag::Verb}, {"done", PosTag::Verb},
        {"doing", PosTag::Verb}, {"have", PosTag::Verb}, {"has", PosTag::Verb},
        {"had", PosTag::Verb}, {"having", PosTag::Verb}, {"will", PosTag::Verb},
        {"would", PosTag::Verb}, {"shall", PosTag::Verb}, {"should", PosTag::Verb},
        {"can", PosTag::Verb}, {"could", PosTag::Verb}, {"may", PosTag::Verb},
        {"might", PosTag::Verb}, {"must", PosTag::Verb}, {"ought", PosTag::Verb},
        {"'s", PosTag::Verb}, {"'re", PosTag::Verb}, {"'ve", PosTag::Verb},
        {"'ll", PosTag::Verb}, {"'d", PosTag::Verb}, {"'m", PosTag::Verb},
        // negation particles
        {"not", PosTag::Part}, {"n't", PosTag::Part}, {"no", PosTag::Part},
        {"never", PosTag::Part},
        // adverbs
        {"very", PosTag::Adv}, {"too", PosTag::Adv}, {"quite", PosTag::Adv},
        {"rather", PosTag::Adv}, {"really", PosTag::Adv}, {"just", PosTag::Adv},
        {"almost", PosTag::Adv}, {"always", PosTag::Adv}, {"often", PosTag::Adv},
        {"sometimes", PosTag::Adv}, {"rarely", PosTag::Adv},
        {"seldom", PosTag::Adv}, {"usually", PosTag::Adv}, {"now", PosTag::Adv},
        {"then", PosTag::Adv}, {"here", PosTag::Adv}, {"there", PosTag::Adv},
        {"today", PosTag::Adv}, {"tomorrow", PosTag::Adv},
        {"yesterday", PosTag::Adv}, {"again", PosTag::Adv},
        {"still", PosTag::Adv}, {"already", PosTag::Adv}, {"soon", PosTag::Adv},
        {"later", PosTag::Adv}, {"well", PosTag::Adv}, {"badly", PosTag::Adv},
        {"slowly", PosTag::Adv}, {"quickly", PosTag::Adv},
        {"easily", PosTag::Adv}, {"hardly", PosTag::Adv}, {"nearly", PosTag::Adv},
        {"mostly", PosTag::Adv}, {"mainly", PosTag::Adv},
        {"certainly", PosTag::Adv}, {"probably", PosTag::Adv},
        {"perhaps", PosTag::Adv}, {"maybe", PosTag::Adv},
        {"definitely", PosTag::Adv}, {"absolutely", PosTag::Adv},
        {"completely", PosTag::Adv}, {"totally", PosTag::Adv},
        {"entirely", PosTag::Adv}, {"extremely", PosTag::Adv},
        {"fairly", PosTag::Adv}, {"pretty", PosTag::Adv}, {"deeply", PosTag::Adv},
        {"highly", PosTag::Adv}, {"strongly", PosTag::Adv}, {"truly", PosTag::Adv},
        {"honestly", PosTag::Adv}, {"frankly", PosTag::Adv},
        {"unfortunately", PosTag::Adv}, {"fortunately", PosTag::Adv},
        {"suddenly", PosTag::Adv}, {"finally", PosTag::Adv},
        {"eventually", PosTag::Adv}, {"immediately", PosTag::Adv},
        {"recently", PosTag::Adv}, {"currently", PosTag::Adv},
        {"originally", PosTag::Adv}, {"basically", PosTag::Adv},
        {"actually", PosTag::Adv}, {"literally", PosTag::Adv},
        {"together", PosTag::Adv}, {"apart", PosTag::Adv},
        {"forever", PosTag::Adv}, {"anyway", PosTag::Adv},
        {"anywhere", PosTag::Adv}, {"everywhere", PosTag::Adv},
        {"somewhere", PosTag::Adv}, {"nowhere", PosTag::Adv},
        {"indeed", PosTag::Adv}, {"however", PosTag::Adv},
        {"therefore", PosTag::Adv}, {"instead", PosTag::Adv},
        {"otherwise", PosTag::Adv}, {"meanwhile", PosTag::Adv},
        {"moreover", PosTag::Adv},
        // spelled-out numbers ("one" stays a pronoun)
        {"two", PosTag::Num}, {"three", PosTag::Num}, {"four", PosTag::Num},
        {"five", PosTag::Num}, {"six", PosTag::Num}, {"seven", PosTag::Num},
        {"eight", PosTag::Num}, {"nine", PosTag::Num}, {"ten", PosTag::Num},
        {"hundred", PosTag::Num}, {"thousand", PosTag::Num},
        {"million", PosTag::Num}, {"billion", PosTag::Num},
        {"dozen", PosTag::Num}, {"twice", PosTag::Num},
    };
    return table;
}

bool all_punct(std::string_view s) {
    bool any = false;
    for (unsigned char c : s) {
        if (c >= 0x80 || std::isalnum(c)) return false;
        if (std::ispunct(c)) any = true;
        else if (!std::isspace(c)) return false;
    }
    return any;
}

bool numeric(std::string_view s) {
    bool digit = false;
    for (unsigned char c : s) {
        if (std::isdigit(c)) {
            digit = true;
        } else if (c != '.' && c != ',' && c != '%' && c != '$' && c != '+' &&
                   c != '-' && c != ':') {
            return false;
        }
    }
    return digit;
}

bool has_ascii_alnum(std::string_view s) {
    for (unsigned char c : s)
        if (c < 0x80 && std::isalnum(c)) return true;
    return false;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Open-class guesses for words the lexicon does not know.
PosTag suffix_guess(std::string_view w) {
    if (w.size() > 3 && ends_with(w, "ly")) return PosTag::Adv;
    if (w.size() > 4 && (ends_with(w, "ing") || ends_with(w, "ed"))) return PosTag::Verb;
    if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") ||
        ends_with(w, "able") || ends_with(w, "ible") || ends_with(w, "ish") ||
        ends_with(w, "less") || (w.size() > 4 && ends_with(w, "ic")))
        return PosTag::Adj;
    return PosTag::Noun;
}

// Lexicon lookup that also tries obvious inflected forms.
std::optional<PosTag> lexicon_lookup(const TagLexicon& tags, const std::string& w) {
    if (auto tag = tags.lookup(w)) return tag;
    if (w.size() > 3 && w.back() == 's') {
        std::string base = w.substr(0, w.size() - 1);
        if (auto tag = tags.lookup(base); tag && (*tag == PosTag::Verb || *tag == PosTag::Noun))
            return tag;
        if (ends_with(w, "es")) {
            base = w.substr(0, w.size() - 2);
            if (auto tag = tags.lookup(base);
                tag && (*tag == PosTag::Verb || *tag == PosTag::Noun))
                return tag;
        }
    }
    for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
        if (w.size() > suffix.size() + 2 && ends_with(w, suffix)) {
            std::string base = w.substr(0, w.size() - suffix.size());
            if (auto tag = tags.lookup(base); tag && *tag == PosTag::Verb) return tag;
            if (auto tag = tags.lookup(base + "e"); tag && *tag == PosTag::Verb) return tag;
        }
    }
    return std::nullopt;
}

}  // namespace

void Pipeline::pos_tag(std::vector<Token>& tokens) const {
    for (Token& token : tokens) {
        if (emoticons_.contains(token.surface)) {
            token.pos = PosTag::Emoticon;
            continue;
        }
        if (all_punct(token.surface)) {
            token.pos = PosTag::Punct;
            continue;
        }
        if (numeric(token.surface)) {
            token.pos = PosTag::Num;
            continue;
        }
        std::string lowered = ascii_lower(token.surface);
        const auto& closed = closed_class();
        if (auto it = closed.find(lowered); it != closed.end()) {
            token.pos = it->second;
            continue;
        }
        if (auto tag = lexicon_lookup(tags_, lowered)) {
            token.pos = *tag;
            continue;
        }
        if (!has_ascii_alnum(token.surface)) {
            token.pos = PosTag::Other;
            continue;
        }
        token.pos = suffix_guess(lowered);
    }
}

}  // namespace valence
