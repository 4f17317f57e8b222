// Adjacency-pattern shallow parser.  Emits the small relation set the
// valence rules consume; patterns never cross a "but" clause boundary.

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
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

bool is_content_head(PosTag tag) {
    return tag == PosTag::Verb || tag == PosTag::Adj || tag == PosTag::Noun;
}

bool is_participle(const Token& token) {
    if (token.pos != PosTag::Verb) return false;
    std::string w = ascii_lower(token.surface);
    auto ends = [&](std::string_view s) {
        return w.size() > s.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
    };
    return ends("ed") || ends("en") || ends("ing");
}

}  // namespace

std::vector<DependencyEdge> Pipeline::shallow_parse(const std::vector<Token>& tokens) const {
    std::vector<DependencyEdge> edges;
    std::set<DependencyEdge> seen;
    auto emit = [&](Relation rel, std::size_t gov, std::size_t dep) {
        if (gov == dep) return;
        DependencyEdge edge{rel, gov, dep};
        if (seen.insert(edge).second) edges.push_back(edge);
    };

    std::size_t n = tokens.size();
    std::vector<std::size_t> clause(n, 0);
    std::vector<std::size_t> clause_starts = {0};
    std::size_t current = 0;
    for (std::size_t i = 0; i < n; ++i) {
        clause[i] = current;
        if (ascii_lower(tokens[i].surface) == "but") {
            ++current;
            clause_starts.push_back(i + 1);
        }
    }
    std::size_t clause_count = current + 1;

    // negation particle -> nearest following content head in the clause
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_negation_word(ascii_lower(tokens[i].surface))) continue;
        for (std::size_t j = i + 1; j < n && clause[j] == clause[i]; ++j) {
            if (is_content_head(tokens[j].pos)) {
                emit(Relation::Neg, j, i);
                break;
            }
        }
    }

    // adjective or verb participle immediately before a noun
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (clause[i] != clause[i + 1]) continue;
        bool modifier = tokens[i].pos == PosTag::Adj || is_participle(tokens[i]);
        if (modifier && tokens[i + 1].pos == PosTag::Noun)
            emit(Relation::Amod, i + 1, i);
    }

    // adverb immediately before an adjective
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (clause[i] != clause[i + 1]) continue;
        if (tokens[i].pos == PosTag::Adv && tokens[i + 1].pos == PosTag::Adj)
            emit(Relation::Advmod, i + 1, i);
    }

    // each verb -> nearest following noun in the clause
    for (std::size_t i = 0; i < n; ++i) {
        if (tokens[i].pos != PosTag::Verb) continue;
        for (std::size_t j = i + 1; j < n && clause[j] == clause[i]; ++j) {
            if (tokens[j].pos == PosTag::Noun) {
                emit(Relation::Dobj, i, j);
                break;
            }
        }
    }

    // leftmost pronoun or noun before the first verb
    for (std::size_t v = 0; v < n; ++v) {
        if (tokens[v].pos != PosTag::Verb) continue;
        for (std::size_t s = 0; s < v; ++s) {
            if (tokens[s].pos == PosTag::Pron || tokens[s].pos == PosTag::Noun) {
                emit(Relation::Nsubj, v, s);
                break;
            }
        }
        break;
    }

    // heads of adjacent "but"-separated clauses
    if (clause_count > 1) {
        auto head_of = [&](std::size_t c) -> std::optional<std::size_t> {
            std::size_t begin = clause_starts[c];
            std::size_t end = c + 1 < clause_count ? clause_starts[c + 1] - 1 : n;
            for (PosTag want : {PosTag::Verb, PosTag::Adj, PosTag::Noun}) {
                for (std::size_t i = begin; i < end && i < n; ++i)
                    if (tokens[i].pos == want) return i;
            }
            if (begin < end && begin < n) return begin;
            return std::nullopt;
        };
        for (std::size_t c = 0; c + 1 < clause_count; ++c) {
            auto left = head_of(c);
            auto right = head_of(c + 1);
            if (left && right && *left != *right)
                emit(Relation::ConjBut, *left, *right);
        }
    }

    return edges;
}

}  // namespace valence
