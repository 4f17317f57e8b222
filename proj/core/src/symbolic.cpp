#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "tsv.hpp"
#include "builtin_data.hpp"
#include "valence/symbolic.hpp"

namespace valence {
namespace {

std::string ascii_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
    return out;
}

bool is_irrealis_marker(const Token& token) {
    std::string w = ascii_lower(token.surface);
    return w == "would" || w == "could" || w == "should" || w == "if";
}

std::optional<RuleCondition> condition_from_string(std::string_view name) {
    if (name == "dependent_negative") return RuleCondition::DependentNegative;
    if (name == "governor_verb") return RuleCondition::GovernorVerb;
    if (name == "governor_adj_noun") return RuleCondition::GovernorAdjNoun;
    if (name == "irrealis_marker") return RuleCondition::IrrealisMarker;
    return std::nullopt;
}

std::optional<RuleEffect> effect_from_string(std::string_view name) {
    if (name == "flip") return RuleEffect::Flip;
    if (name == "neutralize") return RuleEffect::Neutralize;
    if (name == "transfer") return RuleEffect::Transfer;
    return std::nullopt;
}

// Clause id per token; "but" closes a clause.
std::vector<std::size_t> clause_ids(const Sentence& sentence) {
    std::vector<std::size_t> ids(sentence.tokens.size(), 0);
    std::size_t current = 0;
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        ids[i] = current;
        if (ascii_lower(sentence.tokens[i].surface) == "but") ++current;
    }
    return ids;
}

struct Engine {
    const Sentence& sentence;
    std::vector<ValenceAnnotation>& annotations;
    RuleTrace& trace;
    std::vector<std::size_t> clauses;

    ValenceAnnotation& at(std::size_t index) { return annotations[index]; }

    bool is_bearer(std::size_t index) const {
        return annotations[index].prior.has_value() &&
               annotations[index].contextual.has_value();
    }

    void record(const RuleSpec& rule, std::size_t governor, std::size_t dependent,
                double before, double after) {
        trace.push_back({rule.id, governor, dependent, before, after, rule.effect});
        annotations[governor].applied_rules.push_back(rule.id);
    }

    // Applies the rule's effect to the bearer at `target`; `trigger` is the
    // token recorded as the cause.  `source` feeds the transfer effect.
    void apply(const RuleSpec& rule, std::size_t target, std::size_t trigger,
               std::optional<std::size_t> source = std::nullopt) {
        double before = annotations[target].contextual.value_or(0.0);
        double after = before;
        switch (rule.effect) {
            case RuleEffect::Flip:
                after = before == 0.0 ? 0.0 : -before;
                break;
            case RuleEffect::Neutralize:
                after = 0.0;
                break;
            case RuleEffect::Transfer:
                if (source && annotations[*source].contextual) {
                    after = *annotations[*source].contextual;
                    if (!annotations[target].prior)
                        annotations[target].prior = annotations[*source].prior;
                }
                break;
        }
        annotations[target].contextual = after;
        record(rule, target, trigger, before, after);
    }

    void clear(std::size_t index) {
        annotations[index].prior.reset();
        annotations[index].contextual.reset();
    }

    // Irrealis: a marker anywhere in a clause neutralizes every bearer in
    // that clause.
    void run_irrealis(const RuleSpec& rule) {
        for (std::size_t marker = 0; marker < sentence.tokens.size(); ++marker) {
            if (!is_irrealis_marker(sentence.tokens[marker])) continue;
            for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
                if (clauses[i] != clauses[marker] || !is_bearer(i)) continue;
                if (*annotations[i].contextual == 0.0) continue;
                apply(rule, i, marker);
            }
        }
    }

    // Modifier rule: an amod dependent with a negative prior flips the
    // governor phrase and stops being a bearer itself.
    void run_modifier(const RuleSpec& rule) {
        for (const auto& edge : sentence.edges) {
            if (rule.relation && edge.relation != *rule.relation) continue;
            if (!rule.relation && edge.relation != Relation::Amod) continue;
            const auto& dep = annotations[edge.dependent];
            if (!dep.prior || *dep.prior >= 0.0) continue;
            if (!is_bearer(edge.governor)) continue;
            apply(rule, edge.governor, edge.dependent, edge.dependent);
            clear(edge.dependent);
        }
    }

    // Negation on a verb rewrites the nearest bearer at or right of the
    // verb inside its clause; negation on an adjective or noun rewrites
    // that word itself.
    void run_negation(const RuleSpec& rule) {
        for (const auto& edge : sentence.edges) {
            Relation want = rule.relation.value_or(Relation::Neg);
            if (edge.relation != want) continue;
            PosTag pos = sentence.tokens[edge.governor].pos;
            if (rule.condition == RuleCondition::GovernorVerb) {
                if (pos != PosTag::Verb) continue;
                for (std::size_t i = edge.governor; i < sentence.tokens.size(); ++i) {
                    if (clauses[i] != clauses[edge.governor]) break;
                    if (is_bearer(i)) {
                        apply(rule, i, edge.governor);
                        break;
                    }
                }
            } else {
                if (pos != PosTag::Adj && pos != PosTag::Noun) continue;
                if (!is_bearer(edge.governor)) continue;
                apply(rule, edge.governor, edge.dependent);
            }
        }
    }
};

}  // namespace

std::string_view to_string(RuleCondition condition) {
    switch (condition) {
        case RuleCondition::DependentNegative: return "dependent_negative";
        case RuleCondition::GovernorVerb: return "governor_verb";
        case RuleCondition::GovernorAdjNoun: return "governor_adj_noun";
        case RuleCondition::IrrealisMarker: return "irrealis_marker";
    }
    return "irrealis_marker";
}

std::string_view to_string(RuleEffect effect) {
    switch (effect) {
        case RuleEffect::Flip: return "flip";
        case RuleEffect::Neutralize: return "neutralize";
        case RuleEffect::Transfer: return "transfer";
    }
    return "flip";
}

RuleSet RuleSet::builtin() {
    std::istringstream in{std::string(builtin_data::rules())};
    return load(in);
}

RuleSet RuleSet::load(std::istream& in) {
    RuleSet set;
    std::set<std::string> ids;
    detail::for_each_tsv_line(in, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 4)
            throw LoadError("expected 'id<TAB>relation<TAB>condition<TAB>effect'", line);
        RuleSpec spec;
        spec.id = f[0];
        if (spec.id.empty()) throw LoadError("empty rule id", line);
        if (!ids.insert(spec.id).second)
            throw LoadError("duplicate rule id '" + spec.id + "'", line);
        if (f[1] != "*") {
            auto relation = relation_from_string(f[1]);
            if (!relation) throw LoadError("unknown relation '" + f[1] + "'", line);
            spec.relation = *relation;
        }
        auto condition = condition_from_string(f[2]);
        if (!condition) throw LoadError("unknown condition '" + f[2] + "'", line);
        spec.condition = *condition;
        auto effect = effect_from_string(f[3]);
        if (!effect) throw LoadError("unknown effect '" + f[3] + "'", line);
        spec.effect = *effect;
        set.rules_.push_back(std::move(spec));
    });
    return set;
}

RuleSet RuleSet::load_file(const std::filesystem::path& path) {
    auto in = detail::open_file(path);
    return load(in);
}

std::vector<ValenceAnnotation> assign_prior_valences(const Sentence& sentence,
                                                     const PolarityLexicon& lexicon) {
    std::vector<ValenceAnnotation> annotations(sentence.tokens.size());
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        annotations[i].token_index = i;
        if (auto prior = lexicon.lookup(sentence.tokens[i])) {
            annotations[i].prior = *prior;
            annotations[i].contextual = *prior;
        }
    }
    return annotations;
}

RuleTrace apply_valence_rules(std::vector<ValenceAnnotation>& annotations,
                              const Sentence& sentence, const RuleSet& rules) {
    RuleTrace trace;
    if (annotations.size() != sentence.tokens.size())
        annotations = std::vector<ValenceAnnotation>(sentence.tokens.size());
    Engine engine{sentence, annotations, trace, clause_ids(sentence)};

    for (const auto& rule : rules.rules())
        if (rule.condition == RuleCondition::IrrealisMarker) engine.run_irrealis(rule);
    for (const auto& rule : rules.rules())
        if (rule.condition == RuleCondition::DependentNegative) engine.run_modifier(rule);
    for (const auto& rule : rules.rules())
        if (rule.condition == RuleCondition::GovernorVerb ||
            rule.condition == RuleCondition::GovernorAdjNoun)
            engine.run_negation(rule);
    return trace;
}

Valence sentence_valence(const std::vector<ValenceAnnotation>& annotations) {
    double sum = 0.0;
    std::size_t bearers = 0;
    for (const auto& annotation : annotations) {
        if (!annotation.prior || !annotation.contextual) continue;
        sum += *annotation.contextual;
        ++bearers;
    }
    if (bearers == 0) return Valence::from_score(0.0);
    return Valence::from_score(sum / static_cast<double>(bearers));
}

Valence lexical_baseline_valence(const Sentence& sentence, const PolarityLexicon& lexicon) {
    double sum = 0.0;
    std::size_t bearers = 0;
    for (const auto& token : sentence.tokens) {
        if (auto prior = lexicon.lookup(token)) {
            sum += *prior;
            ++bearers;
        }
    }
    if (bearers == 0) return Valence::from_score(0.0);
    return Valence::from_score(sum / static_cast<double>(bearers));
}

SentenceValenceResult analyze_sentence_symbolic(const Sentence& sentence,
                                                const PolarityLexicon& lexicon,
                                                const RuleSet& rules) {
    SentenceValenceResult result;
    result.annotations = assign_prior_valences(sentence, lexicon);
    result.trace = apply_valence_rules(result.annotations, sentence, rules);
    result.valence = sentence_valence(result.annotations);
    return result;
}

std::string trace_to_text(const RuleTrace& trace, const Sentence& sentence) {
    std::ostringstream out;
    for (const auto& step : trace) {
        out << step.rule_id << '\t' << to_string(step.effect) << '\t';
        if (step.governor < sentence.tokens.size())
            out << sentence.tokens[step.governor].surface;
        out << '[' << step.governor << "]\t";
        if (step.dependent < sentence.tokens.size())
            out << sentence.tokens[step.dependent].surface;
        out << '[' << step.dependent << "]\t" << detail::format_double(step.before)
            << " -> " << detail::format_double(step.after) << '\n';
    }
    return out.str();
}

}  // namespace valence
