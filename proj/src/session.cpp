#include "maxcalc/session.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "maxcalc/errors.hpp"

namespace maxcalc {

bool Session::has(const std::string& id) const {
    return profiles_.count(id) != 0;
}

const VarietyProfile& Session::get(const std::string& id) const {
    auto it = profiles_.find(id);
    if (it == profiles_.end())
        throw DomainError("unknown variety id '" + id + "'");
    return it->second;
}

void Session::store(VarietyProfile p) {
    p = derive_implications(std::move(p));
    p.validate();
    smith_thom_check(p); // throws on violation
    order_.push_back(p.id);
    profiles_.emplace(p.id, std::move(p));
}

const VarietyProfile& Session::define(const std::string& id, const std::string& rule,
                                      const std::vector<std::string>& inputs,
                                      const Params& params) {
    if (has(id))
        throw DomainError("duplicate variety id '" + id + "'");
    if (rule == "hilbert_scheme") {
        for (const auto& [name, value] : params)
            if (name == "n" && std::holds_alternative<long long>(value) &&
                std::get<long long>(value) > opts_.trunc_guard)
                throw DomainError("hilbert_scheme: n = " +
                                  std::to_string(std::get<long long>(value)) +
                                  " exceeds the truncation guard " +
                                  std::to_string(opts_.trunc_guard) +
                                  " (raise it with --trunc)");
    }
    std::vector<VarietyProfile> resolved;
    resolved.reserve(inputs.size());
    for (const auto& in : inputs)
        resolved.push_back(get(in));

    Built built = apply_rule(id, rule, resolved, params);
    if (opts_.strict && !built.assumptions.empty())
        throw DomainError("strict mode: rule '" + rule + "' relies on: " + built.assumptions[0]);

    for (const auto& sib : built.siblings)
        if (has(sib.id))
            throw DomainError("duplicate variety id '" + sib.id + "' (rule side output)");

    // main output first so that replaying the serialized trace recreates the
    // side outputs before their own lines are reached
    RuleApplication ap;
    ap.rule_id = rule;
    ap.inputs = inputs;
    ap.params = built.params;
    ap.citation = built.citation;
    ap.assumptions = built.assumptions;
    ap.output = id;
    store(std::move(built.profile));
    trace_.push_back(std::move(ap));

    for (auto& sib : built.siblings) {
        RuleApplication sap;
        sap.rule_id = rule;
        sap.inputs = inputs;
        sap.params = built.params;
        sap.citation = built.citation;
        sap.assumptions = built.assumptions;
        sap.output = sib.id;
        store(std::move(sib));
        trace_.push_back(std::move(sap));
    }
    return get(id);
}

int Session::add_certificate(const std::string& subject, MotivePtr decomposition,
                             const std::string& citation) {
    return certs_.register_certificate(subject, std::move(decomposition), citation);
}

MotivatedResult Session::motivated_by(const std::string& y,
                                      const std::set<std::string>& gens) const {
    return certs_.motivated_by(y, gens);
}

std::vector<std::string> Session::propagate_formality() {
    std::vector<std::string> new_notes;
    if (certs_.empty())
        return new_notes;
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<std::string> maximal_gens;
        for (const auto& id : order_)
            if (profiles_.at(id).fact_value(Fact::Maximal) == Tri::Yes)
                maximal_gens.insert(id);

        // positive direction: motivated by maximal varieties
        for (const auto& id : order_) {
            const VarietyProfile& p = profiles_.at(id);
            if (p.fact_value(Fact::Maximal) == Tri::Yes)
                continue;
            MotivatedResult r = certs_.motivated_by(id, maximal_gens);
            if (r.value == Tri::Yes) {
                // raises FactContradiction when the profile already says no
                profiles_.at(id) = derive_implications(
                    assert_fact(p, Fact::Maximal, Tri::Yes, "§10 Cor (motivation)"));
                changed = true;
            }
        }

        // contrapositive: a non-maximal variety motivated by one unknown
        for (const auto& yid : order_) {
            if (profiles_.at(yid).fact_value(Fact::Maximal) != Tri::No)
                continue;
            bool fired = false;
            for (const auto& xid : order_) {
                if (xid == yid ||
                    profiles_.at(xid).fact_value(Fact::Maximal) != Tri::Unknown)
                    continue;
                MotivatedResult r = certs_.motivated_by(yid, {xid});
                if (r.value == Tri::Yes && r.used_gens == std::set<std::string>{xid}) {
                    profiles_.at(xid) = derive_implications(
                        assert_fact(profiles_.at(xid), Fact::Maximal, Tri::No,
                                    "§10 Cor (motivation, contrapositive)"));
                    changed = true;
                    fired = true;
                }
            }
            if (!fired) {
                // multi-generator chains only say "not all maximal"
                std::set<std::string> universe;
                for (const auto& id : order_)
                    if (id != yid)
                        universe.insert(id);
                MotivatedResult r = certs_.motivated_by(yid, universe);
                if (r.value == Tri::Yes && r.used_gens.size() >= 2) {
                    std::ostringstream os;
                    os << "note: " << yid << " is not maximal and is motivated by {";
                    bool first = true;
                    for (const auto& g : r.used_gens) {
                        os << (first ? "" : ", ") << g;
                        first = false;
                    }
                    os << "}: they cannot all be maximal  [§10 Cor (motivation)]";
                    if (emitted_notes_.insert(os.str()).second)
                        new_notes.push_back(os.str());
                }
            }
        }
    }
    return new_notes;
}

std::string Session::serialize_trace() const {
    std::ostringstream os;
    for (const auto& a : trace_)
        os << trace_line(a) << "\n";
    return os.str();
}

std::vector<const RuleApplication*> Session::trace_for(const std::string& id) const {
    if (!has(id))
        throw DomainError("unknown variety id '" + id + "'");
    // collect the ancestor set by walking backwards over the applications
    std::set<std::string> wanted{id};
    std::vector<bool> keep(trace_.size(), false);
    for (size_t i = trace_.size(); i-- > 0;) {
        const RuleApplication& a = trace_[i];
        if (wanted.count(a.output)) {
            keep[i] = true;
            for (const auto& in : a.inputs)
                wanted.insert(in);
        }
    }
    std::vector<const RuleApplication*> out;
    for (size_t i = 0; i < trace_.size(); ++i)
        if (keep[i])
            out.push_back(&trace_[i]);
    return out;
}

void Session::replay_line(const std::string& line) {
    // rule(inputs; params) -> out  # citation [assumes: ...]
    // Side outputs of multi-output rules are recreated by their main line;
    // their own lines are skipped below once the id exists.
    const auto arrow = line.find(" -> ");
    if (arrow == std::string::npos)
        throw DomainError("trace line without '->': " + line);
    const auto open = line.find('(');
    if (open == std::string::npos || open > arrow)
        throw DomainError("trace line without argument list: " + line);
    const auto close = line.rfind(')', arrow);
    if (close == std::string::npos || close < open)
        throw DomainError("trace line with unbalanced arguments: " + line);

    const std::string rule = line.substr(0, open);
    std::string args = line.substr(open + 1, close - open - 1);
    std::string rest = line.substr(arrow + 4);
    std::string out_id = rest.substr(0, rest.find("  #"));
    if (has(out_id))
        return;

    std::string input_part = args, param_part;
    if (const auto semi = args.find(';'); semi != std::string::npos) {
        input_part = args.substr(0, semi);
        param_part = args.substr(semi + 1);
    } else if (args.find('=') != std::string::npos) {
        input_part.clear();
        param_part = args;
    }

    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        int depth = 0;
        for (char ch : s) {
            if (ch == '[')
                ++depth;
            if (ch == ']')
                --depth;
            if (ch == ',' && depth == 0) {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty())
            out.push_back(cur);
        for (auto& t : out) {
            while (!t.empty() && t.front() == ' ')
                t.erase(t.begin());
            while (!t.empty() && t.back() == ' ')
                t.pop_back();
        }
        return out;
    };

    std::vector<std::string> inputs;
    for (const auto& tok : split(input_part))
        if (!tok.empty())
            inputs.push_back(tok);

    Params params;
    for (const auto& tok : split(param_part)) {
        if (tok.empty())
            continue;
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw DomainError("trace parameter without '=': " + tok);
        const std::string name = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (value == "yes" || value == "no") {
            params.emplace_back(name, value == "yes");
        } else if (!value.empty() && value.front() == '[') {
            std::vector<long long> xs;
            std::string body = value.substr(1, value.size() - 2);
            for (const auto& item : split(body))
                if (!item.empty())
                    xs.push_back(std::stoll(item));
            params.emplace_back(name, xs);
        } else if (!value.empty() &&
                   (std::isdigit(static_cast<unsigned char>(value.front())) ||
                    value.front() == '-')) {
            params.emplace_back(name, static_cast<long long>(std::stoll(value)));
        } else {
            params.emplace_back(name, value);
        }
    }

    define(out_id, rule, inputs, params);
}

} // namespace maxcalc
