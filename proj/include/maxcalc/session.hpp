#ifndef MAXCALC_SESSION_HPP
#define MAXCALC_SESSION_HPP

#include <map>

#include "maxcalc/motive.hpp"
#include "maxcalc/rules.hpp"

namespace maxcalc {

// One engine run: a single-writer store of profiles, the proof-trace DAG and
// the certificate store. Profiles are immutable values; fact propagation
// replaces the stored value rather than mutating shared state.
class Session {
public:
    struct Options {
        bool strict = false;  // recorded assumptions become errors
        int trunc_guard = 16; // upper bound for series expansions
    };

    Session() = default;
    explicit Session(Options opts) : opts_(opts) {}

    const Options& options() const { return opts_; }

    bool has(const std::string& id) const;
    const VarietyProfile& get(const std::string& id) const;
    const std::vector<std::string>& order() const { return order_; }

    // Applies a generator or construction rule and stores the output profile
    // (plus siblings, for the multi-output Hilbert backward rule) under a
    // fresh id. Records the trace node. Outputs are closed under
    // derive_implications and fully validated.
    const VarietyProfile& define(const std::string& id, const std::string& rule,
                                 const std::vector<std::string>& inputs, const Params& params);

    // Certificates and the motivic closure.
    int add_certificate(const std::string& subject, MotivePtr decomposition,
                        const std::string& citation);
    const CertificateStore& certificates() const { return certs_; }
    MotivatedResult motivated_by(const std::string& y, const std::set<std::string>& gens) const;

    // Runs the formality fixed point:
    //   - a variety motivated by currently-maximal ones becomes maximal;
    //   - a non-maximal variety motivated by a single unknown one forces that
    //     one non-maximal (contrapositive);
    //   - a non-maximal variety motivated by several generators yields a
    //     disjunctive note, not a fact.
    // Returns the notes generated by this call (already deduplicated against
    // earlier calls). Throws FactContradiction when propagation collides with
    // recorded facts.
    std::vector<std::string> propagate_formality();

    const std::vector<RuleApplication>& trace() const { return trace_; }
    std::string serialize_trace() const;
    // The ancestry of `id` in application order.
    std::vector<const RuleApplication*> trace_for(const std::string& id) const;

    // Re-applies one serialized trace line (used to replay stored traces).
    void replay_line(const std::string& line);

private:
    void store(VarietyProfile p);

    Options opts_;
    std::vector<std::string> order_;
    std::map<std::string, VarietyProfile> profiles_;
    std::vector<RuleApplication> trace_;
    CertificateStore certs_;
    std::set<std::string> emitted_notes_;
};

} // namespace maxcalc

#endif
