#ifndef MAXCALC_RULES_HPP
#define MAXCALC_RULES_HPP

#include <variant>
#include <vector>

#include "maxcalc/profile.hpp"

namespace maxcalc {

using ParamValue = std::variant<long long, std::string, bool, std::vector<long long>>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

std::string param_value_str(const ParamValue& v);

// One rule application: the trace node. Serializes as
//   rule_id(inputs...; params) -> output_id  # citation [assumes: ...]
struct RuleApplication {
    std::string rule_id;
    std::vector<std::string> inputs;
    std::string params; // canonical rendering, may be empty
    std::string citation;
    std::vector<std::string> assumptions;
    std::string output;
};

std::string trace_line(const RuleApplication& a);

// Everything a rule application produces besides the trace node itself.
struct Built {
    VarietyProfile profile;
    std::vector<VarietyProfile> siblings; // extra outputs (nested Hilbert schemes)
    std::string citation;
    std::string params; // canonical parameter rendering
    std::vector<std::string> assumptions;
};

// --- construction operations -------------------------------------------

VarietyProfile product(const std::string& id, const std::vector<VarietyProfile>& xs);
// rank = r + 1, the rank of the underlying real vector bundle
VarietyProfile projective_bundle(const std::string& id, const VarietyProfile& x, int rank);
// Flag bundle of type dims = (d1 < ... < dk) inside ambient rank n.
VarietyProfile flag_bundle(const std::string& id, const VarietyProfile& x,
                           const std::vector<int>& dims, int ambient);
VarietyProfile blow_up(const std::string& id, const VarietyProfile& x, const VarietyProfile& y,
                       int codim);

// Hilbert squares and cubes. Forward: X maximal gives the nested scheme
// X^{[1,2]} = Bl_Diag(X x X) with full Betti numbers. The surface criterion
// decides X^[2] by connectedness of the real locus. Backward: a maximal
// Hilbert square with a real point on the base forces the base, X^{[1,2]},
// X^{[2,3]} and X^{[3]} all maximal.
VarietyProfile hilbert_nested12(const std::string& id, const VarietyProfile& x);
VarietyProfile hilbert_square_criterion(const std::string& id, const VarietyProfile& s);
struct HilbertBackward {
    VarietyProfile base;      // the input base profile, now marked maximal
    VarietyProfile nested12;  // X^{[1,2]}, full Betti when the base has them
    VarietyProfile nested23;  // X^{[2,3]}, totals when computable
    VarietyProfile cube;      // X^{[3]}, maximality only
};
HilbertBackward hilbert_square_backward(const std::string& base_id, const VarietyProfile& square,
                                        const VarietyProfile& base);

VarietyProfile hilbert_scheme_surface(const std::string& id, const VarietyProfile& s, int n);
VarietyProfile bundle_moduli(const std::string& id, const VarietyProfile& c, int rank, int degree);

// --- generic dispatch ----------------------------------------------------

// True when `rule` names a generator or construction known to the engine.
bool is_known_rule(const std::string& rule);
const std::vector<std::string>& known_rules();

// Applies `rule` to already-resolved input profiles. Validates parameters,
// returns the built profile(s), canonical parameter rendering, citation and
// recorded assumptions. Throws EngineError subclasses on any violation.
Built apply_rule(const std::string& id, const std::string& rule,
                 const std::vector<VarietyProfile>& inputs, const Params& params);

} // namespace maxcalc

#endif
