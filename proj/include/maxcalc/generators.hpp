#ifndef MAXCALC_GENERATORS_HPP
#define MAXCALC_GENERATORS_HPP

#include "maxcalc/profile.hpp"

namespace maxcalc {

// Atomic variety profiles the rule engine starts from. Every generator
// returns a profile that passes validate() and smith_thom_check().

// Smooth projective real curve of genus g whose real locus is s disjoint
// circles, 0 <= s <= g+1 (Klein's bound). Maximal exactly when s = g+1.
VarietyProfile make_curve(const std::string& id, int g, int s);

// P^r with its standard real structure: always maximal, totals r+1 / r+1.
VarietyProfile make_projective_space(const std::string& id, int r);

// Real abelian variety of dimension q with first Comessatti characteristic
// lambda1; real locus (R/Z)^q x (Z/2)^{q-lambda1}, total 2^{2q-lambda1}.
// `prov` cites the rule that produced the profile when used as a rule output.
VarietyProfile make_abelian_variety(const std::string& id, int q, int lambda1,
                                    const std::string& prov = "§3.6 Prop (real tori)");

// Catalog surfaces.
VarietyProfile make_p2(const std::string& id);
VarietyProfile make_p1xp1(const std::string& id);
VarietyProfile make_hirzebruch(const std::string& id, int n);
VarietyProfile make_del_pezzo_b1(const std::string& id);
// Real K3 surface; the real-locus topology is user input, only checked for
// Smith-Thom consistency.
VarietyProfile make_k3(const std::string& id, const Int& real_total, const Int& components);

// Blow-up of a real surface at a real point or at a pair of complex
// conjugate points outside the real locus.
enum class BlowUpCenter { RealPoint, ConjugatePair };
VarietyProfile blow_up_surface_point(const std::string& id, const VarietyProfile& s,
                                     BlowUpCenter where);

} // namespace maxcalc

#endif
