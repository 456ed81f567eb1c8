#ifndef MAXCALC_PROFILE_HPP
#define MAXCALC_PROFILE_HPP

#include <array>
#include <optional>
#include <string>

#include "maxcalc/poincare.hpp"

namespace maxcalc {

enum class Tri { Unknown, Yes, No };

const char* tri_name(Tri v); // "unknown" / "yes" / "no"

// A fact value plus the citation that established it. Once Yes or No, a
// contradictory assignment raises FactContradiction, never overwrites.
struct TriState {
    Tri value = Tri::Unknown;
    std::string provenance;

    bool operator==(const TriState&) const = default;
};

enum class Fact {
    RealNonempty,
    B1Zero,
    H2TorsionFree,
    H1TorsionFree,
    C1Maximal,
    KMaximal,
    RRational,
    TateMotive,
    EquivariantlyFormal,
    Maximal,
};
inline constexpr int kFactCount = 10;

const char* fact_name(Fact f);
std::optional<Fact> fact_from_name(const std::string& name);

// The cohomological fingerprint of one real variety: dimension, complex
// graded F2-Betti numbers, real-locus data (totals-first; graded only when a
// generator supplies it), and the tri-state fact lattice.
//
// complex_betti is optional because propagation-only rules produce profiles
// whose maximality is known while their Betti numbers are not.
struct VarietyProfile {
    std::string id;
    int dim = 0;
    std::optional<GradedDims> complex_betti;
    std::optional<Int> real_total;
    std::optional<GradedDims> real_betti;
    std::optional<Int> real_components; // positive when present
    std::array<TriState, kFactCount> facts;

    const TriState& fact(Fact f) const { return facts[static_cast<size_t>(f)]; }
    TriState& fact(Fact f) { return facts[static_cast<size_t>(f)]; }
    Tri fact_value(Fact f) const { return fact(f).value; }

    std::optional<Int> complex_total() const;

    // Checks every structural invariant; throws SmithThomViolation or
    // FactContradiction on the first breach.
    void validate() const;
};

enum class SmithThom { Maximal, Strict, Undetermined };

const char* smith_thom_name(SmithThom v);

// Compares the recorded totals. Throws SmithThomViolation when
// real_total > complex total (an unsound generator or rule; abort the run).
SmithThom smith_thom_check(const VarietyProfile& p);

// Records fact = value with its provenance and returns the updated profile.
// Setting maximal also sets equivariantly_formal (they are equivalent for
// varieties) and back-fills forced real data:
//   maximal = Yes, complex known, real_total absent -> real_total := complex
//   maximal = Yes, complex total > 0               -> real_nonempty := Yes
// A contradiction with an existing Yes/No raises FactContradiction listing
// both provenances.
VarietyProfile assert_fact(VarietyProfile p, Fact f, Tri value, const std::string& provenance);

// Closes the fact lattice under:
//  (a) dim 2, c1_maximal, b1_zero          => maximal
//  (b) k_maximal, 2-torsion-free cohomology => c1_maximal
//  (c) maximal R-rational surface           => k_maximal and c1_maximal
// Iterates to a fixed point; idempotent.
VarietyProfile derive_implications(VarietyProfile p);

} // namespace maxcalc

#endif
