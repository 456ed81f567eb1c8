#include "maxcalc/profile.hpp"

#include "maxcalc/errors.hpp"

namespace maxcalc {

const char* tri_name(Tri v) {
    switch (v) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
    }
}

namespace {

constexpr const char* kFactNames[kFactCount] = {
    "real_nonempty",  "b1_zero",    "h2_torsion_free", "h1_torsion_free",
    "c1_maximal",     "k_maximal",  "r_rational",      "tate_motive",
    "equivariantly_formal", "maximal",
};

std::string describe(const TriState& t) {
    std::string s = tri_name(t.value);
    if (!t.provenance.empty())
        s += " [" + t.provenance + "]";
    return s;
}

} // namespace

const char* fact_name(Fact f) {
    return kFactNames[static_cast<size_t>(f)];
}

std::optional<Fact> fact_from_name(const std::string& name) {
    for (int i = 0; i < kFactCount; ++i)
        if (name == kFactNames[i])
            return static_cast<Fact>(i);
    return std::nullopt;
}

std::optional<Int> VarietyProfile::complex_total() const {
    if (!complex_betti)
        return std::nullopt;
    return total(*complex_betti);
}

void VarietyProfile::validate() const {
    if (dim < 0)
        throw DomainError(id + ": negative dimension");
    if (complex_betti && complex_betti->degree() > 2 * dim)
        throw DomainError(id + ": complex Betti numbers above degree 2*dim");
    if (real_betti) {
        if (real_betti->degree() > dim)
            throw DomainError(id + ": real Betti numbers above degree dim");
        if (!real_total || *real_total != total(*real_betti))
            throw DomainError(id + ": real_total inconsistent with graded real Betti numbers");
    }
    if (real_total && *real_total < 0)
        throw DomainError(id + ": negative real total");
    if (real_components && *real_components <= 0)
        throw DomainError(id + ": real_components must be positive");

    const auto ct = complex_total();
    if (real_total && ct && *real_total > *ct)
        throw SmithThomViolation(id + ": real total " + real_total->str() +
                                 " exceeds complex total " + ct->str());

    const TriState& mx = fact(Fact::Maximal);
    const TriState& ef = fact(Fact::EquivariantlyFormal);
    if (mx.value != ef.value)
        throw FactContradiction(id + ": maximal (" + describe(mx) +
                                ") and equivariantly_formal (" + describe(ef) +
                                ") must carry equal values");
    if (mx.value == Tri::Yes) {
        if (real_total && ct && *real_total != *ct)
            throw FactContradiction(id + ": maximal=yes but totals differ (" +
                                    real_total->str() + " vs " + ct->str() + ")");
        if (ct && *ct > 0 && fact_value(Fact::RealNonempty) == Tri::No)
            throw FactContradiction(id + ": maximal=yes forces a nonempty real locus");
    }
    if (mx.value == Tri::No && real_total && ct && *real_total == *ct)
        throw FactContradiction(id + ": maximal=no but the totals are equal (" + ct->str() + ")");

    // nonemptiness bookkeeping against recorded totals
    if (real_total) {
        if (*real_total == 0 && fact_value(Fact::RealNonempty) == Tri::Yes)
            throw FactContradiction(id + ": real_nonempty=yes but real total is 0");
        if (*real_total > 0 && fact_value(Fact::RealNonempty) == Tri::No)
            throw FactContradiction(id + ": real_nonempty=no but real total is positive");
    }
    if (real_components && fact_value(Fact::RealNonempty) == Tri::No)
        throw FactContradiction(id + ": component count recorded for an empty real locus");
    if (complex_betti && fact_value(Fact::B1Zero) == Tri::Yes && complex_betti->coeff(1) != 0)
        throw FactContradiction(id + ": b1_zero=yes but b1 = " + complex_betti->coeff(1).str());
}

SmithThom smith_thom_check(const VarietyProfile& p) {
    const auto ct = p.complex_total();
    if (!p.real_total || !ct)
        return SmithThom::Undetermined;
    if (*p.real_total > *ct)
        throw SmithThomViolation(p.id + ": real total " + p.real_total->str() +
                                 " exceeds complex total " + ct->str());
    return *p.real_total == *ct ? SmithThom::Maximal : SmithThom::Strict;
}

const char* smith_thom_name(SmithThom v) {
    switch (v) {
    case SmithThom::Maximal: return "maximal";
    case SmithThom::Strict: return "strict";
    default: return "undetermined";
    }
}

namespace {

void set_tri(VarietyProfile& p, Fact f, Tri value, const std::string& provenance) {
    TriState& t = p.fact(f);
    if (t.value == value)
        return; // first provenance wins
    if (t.value != Tri::Unknown)
        throw FactContradiction(p.id + ": fact " + fact_name(f) + " already " + describe(t) +
                                ", cannot set " + tri_name(value) +
                                (provenance.empty() ? "" : " [" + provenance + "]"));
    t.value = value;
    t.provenance = provenance;
}

} // namespace

VarietyProfile assert_fact(VarietyProfile p, Fact f, Tri value, const std::string& provenance) {
    if (value == Tri::Unknown)
        throw DomainError(p.id + ": cannot assert unknown");
    set_tri(p, f, value, provenance);
    if (f == Fact::Maximal || f == Fact::EquivariantlyFormal) {
        const Fact mirror = (f == Fact::Maximal) ? Fact::EquivariantlyFormal : Fact::Maximal;
        set_tri(p, mirror, value, provenance);
        if (value == Tri::Yes) {
            const auto ct = p.complex_total();
            if (ct && !p.real_total)
                p.real_total = *ct;
            if (ct && *ct > 0 && p.fact_value(Fact::RealNonempty) != Tri::Yes)
                set_tri(p, Fact::RealNonempty, Tri::Yes, provenance);
        }
    }
    p.validate();
    return p;
}

VarietyProfile derive_implications(VarietyProfile p) {
    bool changed = true;
    while (changed) {
        changed = false;
        if (p.dim == 2 && p.fact_value(Fact::C1Maximal) == Tri::Yes &&
            p.fact_value(Fact::B1Zero) == Tri::Yes &&
            p.fact_value(Fact::Maximal) != Tri::Yes) {
            p = assert_fact(p, Fact::Maximal, Tri::Yes, "§4 Lemma (ii)");
            changed = true;
        }
        if (p.fact_value(Fact::KMaximal) == Tri::Yes &&
            p.fact_value(Fact::H2TorsionFree) == Tri::Yes &&
            p.fact_value(Fact::C1Maximal) != Tri::Yes) {
            // h2_torsion_free stands in for the 2-torsion-freeness of H^3
            p = assert_fact(p, Fact::C1Maximal, Tri::Yes,
                            "§4 Lemma (i); 2-torsion-freeness via the h2 flag");
            changed = true;
        }
        if (p.dim == 2 && p.fact_value(Fact::Maximal) == Tri::Yes &&
            p.fact_value(Fact::RRational) == Tri::Yes) {
            if (p.fact_value(Fact::KMaximal) != Tri::Yes) {
                p = assert_fact(p, Fact::KMaximal, Tri::Yes, "§4 Lemma (rational surfaces)");
                changed = true;
            }
            if (p.fact_value(Fact::C1Maximal) != Tri::Yes) {
                p = assert_fact(p, Fact::C1Maximal, Tri::Yes, "§4 Lemma (rational surfaces)");
                changed = true;
            }
        }
    }
    return p;
}

} // namespace maxcalc
