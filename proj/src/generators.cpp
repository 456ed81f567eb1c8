#include "maxcalc/generators.hpp"

#include "maxcalc/errors.hpp"

namespace maxcalc {

namespace {

Int pow2(int e) {
    Int r = 1;
    return r << e;
}

void finish(VarietyProfile& p) {
    p = derive_implications(std::move(p));
    p.validate();
}

} // namespace

VarietyProfile make_curve(const std::string& id, int g, int s) {
    if (g < 0 || s < 0)
        throw DomainError(id + ": curve parameters must be nonnegative");
    if (s > g + 1)
        throw HarnackViolation(id + ": a genus-" + std::to_string(g) +
                               " curve has at most " + std::to_string(g + 1) +
                               " real circles, got " + std::to_string(s));
    VarietyProfile p;
    p.id = id;
    p.dim = 1;
    p.complex_betti = GradedDims{{0, 1}, {1, 2 * g}, {2, 1}};
    p.real_total = Int(2) * s;
    if (s >= 1) {
        p.real_betti = GradedDims{{0, s}, {1, s}};
        p.real_components = s;
        p = assert_fact(std::move(p), Fact::RealNonempty, Tri::Yes, "§1 (Klein)");
    } else {
        p.real_betti = GradedDims();
        p = assert_fact(std::move(p), Fact::RealNonempty, Tri::No, "§1 (Klein)");
    }
    p = assert_fact(std::move(p), Fact::Maximal, s == g + 1 ? Tri::Yes : Tri::No, "§1 (Klein)");
    p = assert_fact(std::move(p), Fact::B1Zero, g == 0 ? Tri::Yes : Tri::No, "catalog: curve");
    p = assert_fact(std::move(p), Fact::H1TorsionFree, Tri::Yes, "catalog: curve");
    p = assert_fact(std::move(p), Fact::H2TorsionFree, Tri::Yes, "catalog: curve");
    if (g == 0 && s == 1) {
        p = assert_fact(std::move(p), Fact::RRational, Tri::Yes, "catalog: curve");
        p = assert_fact(std::move(p), Fact::TateMotive, Tri::Yes, "catalog: curve");
    } else {
        // g >= 1: odd cohomology; g = 0 without real points: not maximal.
        // Either way the motive is not a sum of Tate objects.
        p = assert_fact(std::move(p), Fact::TateMotive, Tri::No, "catalog: curve");
        if (g >= 1 || s == 0)
            p = assert_fact(std::move(p), Fact::RRational, Tri::No, "catalog: curve");
    }
    finish(p);
    return p;
}

VarietyProfile make_projective_space(const std::string& id, int r) {
    if (r < 0)
        throw DomainError(id + ": negative dimension");
    VarietyProfile p;
    p.id = id;
    p.dim = r;
    p.complex_betti = projective_space_poly(r, 2);
    p.real_betti = projective_space_poly(r, 1);
    p.real_total = Int(r + 1);
    p.real_components = 1;
    p = assert_fact(std::move(p), Fact::RealNonempty, Tri::Yes, "§8 (projective space)");
    p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, "§8 (projective space)");
    p = assert_fact(std::move(p), Fact::B1Zero, Tri::Yes, "catalog: projective space");
    p = assert_fact(std::move(p), Fact::H1TorsionFree, Tri::Yes, "catalog: projective space");
    p = assert_fact(std::move(p), Fact::H2TorsionFree, Tri::Yes, "catalog: projective space");
    p = assert_fact(std::move(p), Fact::TateMotive, Tri::Yes, "catalog: projective space");
    if (r <= 2)
        p = assert_fact(std::move(p), Fact::RRational, Tri::Yes, "catalog: projective space");
    finish(p);
    return p;
}

VarietyProfile make_abelian_variety(const std::string& id, int q, int lambda1,
                                    const std::string& prov) {
    if (q < 0 || lambda1 < 0 || lambda1 > q)
        throw DomainError(id + ": need 0 <= lambda1 <= q");
    VarietyProfile p;
    p.id = id;
    p.dim = q;
    const Poly one_t = Poly(Int(1)) + Poly::term(1, 1);
    p.complex_betti = GradedDims(one_t.pow(2 * q));
    // real locus (R/Z)^q x (Z/2)^{q - lambda1}
    p.real_betti = GradedDims(one_t.pow(q) * Poly(pow2(q - lambda1)));
    p.real_total = pow2(2 * q - lambda1);
    p.real_components = pow2(q - lambda1);
    p = assert_fact(std::move(p), Fact::RealNonempty, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::Maximal, lambda1 == 0 ? Tri::Yes : Tri::No, prov);
    p = assert_fact(std::move(p), Fact::H1TorsionFree, Tri::Yes, "catalog: abelian variety");
    p = assert_fact(std::move(p), Fact::H2TorsionFree, Tri::Yes, "catalog: abelian variety");
    p = assert_fact(std::move(p), Fact::B1Zero, q == 0 ? Tri::Yes : Tri::No,
                    "catalog: abelian variety");
    finish(p);
    return p;
}

namespace {

VarietyProfile quadric_like_surface(const std::string& id, const std::string& prov) {
    // complex (1,0,2,0,1), real locus a torus or Klein bottle: (1,2,1)
    VarietyProfile p;
    p.id = id;
    p.dim = 2;
    p.complex_betti = GradedDims{{0, 1}, {2, 2}, {4, 1}};
    p.real_betti = GradedDims{{0, 1}, {1, 2}, {2, 1}};
    p.real_total = Int(4);
    p.real_components = 1;
    p = assert_fact(std::move(p), Fact::RealNonempty, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::RRational, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::B1Zero, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::H1TorsionFree, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::H2TorsionFree, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::TateMotive, Tri::Yes, prov);
    finish(p);
    return p;
}

} // namespace

VarietyProfile make_p2(const std::string& id) {
    return make_projective_space(id, 2);
}

VarietyProfile make_p1xp1(const std::string& id) {
    return quadric_like_surface(id, "catalog: P1xP1");
}

VarietyProfile make_hirzebruch(const std::string& id, int n) {
    if (n < 0)
        throw DomainError(id + ": Hirzebruch index must be nonnegative");
    return quadric_like_surface(id, "catalog: hirzebruch(" + std::to_string(n) + ")");
}

VarietyProfile make_del_pezzo_b1(const std::string& id) {
    const std::string prov = "§7 Remark (del Pezzo B1)";
    VarietyProfile p;
    p.id = id;
    p.dim = 2;
    p.complex_betti = GradedDims{{0, 1}, {2, 9}, {4, 1}};
    // RP^2 with four 2-spheres: (1,1,1) + 4*(1,0,1)
    p.real_betti = GradedDims{{0, 5}, {1, 1}, {2, 5}};
    p.real_total = Int(11);
    p.real_components = 5;
    p = assert_fact(std::move(p), Fact::RealNonempty, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, prov);
    p = assert_fact(std::move(p), Fact::RRational, Tri::No, prov);
    p = assert_fact(std::move(p), Fact::KMaximal, Tri::No, prov);
    p = assert_fact(std::move(p), Fact::C1Maximal, Tri::No, prov);
    p = assert_fact(std::move(p), Fact::B1Zero, Tri::Yes, "catalog: del Pezzo B1");
    p = assert_fact(std::move(p), Fact::H1TorsionFree, Tri::Yes, "catalog: del Pezzo B1");
    p = assert_fact(std::move(p), Fact::H2TorsionFree, Tri::Yes, "catalog: del Pezzo B1");
    finish(p);
    return p;
}

VarietyProfile make_k3(const std::string& id, const Int& real_total, const Int& components) {
    VarietyProfile p;
    p.id = id;
    p.dim = 2;
    p.complex_betti = GradedDims{{0, 1}, {2, 22}, {4, 1}};
    if (real_total < 0)
        throw DomainError(id + ": negative real total");
    p.real_total = real_total;
    const std::string prov = "catalog: K3 (user real data)";
    if (real_total > 0) {
        if (components <= 0)
            throw DomainError(id + ": K3 with real points needs a positive component count");
        p.real_components = components;
        p = assert_fact(std::move(p), Fact::RealNonempty, Tri::Yes, prov);
    } else {
        p = assert_fact(std::move(p), Fact::RealNonempty, Tri::No, prov);
    }
    p = assert_fact(std::move(p), Fact::Maximal,
                    real_total == Int(24) ? Tri::Yes : Tri::No, prov);
    p = assert_fact(std::move(p), Fact::B1Zero, Tri::Yes, "catalog: K3");
    p = assert_fact(std::move(p), Fact::H1TorsionFree, Tri::Yes, "catalog: K3");
    p = assert_fact(std::move(p), Fact::H2TorsionFree, Tri::Yes, "catalog: K3");
    p = assert_fact(std::move(p), Fact::RRational, Tri::No, "catalog: K3");
    finish(p);
    return p;
}

VarietyProfile blow_up_surface_point(const std::string& id, const VarietyProfile& s,
                                     BlowUpCenter where) {
    if (s.dim != 2)
        throw DimensionMismatch(s.id + ": point blow-up tracking needs a surface");
    if (!s.complex_betti)
        throw DomainError(s.id + ": point blow-up needs known Betti numbers");
    VarietyProfile p = s;
    p.id = id;
    const std::string prov = "§4 Lemma proof (real surface blow-up)";
    if (where == BlowUpCenter::RealPoint) {
        if (s.fact_value(Fact::RealNonempty) != Tri::Yes)
            throw RuleNotApplicable(s.id + ": blow-up at a real point needs real_nonempty=yes");
        p.complex_betti = add(*s.complex_betti, GradedDims{{2, 1}});
        if (p.real_total)
            p.real_total = *p.real_total + 1;
        if (p.real_betti) // connected sum with RP^2 on one component: b1 += 1
            p.real_betti = add(*p.real_betti, GradedDims{{1, 1}});
        // maximality, K/c1-maximality, (*) and the motive class all survive
        // a real-point blow-up; everything is inherited unchanged.
    } else {
        p.complex_betti = add(*s.complex_betti, GradedDims{{2, 2}});
        // real locus untouched, totals now differ by at least 2; K-, c1- and
        // motive flags are not tracked across a conjugate blow-up
        for (Fact f : {Fact::Maximal, Fact::EquivariantlyFormal, Fact::TateMotive,
                       Fact::KMaximal, Fact::C1Maximal}) {
            p.fact(f) = TriState{};
        }
        p = assert_fact(std::move(p), Fact::Maximal, Tri::No, prov);
    }
    p.validate();
    return p;
}

} // namespace maxcalc
