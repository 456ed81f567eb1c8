#include "maxcalc/rules.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "maxcalc/errors.hpp"
#include "maxcalc/generators.hpp"

namespace maxcalc {

std::string param_value_str(const ParamValue& v) {
    std::ostringstream os;
    if (std::holds_alternative<long long>(v)) {
        os << std::get<long long>(v);
    } else if (std::holds_alternative<std::string>(v)) {
        os << std::get<std::string>(v);
    } else if (std::holds_alternative<bool>(v)) {
        os << (std::get<bool>(v) ? "yes" : "no");
    } else {
        os << "[";
        const auto& xs = std::get<std::vector<long long>>(v);
        for (size_t i = 0; i < xs.size(); ++i)
            os << (i ? "," : "") << xs[i];
        os << "]";
    }
    return os.str();
}

std::string trace_line(const RuleApplication& a) {
    std::ostringstream os;
    os << a.rule_id << "(";
    for (size_t i = 0; i < a.inputs.size(); ++i)
        os << (i ? ", " : "") << a.inputs[i];
    if (!a.params.empty()) {
        if (!a.inputs.empty())
            os << "; ";
        os << a.params;
    }
    os << ") -> " << a.output << "  # " << a.citation;
    if (!a.assumptions.empty()) {
        os << " [assumes: ";
        for (size_t i = 0; i < a.assumptions.size(); ++i)
            os << (i ? "; " : "") << a.assumptions[i];
        os << "]";
    }
    return os.str();
}

namespace {

constexpr const char* kCiteProduct = "§3.1 Lemma (products)";
constexpr const char* kCiteGamma = "§3.2 Thm (Gamma-products)";
constexpr const char* kCiteProjBundle = "§3.3 Prop (projective bundles)";
constexpr const char* kCiteFlagBundle = "§3.3 Remark (flag bundles)";
constexpr const char* kCiteBlowUp = "§3.4 Prop (blow-ups)";
constexpr const char* kCiteFlipFlop = "§3.4 Remark (flips/flops)";
constexpr const char* kCiteFultonMacPherson = "§3.4 Prop (configuration spaces)";
constexpr const char* kCiteOddDegree = "§3.5 Prop (odd-degree surjections)";
constexpr const char* kCiteAlbanese = "§3.6 Prop (Albanese/Picard)";
constexpr const char* kCiteJacobian = "§3.6 Cor (Jacobians)";
constexpr const char* kCiteCubic3 = "§3.7 Prop (cubic threefolds)";
constexpr const char* kCiteCubic5 = "§3.7 (cubic fivefolds)";
constexpr const char* kCiteQuartic3 = "§3.7 (quartic threefolds)";
constexpr const char* kCiteGushelMukai = "§3.7 (Gushel-Mukai)";
constexpr const char* kCiteBundleModuli = "§5 Thm (bundle moduli)";
constexpr const char* kCiteParabolic = "§5 Cor (parabolic bundles)";
constexpr const char* kCiteHiggs = "§5 Thm (Higgs bundles)";
constexpr const char* kCiteHilbert12 = "§6 Thm (Hilbert squares/cubes), (i)";
constexpr const char* kCiteHilbertBackward = "§6 Thm (Hilbert squares/cubes), (ii)";
constexpr const char* kCiteHilbertCriterion =
    "§6 Remark (Kharlamov-Rasdeaconu); applied with the maximality hypothesis";
constexpr const char* kCiteHilbertScheme = "§7 Thm (Hilbert schemes)";
constexpr const char* kCiteStar = "§7 Remark (condition star)";
constexpr const char* kCiteP2Moduli = "§8 Thm (sheaves on the plane)";
constexpr const char* kCitePoisson = "§9 Thm (Poisson surfaces)";
constexpr const char* kCitePoissonCor = "§9 Cor (rational Poisson)";
constexpr const char* kCiteTateSurface = "§10 Thm (Tate surfaces)";
constexpr const char* kCiteSmithThom = "Thm 1.1 (Smith-Thom)";

VarietyProfile bare(const std::string& id, int dim) {
    VarietyProfile p;
    p.id = id;
    p.dim = dim;
    return p;
}

// Transfers a fact value (when decided) under a fresh citation.
VarietyProfile copy_fact(VarietyProfile p, const VarietyProfile& src, Fact f,
                         const std::string& prov) {
    if (src.fact_value(f) != Tri::Unknown)
        p = assert_fact(std::move(p), f, src.fact_value(f), prov);
    return p;
}

// Recognizes a curve profile (1, 2g, 1) and returns its genus.
int curve_genus(const VarietyProfile& c) {
    if (c.dim == 1 && c.complex_betti && c.complex_betti->coeff(0) == 1 &&
        c.complex_betti->coeff(2) == 1 && c.complex_betti->degree() <= 2 &&
        c.complex_betti->coeff(1) % 2 == 0)
        return static_cast<int>(c.complex_betti->coeff(1) / 2);
    throw RuleNotApplicable(c.id + ": input is not a curve profile");
}

long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
}

} // namespace

VarietyProfile product(const std::string& id, const std::vector<VarietyProfile>& xs) {
    if (xs.empty())
        throw DomainError("product: empty input list");
    if (xs.size() == 1) {
        VarietyProfile p = xs[0];
        p.id = id;
        return p;
    }
    VarietyProfile p;
    p.id = id;
    bool complex_known = true, real_known = true, components_known = true;
    bool all_yes = true, any_no = false, empty_factor_possible = false;
    bool nonempty_all_yes = true, nonempty_any_no = false;
    GradedDims complex_acc{{0, 1}};
    Int real_acc = 1, comp_acc = 1;
    for (const auto& x : xs) {
        p.dim += x.dim;
        if (x.complex_betti) {
            complex_acc = mul(complex_acc, *x.complex_betti);
            if (total(*x.complex_betti) == 0)
                empty_factor_possible = true;
        } else {
            complex_known = false;
        }
        if (x.real_total)
            real_acc *= *x.real_total;
        else
            real_known = false;
        if (x.real_components)
            comp_acc *= *x.real_components;
        else
            components_known = false;
        const Tri mx = x.fact_value(Fact::Maximal);
        all_yes = all_yes && mx == Tri::Yes;
        any_no = any_no || mx == Tri::No;
        const Tri ne = x.fact_value(Fact::RealNonempty);
        nonempty_all_yes = nonempty_all_yes && ne == Tri::Yes;
        nonempty_any_no = nonempty_any_no || ne == Tri::No;
    }
    if (complex_known)
        p.complex_betti = complex_acc;
    if (real_known)
        p.real_total = real_acc;
    if (components_known)
        p.real_components = comp_acc;
    if (nonempty_all_yes)
        p = assert_fact(std::move(p), Fact::RealNonempty, Tri::Yes, kCiteProduct);
    else if (nonempty_any_no)
        p = assert_fact(std::move(p), Fact::RealNonempty, Tri::No, kCiteProduct);

    if (complex_known && real_known) {
        p = assert_fact(std::move(p), Fact::Maximal,
                        real_acc == total(complex_acc) ? Tri::Yes : Tri::No, kCiteSmithThom);
    } else if (all_yes) {
        p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, kCiteProduct);
    } else if (any_no && !empty_factor_possible) {
        p = assert_fact(std::move(p), Fact::Maximal, Tri::No, kCiteProduct);
    }
    return p;
}

VarietyProfile projective_bundle(const std::string& id, const VarietyProfile& x, int rank) {
    if (rank < 1)
        throw DomainError("projective_bundle: rank must be >= 1");
    const int r = rank - 1;
    VarietyProfile p = bare(id, x.dim + r);
    if (x.complex_betti)
        p.complex_betti = mul(*x.complex_betti, projective_space_poly(r, 2));
    if (x.real_total)
        p.real_total = *x.real_total * (r + 1);
    p = copy_fact(std::move(p), x, Fact::RealNonempty, kCiteProjBundle);
    p = copy_fact(std::move(p), x, Fact::Maximal, kCiteProjBundle); // iff, both directions
    return p;
}

VarietyProfile flag_bundle(const std::string& id, const VarietyProfile& x,
                           const std::vector<int>& dims, int ambient) {
    if (ambient < 1)
        throw DomainError("flag_bundle: ambient rank must be >= 1");
    int prev = 0;
    for (int d : dims)
        if (d <= prev || d > ambient)
            throw DomainError("flag_bundle: flag type must be strictly increasing within the "
                              "ambient rank");
        else
            prev = d;
    // q-multinomial: product of Gaussian binomials, one per flag step
    GradedDims flag{{0, 1}};
    prev = 0;
    int remaining = ambient;
    for (int d : dims) {
        flag = mul(flag, qbinomial(d - prev, remaining, 2));
        remaining -= d - prev;
        prev = d;
    }
    VarietyProfile p = bare(id, x.dim + flag.degree() / 2);
    if (x.complex_betti)
        p.complex_betti = mul(*x.complex_betti, flag);
    if (x.real_total)
        p.real_total = *x.real_total * total(flag); // real flag manifolds carry the same total
    p = copy_fact(std::move(p), x, Fact::RealNonempty, kCiteFlagBundle);
    p = copy_fact(std::move(p), x, Fact::Maximal, kCiteFlagBundle);
    return p;
}

VarietyProfile blow_up(const std::string& id, const VarietyProfile& x, const VarietyProfile& y,
                       int codim) {
    if (codim < 2)
        throw DomainError("blow_up: center must have codimension >= 2");
    if (y.dim + codim != x.dim)
        throw DimensionMismatch("blow_up: dim(" + y.id + ") + " + std::to_string(codim) +
                                " != dim(" + x.id + ")");
    if (y.complex_betti && total(*y.complex_betti) == 0)
        throw DomainError("blow_up: empty center");
    VarietyProfile p = bare(id, x.dim);
    if (x.complex_betti && y.complex_betti) {
        GradedDims acc = *x.complex_betti;
        for (int k = 1; k <= codim - 1; ++k)
            acc = add(acc, shift(*y.complex_betti, 2 * k));
        p.complex_betti = acc;
    }
    if (y.fact_value(Fact::RealNonempty) == Tri::No) {
        // center misses the real locus: X(R) is untouched, the complex side grows
        p.real_total = x.real_total;
        p.real_betti = x.real_betti;
        p.real_components = x.real_components;
        p = copy_fact(std::move(p), x, Fact::RealNonempty, kCiteBlowUp);
        p = assert_fact(std::move(p), Fact::Maximal, Tri::No,
                        std::string(kCiteSmithThom) + "; real locus unchanged");
        return p;
    }
    p = copy_fact(std::move(p), x, Fact::RealNonempty, kCiteBlowUp);
    if (x.fact_value(Fact::Maximal) == Tri::Yes && y.fact_value(Fact::Maximal) == Tri::Yes)
        p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, kCiteBlowUp);
    return p;
}

namespace {

// Bl_Diag(X x X): complex Betti through the product and blow-up formulas.
std::optional<GradedDims> nested12_betti(const VarietyProfile& x) {
    if (!x.complex_betti || x.dim < 1)
        return std::nullopt;
    GradedDims acc = mul(*x.complex_betti, *x.complex_betti);
    for (int k = 1; k <= x.dim - 1; ++k)
        acc = add(acc, shift(*x.complex_betti, 2 * k));
    return acc;
}

std::array<Int, 5> surface_betti(const VarietyProfile& s) {
    return {s.complex_betti->coeff(0), s.complex_betti->coeff(1), s.complex_betti->coeff(2),
            s.complex_betti->coeff(3), s.complex_betti->coeff(4)};
}

bool star_condition(const VarietyProfile& s) {
    return (s.fact_value(Fact::B1Zero) == Tri::Yes &&
            s.fact_value(Fact::H2TorsionFree) == Tri::Yes) ||
           s.fact_value(Fact::TateMotive) == Tri::Yes;
}

} // namespace

VarietyProfile hilbert_nested12(const std::string& id, const VarietyProfile& x) {
    if (x.dim < 1)
        throw DimensionMismatch("hilbert_nested12: needs positive dimension");
    if (x.fact_value(Fact::Maximal) != Tri::Yes)
        throw RuleNotApplicable("hilbert_nested12: requires maximal=yes on " + x.id);
    VarietyProfile p = bare(id, 2 * x.dim);
    p.complex_betti = nested12_betti(x);
    p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, kCiteHilbert12);
    return p;
}

VarietyProfile hilbert_square_criterion(const std::string& id, const VarietyProfile& s) {
    if (s.dim != 2)
        throw RuleNotApplicable("hilbert_square_criterion: " + s.id + " is not a surface");
    if (s.fact_value(Fact::B1Zero) != Tri::Yes)
        throw RuleNotApplicable("hilbert_square_criterion: requires b1_zero=yes on " + s.id);
    if (s.fact_value(Fact::Maximal) != Tri::Yes)
        throw RuleNotApplicable("hilbert_square_criterion: requires maximal=yes on " + s.id);
    if (!s.real_components)
        throw RuleNotApplicable("hilbert_square_criterion: requires a real component count on " +
                                s.id);
    VarietyProfile p = bare(id, 4);
    if (star_condition(s) && s.complex_betti)
        p.complex_betti = goettsche_coefficient(surface_betti(s), 2);
    p = assert_fact(std::move(p), Fact::Maximal,
                    *s.real_components == 1 ? Tri::Yes : Tri::No, kCiteHilbertCriterion);
    return p;
}

HilbertBackward hilbert_square_backward(const std::string& base_id, const VarietyProfile& square,
                                        const VarietyProfile& base) {
    if (base.dim < 1 || square.dim != 2 * base.dim)
        throw DimensionMismatch("hilbert_square_backward: dim(" + square.id +
                                ") != 2 dim(" + base.id + ")");
    if (square.fact_value(Fact::Maximal) != Tri::Yes)
        throw RuleNotApplicable("hilbert_square_backward: requires maximal=yes on " + square.id);
    if (base.fact_value(Fact::RealNonempty) != Tri::Yes)
        throw RuleNotApplicable("hilbert_square_backward: requires real_nonempty=yes on " +
                                base.id);
    HilbertBackward out;
    out.base = assert_fact(base, Fact::Maximal, Tri::Yes, kCiteHilbertBackward);
    out.base.id = base_id;

    out.nested12 = hilbert_nested12(base_id + "_12", out.base);

    out.nested23 = bare(base_id + "_23", 3 * base.dim);
    if (base.complex_betti && square.complex_betti) {
        // Bl_{X^{[1,2]}}(X x X^[2]), center of codimension dim(X)
        GradedDims acc = mul(*base.complex_betti, *square.complex_betti);
        const auto n12 = nested12_betti(out.base);
        for (int k = 1; k <= base.dim - 1; ++k)
            acc = add(acc, shift(*n12, 2 * k));
        out.nested23.complex_betti = acc;
    }
    out.nested23 = assert_fact(std::move(out.nested23), Fact::Maximal, Tri::Yes,
                               kCiteHilbertBackward);

    out.cube = bare(base_id + "_3", 3 * base.dim);
    out.cube = assert_fact(std::move(out.cube), Fact::Maximal, Tri::Yes, kCiteHilbertBackward);
    return out;
}

VarietyProfile hilbert_scheme_surface(const std::string& id, const VarietyProfile& s, int n) {
    if (s.dim != 2)
        throw RuleNotApplicable("hilbert_scheme: " + s.id + " is not a surface");
    if (n < 1)
        throw DomainError("hilbert_scheme: need n >= 1");
    const bool star = star_condition(s);
    VarietyProfile p = bare(id, 2 * n);
    if (star && s.complex_betti)
        p.complex_betti = goettsche_coefficient(surface_betti(s), n);
    if (star) {
        // condition (**): odd Betti numbers of S^[n] vanish, no 2-torsion
        p = assert_fact(std::move(p), Fact::B1Zero, Tri::Yes, kCiteStar);
        p = assert_fact(std::move(p), Fact::H2TorsionFree, Tri::Yes, kCiteStar);
    }
    if (s.fact_value(Fact::TateMotive) == Tri::Yes)
        p = assert_fact(std::move(p), Fact::TateMotive, Tri::Yes, kCiteTateSurface);
    if (star && s.fact_value(Fact::C1Maximal) == Tri::Yes)
        p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, kCiteHilbertScheme);
    else if (s.fact_value(Fact::TateMotive) == Tri::Yes)
        p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, kCiteTateSurface);
    return p;
}

VarietyProfile bundle_moduli(const std::string& id, const VarietyProfile& c, int rank,
                             int degree) {
    const int g = curve_genus(c);
    if (rank < 1)
        throw DomainError("bundle_moduli: rank must be positive");
    if (g < 2)
        throw DomainError("bundle_moduli: needs genus >= 2");
    if (std::gcd(rank, std::abs(degree)) != 1)
        throw NotCoprime("bundle_moduli: gcd(" + std::to_string(rank) + ", " +
                         std::to_string(degree) + ") != 1");
    VarietyProfile p = bare(id, rank * rank * (g - 1) + 1);
    if (rank == 2)
        p.complex_betti = curve_moduli_poincare_rank2(g);
    if (c.fact_value(Fact::Maximal) == Tri::Yes)
        p = assert_fact(std::move(p), Fact::Maximal, Tri::Yes, kCiteBundleModuli);
    else if (c.fact_value(Fact::Maximal) == Tri::No &&
             c.fact_value(Fact::RealNonempty) == Tri::Yes)
        p = assert_fact(std::move(p), Fact::Maximal, Tri::No,
                        std::string(kCiteBundleModuli) + ", converse");
    return p;
}

// --- dispatch -------------------------------------------------------------

namespace {

// Validates parameter access: consumed names and values are remembered in
// consumption order, which doubles as the canonical trace rendering.
class ParamReader {
public:
    explicit ParamReader(const Params& params, std::string rule)
        : params_(params), rule_(std::move(rule)) {}

    std::optional<long long> opt_int(const std::string& name) {
        const ParamValue* v = take(name);
        if (!v)
            return std::nullopt;
        if (!std::holds_alternative<long long>(*v))
            throw DomainError(rule_ + ": parameter '" + name + "' must be an integer");
        return std::get<long long>(*v);
    }

    long long need_int(const std::string& name) {
        auto v = opt_int(name);
        if (!v)
            throw DomainError(rule_ + ": missing parameter '" + name + "'");
        return *v;
    }

    std::optional<std::string> opt_ident(const std::string& name) {
        const ParamValue* v = take(name);
        if (!v)
            return std::nullopt;
        if (!std::holds_alternative<std::string>(*v))
            throw DomainError(rule_ + ": parameter '" + name + "' must be a name");
        return std::get<std::string>(*v);
    }

    std::string need_ident(const std::string& name) {
        auto v = opt_ident(name);
        if (!v)
            throw DomainError(rule_ + ": missing parameter '" + name + "'");
        return *v;
    }

    std::optional<bool> opt_flag(const std::string& name) {
        const ParamValue* v = take(name);
        if (!v)
            return std::nullopt;
        if (!std::holds_alternative<bool>(*v))
            throw DomainError(rule_ + ": parameter '" + name + "' must be yes or no");
        return std::get<bool>(*v);
    }

    std::optional<std::vector<long long>> opt_list(const std::string& name) {
        const ParamValue* v = take(name);
        if (!v)
            return std::nullopt;
        if (!std::holds_alternative<std::vector<long long>>(*v))
            throw DomainError(rule_ + ": parameter '" + name + "' must be a list [..]");
        return std::get<std::vector<long long>>(*v);
    }

    // Rejects anything not consumed; returns the canonical rendering.
    std::string finish() {
        for (const auto& [name, value] : params_)
            if (!consumed_.count(name))
                throw DomainError(rule_ + ": unknown parameter '" + name + "'");
        std::ostringstream os;
        for (size_t i = 0; i < rendered_.size(); ++i)
            os << (i ? ", " : "") << rendered_[i];
        return os.str();
    }

private:
    const ParamValue* take(const std::string& name) {
        if (consumed_.count(name))
            throw DomainError(rule_ + ": parameter '" + name + "' read twice");
        for (const auto& [n, v] : params_) {
            if (n == name) {
                consumed_.insert(name);
                rendered_.push_back(name + "=" + param_value_str(v));
                return &v;
            }
        }
        return nullptr;
    }

    const Params& params_;
    std::string rule_;
    std::set<std::string> consumed_;
    std::vector<std::string> rendered_;
};

void need_inputs(const std::string& rule, const std::vector<VarietyProfile>& inputs, size_t n) {
    if (inputs.size() != n)
        throw DomainError(rule + ": expected " + std::to_string(n) + " input profile(s), got " +
                          std::to_string(inputs.size()));
}

int as_int(const std::string& rule, const std::string& name, long long v) {
    if (v < -1000000000LL || v > 1000000000LL)
        throw DomainError(rule + ": parameter '" + name + "' out of range");
    return static_cast<int>(v);
}

VarietyProfile build_custom(const std::string& id, ParamReader& pr) {
    VarietyProfile p;
    p.id = id;
    p.dim = as_int("custom", "dim", pr.need_int("dim"));
    if (auto cx = pr.opt_list("complex")) {
        Poly poly;
        for (size_t i = 0; i < cx->size(); ++i)
            poly.set(static_cast<int>(i), (*cx)[i]);
        p.complex_betti = GradedDims(poly);
    }
    if (auto re = pr.opt_list("real")) {
        Poly poly;
        for (size_t i = 0; i < re->size(); ++i)
            poly.set(static_cast<int>(i), (*re)[i]);
        p.real_betti = GradedDims(poly);
        p.real_total = total(*p.real_betti);
    }
    if (auto rt = pr.opt_int("real_total")) {
        if (p.real_total && *p.real_total != Int(*rt))
            throw DomainError("custom: real_total conflicts with the graded real data");
        p.real_total = Int(*rt);
    }
    if (auto comp = pr.opt_int("components"))
        p.real_components = Int(*comp);
    if (p.real_total) {
        p = assert_fact(std::move(p), Fact::RealNonempty,
                        *p.real_total > 0 ? Tri::Yes : Tri::No, "user assertion");
    }
    for (Fact f : {Fact::RealNonempty, Fact::B1Zero, Fact::H2TorsionFree, Fact::H1TorsionFree,
                   Fact::C1Maximal, Fact::KMaximal, Fact::RRational, Fact::TateMotive,
                   Fact::Maximal}) {
        if (auto v = pr.opt_flag(fact_name(f)))
            p = assert_fact(std::move(p), f, *v ? Tri::Yes : Tri::No, "user assertion");
    }
    return p;
}

} // namespace

Built apply_rule(const std::string& id, const std::string& rule,
                 const std::vector<VarietyProfile>& inputs, const Params& params) {
    Built out;
    ParamReader pr(params, rule);

    auto abelian_like = [&](int q, int lambda1, const std::string& prov) {
        return make_abelian_variety(id, q, lambda1, prov);
    };

    if (rule == "curve") {
        need_inputs(rule, inputs, 0);
        const int g = as_int(rule, "genus", pr.need_int("genus"));
        const int s = as_int(rule, "circles", pr.need_int("circles"));
        out.profile = make_curve(id, g, s);
        out.citation = "§1 (Klein)";
    } else if (rule == "projective_space") {
        need_inputs(rule, inputs, 0);
        out.profile = make_projective_space(id, as_int(rule, "dim", pr.need_int("dim")));
        out.citation = "§8 (projective space)";
    } else if (rule == "abelian_variety") {
        need_inputs(rule, inputs, 0);
        const int q = as_int(rule, "dim", pr.need_int("dim"));
        const int l = as_int(rule, "lambda1", pr.need_int("lambda1"));
        out.profile = make_abelian_variety(id, q, l);
        out.citation = "§3.6 Prop (real tori)";
    } else if (rule == "surface") {
        need_inputs(rule, inputs, 0);
        const std::string name = pr.need_ident("name");
        if (name == "P2") {
            out.profile = make_p2(id);
            out.citation = "§8 (projective space)";
        } else if (name == "P1xP1") {
            out.profile = make_p1xp1(id);
            out.citation = "§4 Lemma (rational surfaces)";
        } else if (name == "hirzebruch") {
            out.profile = make_hirzebruch(id, as_int(rule, "n", pr.need_int("n")));
            out.citation = "§4 Lemma (rational surfaces)";
        } else if (name == "B1") {
            out.profile = make_del_pezzo_b1(id);
            out.citation = "§7 Remark (del Pezzo B1)";
        } else if (name == "K3") {
            const long long rt = pr.need_int("real_total");
            const long long comp = pr.need_int("components");
            out.profile = make_k3(id, Int(rt), Int(comp));
            out.citation = "catalog: K3 (user real data)";
        } else {
            throw DomainError("surface: unknown catalog name '" + name + "'");
        }
    } else if (rule == "custom") {
        need_inputs(rule, inputs, 0);
        out.profile = build_custom(id, pr);
        out.citation = "user-supplied profile";
    } else if (rule == "blow_up_point") {
        need_inputs(rule, inputs, 1);
        const std::string where = pr.need_ident("where");
        BlowUpCenter c;
        if (where == "real_point")
            c = BlowUpCenter::RealPoint;
        else if (where == "conjugate_pair")
            c = BlowUpCenter::ConjugatePair;
        else
            throw DomainError("blow_up_point: where must be real_point or conjugate_pair");
        out.profile = blow_up_surface_point(id, inputs[0], c);
        out.citation = "§4 Lemma proof (real surface blow-up)";
    } else if (rule == "product") {
        if (inputs.empty())
            throw DomainError("product: empty input list");
        out.profile = product(id, inputs);
        out.citation = kCiteProduct;
    } else if (rule == "projective_bundle") {
        need_inputs(rule, inputs, 1);
        const int rank = as_int(rule, "rank", pr.need_int("rank"));
        out.profile = projective_bundle(id, inputs[0], rank);
        out.citation = kCiteProjBundle;
        out.assumptions.push_back("a holomorphic real vector bundle of rank " +
                                  std::to_string(rank) + " exists on " + inputs[0].id);
    } else if (rule == "flag_bundle") {
        need_inputs(rule, inputs, 1);
        const auto dims_ll = pr.opt_list("dims").value_or(std::vector<long long>{});
        const int ambient = as_int(rule, "ambient", pr.need_int("ambient"));
        std::vector<int> dims;
        for (long long d : dims_ll)
            dims.push_back(as_int(rule, "dims", d));
        out.profile = flag_bundle(id, inputs[0], dims, ambient);
        out.citation = kCiteFlagBundle;
        out.assumptions.push_back("a holomorphic real vector bundle of rank " +
                                  std::to_string(ambient) + " exists on " + inputs[0].id);
    } else if (rule == "blow_up") {
        need_inputs(rule, inputs, 2);
        const int codim = as_int(rule, "codim", pr.need_int("codim"));
        out.profile = blow_up(id, inputs[0], inputs[1], codim);
        out.citation = kCiteBlowUp;
        out.assumptions.push_back(inputs[1].id + " is a smooth real subvariety of " +
                                  inputs[0].id + " of codimension " + std::to_string(codim));
    } else if (rule == "sym_power" || rule == "gamma_product") {
        need_inputs(rule, inputs, 1);
        const int n = as_int(rule, "n", pr.need_int("n"));
        if (n < 1)
            throw DomainError(rule + ": need n >= 1");
        std::string group;
        if (rule == "gamma_product") {
            group = pr.need_ident("group");
            out.assumptions.push_back("'" + group + "' names a subgroup of S_" +
                                      std::to_string(n) + " acting by permutations");
        }
        if (inputs[0].fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable(rule + ": requires maximal=yes on " + inputs[0].id);
        out.profile = bare(id, n * inputs[0].dim);
        out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes, kCiteGamma);
        out.citation = kCiteGamma;
    } else if (rule == "flip_flop") {
        need_inputs(rule, inputs, 2);
        if (inputs[0].fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable("flip_flop: requires maximal=yes on " + inputs[0].id);
        if (inputs[1].fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable("flip_flop: requires maximal=yes on the center " +
                                    inputs[1].id);
        out.profile = bare(id, inputs[0].dim);
        out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes, kCiteFlipFlop);
        out.citation = kCiteFlipFlop;
        out.assumptions.push_back("a standard flip/flop of " + inputs[0].id +
                                  " along the real center " + inputs[1].id + " exists");
    } else if (rule == "fulton_macpherson") {
        need_inputs(rule, inputs, 1);
        const int n = as_int(rule, "n", pr.need_int("n"));
        if (n < 1)
            throw DomainError("fulton_macpherson: need n >= 1");
        if (inputs[0].fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable("fulton_macpherson: requires maximal=yes on " + inputs[0].id);
        out.profile = bare(id, n * inputs[0].dim);
        if (n == 1)
            out.profile.complex_betti = inputs[0].complex_betti;
        if (n == 2 && inputs[0].dim >= 1) // X[2] = Bl_Diag(X x X)
            out.profile.complex_betti = nested12_betti(inputs[0]);
        out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes,
                                  kCiteFultonMacPherson);
        out.citation = kCiteFultonMacPherson;
    } else if (rule == "odd_degree_image") {
        need_inputs(rule, inputs, 1);
        const long long degree = pr.need_int("degree");
        const long long dim = pr.opt_int("dim").value_or(inputs[0].dim);
        if (degree < 1 || degree % 2 == 0)
            throw DomainError("odd_degree_image: the multi-section degree must be odd");
        if (dim < 0 || dim > inputs[0].dim)
            throw DomainError("odd_degree_image: target dimension out of range");
        if (inputs[0].fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable("odd_degree_image: requires maximal=yes on " + inputs[0].id);
        out.profile = bare(id, static_cast<int>(dim));
        out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes,
                                  kCiteOddDegree);
        out.citation = kCiteOddDegree;
        out.assumptions.push_back("the surjection from " + inputs[0].id +
                                  " admits a rational multi-section of odd degree " +
                                  std::to_string(degree));
    } else if (rule == "albanese" || rule == "picard") {
        need_inputs(rule, inputs, 1);
        const int q = as_int(rule, "q", pr.need_int("q"));
        if (inputs[0].fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable(rule + ": requires maximal=yes on " + inputs[0].id);
        if (inputs[0].fact_value(Fact::H1TorsionFree) != Tri::Yes)
            throw RuleNotApplicable(rule + ": requires h1_torsion_free=yes on " + inputs[0].id);
        out.profile = abelian_like(q, 0, kCiteAlbanese);
        out.citation = kCiteAlbanese;
        out.assumptions.push_back(std::to_string(q) + " is the irregularity of " + inputs[0].id);
    } else if (rule == "jacobian") {
        need_inputs(rule, inputs, 1);
        const VarietyProfile& c = inputs[0];
        const int g = curve_genus(c);
        if (c.fact_value(Fact::Maximal) == Tri::Yes) {
            out.profile = abelian_like(g, 0, kCiteJacobian);
        } else {
            VarietyProfile p = bare(id, g);
            const Poly one_t = Poly(Int(1)) + Poly::term(1, 1);
            p.complex_betti = GradedDims(one_t.pow(2 * g));
            if (c.fact_value(Fact::Maximal) == Tri::No &&
                c.fact_value(Fact::RealNonempty) == Tri::Yes)
                p = assert_fact(std::move(p), Fact::Maximal, Tri::No,
                                std::string(kCiteJacobian) + ", converse");
            out.profile = std::move(p);
        }
        out.citation = kCiteJacobian;
    } else if (rule == "cubic3_fano" || rule == "cubic3_ij") {
        need_inputs(rule, inputs, 1);
        if (inputs[0].dim != 3)
            throw DimensionMismatch(rule + ": a cubic threefold has dimension 3");
        if (inputs[0].fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable(rule + ": requires maximal=yes on " + inputs[0].id);
        if (rule == "cubic3_fano") {
            out.profile = bare(id, 2);
            out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes,
                                      kCiteCubic3);
        } else {
            out.profile = abelian_like(5, 0, kCiteCubic3);
        }
        out.citation = kCiteCubic3;
        out.assumptions.push_back(inputs[0].id + " is a smooth real cubic threefold");
    } else if (rule == "cubic5" || rule == "quartic3" || rule == "gushel_mukai") {
        need_inputs(rule, inputs, 1);
        const std::string part = pr.need_ident("part");
        const char* cite = rule == "cubic5" ? kCiteCubic5
                           : rule == "quartic3" ? kCiteQuartic3 : kCiteGushelMukai;
        const std::string family = rule == "cubic5" ? "cubic fivefold"
                                   : rule == "quartic3" ? "quartic threefold"
                                                        : "Gushel-Mukai variety";
        if (rule == "cubic5" && inputs[0].dim != 5)
            throw DimensionMismatch("cubic5: a cubic fivefold has dimension 5");
        if (rule == "quartic3" && inputs[0].dim != 3)
            throw DimensionMismatch("quartic3: a quartic threefold has dimension 3");
        if (rule == "gushel_mukai" && inputs[0].dim != 3 && inputs[0].dim != 5)
            throw DimensionMismatch("gushel_mukai: expected dimension 3 or 5");
        if (inputs[0].fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable(rule + ": requires maximal=yes on " + inputs[0].id);
        if (part == "ij") {
            const int q = as_int(rule, "q", pr.need_int("q"));
            out.profile = abelian_like(q, 0, cite);
        } else if (part == "fano") {
            out.profile = bare(id, as_int(rule, "dim", pr.need_int("dim")));
            out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes, cite);
        } else {
            throw DomainError(rule + ": part must be fano or ij");
        }
        out.citation = cite;
        out.assumptions.push_back(inputs[0].id + " is a general real " + family);
    } else if (rule == "bundle_moduli") {
        need_inputs(rule, inputs, 1);
        const int n = as_int(rule, "rank", pr.need_int("rank"));
        const int d = as_int(rule, "degree", pr.need_int("degree"));
        out.profile = bundle_moduli(id, inputs[0], n, d);
        out.citation = kCiteBundleModuli;
    } else if (rule == "parabolic_moduli") {
        need_inputs(rule, inputs, 1);
        const VarietyProfile& c = inputs[0];
        const int n = as_int(rule, "rank", pr.need_int("rank"));
        const int d = as_int(rule, "degree", pr.need_int("degree"));
        const int points = as_int(rule, "points", pr.need_int("points"));
        const int g = curve_genus(c);
        if (n < 1 || points < 0)
            throw DomainError("parabolic_moduli: bad parameters");
        if (g < 2)
            throw DomainError("parabolic_moduli: needs genus >= 2");
        if (std::gcd(n, std::abs(d)) != 1)
            throw NotCoprime("parabolic_moduli: gcd(rank, degree) != 1");
        if (c.fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable("parabolic_moduli: requires maximal=yes on " + c.id);
        if (points > 0 && c.fact_value(Fact::RealNonempty) != Tri::Yes)
            throw RuleNotApplicable("parabolic_moduli: parabolic points need real_nonempty=yes");
        out.profile = bare(id, n * n * (g - 1) + 1 + points * n * (n - 1) / 2);
        out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes,
                                  kCiteParabolic);
        out.citation = kCiteParabolic;
        out.assumptions.push_back("the " + std::to_string(points) +
                                  " parabolic points lie in the real locus of " + c.id);
        out.assumptions.push_back("full flag type and a generic stability weight");
    } else if (rule == "higgs_moduli") {
        need_inputs(rule, inputs, 1);
        const VarietyProfile& c = inputs[0];
        const int n = as_int(rule, "rank", pr.need_int("rank"));
        const int d = as_int(rule, "degree", pr.need_int("degree"));
        const int g = curve_genus(c);
        if (n < 1)
            throw DomainError("higgs_moduli: rank must be positive");
        if (g < 2)
            throw DomainError("higgs_moduli: needs genus >= 2");
        if (std::gcd(n, std::abs(d)) != 1)
            throw NotCoprime("higgs_moduli: gcd(rank, degree) != 1");
        out.profile = bare(id, 2 * n * n * (g - 1) + 2);
        if (c.fact_value(Fact::Maximal) == Tri::Yes)
            out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes,
                                      kCiteHiggs);
        else if (c.fact_value(Fact::Maximal) == Tri::No &&
                 c.fact_value(Fact::RealNonempty) == Tri::Yes)
            out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::No,
                                      std::string(kCiteHiggs) + ", converse");
        out.citation = kCiteHiggs;
    } else if (rule == "hilbert_nested12") {
        need_inputs(rule, inputs, 1);
        out.profile = hilbert_nested12(id, inputs[0]);
        out.citation = kCiteHilbert12;
    } else if (rule == "hilbert_square_criterion") {
        need_inputs(rule, inputs, 1);
        out.profile = hilbert_square_criterion(id, inputs[0]);
        out.citation = kCiteHilbertCriterion;
    } else if (rule == "hilbert_square_backward") {
        need_inputs(rule, inputs, 2);
        HilbertBackward hb = hilbert_square_backward(id, inputs[0], inputs[1]);
        out.profile = std::move(hb.base);
        out.siblings = {std::move(hb.nested12), std::move(hb.nested23), std::move(hb.cube)};
        out.citation = kCiteHilbertBackward;
        out.assumptions.push_back(inputs[0].id + " is the Hilbert square of " + inputs[1].id);
    } else if (rule == "hilbert_scheme") {
        need_inputs(rule, inputs, 1);
        const int n = as_int(rule, "n", pr.need_int("n"));
        out.profile = hilbert_scheme_surface(id, inputs[0], n);
        out.citation = out.profile.fact_value(Fact::Maximal) == Tri::Yes
                           ? out.profile.fact(Fact::Maximal).provenance
                           : kCiteHilbertScheme;
    } else if (rule == "p2_sheaf_moduli") {
        need_inputs(rule, inputs, 1);
        const VarietyProfile& s = inputs[0];
        const long long r = pr.need_int("rank");
        const long long c1 = pr.need_int("c1");
        const long long c2 = pr.need_int("c2");
        const GradedDims p2_poly{{0, 1}, {2, 1}, {4, 1}};
        if (s.dim != 2 || !s.complex_betti || *s.complex_betti != p2_poly ||
            s.fact_value(Fact::Maximal) != Tri::Yes)
            throw RuleNotApplicable("p2_sheaf_moduli: input must be the maximal real projective "
                                    "plane");
        if (r < 1)
            throw DomainError("p2_sheaf_moduli: rank must be positive");
        const long long disc = c1 * (c1 + 1) / 2 - c2;
        if (gcd3(r, c1, disc) != 1)
            throw NotCoprime("p2_sheaf_moduli: gcd(r, c1, c1(c1+1)/2 - c2) = " +
                             std::to_string(gcd3(r, c1, disc)));
        const long long expdim = 2 * r * c2 - (r - 1) * c1 * c1 - r * r + 1;
        if (expdim >= 0) {
            out.profile = bare(id, static_cast<int>(expdim));
        } else {
            // numerically empty moduli space: record the empty profile
            out.profile = bare(id, 0);
            out.profile.complex_betti = GradedDims();
            out.profile.real_total = Int(0);
            out.profile = assert_fact(std::move(out.profile), Fact::RealNonempty, Tri::No,
                                      kCiteP2Moduli);
        }
        out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes, kCiteP2Moduli);
        out.citation = kCiteP2Moduli;
    } else if (rule == "poisson_sheaf_moduli") {
        need_inputs(rule, inputs, 1);
        const VarietyProfile& s = inputs[0];
        const long long rank = pr.need_int("rank");
        const int dim = as_int(rule, "dim", pr.need_int("dim"));
        if (s.dim != 2)
            throw RuleNotApplicable("poisson_sheaf_moduli: " + s.id + " is not a surface");
        if (rank < 1)
            throw DomainError("poisson_sheaf_moduli: rk(v) must be positive");
        if (dim < 0)
            throw DomainError("poisson_sheaf_moduli: negative moduli dimension");
        const char* cite;
        if (s.fact_value(Fact::Maximal) == Tri::Yes &&
            s.fact_value(Fact::RRational) == Tri::Yes)
            cite = kCitePoissonCor;
        else if (s.fact_value(Fact::KMaximal) == Tri::Yes)
            cite = kCitePoisson;
        else
            throw RuleNotApplicable("poisson_sheaf_moduli: requires k_maximal=yes (or "
                                    "maximal=yes with r_rational=yes) on " + s.id);
        out.profile = bare(id, dim);
        out.profile = assert_fact(std::move(out.profile), Fact::Maximal, Tri::Yes, cite);
        out.citation = cite;
        out.assumptions.push_back(s.id + " is a Poisson surface");
        out.assumptions.push_back("v is primitive with rk(v) = " + std::to_string(rank) +
                                  " > 0 and sigma^*(c1(v)) = -c1(v)");
        out.assumptions.push_back("the polarization is real, ample and v-generic");
    } else {
        throw DomainError("unknown rule '" + rule + "'");
    }

    out.profile.id = id;
    out.params = pr.finish();
    return out;
}

namespace {

const std::vector<std::string> kKnownRules = {
    "curve", "projective_space", "abelian_variety", "surface", "custom", "blow_up_point",
    "product", "projective_bundle", "flag_bundle", "blow_up", "sym_power", "gamma_product",
    "flip_flop", "fulton_macpherson", "odd_degree_image", "albanese", "picard", "jacobian",
    "cubic3_fano", "cubic3_ij", "cubic5", "quartic3", "gushel_mukai", "bundle_moduli",
    "parabolic_moduli", "higgs_moduli", "hilbert_nested12", "hilbert_square_criterion",
    "hilbert_square_backward", "hilbert_scheme", "p2_sheaf_moduli", "poisson_sheaf_moduli",
};

} // namespace

bool is_known_rule(const std::string& rule) {
    return std::find(kKnownRules.begin(), kKnownRules.end(), rule) != kKnownRules.end();
}

const std::vector<std::string>& known_rules() {
    return kKnownRules;
}

} // namespace maxcalc
