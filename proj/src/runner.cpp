#include "maxcalc/runner.hpp"

#include <iomanip>
#include <sstream>

#include "maxcalc/errors.hpp"

namespace maxcalc {

namespace {

std::string cell(const std::string& s) {
    std::ostringstream os;
    os << std::setw(7) << s;
    return os.str();
}

std::string maximal_line(const VarietyProfile& p) {
    const TriState& t = p.fact(Fact::Maximal);
    std::string s = "  maximal: ";
    s += tri_name(t.value);
    if (!t.provenance.empty())
        s += "  [" + t.provenance + "]";
    return s;
}

std::array<Int, 5> surface_betti_of(const VarietyProfile& p) {
    if (p.dim != 2 || !p.complex_betti)
        throw DomainError(p.id + ": series needs a surface with known Betti numbers");
    return {p.complex_betti->coeff(0), p.complex_betti->coeff(1), p.complex_betti->coeff(2),
            p.complex_betti->coeff(3), p.complex_betti->coeff(4)};
}

std::array<Int, 5> catalog_surface_betti(const std::string& name) {
    if (name == "P2")
        return {1, 0, 1, 0, 1};
    if (name == "P1xP1")
        return {1, 0, 2, 0, 1};
    if (name == "B1")
        return {1, 0, 9, 0, 1};
    if (name == "K3")
        return {1, 0, 22, 0, 1};
    throw DomainError("unknown catalog surface '" + name + "'");
}

} // namespace

std::string betti_report(const VarietyProfile& p) {
    std::ostringstream os;
    os << "betti(" << p.id << "):\n";
    os << "  dim: " << p.dim << "\n";
    os << maximal_line(p) << "\n";
    if (!p.complex_betti) {
        os << "  complex: unknown\n";
        if (p.real_total)
            os << "  real: total " << p.real_total->str() << "\n";
        else
            os << "  real: unknown\n";
        return os.str();
    }
    const int top = std::max({p.complex_betti->degree(),
                              p.real_betti ? p.real_betti->degree() : -1, 0});
    os << "  " << cell("deg") << " | " << cell("complex") << " | " << cell("real") << "\n";
    for (int d = 0; d <= top; ++d) {
        const std::string real_cell =
            p.real_betti ? p.real_betti->coeff(d).str() : std::string("?");
        os << "  " << cell(std::to_string(d)) << " | " << cell(p.complex_betti->coeff(d).str())
           << " | " << cell(real_cell) << "\n";
    }
    os << "  " << cell("total") << " | " << cell(total(*p.complex_betti).str()) << " | "
       << cell(p.real_total ? p.real_total->str() : std::string("?")) << "\n";
    return os.str();
}

std::string series_report(const std::string& label, const std::array<Int, 5>& b, int upto) {
    if (upto < 0)
        throw DomainError("series: negative expansion order");
    BigradedSeries s = goettsche_series(b, upto);
    std::ostringstream os;
    os << "series(" << label << ", upto=" << upto << "):\n";
    for (int n = 0; n <= upto; ++n) {
        const GradedDims& g = s.coeff(n);
        os << "  q^" << n << ": " << g.str() << "  (total " << total(g).str() << ")\n";
    }
    return os.str();
}

std::string catalog_report() {
    std::ostringstream os;
    os << "catalog:\n"
       << "  curve(genus=g, circles=s)            totals 2g+2 / 2s; 0 <= s <= g+1;"
          " maximal iff s = g+1\n"
       << "  projective_space(dim=r)              totals r+1 / r+1; maximal\n"
       << "  abelian_variety(dim=q, lambda1=l)    totals 2^2q / 2^(2q-l); 0 <= l <= q;"
          " maximal iff l = 0\n"
       << "  surface(name=P2)                     totals 3 / 3, components 1; maximal,"
          " R-rational\n"
       << "  surface(name=P1xP1)                  totals 4 / 4, components 1; maximal,"
          " R-rational\n"
       << "  surface(name=hirzebruch, n=k)        totals 4 / 4, components 1; maximal,"
          " R-rational\n"
       << "  surface(name=B1)                     totals 11 / 11, components 5; maximal,"
          " not K-maximal\n"
       << "  surface(name=K3, real_total=r, components=c)  complex total 24; real data is"
          " user input\n"
       << "  custom(dim=..., complex=[b0,b1,...], real=[...], real_total=..., components=...,"
          " <fact>=yes|no)\n"
       << "  blow_up_point(S, where=real_point|conjugate_pair)\n";
    return os.str();
}

namespace {

struct Execution {
    Session session;
    int exit_code = 0;
    std::string report;
};

Execution execute(const Script& script, const RunOptions& opts) {
    Execution ex;
    ex.session = Session(Session::Options{opts.strict, opts.trunc_guard});
    std::ostringstream out;
    bool assertion_failed = false;

    for (const auto& st : script.statements) {
        try {
            switch (st.kind) {
            case Statement::Kind::Variety:
                ex.session.define(st.target, st.rule, st.inputs, st.params);
                break;
            case Statement::Kind::Cert: {
                ex.session.add_certificate(st.cert_subject, st.cert_expr, st.cert_citation);
                for (const auto& note : ex.session.propagate_formality())
                    out << note << "\n";
                break;
            }
            case Statement::Kind::AssertMaximal: {
                for (const auto& note : ex.session.propagate_formality())
                    out << note << "\n";
                const Tri recorded = ex.session.get(st.target).fact_value(Fact::Maximal);
                out << "assert maximal(" << st.target << ") = " << tri_name(st.assert_value)
                    << ": ";
                if (recorded == st.assert_value) {
                    out << "PASS\n";
                } else {
                    out << "FAIL (recorded: " << tri_name(recorded) << ")\n";
                    assertion_failed = true;
                }
                break;
            }
            case Statement::Kind::PrintBetti: {
                for (const auto& note : ex.session.propagate_formality())
                    out << note << "\n";
                out << betti_report(ex.session.get(st.target));
                break;
            }
            case Statement::Kind::PrintTrace: {
                out << "trace(" << st.target << "):\n";
                for (const RuleApplication* a : ex.session.trace_for(st.target))
                    out << "  " << trace_line(*a) << "\n";
                break;
            }
            case Statement::Kind::PrintSeries: {
                if (st.series_upto > opts.trunc_guard)
                    throw DomainError("series: expansion order " +
                                      std::to_string(st.series_upto) +
                                      " exceeds the truncation guard " +
                                      std::to_string(opts.trunc_guard) +
                                      " (raise it with --trunc)");
                std::array<Int, 5> b{};
                std::string label;
                if (st.series_by_name) {
                    label = st.series_surface;
                    if (ex.session.has(st.series_surface))
                        b = surface_betti_of(ex.session.get(st.series_surface));
                    else
                        b = catalog_surface_betti(st.series_surface);
                } else {
                    std::ostringstream lb;
                    lb << "[";
                    for (size_t i = 0; i < st.series_betti.size(); ++i) {
                        if (st.series_betti[i] < 0)
                            throw DomainError("series: negative Betti number");
                        b[i] = st.series_betti[i];
                        lb << (i ? "," : "") << st.series_betti[i];
                    }
                    lb << "]";
                    label = lb.str();
                }
                out << series_report(label, b, st.series_upto);
                break;
            }
            }
        } catch (const EngineError& e) {
            out << "error (line " << st.line << "): " << e.what() << "\n";
            ex.exit_code = 2;
            ex.report = out.str();
            return ex;
        }
    }
    ex.exit_code = assertion_failed ? 1 : 0;
    ex.report = out.str();
    return ex;
}

} // namespace

RunResult run_script(const Script& script, const RunOptions& opts) {
    Execution ex = execute(script, opts);
    return RunResult{ex.exit_code, std::move(ex.report)};
}

RunResult run_script(const std::string& text, const RunOptions& opts) {
    Script script;
    try {
        script = parse_script(text);
    } catch (const ParseError& e) {
        return RunResult{2, std::string("error: ") + e.what() + "\n"};
    }
    return run_script(script, opts);
}

std::string trace_of(const std::string& text, const std::string& id, const RunOptions& opts) {
    Script script = parse_script(text); // ParseError propagates
    Execution ex = execute(script, opts);
    if (ex.exit_code == 2)
        throw EngineError("script failed: " + ex.report);
    std::ostringstream os;
    os << "trace(" << id << "):\n";
    for (const RuleApplication* a : ex.session.trace_for(id))
        os << "  " << trace_line(*a) << "\n";
    return os.str();
}

} // namespace maxcalc
