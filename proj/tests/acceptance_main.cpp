// Acceptance suite: one pass/fail line per criterion.
// Usage: acceptance <path-to-maxcalc-binary> <scripts-dir>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "maxcalc/errors.hpp"
#include "maxcalc/generators.hpp"
#include "maxcalc/motive.hpp"
#include "maxcalc/runner.hpp"
#include "maxcalc/rules.hpp"
#include "maxcalc/session.hpp"
#include "oracles.hpp"

using namespace maxcalc;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

#define REQUIRE_ACC(cond)                                                                  \
    do {                                                                                   \
        if (!(cond)) {                                                                     \
            g_detail << "    check failed: " << #cond << " (" << __FILE__ << ":"           \
                     << __LINE__ << ")\n";                                                 \
            return false;                                                                  \
        }                                                                                  \
    } while (0)

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GradedDims from_dense(const oracles::Dense& d) {
    Poly p;
    for (size_t i = 0; i < d.size(); ++i)
        p.set(static_cast<int>(i), Int(d[i].str()));
    return GradedDims(p);
}

// --- criterion 1: Smith-Thom soundness fuzz -------------------------------

VarietyProfile random_generator(std::mt19937& rng, int serial) {
    const std::string id = "g" + std::to_string(serial);
    std::uniform_int_distribution<int> pick(0, 7);
    switch (pick(rng)) {
    case 0: {
        std::uniform_int_distribution<int> gd(0, 5);
        const int g = gd(rng);
        std::uniform_int_distribution<int> sd(0, g + 1);
        return make_curve(id, g, sd(rng));
    }
    case 1: {
        std::uniform_int_distribution<int> rd(0, 4);
        return make_projective_space(id, rd(rng));
    }
    case 2: {
        std::uniform_int_distribution<int> qd(0, 3);
        const int q = qd(rng);
        std::uniform_int_distribution<int> ld(0, q);
        return make_abelian_variety(id, q, ld(rng));
    }
    case 3:
        return make_p1xp1(id);
    case 4: {
        std::uniform_int_distribution<int> nd(0, 3);
        return make_hirzebruch(id, nd(rng));
    }
    case 5:
        return make_del_pezzo_b1(id);
    case 6: {
        const std::array<int, 4> totals{0, 2, 8, 24};
        std::uniform_int_distribution<int> td(0, 3);
        const int rt = totals[static_cast<size_t>(td(rng))];
        std::uniform_int_distribution<int> cd(1, 5);
        return make_k3(id, Int(rt), Int(rt == 0 ? 0 : cd(rng)));
    }
    default:
        return make_projective_space(id, 0);
    }
}

// One random rule application over the pool; unmet preconditions are skipped.
bool fuzz_step(std::mt19937& rng, std::vector<VarietyProfile>& pool, int serial) {
    static const std::vector<std::string> rules = {
        "product",        "projective_bundle", "flag_bundle",       "blow_up",
        "sym_power",      "gamma_product",     "flip_flop",         "fulton_macpherson",
        "odd_degree_image", "albanese",        "picard",            "jacobian",
        "cubic3_fano",    "cubic3_ij",         "bundle_moduli",     "parabolic_moduli",
        "higgs_moduli",   "hilbert_nested12",  "hilbert_square_criterion",
        "hilbert_scheme", "p2_sheaf_moduli",   "poisson_sheaf_moduli", "blow_up_point",
    };
    std::uniform_int_distribution<size_t> rd(0, rules.size() - 1);
    std::uniform_int_distribution<size_t> pd(0, pool.size() - 1);
    std::uniform_int_distribution<int> small(1, 3);
    const std::string& rule = rules[rd(rng)];
    const std::string id = "v" + std::to_string(serial);

    std::vector<VarietyProfile> inputs{pool[pd(rng)]};
    Params params;
    if (rule == "product") {
        inputs.push_back(pool[pd(rng)]);
    } else if (rule == "projective_bundle") {
        params = {{"rank", static_cast<long long>(small(rng))}};
    } else if (rule == "flag_bundle") {
        params = {{"dims", std::vector<long long>{1}}, {"ambient", 2LL}};
    } else if (rule == "blow_up") {
        const VarietyProfile& y = pool[pd(rng)];
        if (inputs[0].dim - y.dim < 2)
            return false;
        inputs.push_back(y);
        params = {{"codim", static_cast<long long>(inputs[0].dim - y.dim)}};
    } else if (rule == "sym_power" || rule == "fulton_macpherson") {
        params = {{"n", static_cast<long long>(small(rng))}};
    } else if (rule == "gamma_product") {
        params = {{"n", 3LL}, {"group", std::string("alternating")}};
    } else if (rule == "flip_flop") {
        inputs.push_back(pool[pd(rng)]);
    } else if (rule == "odd_degree_image") {
        params = {{"degree", 3LL}};
    } else if (rule == "albanese" || rule == "picard") {
        params = {{"q", static_cast<long long>(small(rng))}};
    } else if (rule == "bundle_moduli" || rule == "higgs_moduli") {
        params = {{"rank", static_cast<long long>(small(rng))},
                  {"degree", static_cast<long long>(small(rng))}};
    } else if (rule == "parabolic_moduli") {
        params = {{"rank", 2LL}, {"degree", 1LL},
                  {"points", static_cast<long long>(small(rng))}};
    } else if (rule == "hilbert_scheme") {
        params = {{"n", static_cast<long long>(small(rng))}};
    } else if (rule == "p2_sheaf_moduli") {
        std::uniform_int_distribution<int> cd(-2, 2);
        params = {{"rank", static_cast<long long>(small(rng))},
                  {"c1", static_cast<long long>(cd(rng))},
                  {"c2", static_cast<long long>(cd(rng))}};
    } else if (rule == "poisson_sheaf_moduli") {
        params = {{"rank", 1LL}, {"dim", static_cast<long long>(2 * small(rng))}};
    } else if (rule == "blow_up_point") {
        params = {{"where", std::string(small(rng) == 1 ? "conjugate_pair" : "real_point")}};
    }

    try {
        Built b = apply_rule(id, rule, inputs, params);
        b.profile = derive_implications(std::move(b.profile));
        b.profile.validate();
        smith_thom_check(b.profile);
        pool.push_back(std::move(b.profile));
        for (auto& sib : b.siblings) {
            sib = derive_implications(std::move(sib));
            sib.validate();
            smith_thom_check(sib);
            pool.push_back(std::move(sib));
        }
    } catch (const SmithThomViolation&) {
        throw; // criterion failure
    } catch (const FactContradiction&) {
        throw; // a sound rule never contradicts valid inputs
    } catch (const EngineError&) {
        return false; // precondition unmet: skip
    }
    return true;
}

bool criterion1() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(20250810);
    int applied = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::vector<VarietyProfile> pool;
        std::uniform_int_distribution<int> ngen(2, 4);
        const int gens = ngen(rng);
        for (int i = 0; i < gens; ++i)
            pool.push_back(random_generator(rng, i));
        for (int depth = 0; depth < 6; ++depth) {
            try {
                if (fuzz_step(rng, pool, depth))
                    ++applied;
            } catch (const EngineError& e) {
                g_detail << "    iteration " << iter << ": " << e.what() << "\n";
                return false;
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    g_detail << "    " << applied << " rule applications, " << secs << " s\n";
    REQUIRE_ACC(secs < 30.0);
    return true;
}

// --- criterion 2: Goettsche cross-check ------------------------------------

bool criterion2() {
    const std::array<Int, 5> p2{1, 0, 1, 0, 1};
    BigradedSeries s = goettsche_series(p2, 6);
    for (int n = 0; n <= 6; ++n) {
        const GradedDims& mine = s.coeff(n);
        const GradedDims oracle = from_dense(oracles::goettsche_bruteforce({1, 0, 1, 0, 1}, n));
        REQUIRE_ACC(mine == oracle);
        REQUIRE_ACC(mine.is_palindromic());
        if (n > 0)
            REQUIRE_ACC(mine.degree() == 4 * n);
    }
    REQUIRE_ACC((s.coeff(2) == GradedDims{{0, 1}, {2, 2}, {4, 3}, {6, 2}, {8, 1}}));
    REQUIRE_ACC(total(s.coeff(2)) == 9);
    REQUIRE_ACC(total(s.coeff(3)) == 22);
    return true;
}

// --- criterion 3: curve-moduli cross-check ---------------------------------

bool criterion3() {
    for (int g = 2; g <= 4; ++g) {
        const GradedDims mine = curve_moduli_poincare_rank2(g);
        const GradedDims oracle = from_dense(oracles::hn_recursion_poincare(2, 1, g));
        REQUIRE_ACC(mine == oracle);
    }
    for (int g = 2; g <= 8; ++g) {
        GradedDims m = curve_moduli_poincare_rank2(g); // throws if division is inexact
        REQUIRE_ACC(m.degree() == 2 * (4 * (g - 1) + 1));
    }
    return true;
}

// --- criterion 4: golden regression scripts --------------------------------

const std::vector<std::string> kGoldenScripts = {
    "a_product_iff", "b_projective_bundle", "c_blow_up",  "d_jacobians",
    "e_bundle_moduli", "f_higgs",           "g_hilbert_square", "h_hilbert_schemes",
    "i_p2_moduli_grid", "j_poisson",        "k_contrapositive",
};

bool criterion4(const std::string& scripts_dir) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& name : kGoldenScripts) {
        const std::string script = read_file(scripts_dir + "/" + name + ".maxc");
        const std::string golden = read_file(scripts_dir + "/" + name + ".golden");
        RunResult r = run_script(script);
        if (r.exit_code != 0 || r.report != golden) {
            g_detail << "    script " << name << ": exit " << r.exit_code << "\n";
            if (r.report != golden)
                g_detail << "    report differs from golden file\n--- got ---\n"
                         << r.report << "--- want ---\n" << golden;
            return false;
        }
    }
    // (i) firing is exactly the gcd condition over the full 5x5x5 grid
    Session s;
    s.define("P2", "surface", {}, {{"name", std::string("P2")}});
    for (long long r = 1; r <= 5; ++r)
        for (long long c1 = 0; c1 <= 4; ++c1)
            for (long long c2 = 0; c2 <= 4; ++c2) {
                const long long disc = c1 * (c1 + 1) / 2 - c2;
                const long long g =
                    std::gcd(r, std::gcd(std::llabs(c1), std::llabs(disc)));
                bool fired = true;
                try {
                    Built b = apply_rule("t", "p2_sheaf_moduli", {s.get("P2")},
                                         {{"rank", r}, {"c1", c1}, {"c2", c2}});
                    REQUIRE_ACC(b.profile.fact_value(Fact::Maximal) == Tri::Yes);
                } catch (const NotCoprime&) {
                    fired = false;
                }
                REQUIRE_ACC(fired == (g == 1));
            }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    g_detail << "    suite time " << secs << " s\n";
    REQUIRE_ACC(secs < 10.0);
    return true;
}

// --- criterion 5: motive-closure synthetic soundness ------------------------

MotivePtr random_expr(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 5 : 1);
    std::uniform_int_distribution<size_t> ad(0, atoms.size() - 1);
    std::uniform_int_distribution<int> tw(-3, 3);
    std::uniform_int_distribution<int> arity(2, 3);
    switch (kind(rng)) {
    case 0:
        return atoms.empty() ? tate(tw(rng)) : variety_motive(atoms[ad(rng)]);
    case 1:
        return tate(tw(rng));
    case 2:
    case 3: {
        std::vector<MotivePtr> parts;
        const int n = arity(rng);
        for (int i = 0; i < n; ++i)
            parts.push_back(random_expr(rng, atoms, depth - 1));
        return kind(rng) % 2 ? msum(std::move(parts)) : mtensor(std::move(parts));
    }
    case 4:
        return mtwist(tw(rng), random_expr(rng, atoms, depth - 1));
    default:
        return msummand(random_expr(rng, atoms, depth - 1));
    }
}

bool criterion5() {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 1000; ++iter) {
        std::uniform_int_distribution<int> nd(3, 10);
        const int n = nd(rng);
        std::vector<std::string> ids;
        for (int i = 0; i < n; ++i)
            ids.push_back("V" + std::to_string(i));

        // plant the ground-truth formal set
        std::uniform_int_distribution<int> coin(0, 3);
        std::vector<bool> planted(static_cast<size_t>(n), false);
        for (int i = 0; i < n; ++i)
            planted[static_cast<size_t>(i)] = coin(rng) == 0;

        Session session;
        for (int i = 0; i < n; ++i) {
            Params params{{"dim", 1LL}};
            if (planted[static_cast<size_t>(i)])
                params.emplace_back("maximal", true);
            session.define(ids[static_cast<size_t>(i)], "custom", {}, params);
        }

        // acyclic random certificates: subject Vi decomposes over higher ids
        struct Cert {
            int subject;
            MotivePtr expr;
        };
        std::vector<Cert> certs;
        std::uniform_int_distribution<int> ncert(1, 8);
        const int m = ncert(rng);
        for (int c = 0; c < m; ++c) {
            std::uniform_int_distribution<int> sd(0, n - 2);
            const int sub = sd(rng);
            std::vector<std::string> higher(ids.begin() + sub + 1, ids.end());
            MotivePtr e = random_expr(rng, higher, 2);
            try {
                session.add_certificate(ids[static_cast<size_t>(sub)], e, "synthetic");
                certs.push_back({sub, e});
            } catch (const CertificateCycle&) {
                return false; // construction guarantees acyclicity
            }
        }

        session.propagate_formality();

        // independent closure: saturate "all atoms formal" over the certs
        std::vector<bool> formal = planted;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& c : certs) {
                if (formal[static_cast<size_t>(c.subject)])
                    continue;
                std::set<std::string> used;
                c.expr->collect_varieties(used);
                bool all = true;
                for (const auto& v : used) {
                    const int idx = std::stoi(v.substr(1));
                    if (!formal[static_cast<size_t>(idx)])
                        all = false;
                }
                if (all) {
                    formal[static_cast<size_t>(c.subject)] = true;
                    changed = true;
                }
            }
        }

        for (int i = 0; i < n; ++i) {
            const Tri got = session.get(ids[static_cast<size_t>(i)]).fact_value(Fact::Maximal);
            const Tri want = formal[static_cast<size_t>(i)] ? Tri::Yes : Tri::Unknown;
            if (got != want) {
                g_detail << "    iteration " << iter << ": " << ids[static_cast<size_t>(i)]
                         << " got " << tri_name(got) << ", want " << tri_name(want) << "\n";
                return false;
            }
        }
    }
    return true;
}

// --- criterion 6: determinism ------------------------------------------------

std::string run_binary(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed: " + cmd);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool criterion6(const std::string& binary, const std::string& scripts_dir) {
    for (const auto& name : kGoldenScripts) {
        const std::string script = read_file(scripts_dir + "/" + name + ".maxc");
        RunResult a = run_script(script);
        RunResult b = run_script(script);
        REQUIRE_ACC(a.report == b.report);
        REQUIRE_ACC(a.exit_code == b.exit_code);
    }
    // through the installed binary as well
    const std::string cmd = binary + " run " + scripts_dir + "/e_bundle_moduli.maxc";
    int code1 = 0, code2 = 0;
    const std::string out1 = run_binary(cmd, code1);
    const std::string out2 = run_binary(cmd, code2);
    REQUIRE_ACC(out1 == out2);
    REQUIRE_ACC(code1 == 0);
    REQUIRE_ACC(code2 == 0);
    REQUIRE_ACC(out1 == read_file(scripts_dir + "/e_bundle_moduli.golden"));
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <maxcalc-binary> <scripts-dir>\n";
        return 2;
    }
    const std::string binary = argv[1];
    const std::string scripts_dir = argv[2];

    struct Criterion {
        std::string name;
        std::function<bool()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"1 Smith-Thom soundness fuzz (10000 DAGs)", criterion1},
        {"2 Goettsche series cross-check", criterion2},
        {"3 curve-moduli recursion cross-check", criterion3},
        {"4 golden regression scripts", [&] { return criterion4(scripts_dir); }},
        {"5 motive-closure synthetic soundness (1000 DAGs)", criterion5},
        {"6 deterministic reports", [&] { return criterion6(binary, scripts_dir); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        g_detail.str("");
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            g_detail << "    exception: " << e.what() << "\n";
        }
        std::cout << "criterion " << c.name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) {
            std::cout << g_detail.str();
            ++failures;
        }
    }
    return failures;
}
