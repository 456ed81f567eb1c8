#include "maxcalc/poincare.hpp"

#include "maxcalc/errors.hpp"

namespace maxcalc {

GradedDims::GradedDims(const Poly& p) : p_(p) {
    for (const auto& [d, v] : p_.coeffs()) {
        if (d < 0)
            throw DomainError("GradedDims: negative degree " + std::to_string(d));
        if (v < 0)
            throw DomainError("GradedDims: negative count at degree " + std::to_string(d));
    }
}

GradedDims::GradedDims(std::initializer_list<std::pair<int, Int>> terms) {
    Poly p;
    for (const auto& [d, v] : terms) {
        Int nv = p.coeff(d) + v;
        p.set(d, nv);
    }
    *this = GradedDims(p);
}

GradedDims add(const GradedDims& a, const GradedDims& b) {
    return GradedDims(a.poly() + b.poly());
}

GradedDims mul(const GradedDims& a, const GradedDims& b) {
    return GradedDims(a.poly() * b.poly());
}

GradedDims shift(const GradedDims& a, int k) {
    if (k < 0)
        throw DomainError("shift: negative offset");
    return GradedDims(a.poly().shifted(k));
}

Int total(const GradedDims& a) {
    return a.poly().sum_of_coeffs();
}

Int binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

GradedDims qbinomial(int k, int n, int step) {
    if (k < 0 || k > n)
        throw DomainError("qbinomial: need 0 <= k <= n, got k=" + std::to_string(k) +
                          ", n=" + std::to_string(n));
    if (step != 1 && step != 2)
        throw DomainError("qbinomial: step must be 1 or 2");
    // Pascal recursion G(n,k) = G(n-1,k-1) + q^k G(n-1,k) in q = t^step.
    std::vector<Poly> row(static_cast<size_t>(k) + 1);
    row[0] = Poly(Int(1));
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            Poly upper = (j <= m - 1) ? row[j] : Poly();
            row[j] = row[j - 1] + upper.shifted(j * step);
        }
    }
    return GradedDims(row[k]);
}

GradedDims projective_space_poly(int r, int step) {
    if (r < 0)
        throw DomainError("projective_space_poly: negative dimension");
    Poly p;
    for (int i = 0; i <= r; ++i)
        p.set(i * step, 1);
    return GradedDims(p);
}

BigradedSeries::BigradedSeries(int q_trunc) : q_trunc_(q_trunc) {
    if (q_trunc < 0)
        throw DomainError("BigradedSeries: negative truncation");
    coeffs_.resize(static_cast<size_t>(q_trunc) + 1);
}

BigradedSeries BigradedSeries::one(int q_trunc) {
    BigradedSeries s(q_trunc);
    s.coeffs_[0] = GradedDims{{0, 1}};
    return s;
}

const GradedDims& BigradedSeries::coeff(int q_exp) const {
    if (q_exp < 0 || q_exp > q_trunc_)
        throw DomainError("BigradedSeries: q exponent " + std::to_string(q_exp) +
                          " outside truncation " + std::to_string(q_trunc_));
    return coeffs_[static_cast<size_t>(q_exp)];
}

void BigradedSeries::set_coeff(int q_exp, GradedDims g) {
    if (q_exp < 0 || q_exp > q_trunc_)
        throw DomainError("BigradedSeries: q exponent outside truncation");
    coeffs_[static_cast<size_t>(q_exp)] = std::move(g);
}

bool BigradedSeries::operator==(const BigradedSeries& o) const {
    return q_trunc_ == o.q_trunc_ && coeffs_ == o.coeffs_;
}

BigradedSeries mul(const BigradedSeries& a, const BigradedSeries& b) {
    const int n = std::min(a.q_trunc(), b.q_trunc());
    BigradedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        Poly acc;
        for (int j = 0; j <= i; ++j)
            acc = acc + a.coeff(j).poly() * b.coeff(i - j).poly();
        r.set_coeff(i, GradedDims(acc));
    }
    return r;
}

namespace {

// (1 + t^a q^m)^b truncated at q^N: sum_{j<=min(b,N/m)} C(b,j) t^{aj} q^{mj}.
BigradedSeries numerator_factor(Int b, int a, int m, int N) {
    BigradedSeries f(N);
    for (int j = 0; j * m <= N; ++j) {
        if (b < j)
            break;
        Int c = 1; // C(b, j) with big b
        for (int i = 1; i <= j; ++i) {
            c *= b - (j - i);
            c /= i;
        }
        f.set_coeff(j * m, GradedDims{{a * j, c}});
    }
    return f;
}

// (1 - t^a q^m)^{-b} truncated at q^N: sum_j C(b+j-1, j) t^{aj} q^{mj}.
BigradedSeries denominator_factor(Int b, int a, int m, int N) {
    BigradedSeries f(N);
    for (int j = 0; j * m <= N; ++j) {
        Int c = 1; // C(b+j-1, j)
        for (int i = 1; i <= j; ++i) {
            c *= b + (i - 1);
            c /= i;
        }
        if (j > 0 && c == 0)
            break; // b == 0: the factor is 1
        f.set_coeff(j * m, GradedDims{{a * j, c}});
    }
    return f;
}

} // namespace

BigradedSeries goettsche_series(const std::array<Int, 5>& b, int q_trunc) {
    for (const Int& v : b)
        if (v < 0)
            throw DomainError("goettsche_series: negative Betti number");
    BigradedSeries r = BigradedSeries::one(q_trunc);
    for (int m = 1; m <= q_trunc; ++m) {
        if (b[1] != 0)
            r = mul(r, numerator_factor(b[1], 2 * m - 1, m, q_trunc));
        if (b[3] != 0)
            r = mul(r, numerator_factor(b[3], 2 * m + 1, m, q_trunc));
        if (b[0] != 0)
            r = mul(r, denominator_factor(b[0], 2 * m - 2, m, q_trunc));
        if (b[2] != 0)
            r = mul(r, denominator_factor(b[2], 2 * m, m, q_trunc));
        if (b[4] != 0)
            r = mul(r, denominator_factor(b[4], 2 * m + 2, m, q_trunc));
    }
    return r;
}

GradedDims goettsche_coefficient(const std::array<Int, 5>& b, int n) {
    if (n < 0)
        throw DomainError("goettsche_coefficient: negative index");
    return goettsche_series(b, n).coeff(n);
}

GradedDims curve_moduli_poincare_rank2(int g) {
    if (g < 2)
        throw DomainError("curve_moduli_poincare_rank2: need g >= 2");
    const Poly one_t = Poly(Int(1)) + Poly::term(1, 1);   // 1 + t
    const Poly one_t3 = Poly(Int(1)) + Poly::term(1, 3);  // 1 + t^3
    Poly num = one_t3.pow(2 * g) - one_t.pow(2 * g).shifted(2 * g);
    Poly den = (Poly(Int(1)) - Poly::term(1, 2)) * (Poly(Int(1)) - Poly::term(1, 4));
    Poly fixed_det = num.div_exact(den);
    Poly full = fixed_det * one_t.pow(2 * g);
    const int expected_degree = 2 * (4 * (g - 1) + 1);
    if (full.degree() != expected_degree)
        throw InternalError("curve_moduli_poincare_rank2: degree " +
                            std::to_string(full.degree()) + " != " +
                            std::to_string(expected_degree));
    return GradedDims(full);
}

} // namespace maxcalc
