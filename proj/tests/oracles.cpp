#include "oracles.hpp"

#include <stdexcept>

namespace oracles {

namespace {

Dense make_zero(int len) {
    return Dense(static_cast<size_t>(len), BigInt(0));
}

// c = a * b, truncated to the length of a.
Dense mul_trunc(const Dense& a, const Dense& b) {
    Dense c = make_zero(static_cast<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size() && i + j < c.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

Dense add(const Dense& a, const Dense& b) {
    Dense c = a;
    for (size_t j = 0; j < b.size() && j < c.size(); ++j)
        c[j] += b[j];
    return c;
}

Dense sub(const Dense& a, const Dense& b) {
    Dense c = a;
    for (size_t j = 0; j < b.size() && j < c.size(); ++j)
        c[j] -= b[j];
    return c;
}

Dense pow_trunc(const Dense& a, int e, int len) {
    Dense r = make_zero(len);
    r[0] = 1;
    for (int i = 0; i < e; ++i)
        r = mul_trunc(r, a);
    return r;
}

// 1/(1 - t^k) truncated: ones at multiples of k.
Dense geom(int k, int len) {
    Dense r = make_zero(len);
    for (int i = 0; i < len; i += k)
        r[static_cast<size_t>(i)] = 1;
    return r;
}

Dense one_plus_t_pow(int e, int len) {
    Dense base = make_zero(len);
    base[0] = 1;
    if (1 < len)
        base[1] = 1;
    return pow_trunc(base, e, len);
}

} // namespace

Dense hn_recursion_poincare(int n, int d, int g) {
    if (g < 0)
        throw std::invalid_argument("hn_recursion_poincare: negative genus");
    // The final polynomial has degree 2(n^2(g-1)+1); keep headroom to verify
    // that higher coefficients vanish.
    const int deg = 2 * (n * n * (g - 1) + 1);
    const int len = deg + 5;

    // P(Bun_1,d) = (1+t)^{2g} / (1-t^2): the stack of line bundles. All line
    // bundles are stable, so this is already the semistable stack series.
    const Dense bun1 = mul_trunc(one_plus_t_pow(2 * g, len), geom(2, len));

    Dense ss;
    if (n == 1) {
        ss = bun1;
    } else if (n == 2) {
        // P(Bun_2) = (1+t)^{2g} (1+t^3)^{2g} / ((1-t^2)^2 (1-t^4)).
        Dense t3 = make_zero(len);
        t3[0] = 1;
        if (3 < len)
            t3[3] = 1;
        Dense bun2 = mul_trunc(one_plus_t_pow(2 * g, len), pow_trunc(t3, 2 * g, len));
        bun2 = mul_trunc(bun2, geom(2, len));
        bun2 = mul_trunc(bun2, geom(2, len));
        bun2 = mul_trunc(bun2, geom(4, len));
        // Subtract every proper HN stratum (1,d1),(1,d2) with d1 > d/2:
        // codimension (g-1) + d1 - d2.
        Dense strata = make_zero(len);
        const Dense pair = mul_trunc(bun1, bun1);
        for (int d1 = d / 2 + 1;; ++d1) {
            const int d2 = d - d1;
            if (2 * d1 <= d)
                continue;
            const int codim = (g - 1) + d1 - d2;
            const int e = 2 * codim;
            if (e >= len)
                break;
            Dense term = make_zero(len);
            term[static_cast<size_t>(e)] = 1;
            strata = add(strata, mul_trunc(term, pair));
        }
        ss = sub(bun2, strata);
    } else {
        throw std::invalid_argument("hn_recursion_poincare: only ranks 1 and 2");
    }

    // Coprime rank and degree: the coarse space series is (1-t^2) * stack.
    Dense one_minus_t2 = make_zero(len);
    one_minus_t2[0] = 1;
    one_minus_t2[2] = -1;
    Dense m = mul_trunc(ss, one_minus_t2);

    for (int i = deg + 1; i < len; ++i)
        if (m[static_cast<size_t>(i)] != 0)
            throw std::logic_error("hn_recursion_poincare: nonzero coefficient past degree");
    m.resize(static_cast<size_t>(deg) + 1);
    return m;
}

Dense goettsche_bruteforce(const std::array<long long, 5>& b, int n) {
    // grid[q][t]: fully dense coefficients, q <= n, t <= 4n.
    const int tmax = 4 * n + 8;
    using Grid = std::vector<Dense>;
    Grid acc(static_cast<size_t>(n) + 1, make_zero(tmax));
    acc[0][0] = 1;

    auto mul_grid = [&](const Grid& f) {
        Grid r(static_cast<size_t>(n) + 1, make_zero(tmax));
        for (int qa = 0; qa <= n; ++qa)
            for (int qb = 0; qa + qb <= n; ++qb)
                for (int ta = 0; ta < tmax; ++ta) {
                    if (acc[qa][ta] == 0)
                        continue;
                    for (int tb = 0; ta + tb < tmax; ++tb)
                        if (f[qb][tb] != 0)
                            r[qa + qb][ta + tb] += acc[qa][ta] * f[qb][tb];
                }
        acc = r;
    };

    auto factor_num = [&](int a, int m, long long e) {
        // (1 + t^a q^m)^e as a grid
        Grid f(static_cast<size_t>(n) + 1, make_zero(tmax));
        for (int j = 0; j * m <= n && j <= e; ++j) {
            BigInt c = 1;
            for (int i = 1; i <= j; ++i) {
                c *= e - (j - i);
                c /= i;
            }
            if (a * j < tmax)
                f[j * m][a * j] = c;
        }
        return f;
    };
    auto factor_den = [&](int a, int m, long long e) {
        // (1 - t^a q^m)^{-e}
        Grid f(static_cast<size_t>(n) + 1, make_zero(tmax));
        for (int j = 0; j * m <= n; ++j) {
            BigInt c = 1;
            for (int i = 1; i <= j; ++i) {
                c *= e + i - 1;
                c /= i;
            }
            if (j > 0 && c == 0)
                break;
            if (a * j < tmax)
                f[j * m][a * j] = c;
        }
        return f;
    };

    for (int m = 1; m <= n; ++m) {
        if (b[1] > 0)
            mul_grid(factor_num(2 * m - 1, m, b[1]));
        if (b[3] > 0)
            mul_grid(factor_num(2 * m + 1, m, b[3]));
        if (b[0] > 0)
            mul_grid(factor_den(2 * m - 2, m, b[0]));
        if (b[2] > 0)
            mul_grid(factor_den(2 * m, m, b[2]));
        if (b[4] > 0)
            mul_grid(factor_den(2 * m + 2, m, b[4]));
    }

    Dense out = acc[static_cast<size_t>(n)];
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    return out;
}

BigInt partition_count(int n) {
    std::vector<BigInt> p(static_cast<size_t>(n) + 1, BigInt(0));
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s)
            p[static_cast<size_t>(s)] += p[static_cast<size_t>(s - part)];
    return p[static_cast<size_t>(n)];
}

Dense qbinomial_enumerate(int k, int n, int step) {
    Dense out(static_cast<size_t>(k * (n - k) * step) + 1, BigInt(0));
    // Walk all n-bit masks with k ones; inversions = pairs (1 before 0).
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int ones = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                ++ones;
        if (ones != k)
            continue;
        int inv = 0, seen_ones = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i))
                ++seen_ones;
            else
                inv += seen_ones;
        }
        out[static_cast<size_t>(inv * step)] += 1;
    }
    return out;
}

} // namespace oracles
