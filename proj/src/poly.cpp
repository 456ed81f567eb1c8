#include "maxcalc/poly.hpp"

#include <sstream>

#include "maxcalc/errors.hpp"

namespace maxcalc {

Poly::Poly(Int constant) {
    if (constant != 0)
        c_[0] = std::move(constant);
}

Poly Poly::term(Int coeff, int degree) {
    Poly p;
    if (coeff != 0)
        p.c_[degree] = std::move(coeff);
    return p;
}

int Poly::degree() const {
    return c_.empty() ? -1 : c_.rbegin()->first;
}

Int Poly::coeff(int degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? Int(0) : it->second;
}

Int Poly::sum_of_coeffs() const {
    Int s = 0;
    for (const auto& [d, v] : c_)
        s += v;
    return s;
}

void Poly::set(int degree, Int value) {
    if (value == 0)
        c_.erase(degree);
    else
        c_[degree] = std::move(value);
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [d, v] : o.c_) {
        Int nv = r.coeff(d) + v;
        r.set(d, nv);
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [d, v] : o.c_) {
        Int nv = r.coeff(d) - v;
        r.set(d, nv);
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [da, va] : c_)
        for (const auto& [db, vb] : o.c_) {
            Int nv = r.coeff(da + db) + va * vb;
            r.set(da + db, nv);
        }
    return r;
}

Poly Poly::shifted(int k) const {
    Poly r;
    for (const auto& [d, v] : c_)
        r.c_[d + k] = v;
    return r;
}

Poly Poly::pow(int e) const {
    Poly r(Int(1));
    Poly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            r = r * base;
        if (e > 1)
            base = base * base;
    }
    return r;
}

Poly Poly::div_exact(const Poly& divisor) const {
    if (divisor.is_zero())
        throw InternalError("division by the zero polynomial");
    Poly rem = *this;
    Poly quo;
    const int dd = divisor.degree();
    const Int& lead = divisor.c_.rbegin()->second;
    while (!rem.is_zero() && rem.degree() >= dd) {
        const Int& rl = rem.c_.rbegin()->second;
        if (rl % lead != 0)
            throw InternalError("non-exact polynomial division: leading coefficient " +
                                rl.str() + " not divisible by " + lead.str());
        Poly t = Poly::term(rl / lead, rem.degree() - dd);
        quo = quo + t;
        rem = rem - t * divisor;
    }
    if (!rem.is_zero())
        throw InternalError("non-exact polynomial division: nonzero remainder " + rem.str());
    return quo;
}

bool Poly::is_palindromic() const {
    const int n = degree();
    for (const auto& [d, v] : c_)
        if (coeff(n - d) != v)
            return false;
    return true;
}

bool Poly::all_coeffs_nonnegative() const {
    for (const auto& [d, v] : c_)
        if (v < 0)
            return false;
    return true;
}

std::string Poly::str() const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, v] : c_) {
        Int a = v;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (d == 0) {
            os << a.str();
        } else {
            if (a != 1)
                os << a.str();
            os << "t";
            if (d != 1)
                os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

} // namespace maxcalc
