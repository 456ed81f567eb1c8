#ifndef MAXCALC_MOTIVE_HPP
#define MAXCALC_MOTIVE_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "maxcalc/profile.hpp"

namespace maxcalc {

// Formal motive expression. Atoms are variety motives M(id) and Tate objects
// 1(n); operators are finite sums, tensor products, Tate twists and
// summand-with-certificate. Twists normalize on construction:
// twist(m, tate(n)) = tate(n+m), twist(m, twist(n, x)) = twist(m+n, x).
struct Motive;
using MotivePtr = std::shared_ptr<const Motive>;

struct Motive {
    enum class Kind { Variety, Tate, Sum, Tensor, Twist, Summand };
    Kind kind;
    std::string variety;            // Kind::Variety
    int twist = 0;                  // Kind::Tate (n) or Kind::Twist (m)
    std::vector<MotivePtr> children;
    int summand_cert = -1;          // Kind::Summand: id of the registering certificate

    std::string str() const;
    void collect_varieties(std::set<std::string>& out) const;
};

MotivePtr tate(int n);
MotivePtr variety_motive(const std::string& id);
MotivePtr msum(std::vector<MotivePtr> parts);     // at least one part
MotivePtr mtensor(std::vector<MotivePtr> parts);  // at least one part
MotivePtr mtwist(int m, MotivePtr x);
MotivePtr msummand(MotivePtr parent);

// Parses the certificate expression grammar:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := atom ('(' int ')')*           -- trailing twists
//   atom   := '1' | 'M(' id ')' | 'summand(' expr ')' | '(' expr ')'
MotivePtr parse_motive_expr(const std::string& text);

struct DecompositionCertificate {
    int id = -1;
    std::string subject;   // variety id whose motive decomposes
    MotivePtr decomposition;
    std::string citation;
};

// Answer of a closure query. value is Yes or Unknown, never No: the absence
// of a certificate proves nothing.
struct MotivatedResult {
    Tri value = Tri::Unknown;
    std::vector<int> witness;          // certificate ids used, in discovery order
    std::set<std::string> used_gens;   // generator atoms the found chain relies on
};

class CertificateStore {
public:
    // Rejects certificates whose subject is reachable from their own
    // decomposition (directly or through earlier certificates).
    int register_certificate(const std::string& subject, MotivePtr decomposition,
                             const std::string& citation);

    const std::vector<DecompositionCertificate>& all() const { return certs_; }
    bool empty() const { return certs_.empty(); }

    // Is M(y) in the thick tensor subcategory generated by {M(g) : g in gens}
    // and the Tate objects, as witnessed by registered certificates?
    MotivatedResult motivated_by(const std::string& y, const std::set<std::string>& gens) const;

    std::string serialize() const; // one "cert: M(x) = expr  # citation" line each

private:
    bool expr_generated(const MotivePtr& e, const std::set<std::string>& gens,
                        std::set<std::string>& visiting, MotivatedResult& out) const;
    bool atom_generated(const std::string& v, const std::set<std::string>& gens,
                        std::set<std::string>& visiting, MotivatedResult& out) const;

    std::vector<DecompositionCertificate> certs_;
};

} // namespace maxcalc

#endif
