#include "maxcalc/motive.hpp"

#include <cctype>
#include <sstream>

#include "maxcalc/errors.hpp"

namespace maxcalc {

namespace {

MotivePtr make(Motive m) {
    return std::make_shared<const Motive>(std::move(m));
}

} // namespace

MotivePtr tate(int n) {
    Motive m;
    m.kind = Motive::Kind::Tate;
    m.twist = n;
    return make(std::move(m));
}

MotivePtr variety_motive(const std::string& id) {
    Motive m;
    m.kind = Motive::Kind::Variety;
    m.variety = id;
    return make(std::move(m));
}

MotivePtr msum(std::vector<MotivePtr> parts) {
    if (parts.empty())
        throw DomainError("motive sum needs at least one part");
    if (parts.size() == 1)
        return parts[0];
    Motive m;
    m.kind = Motive::Kind::Sum;
    m.children = std::move(parts);
    return make(std::move(m));
}

MotivePtr mtensor(std::vector<MotivePtr> parts) {
    if (parts.empty())
        throw DomainError("motive tensor needs at least one part");
    if (parts.size() == 1)
        return parts[0];
    Motive m;
    m.kind = Motive::Kind::Tensor;
    m.children = std::move(parts);
    return make(std::move(m));
}

MotivePtr mtwist(int n, MotivePtr x) {
    if (n == 0)
        return x;
    if (x->kind == Motive::Kind::Tate)
        return tate(x->twist + n);
    if (x->kind == Motive::Kind::Twist)
        return mtwist(n + x->twist, x->children[0]);
    Motive m;
    m.kind = Motive::Kind::Twist;
    m.twist = n;
    m.children = {std::move(x)};
    return make(std::move(m));
}

MotivePtr msummand(MotivePtr parent) {
    Motive m;
    m.kind = Motive::Kind::Summand;
    m.children = {std::move(parent)};
    return make(std::move(m));
}

std::string Motive::str() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Variety:
        os << "M(" << variety << ")";
        break;
    case Kind::Tate:
        os << "1";
        if (twist != 0)
            os << "(" << twist << ")";
        break;
    case Kind::Sum: {
        bool first = true;
        for (const auto& c : children) {
            if (!first)
                os << " + ";
            os << c->str();
            first = false;
        }
        break;
    }
    case Kind::Tensor: {
        bool first = true;
        for (const auto& c : children) {
            if (!first)
                os << " * ";
            const bool paren = c->kind == Kind::Sum;
            if (paren)
                os << "(";
            os << c->str();
            if (paren)
                os << ")";
            first = false;
        }
        break;
    }
    case Kind::Twist: {
        const auto& c = children[0];
        const bool paren = c->kind == Kind::Sum || c->kind == Kind::Tensor;
        if (paren)
            os << "(";
        os << c->str();
        if (paren)
            os << ")";
        os << "(" << twist << ")";
        break;
    }
    case Kind::Summand:
        os << "summand(" << children[0]->str() << ")";
        break;
    }
    return os.str();
}

void Motive::collect_varieties(std::set<std::string>& out) const {
    if (kind == Kind::Variety)
        out.insert(variety);
    for (const auto& c : children)
        c->collect_varieties(out);
}

namespace {

// Recursive-descent parser for the certificate expression grammar.
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    MotivePtr parse() {
        MotivePtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing characters in motive expression");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw DomainError("motive expression: " + msg + " at offset " + std::to_string(pos_) +
                          " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }

    MotivePtr expr() {
        std::vector<MotivePtr> parts{term()};
        while (eat('+'))
            parts.push_back(term());
        return msum(std::move(parts));
    }

    MotivePtr term() {
        std::vector<MotivePtr> parts{factor()};
        while (eat('*'))
            parts.push_back(factor());
        return mtensor(std::move(parts));
    }

    MotivePtr factor() {
        MotivePtr a = atom();
        // trailing twists: atom(n)(m)...
        while (true) {
            skip_ws();
            size_t save = pos_;
            if (!eat('('))
                break;
            skip_ws();
            if (pos_ < s_.size() &&
                (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                 s_[pos_] == '+')) {
                int n = integer();
                if (!eat(')'))
                    fail("expected ')' after twist");
                a = mtwist(n, std::move(a));
            } else {
                pos_ = save;
                break;
            }
        }
        return a;
    }

    MotivePtr atom() {
        skip_ws();
        if (eat_word("summand(")) {
            MotivePtr inner = expr();
            if (!eat(')'))
                fail("expected ')' after summand");
            return msummand(std::move(inner));
        }
        if (eat_word("M(")) {
            std::string id = ident();
            if (!eat(')'))
                fail("expected ')' after variety id");
            return variety_motive(id);
        }
        if (eat('1'))
            return tate(0);
        if (eat('(')) {
            MotivePtr inner = expr();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        fail("expected '1', 'M(id)', 'summand(...)' or '('");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

MotivePtr stamp_summands(const MotivePtr& e, int cert_id) {
    if (e->children.empty() && e->kind != Motive::Kind::Summand)
        return e;
    Motive m = *e;
    for (auto& c : m.children)
        c = stamp_summands(c, cert_id);
    if (m.kind == Motive::Kind::Summand)
        m.summand_cert = cert_id;
    return std::make_shared<const Motive>(std::move(m));
}

} // namespace

MotivePtr parse_motive_expr(const std::string& text) {
    return ExprParser(text).parse();
}

int CertificateStore::register_certificate(const std::string& subject, MotivePtr decomposition,
                                           const std::string& citation) {
    if (subject.empty())
        throw DomainError("certificate needs a subject");
    // Reject cycles: the subject must not be reachable from the decomposition
    // through variety atoms and already-registered certificates.
    std::set<std::string> frontier;
    decomposition->collect_varieties(frontier);
    std::set<std::string> seen;
    while (!frontier.empty()) {
        std::set<std::string> next;
        for (const auto& v : frontier) {
            if (v == subject)
                throw CertificateCycle("certificate for " + subject +
                                       " reaches its own subject");
            if (!seen.insert(v).second)
                continue;
            for (const auto& c : certs_)
                if (c.subject == v)
                    c.decomposition->collect_varieties(next);
        }
        frontier = std::move(next);
    }

    DecompositionCertificate c;
    c.id = static_cast<int>(certs_.size());
    c.subject = subject;
    c.decomposition = stamp_summands(decomposition, c.id);
    c.citation = citation;
    certs_.push_back(std::move(c));
    return certs_.back().id;
}

bool CertificateStore::atom_generated(const std::string& v, const std::set<std::string>& gens,
                                      std::set<std::string>& visiting,
                                      MotivatedResult& out) const {
    if (gens.count(v)) {
        out.used_gens.insert(v);
        return true;
    }
    if (visiting.count(v))
        return false; // already expanding this atom higher in the chain
    visiting.insert(v);
    for (const auto& c : certs_) {
        if (c.subject != v)
            continue;
        MotivatedResult attempt = out;
        if (expr_generated(c.decomposition, gens, visiting, attempt)) {
            attempt.witness.push_back(c.id);
            out = std::move(attempt);
            visiting.erase(v);
            return true;
        }
    }
    visiting.erase(v);
    return false;
}

bool CertificateStore::expr_generated(const MotivePtr& e, const std::set<std::string>& gens,
                                      std::set<std::string>& visiting,
                                      MotivatedResult& out) const {
    switch (e->kind) {
    case Motive::Kind::Tate:
        return true;
    case Motive::Kind::Variety:
        return atom_generated(e->variety, gens, visiting, out);
    case Motive::Kind::Twist:
    case Motive::Kind::Summand:
        return expr_generated(e->children[0], gens, visiting, out);
    case Motive::Kind::Sum:
    case Motive::Kind::Tensor: {
        MotivatedResult attempt = out;
        for (const auto& c : e->children)
            if (!expr_generated(c, gens, visiting, attempt))
                return false;
        out = std::move(attempt);
        return true;
    }
    }
    return false;
}

MotivatedResult CertificateStore::motivated_by(const std::string& y,
                                               const std::set<std::string>& gens) const {
    MotivatedResult r;
    std::set<std::string> visiting;
    if (atom_generated(y, gens, visiting, r)) {
        r.value = Tri::Yes;
        // dedupe the witness while keeping discovery order
        std::set<int> seen;
        std::vector<int> w;
        for (int id : r.witness)
            if (seen.insert(id).second)
                w.push_back(id);
        r.witness = std::move(w);
        return r;
    }
    return MotivatedResult{};
}

std::string CertificateStore::serialize() const {
    std::ostringstream os;
    for (const auto& c : certs_)
        os << "cert: M(" << c.subject << ") = " << c.decomposition->str() << "  # " << c.citation
           << "\n";
    return os.str();
}

} // namespace maxcalc
