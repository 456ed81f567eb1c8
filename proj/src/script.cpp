#include "maxcalc/script.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "maxcalc/errors.hpp"

namespace maxcalc {

namespace {

// Single-line cursor with position tracking for diagnostics.
class LineParser {
public:
    LineParser(const std::string& s, int line) : s_(s), line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, static_cast<int>(pos_) + 1, msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    bool eat_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) == 0) {
            const size_t end = pos_ + w.size();
            // must not continue as an identifier
            if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) ||
                                    s_[end] == '_'))
                return false;
            pos_ = end;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        const size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }

    long long integer() {
        skip_ws();
        const size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-')
            ++pos_;
        const size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    bool looks_like_int() {
        skip_ws();
        if (pos_ >= s_.size())
            return false;
        if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return true;
        return s_[pos_] == '-' && pos_ + 1 < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
    }

    std::string rest() {
        skip_ws();
        return s_.substr(pos_);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_;
};

ParamValue parse_value(LineParser& lp) {
    if (lp.peek_is('[')) {
        lp.expect('[');
        std::vector<long long> xs;
        if (!lp.peek_is(']')) {
            xs.push_back(lp.integer());
            while (lp.eat(','))
                xs.push_back(lp.integer());
        }
        lp.expect(']');
        return xs;
    }
    if (lp.looks_like_int())
        return lp.integer();
    const std::string word = lp.ident();
    if (word == "yes")
        return true;
    if (word == "no")
        return false;
    return word;
}

void parse_arguments(LineParser& lp, Statement& st) {
    lp.expect('(');
    if (lp.eat(')'))
        return;
    bool named_seen = false;
    while (true) {
        if (lp.peek_is('[') || lp.looks_like_int())
            lp.fail("positional arguments must be variety ids; use name=value");
        const std::string word = lp.ident();
        if (lp.eat('=')) {
            named_seen = true;
            for (const auto& [n, v] : st.params)
                if (n == word)
                    lp.fail("duplicate parameter '" + word + "'");
            st.params.emplace_back(word, parse_value(lp));
        } else {
            if (named_seen)
                lp.fail("positional input after named parameter");
            st.inputs.push_back(word);
        }
        if (lp.eat(')'))
            break;
        lp.expect(',');
    }
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r')
            return false;
    return true;
}

} // namespace

Script parse_script(const std::string& text) {
    Script script;
    std::set<std::string> defined;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();

        // cert lines keep their '#': it introduces the citation
        std::string body = raw;
        const bool is_cert = [&] {
            LineParser probe(raw, lineno);
            return probe.eat_word("cert");
        }();
        if (!is_cert)
            body = strip_comment(raw);
        if (blank(body))
            continue;

        LineParser lp(body, lineno);
        Statement st;
        st.line = lineno;
        if (lp.eat_word("variety")) {
            st.kind = Statement::Kind::Variety;
            st.target = lp.ident();
            if (defined.count(st.target))
                lp.fail("duplicate variety id '" + st.target + "'");
            lp.expect('=');
            st.rule = lp.ident();
            if (!is_known_rule(st.rule))
                lp.fail("unknown rule name '" + st.rule + "'");
            parse_arguments(lp, st);
            for (const auto& in_id : st.inputs)
                if (!defined.count(in_id))
                    lp.fail("variety id '" + in_id + "' used before definition");
            defined.insert(st.target);
            if (st.rule == "hilbert_square_backward")
                for (const char* suffix : {"_12", "_23", "_3"})
                    defined.insert(st.target + suffix);
        } else if (lp.eat_word("cert")) {
            lp.expect(':');
            st.kind = Statement::Kind::Cert;
            if (!lp.eat_word("M"))
                lp.fail("expected M(<id>) on the left of a certificate");
            lp.expect('(');
            st.cert_subject = lp.ident();
            lp.expect(')');
            lp.expect('=');
            const std::string remainder = lp.rest();
            const auto hash = remainder.find('#');
            if (hash == std::string::npos)
                lp.fail("certificate requires a citation after '#'");
            std::string expr_text = remainder.substr(0, hash);
            std::string citation = remainder.substr(hash + 1);
            while (!citation.empty() && citation.front() == ' ')
                citation.erase(citation.begin());
            while (!citation.empty() && (citation.back() == ' ' || citation.back() == '\r'))
                citation.pop_back();
            if (citation.empty())
                lp.fail("certificate requires a nonempty citation");
            try {
                st.cert_expr = parse_motive_expr(expr_text);
            } catch (const DomainError& e) {
                lp.fail(e.what());
            }
            st.cert_citation = citation;
            if (!defined.count(st.cert_subject))
                lp.fail("variety id '" + st.cert_subject + "' used before definition");
            std::set<std::string> used;
            st.cert_expr->collect_varieties(used);
            for (const auto& v : used)
                if (!defined.count(v))
                    lp.fail("variety id '" + v + "' used before definition");
        } else if (lp.eat_word("assert")) {
            st.kind = Statement::Kind::AssertMaximal;
            if (!lp.eat_word("maximal"))
                lp.fail("only 'assert maximal(<id>)' is supported");
            lp.expect('(');
            st.target = lp.ident();
            lp.expect(')');
            if (lp.eat('=')) {
                const std::string v = lp.ident();
                if (v == "yes")
                    st.assert_value = Tri::Yes;
                else if (v == "no")
                    st.assert_value = Tri::No;
                else
                    lp.fail("assert value must be yes or no");
            }
            if (!defined.count(st.target))
                lp.fail("variety id '" + st.target + "' used before definition");
        } else if (lp.eat_word("print")) {
            if (lp.eat_word("betti")) {
                st.kind = Statement::Kind::PrintBetti;
                lp.expect('(');
                st.target = lp.ident();
                lp.expect(')');
                if (!defined.count(st.target))
                    lp.fail("variety id '" + st.target + "' used before definition");
            } else if (lp.eat_word("trace")) {
                st.kind = Statement::Kind::PrintTrace;
                lp.expect('(');
                st.target = lp.ident();
                lp.expect(')');
                if (!defined.count(st.target))
                    lp.fail("variety id '" + st.target + "' used before definition");
            } else if (lp.eat_word("series")) {
                st.kind = Statement::Kind::PrintSeries;
                lp.expect('(');
                if (lp.peek_is('[')) {
                    st.series_by_name = false;
                    lp.expect('[');
                    st.series_betti.push_back(lp.integer());
                    while (lp.eat(','))
                        st.series_betti.push_back(lp.integer());
                    lp.expect(']');
                    if (st.series_betti.size() != 5)
                        lp.fail("surface Betti list must have 5 entries");
                } else {
                    st.series_surface = lp.ident();
                }
                lp.expect(',');
                if (lp.ident() != "upto")
                    lp.fail("expected upto=<n>");
                lp.expect('=');
                st.series_upto = static_cast<int>(lp.integer());
                lp.expect(')');
            } else {
                lp.fail("print expects betti(...), trace(...) or series(...)");
            }
        } else {
            lp.fail("expected 'variety', 'cert:', 'assert' or 'print'");
        }
        if (st.kind != Statement::Kind::Cert && !lp.at_end())
            lp.fail("trailing characters");
        script.statements.push_back(std::move(st));
    }
    return script;
}

std::string pretty_print(const Script& script) {
    std::ostringstream os;
    for (const auto& st : script.statements) {
        switch (st.kind) {
        case Statement::Kind::Variety: {
            os << "variety " << st.target << " = " << st.rule << "(";
            bool first = true;
            for (const auto& in : st.inputs) {
                os << (first ? "" : ", ") << in;
                first = false;
            }
            for (const auto& [name, value] : st.params) {
                os << (first ? "" : ", ") << name << "=" << param_value_str(value);
                first = false;
            }
            os << ")";
            break;
        }
        case Statement::Kind::Cert:
            os << "cert: M(" << st.cert_subject << ") = " << st.cert_expr->str() << "  # "
               << st.cert_citation;
            break;
        case Statement::Kind::AssertMaximal:
            os << "assert maximal(" << st.target << ") = " << tri_name(st.assert_value);
            break;
        case Statement::Kind::PrintBetti:
            os << "print betti(" << st.target << ")";
            break;
        case Statement::Kind::PrintTrace:
            os << "print trace(" << st.target << ")";
            break;
        case Statement::Kind::PrintSeries:
            os << "print series(";
            if (st.series_by_name) {
                os << st.series_surface;
            } else {
                os << "[";
                for (size_t i = 0; i < st.series_betti.size(); ++i)
                    os << (i ? "," : "") << st.series_betti[i];
                os << "]";
            }
            os << ", upto=" << st.series_upto << ")";
            break;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace maxcalc
