#ifndef MAXCALC_SCRIPT_HPP
#define MAXCALC_SCRIPT_HPP

#include "maxcalc/motive.hpp"
#include "maxcalc/rules.hpp"

namespace maxcalc {

// Declarative script, one statement per line:
//   variety <id> = <rule>(<inputs..., name=value...>)
//   cert: M(<id>) = <motive expr>  # <citation>
//   assert maximal(<id>) [= yes|no]
//   print betti(<id>)
//   print trace(<id>)
//   print series(<surface-or-[b0,b1,b2,b3,b4]>, upto=<n>)
// '#' starts a comment except on cert lines, where it separates the citation.
struct Statement {
    enum class Kind { Variety, Cert, AssertMaximal, PrintBetti, PrintTrace, PrintSeries };
    Kind kind;
    int line = 0;

    // Variety
    std::string target;
    std::string rule;
    std::vector<std::string> inputs;
    Params params;

    // Cert
    std::string cert_subject;
    MotivePtr cert_expr;
    std::string cert_citation;

    // AssertMaximal / PrintBetti / PrintTrace reuse `target`
    Tri assert_value = Tri::Yes;

    // PrintSeries: either a name (variety id or catalog surface) or a list
    std::string series_surface;
    std::vector<long long> series_betti;
    bool series_by_name = true;
    int series_upto = 0;
};

struct Script {
    std::vector<Statement> statements;
};

// Parses UTF-8 script text. Throws ParseError with line/column on syntax
// errors, duplicate variety ids and unknown rule names.
Script parse_script(const std::string& text);

// Canonical text rendering; parse(pretty_print(parse(text))) has the same
// AST as parse(text).
std::string pretty_print(const Script& script);

} // namespace maxcalc

#endif
