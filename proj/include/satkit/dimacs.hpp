#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "satkit/cnf.hpp"

namespace satkit {

// Reads DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header,
// then zero-terminated clauses that may span lines. A `%` line ends the input
// (SATLIB convention). Throws ParseError carrying the offending line.
CnfFormula parse_dimacs(std::string_view text);
CnfFormula parse_dimacs(std::istream& in);

// Canonical form: header, one clause per line, single spaces, LF endings.
std::string write_dimacs(const CnfFormula& f);
void write_dimacs(std::ostream& out, const CnfFormula& f);

}  // namespace satkit
