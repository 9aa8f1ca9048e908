#pragma once

#include "ietlab/actions.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace ietlab {

// A workspace owns the symbol table that every value loaded from text files
// shares, plus optional named bindings.
using WorkspaceValue = std::variant<Iet, GnElement, MarkedAction>;

struct Workspace {
  SymbolTable symbols;
  std::map<std::string, WorkspaceValue> bindings;
};

// ---- single-line body parsers ----------------------------------------
// Positions in ParseError messages are 1-based; `line` is the line number
// the text came from.

/// "iet breakpoints= 0, 1 - alpha translations= alpha, -1 + alpha"
/// or    "iet lengths= 1/2, 1/2 permutation= 2 1"
Iet parse_iet_body(const SymbolTable& table, const std::string& text, int line = 1);

/// "gn n=4 sigma=4 3 2 1 alpha=0, beta, 0, -beta"
/// sigma accepts the image list or cycle form "(1 4)(2 3)".
GnElement parse_gn_body(const SymbolTable& table, const std::string& text, int line = 1);

/// "b a^-1 a"; "1" is the empty word.
Word parse_word(const std::string& text, int line = 1);

// ---- whole files ------------------------------------------------------
// A file is a sequence of lines: blank lines and '#' comments are skipped,
// leading "symbol <name> = <witness>" lines register symbols in the
// workspace, and the remainder is one value:
//   .iet  one "iet ..." line
//   .gn   one "gn ..." line
//   .act  "gen <name> = <iet-or-gn body>" lines and "relation: <word>" lines

Iet load_iet(Workspace& ws, const std::string& content);
GnElement load_gn(Workspace& ws, const std::string& content);
MarkedAction load_action(Workspace& ws, const std::string& content);
/// Detects the value kind from the first content line.
WorkspaceValue load_value(Workspace& ws, const std::string& content);

/// Canonical file text: one "symbol" line per registered symbol, then the
/// value body. Output re-parses to an equal value.
std::string save_iet(const Workspace& ws, const Iet& f);
std::string save_gn(const Workspace& ws, const GnElement& g);
std::string save_action(const Workspace& ws, const MarkedAction& action);
std::string save_value(const Workspace& ws, const WorkspaceValue& v);

/// A GnElement converts via to_iet; a MarkedAction throws ParseError.
Iet as_iet(const WorkspaceValue& v);

// ---- command-line front end -------------------------------------------

/// Runs one invocation: args excludes the program name. Reads '-' inputs
/// from `in`. Returns the process exit code: 0 success, 2 mathematical
/// obstruction (printed to err), 1 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace ietlab
