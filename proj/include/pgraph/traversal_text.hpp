#pragma once

#include <string_view>

#include "pgraph/traversal.hpp"

namespace pgraph {

// Compact textual traversal notation, whitespace-insensitive:
//
//   pipeline := step ('|' step)*
//   step     := 'outE' | 'inE' | 'outV' | 'inV'
//             | 'props' '(' key ')'
//             | 'labelFilter' '(' polarity ',' label ')'
//             | 'propFilter' '(' polarity ',' key ',' cmp ',' value ')'
//             | 'elemFilter' '(' polarity ',' kind ':' id ')'
//   polarity := '+' | '-'
//   cmp      := '=' | '!=' | '<' | '<=' | '>' | '>='
//   kind     := 'v' | 'e'
//
// Values follow the graph text format (integers, floats, true/false, quoted
// strings); an unquoted word that parses as none of those is taken as a
// string. Example: outE | labelFilter(+,friend) | inV | props(name)

/// Parses a pipeline into a composed traversal. Throws ParseError on syntax
/// errors and Error(KindMismatch) on incompatible step chains.
Traversal parse_pipeline(std::string_view text);

/// Parses a value written on the command line: integers, floats, true/false,
/// otherwise the raw text as a string (surrounding quotes stripped).
PropertyValue parse_cli_value(std::string_view text);

}  // namespace pgraph
