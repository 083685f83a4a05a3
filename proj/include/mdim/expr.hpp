#pragma once

#include <string>
#include <string_view>

#include "mdim/graph.hpp"

namespace mdim {

struct GraphExpression {
    std::string text;        // the input as given
    FamilyDescriptor tree;
};

// Parses "ident(arg, ...)" where idents (case-insensitive) are path, cycle,
// complete, empty, kst, star, wheel, fan, join, union, complement and
// corona; corona takes an optional third integer k. Whitespace between
// tokens is ignored. Throws ParseError with a 1-based byte offset on syntax
// errors, unknown identifiers, arity mismatches and family-constraint
// violations.
GraphExpression parse_graph_expr(std::string_view text);

// Canonical text form; parse_graph_expr(print_descriptor(d)).tree == d.
std::string print_descriptor(const FamilyDescriptor& d);

}  // namespace mdim
