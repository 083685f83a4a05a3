#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mdim/expr.hpp"

using namespace mdim;

namespace {

std::size_t parse_error_offset(const std::string& text) {
    try {
        parse_graph_expr(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return 0;
}

}  // namespace

TEST_CASE("simple family expressions parse to descriptors") {
    CHECK(parse_graph_expr("path(5)").tree == desc::path(5));
    CHECK(parse_graph_expr("cycle(7)").tree == desc::cycle(7));
    CHECK(parse_graph_expr("kst(2,3)").tree == desc::kst(2, 3));
    CHECK(parse_graph_expr("wheel(6)").tree == desc::wheel(6));
}

TEST_CASE("nested expressions parse recursively") {
    CHECK(parse_graph_expr("corona(path(2), cycle(7))").tree ==
          desc::corona(desc::path(2), desc::cycle(7)));
    CHECK(parse_graph_expr("join(complete(1), union(complete(2), empty(1)))").tree ==
          desc::join(desc::complete(1),
                     desc::disjoint_union(desc::complete(2), desc::empty(1))));
    CHECK(parse_graph_expr("complement(cycle(5))").tree == desc::complement(desc::cycle(5)));
}

TEST_CASE("corona accepts an optional iteration count") {
    CHECK(parse_graph_expr("corona(path(2), complete(2))").tree.iterations == 1);
    const FamilyDescriptor d = parse_graph_expr("corona(path(2), complete(2), 2)").tree;
    CHECK(d.iterations == 2);
    CHECK(d == desc::corona(desc::path(2), desc::complete(2), 2));
}

TEST_CASE("identifiers are case-insensitive and whitespace is free") {
    CHECK(parse_graph_expr("  Corona( PATH(2) ,cycle( 7 ) ) ").tree ==
          desc::corona(desc::path(2), desc::cycle(7)));
    CHECK(parse_graph_expr("WHEEL(5)").tree == desc::wheel(5));
}

TEST_CASE("the original text is preserved") {
    const GraphExpression e = parse_graph_expr("  wheel( 5 )");
    CHECK(e.text == "  wheel( 5 )");
}

TEST_CASE("printing a descriptor yields canonical text") {
    CHECK(print_descriptor(desc::corona(desc::path(2), desc::cycle(7))) ==
          "corona(path(2), cycle(7))");
    CHECK(print_descriptor(desc::corona(desc::path(2), desc::complete(2), 2)) ==
          "corona(path(2), complete(2), 2)");
    CHECK(print_descriptor(desc::kst(2, 3)) == "kst(2, 3)");
    CHECK(print_descriptor(desc::disjoint_union(desc::path(2), desc::empty(1))) ==
          "union(path(2), empty(1))");
}

TEST_CASE("printed descriptors reparse to the identical tree") {
    const std::vector<FamilyDescriptor> cases{
        desc::path(9),
        desc::corona(desc::path(2), desc::cycle(7)),
        desc::corona(desc::wheel(4), desc::star(3), 3),
        desc::join(desc::complete(1), desc::complement(desc::cycle(6))),
        desc::disjoint_union(desc::kst(1, 2), desc::empty(2)),
    };
    for (const FamilyDescriptor& d : cases) CHECK(parse_graph_expr(print_descriptor(d)).tree == d);
}

TEST_CASE("syntax errors carry one-based byte offsets") {
    CHECK(parse_error_offset("corona(path(2),") == 16);
    CHECK(parse_error_offset("care(3)") == 1);
    CHECK(parse_error_offset("path(2))") == 8);
    CHECK(parse_error_offset("path(9999999999)") == 6);
    CHECK(parse_error_offset("path(cycle(3))") == 6);
    CHECK_THROWS_AS(parse_graph_expr("corona(path(2),"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr(""), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("path(-1)"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("path 5"), ParseError);
}

TEST_CASE("arity mismatches are parse errors") {
    CHECK_THROWS_AS(parse_graph_expr("path(2, 3)"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("join(path(2))"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("kst(2)"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("corona(path(2), path(2), 2, 5)"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("complement(path(2), path(2))"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("join(2, 3)"), ParseError);
}

TEST_CASE("family constraints surface as parse errors with the ident's offset") {
    CHECK(parse_error_offset("cycle(2)") == 1);
    CHECK(parse_error_offset("join(path(2), cycle(1))") == 15);
    CHECK_THROWS_AS(parse_graph_expr("wheel(2)"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("corona(path(2), path(2), 0)"), ParseError);
}
