#include <doctest.h>

#include "termrw/dsl.hpp"
#include "termrw/term.hpp"

using namespace termrw;

namespace {
Term c(const char* n) { return Term::constant(n); }
Term f(std::vector<Term> args) { return Term::app("f", std::move(args)); }
}  // namespace

TEST_CASE("ac heads are flattened and sorted") {
    Term a = c("a"), b = c("b"), cc = c("c");
    CHECK(plus({a, plus({b, cc})}) == Term::raw_app("plus", {a, b, cc}));
    CHECK(plus({b, a}) == plus({a, b}));
    CHECK(times({cc, times({b, a})}).arity() == 3);
    CHECK(plus({a}) == a);
    CHECK(plus({}) == Term::number(0));
    CHECK(times({}) == Term::number(1));
}

TEST_CASE("canonical order puts numbers first and variables last") {
    Term t = plus({Term::variable("X"), c("a"), Term::number(3)});
    REQUIRE(t.arity() == 3);
    CHECK(t.arg(0).is_number());
    CHECK(t.arg(1) == c("a"));
    CHECK(t.arg(2).is_variable());
}

TEST_CASE("canonicalization keeps identities") {
    Term x = c("x");
    CHECK(times({Term::number(1), x}) != x);
    CHECK_FALSE(equal(times({Term::number(1), x}), x));
    CHECK(equal(plus({c("a"), c("b")}), plus({c("b"), c("a")})));
}

TEST_CASE("canonicalize rebuilds raw applications") {
    Term raw = Term::raw_app("plus", {c("b"), Term::raw_app("plus", {c("c"), c("a")})});
    CHECK(canonicalize(raw) == plus({c("a"), c("b"), c("c")}));
    CHECK(canonicalize(canonicalize(raw)) == canonicalize(raw));
}

TEST_CASE("indexed O(eps) terms") {
    CHECK(oeps(1) != oeps(2));
    CHECK(equiv_mod_oeps(oeps(3), oeps(7)));
    CHECK(equiv_mod_oeps(plus({c("a"), oeps(1)}), plus({oeps(9), c("a")})));
    CHECK_FALSE(equiv_mod_oeps(oeps(1), epsilon()));
    CHECK(is_fresh_oeps(oeps_fresh()));
    CHECK_FALSE(is_fresh_oeps(oeps(0)));
    CHECK(contains_fresh_marker(f({oeps_fresh()})));
}

TEST_CASE("symbol count") {
    CHECK(symbol_count(c("a")) == 1);
    CHECK(symbol_count(plus({oeps(1), oeps(2)})) == 5);
    CHECK(symbol_count(f({c("a"), c("b")})) == 3);
}

TEST_CASE("free variables include head variables") {
    Term t = Term::head_var_app("F", {Term::variable("X"), c("a")});
    CHECK(free_variables(t) == std::set<std::string>{"F", "X"});
    CHECK_FALSE(contains_variables(f({c("a")})));
}

TEST_CASE("negation is a product with -1") {
    CHECK(dsl::parse_term("-x") == times({Term::number(-1), c("x")}));
    CHECK(negate(Term::number(2)) == Term::number(-2));
}
