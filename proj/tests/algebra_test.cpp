#include <doctest.h>

#include "support/oracles.hpp"
#include "termrw/algebra.hpp"
#include "termrw/dsl.hpp"

using namespace termrw;
using dsl::parse_term;

namespace {

Rational canonical(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("expand distributes and folds") {
    CHECK(expand(parse_term("z*(a + b)")) == parse_term("z*a + z*b"));
    CHECK(expand(parse_term("1/epsilon*(epsilon*x)")) == parse_term("x"));
    CHECK(expand(parse_term("1*x")) == parse_term("x"));
    CHECK(expand(parse_term("0 + x")) == parse_term("x"));
    CHECK(expand(parse_term("epsilon^2*epsilon^-2*y")) == parse_term("y"));
}

TEST_CASE("expand leaves sums uncollected") {
    Term t = expand(parse_term("x + x"));
    CHECK(t.has_head("plus"));
}

TEST_CASE("simplify collects like terms") {
    CHECK(simplify(parse_term("x - x")) == Term::number(0));
    CHECK(simplify(parse_term("2*a*b + 3*b*a")) == parse_term("5*a*b"));
    CHECK(simplify(parse_term("(a + b)^2 - a^2 - b^2")) == parse_term("2*a*b"));
    CHECK(simplify(parse_term("f(x + x)")) == parse_term("f(2*x)"));
}

TEST_CASE("simplify keeps O(eps) terms apart") {
    Term t = simplify(parse_term("1/epsilon*(Tstar(w) + epsilon*dot(y, Tstar(grad(x, w))) + epsilon*Oeps(3))"));
    CHECK(t == parse_term("1/epsilon*Tstar(w) + dot(y, Tstar(grad(x, w))) + Oeps(3)"));
    Term fresh = simplify(parse_term("Oeps + Oeps"));
    CHECK(fresh.has_head("plus"));
    CHECK(fresh.arity() == 2);
}

TEST_CASE("simplify is idempotent on random terms") {
    testing::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Term t = testing::random_algebraic(rng, 4);
        Term s = simplify(t);
        CAPTURE(dsl::render_term(t));
        CHECK(simplify(s) == s);
    }
}

TEST_CASE("simplify preserves numeric value") {
    testing::Rng rng(12);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        Term t = testing::random_algebraic(rng, 4);
        std::map<std::string, Rational> env{
            {"a", canonical(static_cast<long>(rng() % 7) + 2, 3)},
            {"b", canonical(-static_cast<long>(rng() % 5) - 1, 2)},
            {"epsilon", canonical(static_cast<long>(rng() % 9) + 1, 7)},
        };
        auto before = testing::evaluate(t, env);
        if (!before) continue;
        auto after = testing::evaluate(simplify(t), env);
        CAPTURE(dsl::render_term(t));
        REQUIRE(after);
        CHECK(*before == *after);
        ++checked;
    }
    CHECK(checked > 1000);
}
