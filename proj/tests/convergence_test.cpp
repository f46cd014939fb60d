#include <doctest.h>

#include "support/oracles.hpp"
#include "termrw/convergence.hpp"
#include "termrw/dsl.hpp"
#include "termrw/error.hpp"

using namespace termrw;
using dsl::parse_term;

namespace {

void declare(Session& s) {
    for (const char* n : {"u", "v", "x", "y"}) s.declare_bounded(n);
}

std::set<long> oeps_indexes(const Term& t) {
    std::set<long> out;
    any_subterm(t, [&](const Term& n) {
        if (is_oeps(n) && n.arg(0).is_number()) out.insert(n.arg(0).value().get_num().get_si());
        return false;
    });
    return out;
}

std::size_t oeps_count(const Term& t) {
    std::size_t n = 0;
    any_subterm(t, [&](const Term& s) {
        n += is_oeps(s) ? 1 : 0;
        return false;
    });
    return n;
}

}  // namespace

TEST_CASE("fresh indexes") {
    Session s;
    CHECK(s.fresh_index() == 0);
    CHECK(s.fresh_index() == 1);
    CHECK(s.fresh_index() == 2);
}

TEST_CASE("eval_fresh") {
    Session s;
    CHECK(*eval_fresh(s)(oeps_fresh()) == oeps(0));
    CHECK(*eval_fresh(s)(oeps_fresh()) == oeps(1));
    CHECK_FALSE(eval_fresh(s)(oeps(3)));
    CHECK_FALSE(eval_fresh(s)(parse_term("a + Oeps")));
}

TEST_CASE("lifted rules emit distinct indexes") {
    Session s;
    declare(s);
    Rule neg = make_rule("neg", parse_term("-1*Oeps(i_)"), parse_term("Oeps"));
    auto lifted = lift_oeps_rule(s, neg);
    auto k1 = lifted(parse_term("-Oeps(1)"));
    auto k2 = lifted(parse_term("-Oeps(1)"));
    REQUIRE(k1);
    REQUIRE(k2);
    CHECK(*k1 != *k2);

    Rule b1 = make_rule("ApproximationB1", parse_term("B(w_)"), parse_term("Tstar(w) + Oeps"));
    CHECK(*lift_oeps_rule(s, b1)(parse_term("B(w)")) == parse_term("Tstar(w) + Oeps(2)"));
    CHECK_FALSE(lift_oeps_rule(s, b1)(parse_term("C(w)")));
}

TEST_CASE("a rule applied n times yields n distinct indexes") {
    Session s;
    Rule b1 = make_rule("ApproximationB1", parse_term("B(w_)"), parse_term("Tstar(w) + Oeps"));
    Term t = parse_term("f(B(a), B(b), g(B(c), B(d)), B(e))");
    Term out = *top_down(lift_oeps_rule(s, b1))(t);
    CHECK(oeps_indexes(out).size() == 5);
    CHECK(oeps_count(out) == 5);
    CHECK(s.counter() == 5);
}

TEST_CASE("boundedness") {
    Session s;
    declare(s);
    CHECK(is_bounded(s, parse_term("dot(grad(x, u), v)")));
    CHECK_FALSE(is_bounded(s, parse_term("1/epsilon")));
    CHECK_FALSE(is_bounded(s, epsilon()));
    CHECK_FALSE(is_bounded(s, parse_term("w")));
    CHECK(is_bounded(s, parse_term("3*u*Oeps(2)")));
    CHECK_THROWS(s.declare_bounded("epsilon"));
}

TEST_CASE("the absorption rules") {
    Session s;
    declare(s);
    auto rules = convergence_rules(s);
    REQUIRE(rules.size() == 4);
    CHECK(rules[0](parse_term("-Oeps(5)")));
    CHECK(rules[1](parse_term("Oeps(1) + Oeps(2)")));
    auto merged = rules[1](parse_term("a + Oeps(1) + Oeps(2)"));
    REQUIRE(merged);
    CHECK(*merged == parse_term("a + Oeps(" + std::to_string(s.counter() - 1) + ")"));
    CHECK(rules[2](parse_term("Integral(Omega, Oeps(2), [dx])")));
    CHECK(rules[3](parse_term("u*Oeps(1)")));
    CHECK_FALSE(rules[3](parse_term("1/epsilon*Oeps(1)")));
}

TEST_CASE("convergence strategy") {
    Session s;
    declare(s);
    auto conv = convergence_strategy(s);
    Term out = *conv(parse_term("u*Oeps(1) + Integral(Omega, Oeps(2), [dx])"));
    CHECK(is_oeps(out));
    CHECK(*conv(parse_term("a + b")) == parse_term("a + b"));
    CHECK(is_oeps(*conv(parse_term("-Oeps(5)"))));
    CHECK(is_oeps(*conv(parse_term("Oeps(1) - Oeps(1)"))));
    Term kept = *conv(parse_term("epsilon*Oeps(1)"));
    CHECK(kept == parse_term("epsilon*Oeps(1)"));
}

TEST_CASE("convergence rules shrink terms and reach normal forms") {
    testing::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        Session s;
        declare(s);
        Term t = testing::random_oeps_term(rng, 5);
        auto rules = convergence_rules(s);
        any_subterm(t, [&](const Term& sub) {
            for (const auto& r : rules) {
                if (auto out = r(sub)) CHECK(symbol_count(*out) < symbol_count(sub));
            }
            return false;
        });
        Term nf = *convergence_strategy(s)(t);
        any_subterm(nf, [&](const Term& sub) {
            for (const auto& r : rules) CHECK_FALSE(r(sub));
            return false;
        });
        // fresh indexes never repeat inside the normal form
        std::map<long, int> seen;
        any_subterm(nf, [&](const Term& sub) {
            if (is_oeps(sub) && sub.arg(0).value() < 1000) ++seen[sub.arg(0).value().get_num().get_si()];
            return false;
        });
        for (const auto& [index, n] : seen) CHECK(n == 1);
    }
}
