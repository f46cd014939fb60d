#include <doctest.h>

#include <thread>

#include "support/oracles.hpp"
#include "termrw/dsl.hpp"
#include "termrw/error.hpp"
#include "termrw/strategy.hpp"

using namespace termrw;
using dsl::parse_term;

namespace {

Strategy rewrite(const char* lhs, const char* rhs) {
    return transform(make_rule(std::string(lhs) + "->" + rhs, parse_term(lhs), parse_term(rhs)));
}

Strategy integral_linearity() {
    return transform(make_rule("IntegralLinearity", parse_term("Integral(A_ + B_, C_)"),
                               parse_term("Integral(A, C) + Integral(B, C)")));
}

const char* t_text = "Integral(v(x) + w(x), [x])";
const char* split_text = "Integral(v(x), [x]) + Integral(w(x), [x])";

}  // namespace

TEST_CASE("identity and fail") {
    for (const char* s : {"a", "f(a, b)", "Oeps(1)", "0"}) {
        CHECK(*identity()(parse_term(s)) == parse_term(s));
        CHECK_FALSE(fail()(parse_term(s)));
    }
}

TEST_CASE("identity_as_fail and fail_as_identity") {
    Term a = parse_term("a");
    CHECK_FALSE(identity_as_fail(identity())(a));
    CHECK(*identity_as_fail(rewrite("a", "b"))(a) == parse_term("b"));
    CHECK_FALSE(identity_as_fail(rewrite("a", "a"))(a));
    CHECK(*fail_as_identity(fail())(a) == a);
    CHECK(*fail_as_identity(rewrite("a", "b"))(a) == parse_term("b"));
    CHECK(*fail_as_identity(rewrite("a", "b"))(parse_term("c")) == parse_term("c"));
}

TEST_CASE("all rewrites the immediate subterms") {
    Term t = parse_term(std::string(t_text) + " + 2");
    CHECK(*all(integral_linearity())(t) == parse_term(std::string(split_text) + " + 2"));
    CHECK(*all(fail())(parse_term("f(a, b)")) == parse_term("f(a, b)"));
    CHECK(*all(rewrite("a", "b"))(parse_term("c")) == parse_term("c"));
}

TEST_CASE("top_down") {
    std::string t = t_text;
    Term subject = parse_term(t + "*" + t + " + 2");
    std::string s = std::string("(") + split_text + ")";
    CHECK(*top_down(integral_linearity())(subject) == parse_term(s + "*" + s + " + 2"));
    CHECK(*top_down(rewrite("a", "b"))(parse_term("f(a, g(a))")) == parse_term("f(b, g(b))"));
    CHECK(*top_down(fail())(parse_term("f(a)")) == parse_term("f(a)"));
}

TEST_CASE("top_down rewrites every occurrence") {
    testing::Rng rng(3);
    testing::TermShape shape;
    shape.oeps = false;
    for (int i = 0; i < 300; ++i) {
        Term t = testing::random_term(rng, shape);
        Term out = *top_down(rewrite("a", "q"))(t);
        CHECK_FALSE(contains_match(parse_term("a"), out));
    }
}

TEST_CASE("exist_child and bottom_up") {
    CHECK(exist_child(rewrite("a", "b"), parse_term("f(a)")));
    CHECK_FALSE(exist_child(rewrite("a", "b"), parse_term("a")));
    CHECK(exist_child(identity(), parse_term("f(a)")));
    CHECK(*bottom_up(rewrite("a", "b"))(parse_term("f(a)")) == parse_term("f(b)"));
    CHECK(*bottom_up(rewrite("a", "b"))(parse_term("a")) == parse_term("b"));
    CHECK(*bottom_up(fail())(parse_term("f(a, b)")) == parse_term("f(a, b)"));
    // the root is not revisited once a child changed
    CHECK(*bottom_up(rewrite("f(b)", "c"))(parse_term("f(a)")) == parse_term("f(a)"));
}

TEST_CASE("left_choice") {
    Term a = parse_term("a");
    CHECK(*left_choice({fail(), rewrite("a", "b")})(a) == parse_term("b"));
    CHECK(*left_choice({})(parse_term("f(a)")) == parse_term("f(a)"));
    CHECK(*left_choice({rewrite("a", "b"), rewrite("a", "c")})(a) == parse_term("b"));
}

TEST_CASE("comp") {
    Term a = parse_term("a");
    CHECK(*comp({rewrite("a", "b"), rewrite("b", "c")})(a) == parse_term("c"));
    CHECK_FALSE(comp({fail(), identity()})(a));
    CHECK(*comp({})(parse_term("f(a)")) == parse_term("f(a)"));
}

TEST_CASE("normalizer") {
    auto out = normalizer(top_down(integral_linearity()))(parse_term("Integral(v(x) + w(x) + z(x), [x])"));
    REQUIRE(out);
    CHECK(*out == parse_term("Integral(v(x), [x]) + Integral(w(x), [x]) + Integral(z(x), [x])"));
    CHECK_FALSE(normalizer(integral_linearity())(parse_term(t_text)));
    CHECK(*normalizer(identity())(parse_term("a")) == parse_term("a"));
}

TEST_CASE("deadline stops a diverging normalizer") {
    Strategy grow = top_down(rewrite("f(X_)", "f(g(X))"));
    ScopedDeadline d(std::chrono::steady_clock::now() + std::chrono::milliseconds(5));
    CHECK_THROWS_AS(normalizer(grow)(parse_term("f(a)")), TimeLimitExceeded);
}

TEST_CASE("descriptions") {
    CHECK(top_down(left_choice({identity(), fail()})).description() == "TopDown(LeftChoice([Identity, Fail]))");
}
