#include "termrw/algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace termrw {

namespace {

struct Factor {
    Term base;
    long exponent;
};

struct Monomial {
    Rational coefficient{1};
    std::vector<Factor> factors;  // sorted by base, marker-bearing bases never merged
    bool unique = false;          // carries a fresh marker: never collected
};

using Poly = std::vector<Monomial>;

constexpr long max_expanded_power = 8;

bool mergeable(const Term& base) { return !contains_fresh_marker(base); }

void add_factor(Monomial& m, const Term& base, long exponent) {
    if (exponent == 0) return;
    if (mergeable(base)) {
        for (auto it = m.factors.begin(); it != m.factors.end(); ++it) {
            if (it->base == base) {
                it->exponent += exponent;
                if (it->exponent == 0) m.factors.erase(it);
                return;
            }
        }
    } else {
        m.unique = true;
    }
    auto pos = std::upper_bound(m.factors.begin(), m.factors.end(), base,
                                [](const Term& b, const Factor& f) { return compare(b, f.base) < 0; });
    m.factors.insert(pos, Factor{base, exponent});
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    out.coefficient *= b.coefficient;
    out.unique = a.unique || b.unique;
    for (const auto& f : b.factors) add_factor(out, f.base, f.exponent);
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) out.push_back(multiply(x, y));
    }
    return out;
}

Poly constant_poly(const Rational& c) {
    Monomial m;
    m.coefficient = c;
    return {m};
}

Poly atom_poly(const Term& base, long exponent = 1) {
    Monomial m;
    add_factor(m, base, exponent);
    return {m};
}

std::optional<Rational> rational_power(const Rational& base, long exponent) {
    if (exponent < 0 && base == 0) return std::nullopt;
    Rational result = 1;
    Rational b = exponent < 0 ? Rational(1) / base : base;
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) result *= b;
    return result;
}

std::optional<long> small_integer(const Term& t) {
    if (!t.is_number() || t.value().get_den() != 1) return std::nullopt;
    if (!t.value().get_num().fits_slong_p()) return std::nullopt;
    return t.value().get_num().get_si();
}

Term simplify_inside(const Term& t, bool collect);
Term rebuild(const Poly& p);
Poly collect_like(const Poly& p);

Poly power_poly(const Poly& base, long n) {
    Poly out = constant_poly(1);
    for (long i = 0; i < n; ++i) out = multiply(out, base);
    return out;
}

Poly expand_poly(const Term& t, bool collect) {
    if (t.is_number()) return constant_poly(t.value());
    if (t.has_head(sym::plus)) {
        Poly out;
        for (const auto& a : t.args()) {
            Poly pa = expand_poly(a, collect);
            out.insert(out.end(), pa.begin(), pa.end());
        }
        return out;
    }
    if (t.has_head(sym::times)) {
        Poly out = constant_poly(1);
        for (const auto& a : t.args()) out = multiply(out, expand_poly(a, collect));
        return out;
    }
    if (t.has_head(sym::pow) && t.arity() == 2) {
        if (auto n = small_integer(t.arg(1))) {
            Poly base = expand_poly(t.arg(0), collect);
            if (collect) base = collect_like(base);
            if (base.size() == 1) {
                const Monomial& m = base.front();
                auto c = rational_power(m.coefficient, *n);
                if (c && !m.unique) {
                    // a factor may come back with a positive exponent over a sum
                    Poly out = constant_poly(*c);
                    for (const auto& f : m.factors) {
                        const long e = f.exponent * *n;
                        if (f.base.has_head(sym::plus) && e > 0 && e <= max_expanded_power) {
                            out = multiply(out, power_poly(expand_poly(f.base, collect), e));
                        } else {
                            out = multiply(out, atom_poly(f.base, e));
                        }
                    }
                    return out;
                }
            } else if (*n >= 0 && *n <= max_expanded_power) {
                return power_poly(base, *n);
            }
            if (base.empty()) return *n == 0 ? constant_poly(1) : atom_poly(Term::number(0), *n);
            return atom_poly(rebuild(base), *n);
        }
    }
    return atom_poly(simplify_inside(t, collect));
}

Poly collect_like(const Poly& p) {
    using Key = std::vector<std::pair<Term, long>>;
    std::map<Key, std::size_t> index;
    Poly out;
    for (const auto& m : p) {
        if (m.coefficient == 0) continue;
        if (m.unique) {
            out.push_back(m);
            continue;
        }
        Key key;
        key.reserve(m.factors.size());
        for (const auto& f : m.factors) key.emplace_back(f.base, f.exponent);
        auto [it, inserted] = index.emplace(std::move(key), out.size());
        if (inserted) {
            out.push_back(m);
        } else {
            out[it->second].coefficient += m.coefficient;
        }
    }
    std::erase_if(out, [](const Monomial& m) { return m.coefficient == 0; });
    return out;
}

Term rebuild_monomial(const Monomial& m) {
    std::vector<Term> parts;
    parts.reserve(m.factors.size() + 1);
    if (m.coefficient != 1 || m.factors.empty()) parts.push_back(Term::number(m.coefficient));
    for (const auto& f : m.factors) parts.push_back(f.exponent == 1 ? f.base : power(f.base, f.exponent));
    return times(std::move(parts));
}

Term rebuild(const Poly& p) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& m : p) {
        if (m.coefficient == 0) continue;
        terms.push_back(rebuild_monomial(m));
    }
    return plus(std::move(terms));
}

Term simplify_inside(const Term& t, bool collect) {
    if (!t.is_app() || t.arity() == 0) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(collect ? simplify(a) : expand(a));
    if (t.head_is_variable()) return Term::head_var_app(t.name(), std::move(args));
    return Term::app(t.name(), std::move(args));
}

}  // namespace

Term expand(const Term& t) { return rebuild(expand_poly(canonicalize(t), false)); }

Term simplify(const Term& t) { return rebuild(collect_like(expand_poly(canonicalize(t), true))); }

}  // namespace termrw
