#pragma once

#include "termrw/rules.hpp"
#include "termrw/strategy.hpp"

namespace termrw {

/// Applies `s` only when some subterm of the input matches `pattern`;
/// otherwise fails.
Strategy inner_context(Term pattern, Strategy s);

/// Higher-order rewriting: plugs both sides of `rule` into `context`.
///
/// `context.lhs` must be a single pattern variable X. The new lhs is
/// context.rhs[X := rule.lhs], whose other pattern variables stay pattern
/// variables; the new rhs is context.rhs[X := rule.rhs] with those variables
/// turned into references. Both sides are algebraically simplified, with the
/// context's own variables kept as outer factors of a product. The guard and
/// the O(eps) flag come from `rule`. Throws BadContext.
Rule outer_context(const Rule& rule, const Rule& context);

}  // namespace termrw
