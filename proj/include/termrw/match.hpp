#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "termrw/term.hpp"

namespace termrw {

/// Binding name (no trailing underscore) to term. Ordered so that printing
/// and iteration are deterministic.
using Substitution = std::map<std::string, Term>;

/// Visits the solutions of `pattern << subject` in enumeration order until
/// `visit` returns true. Returns whether a visit returned true.
///
/// Enumeration order: arguments are matched left to right. At an AC head the
/// non-variable pattern arguments are placed first, each on the earliest
/// unused subject argument that admits a solution; the variable arguments
/// then share the remaining subject arguments, every variable but the last
/// taking a non-empty subset (smallest first, then by position) and the last
/// absorbing everything left as one AC node. A head variable `f_(...)`
/// matches any application of the same arity and binds to the head symbol.
bool for_each_match(const Term& pattern, const Term& subject,
                    const std::function<bool(const Substitution&)>& visit);

/// First solution of `pattern << subject`, or nullopt when none exists.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

/// Applies `s` to a rule template: pattern variables and zero-arity
/// constants whose name is bound are replaced, as are application heads whose
/// name is bound to a constant. The result is canonical.
/// Throws UnboundVariable for a pattern variable outside the domain of `s`.
Term substitute(const Substitution& s, const Term& t);

/// True iff `pattern` matches some subterm of `subject`, `subject` included.
bool contains_match(const Term& pattern, const Term& subject);

}  // namespace termrw
