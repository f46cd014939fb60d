#pragma once

#include "termrw/term.hpp"

namespace termrw {

/// Sum-of-products form: products are distributed over sums, numeric
/// coefficients are folded, and powers of equal bases are merged
/// (x^a * x^b -> x^(a+b), x^0 -> 1). Sums are not collected. Applies
/// recursively inside the arguments of every other application.
Term expand(const Term& t);

/// expand() followed by collection of like terms: monomials with the same
/// non-numeric factor multiset have their coefficients added, and zero terms
/// are dropped. Idempotent. Oeps terms are never collapsed here; a factor
/// carrying the fresh-index marker is never merged with another one.
Term simplify(const Term& t);

}  // namespace termrw
