#pragma once

#include <vector>

#include "md/rational.hpp"

namespace md {

// Dense univariate polynomial over Q, ascending coefficients, no trailing
// zeros (zero polynomial = empty vector).
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
bool poly_is_zero(const Poly& p);
std::size_t poly_degree(const Poly& p);  // zero polynomial -> 0
Rat poly_eval(const Poly& p, const Rat& x);
Poly poly_derivative(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& s);
// quotient and remainder of a by b (b nonzero)
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
// monic gcd
Poly poly_gcd(Poly a, Poly b);

// Product of the square-free factors of odd multiplicity (Yun decomposition);
// exactly the locus where p changes sign.
Poly odd_multiplicity_part(const Poly& p);

// Sturm chain of a polynomial (square-free input expected for exact counts).
std::vector<Poly> sturm_chain(const Poly& p);

// Sign changes of the chain at x, zero entries skipped. For square-free p,
// changes(a) - changes(b) = number of roots in (a, b], valid even when a or b
// is itself a root.
std::size_t sturm_sign_changes(const std::vector<Poly>& chain, const Rat& x);

// Distinct roots of square-free p in the half-open interval (a, b].
std::size_t count_roots_halfopen(const Poly& p, const Rat& a, const Rat& b);

}  // namespace md
