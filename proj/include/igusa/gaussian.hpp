// Gaussian binomials and multinomials, the Birkhoff subgroup-counting
// polynomial alpha, and the sublattice-counting polynomial beta.

#pragma once

#include <set>

#include "igusa/partition.hpp"
#include "igusa/polynomial.hpp"

namespace igusa::combinat {

using exactalg::Monomial;
using exactalg::Polynomial;
using exactalg::VarId;

// binom(a, b)_Y = prod_{i=a-b+1}^{a} (1 - Y^i) / prod_{i=1}^{b} (1 - Y^i),
// an honest polynomial in Y.  Requires a >= b >= 0.
Polynomial gauss_binom(int a, int b, VarId y);

// binom(n, J)_Y = binom(n, j_r)_Y binom(j_r, j_{r-1})_Y ... for
// J = {j_1 < ... < j_r}.  Elements 0 and n are allowed and contribute
// trivial factors; elements outside [0, n] are rejected.
Polynomial gauss_multinom(int n, const std::set<int>& J, VarId y);

// Same, evaluated at a monomial value for Y (e.g. q^{-f}).
Polynomial gauss_binom_at(int a, int b, const Monomial& y);
Polynomial gauss_multinom_at(int n, const std::set<int>& J, const Monomial& y);

// Birkhoff polynomial alpha(lambda, mu; Y): counts (at Y = p) the subgroups
// of type mu inside a finite abelian p-group of type lambda.  The epsilon-
// padded variant replaces lambda by lambda with `eps` extra parts of value
// max(lambda_1, mu_1) + 1; the result does not depend on the padding value.
// Throws when mu is not dominated by the padded lambda.
Polynomial birkhoff_alpha(const Partition& lambda, const Partition& mu, VarId y, int eps = 0);
// Padding value chosen explicitly (used to assert padding independence).
Polynomial birkhoff_alpha_padded(const Partition& lambda, const Partition& mu, VarId y, int eps,
                                 std::int64_t pad_value);

// beta(nu; Y) = binom(N, J_nu)_{Y^{-1}} Y^{sum d(N-d)(nu_d - nu_{d+1})}:
// counts sublattices of o^N of elementary divisor type nu.
Polynomial beta_poly(const Partition& nu, VarId y);

}  // namespace igusa::combinat
