// Classical and generalized Igusa functions, their functional equations, and
// the radical-decomposition identity between weak order zeta functions.

#pragma once

#include <map>

#include "igusa/gaussian.hpp"
#include "igusa/rational_function.hpp"
#include "igusa/subword.hpp"

namespace igusa::igusafn {

using combinat::Composition;
using combinat::Flag;
using combinat::Subword;
using exactalg::Monomial;
using exactalg::Polynomial;
using exactalg::RationalFunction;

// I_n(Y; X) = 1/(1-X_n) sum_{I subset [n-1]} binom(n, I)_Y prod_{i in I} X_i/(1-X_i).
// Y and the X_i are monomial values (abstract variables or numerical data).
RationalFunction igusa_I(int n, const Monomial& Y, const std::vector<Monomial>& X);

// The circle variant, with leading factor X_n/(1-X_n) instead of 1/(1-X_n).
RationalFunction igusa_I_circ(int n, const Monomial& Y, const std::vector<Monomial>& X);

// I^wo_nbar(Y; X) = sum over flags V of binom(nbar, V)_Y W_V(X); the Y are
// per-component monomials and X assigns a monomial to every nonempty subword.
RationalFunction generalized_igusa(const Composition& nbar, const std::vector<Monomial>& Y,
                                   const std::function<Monomial(const Subword&)>& X);

// Abstract-variable convenience: Y_i and X_v are fresh variables named after
// the composition; returns the function together with the variable tables.
struct AbstractIgusa {
    RationalFunction fn;
    std::vector<exactalg::VarId> Y;
    std::map<Subword, exactalg::VarId> X;
};
AbstractIgusa generalized_igusa_abstract(const Composition& nbar);

// Verifies Theorem-level reciprocity
//   I^wo(Y^{-1}; X^{-1}) = (-1)^N X_{full} (prod Y_i^{-C(n_i,2)}) I^wo(Y; X)
// exactly.  Compositions whose subword count stays within `dense_bound` are
// checked by direct expansion and cross-multiplication; on top of that the
// identity is always checked flag by flag against the W_V basis, which stays
// exact while avoiding the exponential common denominator.  Flag counts grow
// super-exponentially, so compositions with N above `sum_bound` are rejected.
bool check_genigusa_funeq(const Composition& nbar, size_t dense_bound = 17, int sum_bound = 8);

// Proposition-level identity between weak order zeta functions: for data
// satisfying y_r = y_{sqrt r} * prod_{i in I' u I''} y_{a_i},
//   I^wo_{2g}(y) = prod_i (1+y_{a_i})/(1-y_{a_i}) * I^wo_g(z),
// with z indexed by radical words.  Throws std::domain_error when the data
// violate the hypothesis.
bool igusas_match_check(int g, const std::map<Subword, Monomial>& y);

}  // namespace igusa::igusafn
