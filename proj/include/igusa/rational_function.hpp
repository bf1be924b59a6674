// Rational functions kept as a Laurent-polynomial numerator over a multiset
// of binomial denominator factors (1 - monomial).  Every formula assembled in
// this project is a sum of products of geometric progressions x/(1-x), so
// this representation keeps addition cheap and cancellation syntactic.
//
// Invariants: each denominator monomial is != 1, has nonnegative exponents
// and positive total degree.

#pragma once

#include <map>

#include "igusa/polynomial.hpp"
#include "igusa/series.hpp"

namespace igusa::exactalg {

class RationalFunction {
public:
    using Denominator = std::map<Monomial, int>;  // factor monomial -> multiplicity

    RationalFunction() = default;  // zero
    RationalFunction(long c) : num_(c) {}
    RationalFunction(const Rat& c) : num_(c) {}
    RationalFunction(const Polynomial& p) : num_(p) {}
    RationalFunction(Polynomial num, Denominator den);

    // x/(1-x); rejects x = 1.
    static RationalFunction gp(const Monomial& x);
    // 1/(1-x); rejects x = 1.
    static RationalFunction geometric(const Monomial& x);

    const Polynomial& numerator() const { return num_; }
    const Denominator& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction operator*(const Polynomial& p) const;
    RationalFunction operator*(const Monomial& m) const;
    RationalFunction operator*(const Rat& c) const;

    // Cancels denominator factors that divide the numerator exactly.
    void reduce();

    // v -> v^{-1} for the named variables, renormalized so that denominator
    // factors keep the original orientation via (1 - x^{-1}) = -x^{-1}(1 - x).
    RationalFunction invert_vars(const std::set<VarId>& vars) const;

    // var -> monomial substitution (e.g. q -> q^f).  Denominator factors must
    // remain nonconstant monomial binomials.
    RationalFunction substitute(VarId v, const Monomial& replacement) const;

    // Full numeric evaluation; reports a pole when a denominator factor
    // evaluates to 1.
    Rat evaluate(const std::map<VarId, Rat>& assignment) const;

    TruncatedSeries series_expand(VarId v, std::int64_t cutoff) const;

private:
    Polynomial num_;
    Denominator den_;
};

// Exact equality decided by cross-multiplication.
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

// Deterministic pairwise-tree sum; keeps intermediate numerators small.
RationalFunction rf_sum(std::vector<RationalFunction> terms);

}  // namespace igusa::exactalg
