// Exact sparse multivariate Laurent polynomials over arbitrary-precision
// rationals.  All arithmetic is exact; no coefficient is ever rounded and no
// zero coefficient is stored.

#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "igusa/monomial.hpp"

namespace igusa::exactalg {

using Rat = mpq_class;
using Int = mpz_class;

// value^e for a possibly negative exponent.
Rat rat_pow(const Rat& value, std::int64_t e);

class Polynomial {
public:
    using Terms = std::map<Monomial, Rat>;

    Polynomial() = default;
    Polynomial(long c) { add_term(Monomial::one(), Rat(c)); }
    Polynomial(const Rat& c) { add_term(Monomial::one(), c); }
    explicit Polynomial(const Monomial& m) { add_term(m, Rat(1)); }
    static Polynomial variable(VarId v) { return Polynomial(Monomial::of(v)); }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }
    Rat coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator*(const Monomial& m) const;
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

    Polynomial pow(int k) const;  // k >= 0

    // v -> v^{-1} for every v in vars.
    Polynomial invert_vars(const std::set<VarId>& vars) const;
    // var -> monomial^exponent, applied termwise.
    Polynomial substitute(VarId v, const Monomial& replacement) const;
    // var -> rational value (folds v^e into the coefficient; e<0 needs value!=0).
    Polynomial substitute_value(VarId v, const Rat& value) const;
    // Full evaluation; every variable present must be assigned.
    Rat evaluate(const std::map<VarId, Rat>& assignment) const;

    // Exact division by (1 - m), m != 1 with nonnegative exponents and
    // positive total degree.  Returns nullopt when the division is inexact.
    std::optional<Polynomial> divide_by_binomial(const Monomial& m) const;

    // Exact division by 1 + u + ... + u^{l-1} (the cofactor of (1 - u) in
    // (1 - u^l)); same requirements on u.
    std::optional<Polynomial> divide_by_geometric_sum(const Monomial& u, int l) const;

    std::int64_t min_exponent(VarId v) const;
    std::int64_t max_exponent(VarId v) const;
    // Coefficient of v^k, a polynomial in the remaining variables.
    Polynomial coefficient_of(VarId v, std::int64_t k) const;
    std::set<VarId> variables() const;

private:
    Terms t_;
};

}  // namespace igusa::exactalg
