// Sparse Laurent monomials over an interned variable pool.
//
// A Monomial is a product prod v_i^{e_i} with integer (possibly negative)
// exponents; zero exponents are never stored.  Variables are interned
// process-wide so that a monomial is just a short sorted vector of
// (variable id, exponent) pairs.

#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace igusa::exactalg {

using VarId = std::int32_t;

// Interns `name`, returning a stable id.  Thread-safe.
VarId var(const std::string& name);
const std::string& var_name(VarId v);

class Monomial {
public:
    using Exponents = std::vector<std::pair<VarId, std::int64_t>>;

    Monomial() = default;
    static Monomial one() { return Monomial{}; }
    static Monomial of(VarId v, std::int64_t e = 1);
    // From unsorted / duplicate-carrying data; canonicalizes.
    static Monomial from_pairs(Exponents pairs);

    bool is_one() const { return e_.empty(); }
    std::int64_t exponent(VarId v) const;
    const Exponents& exponents() const { return e_; }
    std::int64_t total_degree() const;

    bool all_nonnegative() const;
    bool all_nonpositive() const;
    bool involves_any(const std::set<VarId>& vars) const;

    Monomial operator*(const Monomial& o) const;
    Monomial pow(std::int64_t k) const;
    Monomial inverse() const { return pow(-1); }
    // v -> v^{-1} for every v in `vars`.
    Monomial invert_vars(const std::set<VarId>& vars) const;
    // Substitute var -> replacement^exponent for one variable.
    Monomial substitute(VarId v, const Monomial& replacement) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    Exponents e_;  // sorted by VarId, exponents nonzero
};

}  // namespace igusa::exactalg
