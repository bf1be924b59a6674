#include "igusa/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace igusa::exactalg {

Rat rat_pow(const Rat& value, std::int64_t e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    std::uint64_t k = neg ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Rat base = value;
    if (neg) {
        if (value == 0) throw std::domain_error("rat_pow: 0 to a negative power");
        base = 1 / value;
    }
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool Polynomial::is_one() const {
    return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1;
}

bool Polynomial::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

Rat Polynomial::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
    Polynomial r;
    for (auto& [mm, c] : t_) r.t_.emplace(mm * m, c);
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    if (c == 0) return Polynomial();
    Polynomial r;
    for (auto& [m, cc] : t_) r.t_.emplace(m, cc * c);
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::domain_error("Polynomial::pow: negative exponent");
    Polynomial r(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

Polynomial Polynomial::invert_vars(const std::set<VarId>& vars) const {
    Polynomial r;
    for (auto& [m, c] : t_) r.t_.emplace(m.invert_vars(vars), c);
    return r;
}

Polynomial Polynomial::substitute(VarId v, const Monomial& replacement) const {
    Polynomial r;
    for (auto& [m, c] : t_) r.add_term(m.substitute(v, replacement), c);
    return r;
}

Polynomial Polynomial::substitute_value(VarId v, const Rat& value) const {
    Polynomial r;
    for (auto& [m, c] : t_) {
        std::int64_t e = m.exponent(v);
        if (e == 0) {
            r.add_term(m, c);
        } else {
            Monomial rest = m.substitute(v, Monomial::one());
            r.add_term(rest, c * rat_pow(value, e));
        }
    }
    return r;
}

Rat Polynomial::evaluate(const std::map<VarId, Rat>& assignment) const {
    Rat acc(0);
    for (auto& [m, c] : t_) {
        Rat term = c;
        for (auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::domain_error("evaluate: unassigned variable " + var_name(v));
            term *= rat_pow(it->second, e);
        }
        acc += term;
    }
    return acc;
}

// Exact division by (1 - m).  Writing p = sum over chains mu0 * m^j, the
// identity (1 - m) h = p decouples per chain into h_j - h_{j-1} = p_j, so
// h_j is the prefix sum of the p_i; the division is exact iff every chain
// sums to zero.
std::optional<Polynomial> Polynomial::divide_by_binomial(const Monomial& m) const {
    if (m.is_one() || !m.all_nonnegative() || m.total_degree() <= 0)
        throw std::domain_error("divide_by_binomial: factor must be 1 - m with m != 1, exponents >= 0");
    if (is_zero()) return Polynomial();

    VarId pivot = m.exponents().front().first;
    std::int64_t a0 = m.exponents().front().second;

    struct Chain {
        std::vector<std::pair<std::int64_t, Rat>> entries;  // (j, coefficient)
    };
    std::map<Monomial, Chain> chains;
    for (auto& [mono, c] : t_) {
        std::int64_t e = mono.exponent(pivot);
        // floor division of e by a0 (a0 > 0)
        std::int64_t j = e >= 0 ? e / a0 : -((-e + a0 - 1) / a0);
        Monomial key = mono * m.pow(-j);
        chains[key].entries.emplace_back(j, c);
    }

    Polynomial h;
    for (auto& [key, chain] : chains) {
        auto& es = chain.entries;
        std::sort(es.begin(), es.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        Rat acc(0);
        for (size_t i = 0; i < es.size(); ++i) {
            acc += es[i].second;
            if (acc != 0) {
                if (i + 1 == es.size()) return std::nullopt;  // chain does not close
                std::int64_t jnext = es[i + 1].first;
                // h_j = acc for j in [es[i].first, jnext)
                for (std::int64_t j = es[i].first; j < jnext; ++j)
                    h.add_term(key * m.pow(j), acc);
            }
        }
    }
    return h;
}

std::optional<Polynomial> Polynomial::divide_by_geometric_sum(const Monomial& u, int l) const {
    if (u.is_one() || !u.all_nonnegative() || u.total_degree() <= 0 || l < 1)
        throw std::domain_error("divide_by_geometric_sum: need u != 1 with exponents >= 0 and l >= 1");
    if (l == 1) return *this;
    if (is_zero()) return Polynomial();

    VarId pivot = u.exponents().front().first;
    std::int64_t a0 = u.exponents().front().second;
    std::map<Monomial, std::map<std::int64_t, Rat>> chains;
    for (auto& [mono, c] : t_) {
        std::int64_t e = mono.exponent(pivot);
        std::int64_t j = e >= 0 ? e / a0 : -((-e + a0 - 1) / a0);
        chains[mono * u.pow(-j)][j] = c;
    }

    Polynomial h;
    for (auto& [key, p] : chains) {
        // p = h * (1 + u + ... + u^{l-1}) along the chain: solve the linear
        // recurrence h_j = p_j - h_{j-1} - ... - h_{j-l+1} bottom-up.
        std::int64_t jmin = p.begin()->first, jmax = p.rbegin()->first;
        std::map<std::int64_t, Rat> hc;
        auto at = [](const std::map<std::int64_t, Rat>& m, std::int64_t j) {
            auto it = m.find(j);
            return it == m.end() ? Rat(0) : it->second;
        };
        for (std::int64_t j = jmin; j <= jmax; ++j) {
            Rat v = at(p, j);
            for (int i = 1; i < l && i <= j - jmin; ++i) v -= at(hc, j - i);
            if (v != 0) hc[j] = v;
        }
        for (std::int64_t j = std::max(jmin, jmax - l + 2); j <= jmax; ++j)
            if (at(hc, j) != 0) return std::nullopt;
        for (auto& [j, v] : hc) h.add_term(key * u.pow(j), v);
    }
    return h;
}

std::int64_t Polynomial::min_exponent(VarId v) const {
    std::int64_t best = 0;
    bool first = true;
    for (auto& [m, c] : t_) {
        std::int64_t e = m.exponent(v);
        if (first || e < best) best = e, first = false;
    }
    return best;
}

std::int64_t Polynomial::max_exponent(VarId v) const {
    std::int64_t best = 0;
    bool first = true;
    for (auto& [m, c] : t_) {
        std::int64_t e = m.exponent(v);
        if (first || e > best) best = e, first = false;
    }
    return best;
}

Polynomial Polynomial::coefficient_of(VarId v, std::int64_t k) const {
    Polynomial r;
    for (auto& [m, c] : t_)
        if (m.exponent(v) == k) r.add_term(m.substitute(v, Monomial::one()), c);
    return r;
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> vs;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m.exponents()) vs.insert(v);
    return vs;
}

}  // namespace igusa::exactalg
