#include "igusa/rational_function.hpp"

#include <numeric>
#include <stdexcept>

namespace igusa::exactalg {

namespace {

void check_factor(const Monomial& m) {
    if (m.is_one() || !m.all_nonnegative() || m.total_degree() <= 0)
        throw std::domain_error("denominator factor must be 1 - m with m != 1 and exponents >= 0");
}

Polynomial expand_factors(const RationalFunction::Denominator& den) {
    Polynomial p(1);
    for (auto& [m, mult] : den) {
        Polynomial f(1);
        f.add_term(m, Rat(-1));
        for (int i = 0; i < mult; ++i) p *= f;
    }
    return p;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Denominator den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (auto& [m, mult] : den_) {
        check_factor(m);
        if (mult <= 0) throw std::domain_error("denominator multiplicity must be positive");
    }
    if (num_.is_zero()) den_.clear();
}

RationalFunction RationalFunction::gp(const Monomial& x) {
    check_factor(x);
    RationalFunction r;
    r.num_ = Polynomial(x);
    r.den_[x] = 1;
    return r;
}

RationalFunction RationalFunction::geometric(const Monomial& x) {
    check_factor(x);
    RationalFunction r;
    r.num_ = Polynomial(1);
    r.den_[x] = 1;
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    RationalFunction r = *this;
    r += o;
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    RationalFunction r = *this;
    r += -o;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    // Common denominator: multiset maximum of the two factor multisets.
    Denominator common = den_;
    for (auto& [m, mult] : o.den_) {
        auto it = common.find(m);
        if (it == common.end())
            common[m] = mult;
        else
            it->second = std::max(it->second, mult);
    }
    Denominator extra_a, extra_b;
    for (auto& [m, mult] : common) {
        int da = mult - (den_.count(m) ? den_.at(m) : 0);
        int db = mult - (o.den_.count(m) ? o.den_.at(m) : 0);
        if (da > 0) extra_a[m] = da;
        if (db > 0) extra_b[m] = db;
    }
    num_ = num_ * expand_factors(extra_a) + o.num_ * expand_factors(extra_b);
    den_ = std::move(common);
    if (num_.is_zero()) den_.clear();
    reduce();
    return *this;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    RationalFunction r;
    if (is_zero() || o.is_zero()) return r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (auto& [m, mult] : o.den_) r.den_[m] += mult;
    r.reduce();
    return r;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    *this = *this * o;
    return *this;
}

RationalFunction RationalFunction::operator*(const Polynomial& p) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * p;
    if (r.num_.is_zero()) r.den_.clear();
    r.reduce();
    return r;
}

RationalFunction RationalFunction::operator*(const Monomial& m) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * m;
    return r;
}

RationalFunction RationalFunction::operator*(const Rat& c) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * c;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.divide_by_binomial(it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
    // Split factors 1 - u^l into 1 - u when the cofactor 1 + u + ... + u^{l-1}
    // divides the numerator; keeps displayed forms in lowest geometric terms.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end() && !changed; ++it) {
            const Monomial& m = it->first;
            std::int64_t g = 0;
            for (auto& [v, e] : m.exponents()) g = g ? std::gcd(g, e) : e;
            for (std::int64_t l = 2; l <= g && !changed; ++l) {
                if (g % l != 0) continue;
                Monomial::Exponents scaled;  // u = m^{1/l}
                for (auto& [v, e] : m.exponents()) scaled.emplace_back(v, e / l);
                Monomial u = Monomial::from_pairs(std::move(scaled));
                auto q = num_.divide_by_geometric_sum(u, static_cast<int>(l));
                if (!q) continue;
                num_ = std::move(*q);
                if (--it->second == 0) den_.erase(it);
                ++den_[u];
                changed = true;
            }
        }
    }
}

RationalFunction RationalFunction::invert_vars(const std::set<VarId>& vars) const {
    RationalFunction r;
    r.num_ = num_.invert_vars(vars);
    Polynomial scale(1);
    for (auto& [m, mult] : den_) {
        Monomial mi = m.invert_vars(vars);
        if (mi.all_nonnegative() && !mi.is_one()) {
            r.den_[mi] += mult;
        } else if (mi.inverse().all_nonnegative() && !mi.inverse().is_one()) {
            // 1/(1 - m^{-1}) = -m / (1 - m)
            Monomial mo = mi.inverse();
            r.den_[mo] += mult;
            Polynomial s;
            s.add_term(mo, Rat(-1));
            scale *= s.pow(mult);
        } else {
            throw std::domain_error(
                "invert_vars: factor acquires mixed exponent signs; invert all of its "
                "variables or none");
        }
    }
    r.num_ = r.num_ * scale;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RationalFunction RationalFunction::substitute(VarId v, const Monomial& replacement) const {
    RationalFunction r;
    r.num_ = num_.substitute(v, replacement);
    for (auto& [m, mult] : den_) {
        Monomial ms = m.substitute(v, replacement);
        check_factor(ms);
        r.den_[ms] += mult;
    }
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

Rat RationalFunction::evaluate(const std::map<VarId, Rat>& assignment) const {
    Rat value = num_.evaluate(assignment);
    for (auto& [m, mult] : den_) {
        Rat mv = Polynomial(m).evaluate(assignment);
        if (mv == 1) throw std::domain_error("evaluate: pole (denominator factor vanishes)");
        value /= rat_pow(Rat(1) - mv, mult);
    }
    return value;
}

TruncatedSeries RationalFunction::series_expand(VarId v, std::int64_t cutoff) const {
    TruncatedSeries acc(v, cutoff);
    for (auto& [m, c] : num_.terms()) {
        std::int64_t e = m.exponent(v);
        if (e < 0)
            throw std::domain_error("series_expand: negative exponent of the series variable "
                                    "in the numerator");
        if (e > cutoff) continue;
        acc.coefficient(e).add_term(m.substitute(v, Monomial::one()), c);
    }
    for (auto& [m, mult] : den_) {
        std::int64_t e = m.exponent(v);
        if (e <= 0)
            throw std::domain_error("series_expand: non-expandable denominator factor 1 - " +
                                    [&] {
                                        std::string s;
                                        for (auto& [w, x] : m.exponents())
                                            s += var_name(w) + "^" + std::to_string(x);
                                        return s;
                                    }());
        // 1/(1-m)^mult = sum_j C(j + mult - 1, mult - 1) m^j
        TruncatedSeries g(v, cutoff);
        g.coefficient(0) = Polynomial(1);
        Rat binom(1);
        Monomial mj = Monomial::one();
        for (std::int64_t j = 1; j * e <= cutoff; ++j) {
            binom *= Rat(j + mult - 1);
            binom /= Rat(j);
            mj = mj * m;
            g.coefficient(j * e).add_term(mj.substitute(v, Monomial::one()), binom);
        }
        acc = acc * g;
    }
    return acc;
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    // Drop shared factors first; they do not affect equality.
    RationalFunction::Denominator da = a.denominator(), db = b.denominator();
    for (auto& [m, mult] : a.denominator()) {
        auto it = db.find(m);
        if (it == db.end()) continue;
        int shared = std::min(mult, it->second);
        da[m] -= shared;
        it->second -= shared;
    }
    Polynomial lhs = a.numerator(), rhs = b.numerator();
    for (auto& [m, mult] : db) {
        Polynomial f(1);
        f.add_term(m, Rat(-1));
        for (int i = 0; i < mult; ++i) lhs *= f;
    }
    for (auto& [m, mult] : da) {
        if (mult == 0) continue;
        Polynomial f(1);
        f.add_term(m, Rat(-1));
        for (int i = 0; i < mult; ++i) rhs *= f;
    }
    return lhs == rhs;
}

RationalFunction rf_sum(std::vector<RationalFunction> terms) {
    if (terms.empty()) return RationalFunction();
    while (terms.size() > 1) {
        std::vector<RationalFunction> next;
        next.reserve((terms.size() + 1) / 2);
        for (size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2) next.push_back(terms.back());
        terms = std::move(next);
    }
    return terms.front();
}

}  // namespace igusa::exactalg
