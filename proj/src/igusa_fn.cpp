#include "igusa/igusa_fn.hpp"

#include <stdexcept>

namespace igusa::igusafn {

using combinat::all_subwords;
using combinat::for_each_flag;
using combinat::gauss_multinom;
using combinat::gauss_multinom_at;
using exactalg::Rat;
using exactalg::rf_equal;
using exactalg::rf_sum;
using exactalg::VarId;

namespace {

// Core of I_n and its circle variant: sum_{I subset [n-1]} binom(n,I)_Y W_I(X).
RationalFunction igusa_core(int n, const Monomial& Y, const std::vector<Monomial>& X) {
    if (n < 1) throw std::domain_error("igusa_I: n must be positive");
    if (static_cast<int>(X.size()) != n) throw std::domain_error("igusa_I: need n data values");
    std::vector<RationalFunction> terms;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> I;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) I.insert(i);
        RationalFunction t(gauss_multinom_at(n, I, Y));
        for (int i : I) t *= RationalFunction::gp(X[static_cast<size_t>(i - 1)]);
        terms.push_back(std::move(t));
    }
    return rf_sum(std::move(terms));
}

}  // namespace

RationalFunction igusa_I(int n, const Monomial& Y, const std::vector<Monomial>& X) {
    return igusa_core(n, Y, X) * RationalFunction::geometric(X.back());
}

RationalFunction igusa_I_circ(int n, const Monomial& Y, const std::vector<Monomial>& X) {
    return igusa_core(n, Y, X) * RationalFunction::gp(X.back());
}

RationalFunction generalized_igusa(const Composition& nbar, const std::vector<Monomial>& Y,
                                   const std::function<Monomial(const Subword&)>& X) {
    if (Y.size() != nbar.size()) throw std::domain_error("generalized_igusa: need one Y per component");
    std::vector<RationalFunction> terms;
    for_each_flag(nbar, [&](const Flag& V) {
        Polynomial coeff(1);
        for (size_t i = 0; i < nbar.size(); ++i) {
            std::set<int> phi;
            for (auto& v : V) {
                int a = v.alpha(i);
                if (a >= 1 && a <= nbar[i] - 1) phi.insert(a);
            }
            if (!phi.empty()) coeff *= gauss_multinom_at(nbar[i], phi, Y[i]);
        }
        RationalFunction t(coeff);
        for (auto& v : V) t *= RationalFunction::gp(X(v));
        terms.push_back(std::move(t));
    });
    return rf_sum(std::move(terms));
}

AbstractIgusa generalized_igusa_abstract(const Composition& nbar) {
    AbstractIgusa out;
    for (size_t i = 0; i < nbar.size(); ++i)
        out.Y.push_back(exactalg::var("Y" + std::to_string(i + 1)));
    for (auto& w : all_subwords(nbar, /*include_empty=*/false))
        out.X.emplace(w, exactalg::var("X[" + w.name() + "]"));
    std::vector<Monomial> Ym;
    for (auto v : out.Y) Ym.push_back(Monomial::of(v));
    out.fn = generalized_igusa(nbar, Ym, [&](const Subword& w) { return Monomial::of(out.X.at(w)); });
    return out;
}

namespace {

// Per-flag form of the reciprocity: expanding W_V(X^{-1}) over the W_Q basis
// turns the functional equation into one Laurent-polynomial identity in Y
// for every flag Q of proper subwords:
//   sum_{V >= Q} (-1)^{|V|} binom(nbar, V)_{Y^{-1}}
//     = (-1)^{N-1} (prod_i Y_i^{-C(n_i,2)}) binom(nbar, Q)_Y.
bool funeq_by_flags(const Composition& nbar) {
    int N = combinat::composition_sum(nbar);
    Subword full(nbar);
    std::vector<VarId> Y;
    for (size_t i = 0; i < nbar.size(); ++i) Y.push_back(exactalg::var("Y" + std::to_string(i + 1)));

    auto multinom = [&](const Flag& V, bool inverted) {
        Polynomial coeff(1);
        for (size_t i = 0; i < nbar.size(); ++i) {
            std::set<int> phi;
            for (auto& v : V) {
                int a = v.alpha(i);
                if (a >= 1 && a <= nbar[i] - 1) phi.insert(a);
            }
            if (!phi.empty())
                coeff *= gauss_multinom_at(nbar[i], phi, Monomial::of(Y[i], inverted ? -1 : 1));
        }
        return coeff;
    };

    std::map<Flag, Polynomial> acc;
    for_each_flag(nbar, [&](const Flag& V) {
        if (!V.empty() && V.back() == full) return;  // proper flags only
        Polynomial p = multinom(V, /*inverted=*/true);
        if (V.size() % 2) p = -p;
        // Contribute to every subchain Q of V.
        size_t t = V.size();
        for (unsigned mask = 0; mask < (1u << t); ++mask) {
            Flag Q;
            for (size_t k = 0; k < t; ++k)
                if (mask & (1u << k)) Q.push_back(V[k]);
            auto [it, inserted] = acc.emplace(std::move(Q), p);
            if (!inserted) it->second += p;
        }
    });

    Monomial shift = Monomial::one();
    for (size_t i = 0; i < nbar.size(); ++i)
        shift = shift * Monomial::of(Y[i], -static_cast<std::int64_t>(nbar[i]) * (nbar[i] - 1) / 2);
    Rat sign((N - 1) % 2 ? -1 : 1);

    for (auto& [Q, lhs] : acc) {
        Polynomial rhs = (multinom(Q, /*inverted=*/false) * shift) * sign;
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace

bool check_genigusa_funeq(const Composition& nbar, size_t dense_bound, int sum_bound) {
    int N = combinat::composition_sum(nbar);
    if (N < 1) throw std::domain_error("check_genigusa_funeq: empty composition");
    if (N > sum_bound)
        throw std::domain_error("check_genigusa_funeq: composition sum " + std::to_string(N) +
                                " exceeds the verification bound " + std::to_string(sum_bound));
    size_t words = all_subwords(nbar, false).size();
    if (words <= dense_bound) {
        AbstractIgusa ai = generalized_igusa_abstract(nbar);
        std::set<VarId> all;
        for (auto v : ai.Y) all.insert(v);
        for (auto& [w, v] : ai.X) all.insert(v);
        RationalFunction lhs = ai.fn.invert_vars(all);
        Monomial factor = Monomial::of(ai.X.at(Subword(nbar)));
        for (size_t i = 0; i < nbar.size(); ++i)
            factor = factor * Monomial::of(ai.Y[i], -static_cast<std::int64_t>(nbar[i]) * (nbar[i] - 1) / 2);
        RationalFunction rhs = (ai.fn * factor) * Rat(N % 2 ? -1 : 1);
        if (!rf_equal(lhs, rhs)) return false;
    }
    return funeq_by_flags(nbar);
}

bool igusas_match_check(int g, const std::map<Subword, Monomial>& y) {
    if (g < 1) throw std::domain_error("igusas_match_check: g must be positive");
    Composition two_g(static_cast<size_t>(2 * g), 1);
    Composition one_g(static_cast<size_t>(g), 1);

    auto lookup = [&](const Subword& w) -> const Monomial& {
        auto it = y.find(w);
        if (it == y.end())
            throw std::domain_error("igusas_match_check: missing datum for " + w.name());
        return it->second;
    };

    // Hypothesis: y_r = y_{sqrt r} * prod over the non-radical letters of r.
    for (auto& r : all_subwords(two_g, /*include_empty=*/false)) {
        std::vector<int> radical(static_cast<size_t>(2 * g), 0);
        Monomial expected = Monomial::one();
        for (int i = 0; i < g; ++i) {
            bool lo = r.alpha(static_cast<size_t>(i)) > 0;
            bool hi = r.alpha(static_cast<size_t>(i + g)) > 0;
            if (lo && hi) {
                radical[static_cast<size_t>(i)] = radical[static_cast<size_t>(i + g)] = 1;
            } else if (lo || hi) {
                std::vector<int> gen(static_cast<size_t>(2 * g), 0);
                gen[static_cast<size_t>(i)] = 1;
                expected = expected * lookup(Subword(gen));
            }
        }
        Subword root(radical);
        if (!root.is_empty()) expected = lookup(root) * expected;
        if (!(lookup(r) == expected))
            throw std::domain_error("igusas_match_check: data violate the radical hypothesis at " +
                                    r.name());
    }

    std::vector<Monomial> ones_2g(static_cast<size_t>(2 * g), Monomial::one());
    RationalFunction lhs = generalized_igusa(two_g, ones_2g, [&](const Subword& w) { return lookup(w); });

    RationalFunction rhs(1);
    for (int i = 0; i < g; ++i) {
        std::vector<int> gen(static_cast<size_t>(2 * g), 0);
        gen[static_cast<size_t>(i)] = 1;
        const Monomial& x = lookup(Subword(gen));
        Polynomial numer(1);
        numer.add_term(x, Rat(1));
        rhs *= RationalFunction(numer, {{x, 1}});
    }
    std::vector<Monomial> ones_g(static_cast<size_t>(g), Monomial::one());
    rhs *= generalized_igusa(one_g, ones_g, [&](const Subword& w) {
        std::vector<int> lift(static_cast<size_t>(2 * g), 0);
        for (int i = 0; i < g; ++i)
            if (w.alpha(static_cast<size_t>(i)) > 0)
                lift[static_cast<size_t>(i)] = lift[static_cast<size_t>(i + g)] = 1;
        return lookup(Subword(lift));
    });

    return rf_equal(lhs, rhs);
}

}  // namespace igusa::igusafn
