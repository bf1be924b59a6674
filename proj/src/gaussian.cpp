#include "igusa/gaussian.hpp"

#include <mutex>
#include <stdexcept>

#include "igusa/monomial.hpp"

namespace igusa::combinat {

using exactalg::Rat;

Polynomial gauss_binom(int a, int b, VarId y) {
    if (b < 0 || a < b) throw std::domain_error("gauss_binom: need a >= b >= 0");
    static std::mutex mu;
    static std::map<std::tuple<int, int, VarId>, Polynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({a, b, y});
        if (it != cache.end()) return it->second;
    }
    Polynomial num(1);
    for (int i = a - b + 1; i <= a; ++i) {
        Polynomial f(1);
        f.add_term(Monomial::of(y, i), Rat(-1));
        num *= f;
    }
    for (int i = 1; i <= b; ++i) {
        auto q = num.divide_by_binomial(Monomial::of(y, i));
        if (!q) throw std::logic_error("gauss_binom: inexact division");
        num = std::move(*q);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_tuple(a, b, y), num);
    return num;
}

Polynomial gauss_multinom(int n, const std::set<int>& J, VarId y) {
    Polynomial r(1);
    int prev = -1;
    // Telescoping product over the chain 0 <= j_1 < ... < j_r <= n.
    std::vector<int> chain(J.begin(), J.end());
    chain.push_back(n);
    for (int j : chain) {
        if (j < 0 || j > n) throw std::domain_error("gauss_multinom: element outside [0, n]");
        if (prev >= 0) r *= gauss_binom(j, prev, y);
        prev = j;
    }
    return r;
}

Polynomial gauss_binom_at(int a, int b, const Monomial& y) {
    VarId tmp = exactalg::var("__gauss_Y");
    return gauss_binom(a, b, tmp).substitute(tmp, y);
}

Polynomial gauss_multinom_at(int n, const std::set<int>& J, const Monomial& y) {
    VarId tmp = exactalg::var("__gauss_Y");
    return gauss_multinom(n, J, tmp).substitute(tmp, y);
}

Polynomial birkhoff_alpha_padded(const Partition& lambda, const Partition& mu, VarId y, int eps,
                                 std::int64_t pad_value) {
    std::vector<std::int64_t> padded;
    for (int i = 0; i < eps; ++i) padded.push_back(pad_value);
    for (auto x : lambda.parts()) padded.push_back(x);
    Partition lt = Partition::from_multiset(std::move(padded));
    if (!lt.contains(mu)) throw std::domain_error("birkhoff_alpha: mu is not dominated by lambda");

    Partition ld = lt.dual(), md = mu.dual();
    Monomial yinv = Monomial::of(y, -1);
    Polynomial r(1);
    std::int64_t kmax = mu.part(0);
    for (std::int64_t k = 1; k <= kmax; ++k) {
        std::int64_t lk = ld.part(static_cast<size_t>(k - 1));
        std::int64_t mk = md.part(static_cast<size_t>(k - 1));
        std::int64_t mk1 = md.part(static_cast<size_t>(k));
        r = r * Monomial::of(y, mk * (lk - mk));
        r *= gauss_binom_at(static_cast<int>(lk - mk1), static_cast<int>(lk - mk), yinv);
    }
    return r;
}

Polynomial birkhoff_alpha(const Partition& lambda, const Partition& mu, VarId y, int eps) {
    std::int64_t pad = std::max(lambda.part(0), mu.part(0)) + 1;
    return birkhoff_alpha_padded(lambda, mu, y, eps, pad);
}

Polynomial beta_poly(const Partition& nu, VarId y) {
    int n = static_cast<int>(nu.length());
    if (n == 0) return Polynomial(1);
    std::set<int> J;
    std::int64_t exp = 0;
    for (int d = 1; d < n; ++d) {
        std::int64_t diff = nu.part(static_cast<size_t>(d - 1)) - nu.part(static_cast<size_t>(d));
        if (diff > 0) J.insert(d);
        exp += static_cast<std::int64_t>(d) * (n - d) * diff;
    }
    Monomial yinv = Monomial::of(y, -1);
    return gauss_multinom_at(n, J, yinv) * Monomial::of(y, exp);
}

}  // namespace igusa::combinat
