#include "igusa/zeta.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "igusa/gaussian.hpp"

namespace igusa::zeta {

using combinat::all_subwords;
using combinat::Composition;
using combinat::enum_dyck;
using combinat::gauss_multinom_at;
using exactalg::Polynomial;
using exactalg::rf_equal;
using exactalg::rf_sum;
using igusafn::generalized_igusa;
using igusafn::igusa_I;
using igusafn::igusa_I_circ;

RationalFunction abelian_zeta(int n) {
    return component_zeta(n, 1);
}

RationalFunction component_zeta(int n, int f) {
    if (n < 0) throw std::domain_error("component_zeta: negative rank");
    RationalFunction z(1);
    for (int k = 1; k <= n; ++k) {
        Monomial m = Monomial::of(q_var(), static_cast<std::int64_t>(f) * (k - 1)) *
                     Monomial::of(t_var(), f);
        z *= RationalFunction::geometric(m);
    }
    return z;
}

NumericalData numerical_data(const StructuralDescriptor& d, const DyckWord& w,
                             const AdmissibleComposition& rho) {
    const int m = d.m();
    const int r = rho.runs();
    const int n = d.n();
    const int eps = d.eps();
    NumericalData out;

    // x_k for k in (M_{j-1}, M_j].
    out.x.assign(static_cast<size_t>(w.c()), Monomial::one());
    for (int j = 1; j <= r; ++j) {
        std::int64_t pterm = 0, ptsum = 0;
        for (int i = 0; i < m; ++i) {
            std::int64_t P = rho.P(i, j);
            pterm += static_cast<std::int64_t>(d.f_i(i)) * P * (d.n_i(i) - P);
            ptsum += static_cast<std::int64_t>(d.f_i(i)) * P;
        }
        for (int k = w.M(j - 1) + 1; k <= w.M(j); ++k) {
            std::int64_t qe = static_cast<std::int64_t>(k) * (n + w.L(j) - k) + pterm;
            out.x[static_cast<size_t>(k - 1)] =
                Monomial::of(q_var(), qe) * Monomial::of(t_var(), k + ptsum);
        }
    }

    // y_v^{(j)} for nonempty subwords v of the j-th column word.
    for (int j = 1; j <= r; ++j) {
        Subword wprev = rho.milestone(d.nbar(), j - 1);
        std::int64_t ell_prev = d.ell(wprev);
        std::int64_t Mprev = w.M(j - 1);
        std::int64_t psum_prev = 0;
        for (int i = 0; i < m; ++i)
            psum_prev += static_cast<std::int64_t>(d.f_i(i)) * rho.P(i, j - 1);

        std::map<Subword, Monomial> ydata;
        std::map<Subword, int> ddata;
        for (auto& v : all_subwords(rho.column(j), /*include_empty=*/false)) {
            Subword vj = v * wprev;
            std::int64_t ell_vj = d.ell(vj);
            int delta = (ell_vj == ell_prev) ? 0 : 1;
            std::int64_t B = 0, tsum = 0;
            for (int i = 0; i < m; ++i) {
                std::int64_t a = v.alpha(static_cast<size_t>(i));
                std::int64_t aj = vj.alpha(static_cast<size_t>(i));
                std::int64_t use = delta ? aj : a;
                B += static_cast<std::int64_t>(d.f_i(i)) * use * (d.n_i(i) - use);
                tsum += static_cast<std::int64_t>(d.f_i(i)) * a;
            }
            std::int64_t qe = B;
            if (delta) qe += Mprev * (n + ell_vj + eps - Mprev);
            std::int64_t te = tsum + (delta ? (Mprev + psum_prev) : 0);
            ydata.emplace(v, Monomial::of(q_var(), qe) * Monomial::of(t_var(), te));
            ddata.emplace(v, delta);
        }
        out.y.push_back(std::move(ydata));
        out.delta.push_back(std::move(ddata));
    }
    return out;
}

RationalFunction D_w_rho(const StructuralDescriptor& d, const DyckWord& w,
                         const AdmissibleComposition& rho) {
    const int m = d.m();
    const int r = rho.runs();
    Monomial qinv = Monomial::of(q_var(), -1);
    NumericalData data = numerical_data(d, w, rho);

    RationalFunction block(1);
    auto psets = rho.P_sets();
    for (int i = 0; i < m; ++i) {
        Monomial qi_inv = Monomial::of(q_var(), -d.f_i(i));
        block *= RationalFunction(
            gauss_multinom_at(d.n_i(i), psets[static_cast<size_t>(i)], qi_inv));
    }
    for (int j = 1; j <= r; ++j) {
        block *= RationalFunction(combinat::gauss_binom_at(w.L(j) - w.M(j - 1), w.L(j) - w.M(j), qinv));
        std::vector<Monomial> Y;
        for (int i = 0; i < m; ++i) Y.push_back(Monomial::of(q_var(), -d.f_i(i)));
        const auto& ydata = data.y[static_cast<size_t>(j - 1)];
        block *= generalized_igusa(rho.column(j), Y,
                                   [&](const Subword& v) { return ydata.at(v); });
    }
    for (int j = 1; j <= r; ++j) {
        std::vector<Monomial> xs(data.x.begin() + w.M(j - 1), data.x.begin() + w.M(j));
        int len = w.M(j) - w.M(j - 1);
        block *= (j < r) ? igusa_I_circ(len, qinv, xs) : igusa_I(len, qinv, xs);
    }
    return block;
}

bool check_dwrho_funeq(const StructuralDescriptor& d, const RationalFunction& block) {
    std::int64_t n = d.n(), c = d.c();
    std::int64_t sum_ni = 0, sum_fC = 0, sum_nifi = 0;
    for (int i = 0; i < d.m(); ++i) {
        sum_ni += d.n_i(i);
        sum_fC += static_cast<std::int64_t>(d.f_i(i)) * d.n_i(i) * (d.n_i(i) - 1) / 2;
        sum_nifi += static_cast<std::int64_t>(d.n_i(i)) * d.f_i(i);
    }
    std::int64_t qexp = (n + c) * (n + c - 1) / 2 - n * (n - 1) / 2 + sum_fC;
    std::int64_t texp = c + 2 * sum_nifi;
    RationalFunction lhs = block.invert_vars({q_var(), t_var()});
    RationalFunction rhs =
        (block * (Monomial::of(q_var(), qexp) * Monomial::of(t_var(), texp))) *
        Rat((c + sum_ni) % 2 ? -1 : 1);
    return rf_equal(lhs, rhs);
}

RationalFunction zeta_ideal(const StructuralDescriptor& d, const ZetaOptions& opt) {
    if (d.c() > opt.c_guard && !opt.override_guard)
        throw ResourceGuardError("zeta_ideal: c = " + std::to_string(d.c()) +
                                 " exceeds the Dyck enumeration guard (" +
                                 std::to_string(opt.c_guard) + "); override to proceed");
    if (d.c() < 1) throw std::domain_error("zeta_ideal: the zero ring has no Dyck data");

    std::vector<std::pair<DyckWord, AdmissibleComposition>> jobs;
    for (auto& w : enum_dyck(d.c()))
        for (auto& rho : admissible_compositions(d, w)) jobs.emplace_back(w, rho);

    // Blocks are independent pure values: map in parallel, reduce in the
    // fixed enumeration order so output is reproducible.
    std::vector<RationalFunction> blocks(jobs.size());
    auto run = [&](size_t i) {
        blocks[i] = D_w_rho(d, jobs[i].first, jobs[i].second);
        if (opt.assert_block_funeq && !check_dwrho_funeq(d, blocks[i]))
            throw std::logic_error("zeta_ideal: block functional equation failed for word " +
                                   jobs[i].first.to_string());
    };
    if (opt.threads <= 1 || jobs.size() < 2) {
        for (size_t i = 0; i < jobs.size(); ++i) run(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> errors(static_cast<size_t>(opt.threads));
        std::vector<std::thread> pool;
        for (int th = 0; th < opt.threads; ++th)
            pool.emplace_back([&, th] {
                try {
                    while (true) {
                        size_t i = next.fetch_add(1);
                        if (i >= jobs.size()) break;
                        run(i);
                    }
                } catch (...) {
                    errors[static_cast<size_t>(th)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    RationalFunction sum = rf_sum(std::move(blocks));

    RationalFunction prefactor = abelian_zeta(d.n());
    for (int i = 0; i < d.m(); ++i) {
        // Multiply by the expanded numerator 1/zeta_{O_i^{n_i}}.
        for (int k = 1; k <= d.n_i(i); ++k) {
            Polynomial f(1);
            f.add_term(Monomial::of(q_var(), static_cast<std::int64_t>(d.f_i(i)) * (k - 1)) *
                           Monomial::of(t_var(), d.f_i(i)),
                       Rat(-1));
            prefactor = prefactor * f;
        }
    }
    return prefactor * sum;
}

RationalFunction zeta_ideal(const LieRingSpec& spec, const ZetaOptions& opt) {
    if (spec.is_custom())
        throw std::invalid_argument("zeta_ideal: custom bracket tables are oracle-only; the engine "
                                    "needs a structural descriptor");
    // Rank 0 never occurs (parse_spec rejects empty factors), but an all-zero
    // abelian spec would be meaningless anyway.
    StructuralDescriptor d = descriptor_for(spec);
    if (d.c() == 0) {
        // Zero-dimensional A means L is already abelian-free of center; the
        // catalog only produces this for empty input, which parse_spec forbids.
        throw std::domain_error("zeta_ideal: degenerate spec");
    }
    return zeta_ideal(d, opt);
}

RationalFunction base_extend(const RationalFunction& z, int f) {
    if (f < 1) throw std::domain_error("base_extend: f must be positive");
    if (f == 1) return z;
    return z.substitute(q_var(), Monomial::of(q_var(), f))
        .substitute(t_var(), Monomial::of(t_var(), f));
}

FuneqReport check_local_funeq(const LieRingSpec& spec, const ZetaOptions& opt) {
    FuneqReport rep;
    rep.N0 = spec.rank();
    rep.N1 = spec.cocentral_rank();
    RationalFunction z = zeta_ideal(spec, opt);
    RationalFunction lhs = z.invert_vars({q_var(), t_var()});
    RationalFunction rhs =
        (z * (Monomial::of(q_var(), static_cast<std::int64_t>(rep.N0) * (rep.N0 - 1) / 2) *
              Monomial::of(t_var(), rep.N0 + rep.N1))) *
        Rat(rep.N0 % 2 ? -1 : 1);
    rep.holds = rf_equal(lhs, rhs);
    return rep;
}

Rat abscissa(const RationalFunction& z, int n) {
    RationalFunction r = z;
    r.reduce();
    Rat best(n);
    for (auto& [m, mult] : r.denominator()) {
        std::int64_t a = m.exponent(q_var());
        std::int64_t b = m.exponent(t_var());
        if (b == 0)
            throw std::domain_error("abscissa: denominator factor without the variable t");
        Rat cand(a, b);
        cand.canonicalize();
        if (cand > best) best = cand;
    }
    return best;
}

}  // namespace igusa::zeta
