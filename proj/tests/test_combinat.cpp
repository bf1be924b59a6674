#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igusa/descriptor.hpp"
#include "igusa/dyck.hpp"
#include "igusa/gaussian.hpp"
#include "igusa/lie_ring.hpp"
#include "igusa/oracle.hpp"
#include "igusa/partition.hpp"
#include "igusa/symgroup.hpp"

using namespace igusa::combinat;
using igusa::exactalg::Monomial;
using igusa::exactalg::Polynomial;
using igusa::exactalg::Rat;
using igusa::exactalg::var;
using igusa::exactalg::VarId;

namespace {
VarId Y() { return var("Yc"); }

Partition P(std::vector<std::int64_t> v) { return Partition(std::move(v)); }

// Direct transcription of the interleaving chain that defines an overlap
// type; used to cross-check the constructive overlap_type.
bool chain_holds(const Partition& lambda, const Partition& mu, int eps, const DyckWord& w) {
    if (w.L(1) < eps) return false;
    auto lam = [&](int i) {  // 1-based
        return lambda.part(static_cast<size_t>(i - 1));
    };
    auto muv = [&](int i) { return mu.part(static_cast<size_t>(i - 1)); };
    for (int j = 1; j <= w.runs(); ++j) {
        int lt = w.L(j) - eps;
        if (lt >= 1 && muv(w.M(j - 1) + 1) > lam(lt)) return false;
        if (j < w.runs() && !(muv(w.M(j)) > lam(w.L(j) - eps + 1))) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("partition dual") {
    CHECK(P({3, 1}).dual() == P({2, 1, 1}));
    CHECK(P({}).dual() == P({}));
    for (auto& p : igusa::oracle::partitions_bounded(6, 5))
        CHECK(p.dual().dual() == p.normalized());
}

TEST_CASE("star and star_power") {
    CHECK(star(P({3, 1}), P({2, 2})) == P({2, 2, 1, 1}));
    CHECK(star(P({3, 1}), P({})) == P({}));

    auto a = P({3, 1}), b = P({2}), c = P({2});
    CHECK(star(star(a, b), c) == star(a, star(b, c)));

    CHECK(star_power(P({3, 2, 1}), 2) == P({2, 1, 1}));
    CHECK(star_power(P({3, 1}), 1) == P({3, 1}));
    CHECK(star_power(P({3, 1}), 2) == P({1}));
    CHECK(star(P({3, 1}), P({3, 1})) == P({3, 1, 1, 1}));
    CHECK(!(star_power(P({3, 1}), 2) == star(P({3, 1}), P({3, 1}))));
    CHECK_THROWS(star_power(P({3, 1}), 3));
}

TEST_CASE("tau dictionary") {
    CHECK(tau_multiset(5, 2, 3) == std::vector<std::int64_t>{3, 3, 3, 2, 2, 2});
    for (int f = 1; f <= 3; ++f)
        CHECK(tau_multiset(7, 1, f) == std::vector<std::int64_t>(static_cast<size_t>(f), 7));
    CHECK(tau_multiset(0, 2, 2) == std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("gauss_binom") {
    Polynomial y1(1);
    y1.add_term(Monomial::of(Y()), Rat(1));
    CHECK(gauss_binom(2, 1, Y()) == y1);
    Polynomial y2 = y1;
    y2.add_term(Monomial::of(Y(), 2), Rat(1));
    CHECK(gauss_binom(3, 1, Y()) == y2);
    CHECK(gauss_binom(5, 0, Y()) == Polynomial(1));
    CHECK_THROWS(gauss_binom(1, 2, Y()));

    // binom(a,b)_{Y^{-1}} = Y^{b(b-a)} binom(a,b)_Y for a <= 8
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= a; ++b) {
            auto lhs = gauss_binom(a, b, Y()).invert_vars({Y()});
            auto rhs = gauss_binom(a, b, Y()) * Monomial::of(Y(), static_cast<std::int64_t>(b) * (b - a));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("gauss_multinom and the Coxeter length identity") {
    CHECK(gauss_multinom(4, {}, Y()) == Polynomial(1));
    CHECK(gauss_multinom(3, {1, 2}, Y()) == gauss_binom(3, 2, Y()) * gauss_binom(2, 1, Y()));
    CHECK_THROWS(gauss_multinom(3, {5}, Y()));

    // binom(n,J)_Y = sum over permutations with descents in J, n <= 5
    for (int n = 1; n <= 5; ++n) {
        auto perms = sym_group_tools(n);
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::set<int> J;
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) J.insert(i);
            Polynomial expect;
            for (auto& pd : perms) {
                bool inside = true;
                for (int d : pd.descents)
                    if (!J.count(d)) inside = false;
                if (inside) expect.add_term(Monomial::of(Y(), pd.length), Rat(1));
            }
            CHECK(gauss_multinom(n, J, Y()) == expect);
        }
    }
}

TEST_CASE("multinomial splitting identity") {
    // binom(n,J) = binom(n,P) prod binom(p_j - p_{j-1}, shifted J-segment)
    for (int n = 1; n <= 6; ++n) {
        for (unsigned jm = 0; jm < (1u << (n - 1)); ++jm) {
            std::set<int> J;
            for (int i = 1; i < n; ++i)
                if (jm & (1u << (i - 1))) J.insert(i);
            std::vector<int> jv(J.begin(), J.end());
            for (unsigned pm = 0; pm < (1u << jv.size()); ++pm) {
                std::set<int> Pset;
                for (size_t i = 0; i < jv.size(); ++i)
                    if (pm & (1u << i)) Pset.insert(jv[i]);
                Polynomial rhs = gauss_multinom(n, Pset, Y());
                int prev = 0;
                for (int pj : Pset) {
                    std::set<int> seg;
                    for (int j : J)
                        if (j > prev && j < pj) seg.insert(j - prev);
                    rhs *= gauss_multinom(pj - prev, seg, Y());
                    prev = pj;
                }
                // Segment above the largest element of P.
                {
                    std::set<int> seg;
                    for (int j : J)
                        if (j > prev) seg.insert(j - prev);
                    rhs *= gauss_multinom(n - prev, seg, Y());
                }
                CHECK(gauss_multinom(n, J, Y()) == rhs);
            }
        }
    }
}

TEST_CASE("birkhoff alpha") {
    Polynomial y1(1);
    y1.add_term(Monomial::of(Y()), Rat(1));
    CHECK(birkhoff_alpha(P({2, 1}), P({2, 1}), Y(), 0) == Polynomial(1));
    CHECK(birkhoff_alpha(P({1, 1}), P({1, 0}), Y(), 0) == y1);
    CHECK(birkhoff_alpha(P({2}), P({1}), Y(), 0) == Polynomial(1));
    CHECK_THROWS(birkhoff_alpha(P({1}), P({2}), Y(), 0));

    // counts subgroups, against the enumeration oracle
    for (std::int64_t p : {2, 3})
        for (auto& lam : igusa::oracle::partitions_bounded(3, 3))
            for (auto& mu : igusa::oracle::partitions_bounded(3, 3)) {
                if (!lam.contains(mu)) continue;
                auto count = igusa::oracle::count_subgroups(lam, mu, p);
                CHECK(birkhoff_alpha(lam, mu, Y(), 0).evaluate({{Y(), Rat(p)}}) == Rat(count));
            }

    // padding independence
    for (int eps : {1, 2})
        for (auto& lam : igusa::oracle::partitions_bounded(2, 2))
            for (auto& mu : igusa::oracle::partitions_bounded(2 + eps, 2)) {
                bool dominated = true;
                for (size_t k = static_cast<size_t>(eps); k < mu.length(); ++k)
                    if (mu.part(k) > lam.part(k - static_cast<size_t>(eps))) dominated = false;
                if (!dominated) continue;
                auto a = birkhoff_alpha_padded(lam, mu, Y(), eps, std::max(lam.part(0), mu.part(0)) + 1);
                auto b = birkhoff_alpha_padded(lam, mu, Y(), eps, std::max(lam.part(0), mu.part(0)) + 7);
                CHECK(a == b);
            }
}

TEST_CASE("beta polynomial") {
    Polynomial y1(1);
    y1.add_term(Monomial::of(Y()), Rat(1));
    CHECK(beta_poly(P({3}), Y()) == Polynomial(1));
    CHECK(beta_poly(P({1, 0}), Y()) == y1);
    CHECK(beta_poly(P({1, 1}), Y()) == Polynomial(1));

    for (std::int64_t p : {2, 3})
        for (int n = 1; n <= 3; ++n)
            for (auto& nu : igusa::oracle::partitions_bounded(n, 3)) {
                auto count = igusa::oracle::count_sublattices_by_type(n, p, nu);
                CHECK(beta_poly(nu, Y()).evaluate({{Y(), Rat(p)}}) == Rat(count));
            }
}

TEST_CASE("dyck words") {
    CHECK(enum_dyck(1).size() == 1);
    auto d2 = enum_dyck(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].to_string() == "0011");
    CHECK(d2[1].to_string() == "0101");
    CHECK(enum_dyck(4).size() == 14);
    CHECK(enum_dyck(5).size() == 42);

    auto w = DyckWord::from_string("00100111");
    CHECK(w.runs() == 2);
    CHECK(w.L(1) == 2);
    CHECK(w.M(1) == 1);
    CHECK(w.L(2) == 4);
    CHECK(w.M(2) == 4);
    CHECK(w.to_string() == "00100111");
}

TEST_CASE("overlap types") {
    auto w = overlap_type(P({2, 1}), P({2, 1}), 0);
    REQUIRE(w.has_value());
    CHECK(chain_holds(P({2, 1}), P({2, 1}), 0, *w));
    CHECK(!overlap_type(P({1}), P({2}), 0).has_value());

    // existence and uniqueness against the defining chain, small scale
    for (int eps : {0, 1}) {
        int cp = 2;
        int c = cp + eps;
        for (auto& lam : igusa::oracle::partitions_bounded(cp, 3))
            for (auto& mu : igusa::oracle::partitions_bounded(c, 3)) {
                bool dominated = true;
                for (size_t k = static_cast<size_t>(eps); k < mu.length(); ++k)
                    if (mu.part(k) > lam.part(k - static_cast<size_t>(eps))) dominated = false;
                auto got = overlap_type(lam, mu, eps);
                CHECK(got.has_value() == dominated);
                if (!dominated) continue;
                int matches = 0;
                for (auto& cand : enum_dyck(c))
                    if (chain_holds(lam, mu, eps, cand)) {
                        ++matches;
                        CHECK(cand == *got);
                    }
                CHECK(matches == 1);
            }
    }
}

TEST_CASE("structural descriptors: lambda_of_nu, ell, radical") {
    using igusa::zeta::descriptor_for;
    using igusa::zeta::parse_spec;

    auto heis = descriptor_for(parse_spec("g1,1"));
    CHECK(heis.lambda_of_nu({P({3}), P({2})}) == P({2}));

    auto f22 = descriptor_for(parse_spec("f2,2"));
    CHECK(f22.lambda_of_nu({P({3, 1})}) == P({1}));

    auto g22 = descriptor_for(parse_spec("g2,2"));
    CHECK(g22.lambda_of_nu({P({3, 1}), P({2, 2})}) == P({2, 2, 1, 1}));

    // ell formulas per family
    auto f23 = descriptor_for(parse_spec("f2,3[f=2]"));
    for (int a = 0; a <= 3; ++a)
        CHECK(f23.ell(Subword({a})) == a * (a - 1) / 2 * 2);
    auto g21 = descriptor_for(parse_spec("g2,1[f=3]"));
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 1; ++b) CHECK(g21.ell(Subword({a, b})) == 3 * a * b);
    CHECK(g22.ell(Subword({0, 0})) == 0);

    // radicals: Heisenberg-style words
    auto h1 = descriptor_for(parse_spec("h1"));
    CHECK(h1.radical(Subword({1, 0})) == Subword({0, 0}));
    CHECK(h1.radical(Subword({1, 1})) == Subword({1, 1}));
    auto f24 = descriptor_for(parse_spec("f2,4"));
    CHECK(f24.radical(Subword({1})) == Subword({0}));
    for (int a = 2; a <= 4; ++a) CHECK(f24.radical(Subword({a})) == Subword({a}));

    // radical is idempotent and preserves ell, across the catalog
    for (const char* s : {"g1,1", "g2,2", "f2,3", "h2", "g2,1[f=2]", "h1 x g1,1"}) {
        auto d = descriptor_for(parse_spec(s));
        for (auto& v : all_subwords(d.nbar(), true)) {
            auto r = d.radical(v);
            CHECK(d.radical(r) == r);
            CHECK(d.ell(r) == d.ell(v));
            CHECK(r <= v);
        }
    }
}

TEST_CASE("descriptor validation") {
    using igusa::combinat::StructuralDescriptor;
    // component 2 occurs in no pair
    CHECK_THROWS_AS(StructuralDescriptor({1, 1}, {1, 1}, {{{0}, {1}}}, 0), std::domain_error);
    // bad component index
    CHECK_THROWS_AS(StructuralDescriptor({1}, {1}, {{{1}, {1}}}, 0), std::domain_error);
    // rank bookkeeping on a well-formed descriptor
    StructuralDescriptor d({2, 2}, {1, 1}, {{{0, 1}, {1, 1}}}, 3);
    CHECK(d.c_prime() == 4);
    CHECK(d.c() == 7);
    CHECK(d.eps() == 3);
    CHECK(d.n() == 4);
    CHECK(d.rank() == 11);
}

TEST_CASE("admissible compositions") {
    using igusa::zeta::descriptor_for;
    using igusa::zeta::parse_spec;

    // Grenham g_{3,1}: unique composition for each surviving word.
    auto g31 = descriptor_for(parse_spec("g3,1"));
    for (auto& w : enum_dyck(g31.c())) {
        auto rhos = admissible_compositions(g31, w);
        CHECK(rhos.size() <= 1);
        if (!rhos.empty())
            for (int j = 1; j <= w.runs(); ++j) {
                CHECK(rhos[0].P(0, j) == w.L(j));
                CHECK(rhos[0].P(1, j) == 1);
            }
    }

    // f_{2,3}: words survive iff every L_j is triangular, and then the
    // composition is unique with P_{1j} = gamma_j.
    auto f23 = descriptor_for(parse_spec("f2,3"));
    for (auto& w : enum_dyck(f23.c())) {
        auto rhos = admissible_compositions(f23, w);
        bool triangular = true;
        for (int j = 1; j <= w.runs(); ++j) {
            int L = w.L(j);
            triangular = triangular && (L == 1 || L == 3 || L == 6 || L == 0);
        }
        CHECK(rhos.size() == (triangular ? 1u : 0u));
    }

    // g_{2,2}, w = 00100111: the two compatible flags.
    auto g22 = descriptor_for(parse_spec("g2,2"));
    auto rhos = admissible_compositions(g22, DyckWord::from_string("00100111"));
    REQUIRE(rhos.size() == 2);

    // both defining conditions re-checked, plus P_{ir} = n_i
    for (const char* s : {"g2,2", "f2,3", "h2", "h1 x Z^2"}) {
        auto d = descriptor_for(parse_spec(s));
        for (auto& w : enum_dyck(d.c()))
            for (auto& rho : admissible_compositions(d, w)) {
                for (int j = 1; j <= w.runs(); ++j) {
                    auto wj = rho.milestone(d.nbar(), j);
                    CHECK(d.ell(wj) == w.L(j) - d.eps());
                    CHECK(d.radical(wj) == wj);
                }
                for (int i = 0; i < d.m(); ++i) CHECK(rho.P(i, w.runs()) == d.n_i(i));
            }
    }
}

TEST_CASE("symmetric group tools") {
    auto s2 = sym_group_tools(2);
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].length == 0);
    CHECK(s2[0].descents.empty());
    CHECK(s2[1].length == 1);
    CHECK(s2[1].descents == std::set<int>{1});

    auto s4 = sym_group_tools(4);
    int maxlen = 0;
    for (auto& pd : s4) maxlen = std::max(maxlen, pd.length);
    CHECK(maxlen == 6);

    // l(w w0) = l(w0) - l(w) and Des(w w0) = complement; the product taken in
    // the convention where w0 complements values.
    for (auto& pd : s4) {
        std::vector<int> ww0(4);
        for (int i = 0; i < 4; ++i) ww0[static_cast<size_t>(i)] = 3 - pd.perm[static_cast<size_t>(i)];
        int len = 0;
        std::set<int> des;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (ww0[static_cast<size_t>(i)] > ww0[static_cast<size_t>(j)]) ++len;
        for (int i = 1; i < 4; ++i)
            if (ww0[static_cast<size_t>(i - 1)] > ww0[static_cast<size_t>(i)]) des.insert(i);
        CHECK(len == 6 - pd.length);
        std::set<int> comp;
        for (int i = 1; i <= 3; ++i)
            if (!pd.descents.count(i)) comp.insert(i);
        CHECK(des == comp);
    }
    CHECK_THROWS(sym_group_tools(9));
}
