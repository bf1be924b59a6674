#include "igusa/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "igusa/gaussian.hpp"

namespace igusa::oracle {

using combinat::StructuralDescriptor;
using combinat::Subword;
using exactalg::Monomial;
using exactalg::Polynomial;
using exactalg::Rat;
using exactalg::TruncatedSeries;
using Matrix = std::vector<std::vector<std::int64_t>>;

namespace {

std::int64_t ipow(std::int64_t p, int k) {
    std::int64_t r = 1;
    while (k-- > 0) r *= p;
    return r;
}

// Compositions (a_1, ..., a_rank) of k into nonnegative parts.
void for_each_diagonal(int rank, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> a(static_cast<size_t>(rank), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == rank - 1) {
            a[static_cast<size_t>(pos)] = left;
            f(a);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (rank == 0) {
        if (k == 0) f(a);
        return;
    }
    rec(0, k);
}

std::uint64_t diagonal_hnf_count(const std::vector<int>& a, std::int64_t p) {
    // Column j contributes one free residue per earlier row.
    long double est = 1;
    std::uint64_t exact = 1;
    bool overflow = false;
    for (size_t j = 0; j < a.size(); ++j) {
        std::int64_t mod = ipow(p, a[j]);
        for (size_t i = 0; i < j; ++i) {
            est *= static_cast<long double>(mod);
            if (!overflow) {
                if (exact > UINT64_MAX / static_cast<std::uint64_t>(mod))
                    overflow = true;
                else
                    exact *= static_cast<std::uint64_t>(mod);
            }
        }
    }
    return overflow ? UINT64_MAX : exact;
}

// Membership of v in the lattice with Hermite basis rows B (upper
// triangular).  Solving x B = v runs through the column equations in
// ascending order: column i only involves rows <= i.
bool in_lattice(const Matrix& B, std::vector<std::int64_t> v) {
    int n = static_cast<int>(B.size());
    for (int i = 0; i < n; ++i) {
        std::int64_t piv = B[static_cast<size_t>(i)][static_cast<size_t>(i)];
        std::int64_t x = v[static_cast<size_t>(i)];
        if (x % piv != 0) return false;
        std::int64_t c = x / piv;
        if (c != 0)
            for (int j = i; j < n; ++j) v[static_cast<size_t>(j)] -= c * B[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return true;
}

// Enumerates the off-diagonal entries for one diagonal, calling visit.
void enumerate_for_diagonal(int rank, std::int64_t p, const std::vector<int>& a,
                            const std::function<void(const Matrix&)>& visit) {
    Matrix B(static_cast<size_t>(rank), std::vector<std::int64_t>(static_cast<size_t>(rank), 0));
    std::vector<std::pair<int, int>> free_cells;
    std::vector<std::int64_t> moduli;
    for (int i = 0; i < rank; ++i) B[static_cast<size_t>(i)][static_cast<size_t>(i)] = ipow(p, a[static_cast<size_t>(i)]);
    for (int j = 0; j < rank; ++j) {
        std::int64_t mod = B[static_cast<size_t>(j)][static_cast<size_t>(j)];
        if (mod == 1) continue;
        for (int i = 0; i < j; ++i) {
            free_cells.emplace_back(i, j);
            moduli.push_back(mod);
        }
    }
    std::function<void(size_t)> rec = [&](size_t cell) {
        if (cell == free_cells.size()) {
            visit(B);
            return;
        }
        auto [i, j] = free_cells[cell];
        for (std::int64_t v = 0; v < moduli[cell]; ++v) {
            B[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            rec(cell + 1);
        }
        B[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };
    rec(0);
}

// Smith-normal-form p-valuations of an integer matrix (rows x cols generators
// of a sublattice of Z^cols), returned descending, padded to `cols`.
std::vector<std::int64_t> snf_type(std::vector<std::vector<Int>> M, int cols, std::int64_t p) {
    int rows = static_cast<int>(M.size());
    std::vector<std::int64_t> type;
    int r = 0, c = 0;
    while (r < rows && c < cols) {
        // Find a pivot of minimal absolute value in the submatrix.
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = r; i < rows; ++i)
            for (int j = c; j < cols; ++j) {
                if (M[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
                Int v = abs(M[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(M[static_cast<size_t>(r)], M[static_cast<size_t>(pi)]);
        for (int i = 0; i < rows; ++i) std::swap(M[static_cast<size_t>(i)][static_cast<size_t>(c)], M[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
        bool clean = true;
        for (int i = r + 1; i < rows; ++i) {
            Int q = M[static_cast<size_t>(i)][static_cast<size_t>(c)] / M[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (q != 0)
                for (int j = c; j < cols; ++j)
                    M[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * M[static_cast<size_t>(r)][static_cast<size_t>(j)];
            if (M[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) clean = false;
        }
        for (int j = c + 1; j < cols; ++j) {
            Int q = M[static_cast<size_t>(r)][static_cast<size_t>(j)] / M[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (q != 0)
                for (int i = r; i < rows; ++i)
                    M[static_cast<size_t>(i)][static_cast<size_t>(j)] -= q * M[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (M[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0) clean = false;
        }
        if (!clean) continue;  // repeat with a smaller pivot
        Int d = abs(M[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        std::int64_t val = 0;
        while (d % p == 0) {
            d /= p;
            ++val;
        }
        type.push_back(val);
        ++r;
        ++c;
    }
    while (static_cast<int>(type.size()) < cols) type.push_back(-1);  // -1: rank deficiency marker
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

}  // namespace

std::uint64_t hnf_count(int rank, std::int64_t p, int k) {
    std::uint64_t total = 0;
    for_each_diagonal(rank, k, [&](const std::vector<int>& a) {
        std::uint64_t c = diagonal_hnf_count(a, p);
        total = (total > UINT64_MAX - c) ? UINT64_MAX : total + c;
    });
    return total;
}

void for_each_hnf(int rank, std::int64_t p, int k,
                  const std::function<void(const Matrix&)>& visit, const Budget& budget) {
    std::uint64_t est = hnf_count(rank, p, k);
    if (est > budget.max_hnf) throw BudgetExceeded(est);
    for_each_diagonal(rank, k, [&](const std::vector<int>& a) {
        enumerate_for_diagonal(rank, p, a, visit);
    });
}

Int hnf_ideal_count(const zeta::BracketTable& b, std::int64_t p, int k, const Budget& budget,
                    const std::vector<std::vector<std::int64_t>>& module_action) {
    std::uint64_t est = hnf_count(b.rank, p, k);
    if (est > budget.max_hnf) throw BudgetExceeded(est);

    std::vector<std::vector<int>> diagonals;
    for_each_diagonal(b.rank, k, [&](const std::vector<int>& a) { diagonals.push_back(a); });

    auto count_for = [&](const std::vector<int>& a) {
        std::int64_t cnt = 0;
        enumerate_for_diagonal(b.rank, p, a, [&](const Matrix& B) {
            for (int row = 0; row < b.rank; ++row) {
                if (!module_action.empty()) {
                    std::vector<std::int64_t> img(static_cast<size_t>(b.rank), 0);
                    for (int i = 0; i < b.rank; ++i) {
                        std::int64_t v = B[static_cast<size_t>(row)][static_cast<size_t>(i)];
                        if (v == 0) continue;
                        for (int j = 0; j < b.rank; ++j)
                            img[static_cast<size_t>(j)] += v * module_action[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    }
                    if (!in_lattice(B, img)) return;
                }
                for (int j = 0; j < b.rank; ++j) {
                    auto w = b.bracket(B[static_cast<size_t>(row)], j);
                    bool zero = true;
                    for (auto x : w)
                        if (x != 0) {
                            zero = false;
                            break;
                        }
                    if (!zero && !in_lattice(B, w)) return;
                }
            }
            ++cnt;
        });
        return cnt;
    };

    Int total = 0;
    int nthreads = std::max(1, budget.threads);
    if (nthreads == 1 || diagonals.size() < 2) {
        for (auto& a : diagonals) total += count_for(a);
    } else {
        std::vector<std::int64_t> partial(diagonals.size(), 0);
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= diagonals.size()) break;
                partial[i] = count_for(diagonals[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto v : partial) total += v;
    }
    return total;
}

Int structural_ideal_count(const zeta::BracketTable& b, const std::vector<int>& A_indices,
                           std::int64_t p, int k, const Budget& budget) {
    std::set<int> Aset(A_indices.begin(), A_indices.end());
    for (int t : b.derived_indices())
        if (!Aset.count(t))
            throw std::domain_error("structural_ideal_count: A must contain the derived subalgebra");
    for (auto& e : b.entries)
        if (Aset.count(e.i) || Aset.count(e.j))
            throw std::domain_error("structural_ideal_count: A must be central");
    std::vector<int> Q;  // quotient coordinates
    for (int i = 0; i < b.rank; ++i)
        if (!Aset.count(i)) Q.push_back(i);
    int n = static_cast<int>(Q.size());
    int c = static_cast<int>(A_indices.size());
    std::vector<int> Apos(static_cast<size_t>(b.rank), -1);
    for (int j = 0; j < c; ++j) Apos[static_cast<size_t>(A_indices[static_cast<size_t>(j)])] = j;

    std::uint64_t est = 0;
    for (int k1 = 0; k1 <= k; ++k1) {
        std::uint64_t e1 = hnf_count(n, p, k1), e2 = hnf_count(c, p, k - k1);
        est = (e1 > UINT64_MAX / std::max<std::uint64_t>(e2, 1)) ? UINT64_MAX : est + e1 * e2;
    }
    if (est > budget.max_hnf) throw BudgetExceeded(est);

    Int total = 0;
    for (int k1 = 0; k1 <= k; ++k1) {
        int k2 = k - k1;
        Int weight = 1;
        for (int i = 0; i < n * k2; ++i) weight *= p;
        for_each_hnf(n, p, k1, [&](const Matrix& Lam) {
            // Generators of [Lambda, L] in A-coordinates.
            std::vector<std::vector<std::int64_t>> R;
            for (int row = 0; row < n; ++row) {
                std::vector<std::int64_t> lift(static_cast<size_t>(b.rank), 0);
                for (int i = 0; i < n; ++i)
                    lift[static_cast<size_t>(Q[static_cast<size_t>(i)])] = Lam[static_cast<size_t>(row)][static_cast<size_t>(i)];
                for (int j : Q) {
                    auto w = b.bracket(lift, j);
                    std::vector<std::int64_t> proj(static_cast<size_t>(c), 0);
                    bool zero = true;
                    for (int i = 0; i < b.rank; ++i) {
                        if (w[static_cast<size_t>(i)] == 0) continue;
                        if (Apos[static_cast<size_t>(i)] < 0)
                            throw std::logic_error("structural_ideal_count: bracket escapes A");
                        proj[static_cast<size_t>(Apos[static_cast<size_t>(i)])] = w[static_cast<size_t>(i)];
                        zero = false;
                    }
                    if (!zero) R.push_back(std::move(proj));
                }
            }
            Int matches = 0;
            for_each_hnf(c, p, k2, [&](const Matrix& M) {
                for (auto& gen : R)
                    if (!in_lattice(M, gen)) return;
                ++matches;
            });
            total += matches * weight;
        });
    }
    return total;
}

Int count_sublattices_by_type(int n, std::int64_t p, const Partition& nu, const Budget& budget) {
    if (static_cast<int>(nu.length()) > n)
        throw std::domain_error("count_sublattices_by_type: type has more parts than the rank");
    std::vector<std::int64_t> want;
    for (int i = 0; i < n; ++i) want.push_back(nu.part(static_cast<size_t>(i)));
    int k = static_cast<int>(nu.weight());
    // Each Hermite diagonal exponent is the exact order of a basis image in
    // the quotient, so it is bounded by the largest part of nu.
    int cap = static_cast<int>(nu.part(0));
    std::vector<std::vector<int>> diagonals;
    {
        std::vector<int> a(static_cast<size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == n) {
                if (left == 0) diagonals.push_back(a);
                return;
            }
            for (int v = 0; v <= std::min(left, cap); ++v) {
                a[static_cast<size_t>(pos)] = v;
                rec(pos + 1, left - v);
            }
            a[static_cast<size_t>(pos)] = 0;
        };
        rec(0, k);
    }
    std::uint64_t est = 0;
    for (auto& a : diagonals) {
        std::uint64_t c = diagonal_hnf_count(a, p);
        est = (est > UINT64_MAX - c) ? UINT64_MAX : est + c;
    }
    if (est > budget.max_hnf) throw BudgetExceeded(est);
    Int cnt = 0;
    for (auto& a : diagonals)
        enumerate_for_diagonal(n, p, a, [&](const Matrix& B) {
            std::vector<std::vector<Int>> M(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = B[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (snf_type(std::move(M), n, p) == want) ++cnt;
        });
    return cnt;
}

Int count_subgroups(const Partition& lambda, const Partition& mu, std::int64_t p,
                    const Budget& budget) {
    if (!lambda.contains(mu)) return 0;
    int n = static_cast<int>(lambda.length());
    int k = static_cast<int>(lambda.weight() - mu.weight());
    std::vector<std::int64_t> want;
    for (int i = 0; i < n; ++i) want.push_back(mu.part(static_cast<size_t>(i)));

    // Only lattices containing diag(p^{lambda_i}) matter, which bounds the
    // i-th diagonal exponent by lambda_i; enumerate within those bounds.
    std::vector<std::vector<int>> diagonals;
    {
        std::vector<int> a(static_cast<size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == n) {
                if (left == 0) diagonals.push_back(a);
                return;
            }
            int cap = std::min<std::int64_t>(left, lambda.part(static_cast<size_t>(pos)));
            for (int v = 0; v <= cap; ++v) {
                a[static_cast<size_t>(pos)] = v;
                rec(pos + 1, left - v);
            }
            a[static_cast<size_t>(pos)] = 0;
        };
        rec(0, k);
    }
    std::uint64_t est = 0;
    for (auto& a : diagonals) {
        std::uint64_t c = diagonal_hnf_count(a, p);
        est = (est > UINT64_MAX - c) ? UINT64_MAX : est + c;
    }
    if (est > budget.max_hnf) throw BudgetExceeded(est);

    Int cnt = 0;
    auto visit = [&](const Matrix& B) {
        // D = diag(p^{lambda_i}) must lie inside the lattice spanned by B.
        std::vector<std::vector<Int>> C(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
        for (int g = 0; g < n; ++g) {
            std::vector<std::int64_t> v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(g)] = ipow(p, static_cast<int>(lambda.part(static_cast<size_t>(g))));
            // Express v over the rows of B, ascending through the columns.
            for (int i = 0; i < n; ++i) {
                std::int64_t piv = B[static_cast<size_t>(i)][static_cast<size_t>(i)];
                if (v[static_cast<size_t>(i)] % piv != 0) return;
                std::int64_t coef = v[static_cast<size_t>(i)] / piv;
                C[static_cast<size_t>(g)][static_cast<size_t>(i)] = coef;
                if (coef != 0)
                    for (int j = i; j < n; ++j) v[static_cast<size_t>(j)] -= coef * B[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
        }
        // The subgroup M/D has type given by the elementary divisors of C.
        auto type = snf_type(C, n, p);
        if (type == want) ++cnt;
    };
    for (auto& a : diagonals) enumerate_for_diagonal(n, p, a, visit);
    return cnt;
}

std::vector<Partition> partitions_bounded(int parts, std::int64_t max_part) {
    std::vector<Partition> out;
    std::vector<std::int64_t> cur(static_cast<size_t>(parts), 0);
    std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t cap) {
        if (pos == parts) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t v = cap; v >= 0; --v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, max_part);
    return out;
}

namespace {

// The radical-flag construction rho(nu): thresholds at the jump values of
// lambda(nu) produce level words whose radicals form the compatible flag.
combinat::AdmissibleComposition rho_of_nu(const StructuralDescriptor& d,
                                          const combinat::DyckWord& w,
                                          const std::vector<Partition>& nu,
                                          const Partition& lambda) {
    int r = w.runs();
    int m = d.m();
    std::vector<Subword> chain;
    for (int j = 1; j <= r; ++j) {
        int lt = w.L(j) - d.eps();
        Subword kappa = Subword::empty(static_cast<size_t>(m));
        if (lt > 0) {
            std::int64_t theta = lambda.part(static_cast<size_t>(lt - 1));
            std::vector<int> a(static_cast<size_t>(m), 0);
            for (int i = 0; i < m; ++i)
                for (auto part : nu[static_cast<size_t>(i)].parts())
                    if (part >= theta) ++a[static_cast<size_t>(i)];
            kappa = Subword(std::move(a));
        }
        chain.push_back(d.radical(kappa));
    }
    combinat::AdmissibleComposition ac;
    ac.run_count = r;
    ac.rho.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(r), 0));
    Subword prev = Subword::empty(static_cast<size_t>(m));
    for (int j = 1; j <= r; ++j) {
        Subword q = chain[static_cast<size_t>(j - 1)].quotient(prev);
        for (int i = 0; i < m; ++i) ac.rho[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = q.alpha(static_cast<size_t>(i));
        prev = chain[static_cast<size_t>(j - 1)];
    }
    return ac;
}

}  // namespace

TruncatedSeries delta_truncated(const StructuralDescriptor& d, const combinat::DyckWord& w,
                                const combinat::AdmissibleComposition& rho, int bound) {
    using exactalg::VarId;
    VarId q = zeta::q_var(), t = zeta::t_var();
    int m = d.m();
    int c = d.c();
    int eps = d.eps();

    // All m-tuples of projection data with parts <= bound.
    std::vector<std::vector<Partition>> tuples{{}};
    for (int i = 0; i < m; ++i) {
        auto opts = partitions_bounded(d.n_i(i), bound);
        std::vector<std::vector<Partition>> next;
        for (auto& tup : tuples)
            for (auto& pp : opts) {
                auto nt = tup;
                nt.push_back(pp);
                next.push_back(std::move(nt));
            }
        tuples = std::move(next);
    }
    auto mus = partitions_bounded(c, bound);

    Polynomial acc;
    for (auto& nu : tuples) {
        Partition lambda = d.lambda_of_nu(nu);
        Polynomial beta_prod(1);
        bool first_mu = true;
        std::int64_t nu_t = 0;
        for (int i = 0; i < m; ++i)
            nu_t += d.f_i(i) * nu[static_cast<size_t>(i)].weight();
        for (auto& mu : mus) {
            auto type = combinat::overlap_type(lambda, mu, eps);
            if (!type || !(*type == w)) continue;
            if (first_mu) {
                // Matching mu exists, so lambda jumps at every Ltilde_j and the
                // radical-flag construction applies; only now is rho(nu) needed.
                if (!(rho_of_nu(d, w, nu, lambda).rho == rho.rho)) break;
                for (int i = 0; i < m; ++i)
                    beta_prod *= combinat::beta_poly(nu[static_cast<size_t>(i)], q)
                                     .substitute(q, Monomial::of(q, d.f_i(i)));
                first_mu = false;
            }
            Polynomial term = beta_prod * combinat::birkhoff_alpha(lambda, mu, q, eps);
            std::int64_t mu_w = mu.weight();
            term = term * (Monomial::of(q, static_cast<std::int64_t>(d.n()) * mu_w) *
                           Monomial::of(t, mu_w + nu_t));
            acc += term;
        }
    }

    TruncatedSeries out(t, bound);
    for (auto& [mono, coef] : acc.terms()) {
        std::int64_t e = mono.exponent(t);
        if (e <= bound) out.coefficient(e).add_term(mono.substitute(t, Monomial::one()), coef);
    }
    return out;
}

}  // namespace igusa::oracle
