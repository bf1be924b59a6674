#include "igusa/lie_ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace igusa::zeta {

using combinat::Composition;
using combinat::DescriptorPair;
using combinat::StructuralDescriptor;

std::vector<std::int64_t> BracketTable::bracket(const std::vector<std::int64_t>& v,
                                                int basis_j) const {
    std::vector<std::int64_t> out(static_cast<size_t>(rank), 0);
    for (auto& e : entries) {
        if (e.j == basis_j)
            out[static_cast<size_t>(e.k)] += v[static_cast<size_t>(e.i)] * e.c;
        else if (e.i == basis_j)
            out[static_cast<size_t>(e.k)] -= v[static_cast<size_t>(e.j)] * e.c;
    }
    return out;
}

void BracketTable::validate() const {
    std::set<int> targets;
    for (auto& e : entries) {
        if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= rank || e.j >= rank || e.k >= rank)
            throw std::domain_error("BracketTable: index out of range");
        if (e.i >= e.j) throw std::domain_error("BracketTable: store entries with i < j only");
        targets.insert(e.k);
    }
    // Class <= 2: brackets of bracket targets vanish.
    for (int k : targets)
        for (auto& e : entries)
            if (e.i == k || e.j == k)
                throw std::domain_error("BracketTable: not class-2-nilpotent");
}

std::vector<int> BracketTable::derived_indices() const {
    std::set<int> targets;
    for (auto& e : entries) targets.insert(e.k);
    return std::vector<int>(targets.begin(), targets.end());
}

std::vector<int> BracketTable::center_indices() const {
    std::vector<int> out;
    for (int k = 0; k < rank; ++k) {
        bool central = true;
        for (auto& e : entries)
            if (e.i == k || e.j == k) {
                central = false;
                break;
            }
        if (central) out.push_back(k);
    }
    return out;
}

bool LieRingSpec::unramified() const {
    for (auto& f : factors)
        if (f.ram != 1) return false;
    return true;
}

namespace {
int factor_rank(const LieRingFactor& f) {
    switch (f.family) {
        case Family::FreeNilpotent: return f.d + f.d * (f.d - 1) / 2;
        case Family::FreeProduct: return f.d + f.d2 + f.d * f.d2;
        case Family::HigherHeisenberg: return 2 * f.d + 1;
        case Family::Abelian: return f.d;
    }
    return 0;
}
int factor_cocentral(const LieRingFactor& f) {
    switch (f.family) {
        case Family::FreeNilpotent: return f.d;
        case Family::FreeProduct: return (f.d == 0 || f.d2 == 0) ? 0 : f.d + f.d2;
        case Family::HigherHeisenberg: return 2 * f.d;
        case Family::Abelian: return 0;
    }
    return 0;
}
}  // namespace

int LieRingSpec::rank() const {
    if (custom_descriptor) return custom_descriptor->rank();
    int r = 0;
    for (auto& f : factors) r += factor_rank(f) * f.inertia * f.ram;
    if (custom_table) r += custom_table->rank;
    return r;
}

int LieRingSpec::cocentral_rank() const {
    if (custom_descriptor) return custom_descriptor->cocentral_rank();
    int r = 0;
    for (auto& f : factors) r += factor_cocentral(f) * f.inertia * f.ram;
    return r;
}

std::string LieRingSpec::display() const {
    std::string s;
    for (auto& f : factors) {
        if (!s.empty()) s += " x ";
        switch (f.family) {
            case Family::FreeNilpotent: s += "f2," + std::to_string(f.d); break;
            case Family::FreeProduct: s += "g" + std::to_string(f.d) + "," + std::to_string(f.d2); break;
            case Family::HigherHeisenberg: s += "h" + std::to_string(f.d); break;
            case Family::Abelian: s += "Z^" + std::to_string(f.d); break;
        }
        if (f.inertia != 1) s += "[f=" + std::to_string(f.inertia) + "]";
    }
    if (custom_table) s += s.empty() ? "custom" : " x custom";
    if (custom_descriptor) s += s.empty() ? "descriptor" : " (descriptor)";
    return s;
}

LieRingSpec parse_spec(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    LieRingSpec spec;
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("spec parse error at offset " + std::to_string(pos) + ": " + why);
    };
    auto read_int = [&]() {
        size_t start = pos;
        while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(t.substr(start, pos - start));
    };
    while (true) {
        if (pos >= t.size()) fail("expected a factor");
        LieRingFactor f;
        char c = t[pos];
        if (c == 'f') {
            ++pos;
            f.family = Family::FreeNilpotent;
            int two = read_int();
            if (two != 2) fail("only class 2 is supported: write f2,d");
            if (pos >= t.size() || t[pos] != ',') fail("expected ',' in f2,d");
            ++pos;
            f.d = read_int();
            if (f.d < 2) fail("f2,d needs d >= 2");
        } else if (c == 'g') {
            ++pos;
            f.family = Family::FreeProduct;
            f.d = read_int();
            if (pos >= t.size() || t[pos] != ',') fail("expected ',' in gd,d'");
            ++pos;
            f.d2 = read_int();
            if (f.d == 0 && f.d2 == 0) fail("g0,0 is the zero ring");
        } else if (c == 'h') {
            ++pos;
            f.family = Family::HigherHeisenberg;
            f.d = read_int();
            if (f.d < 1) fail("hd needs d >= 1");
        } else if (c == 'Z') {
            ++pos;
            if (pos >= t.size() || t[pos] != '^') fail("expected '^' in Z^r");
            ++pos;
            f.family = Family::Abelian;
            f.d = read_int();
            if (f.d < 1) fail("Z^r needs r >= 1");
        } else {
            fail("unknown family (expected f, g, h, or Z)");
        }
        if (pos < t.size() && t[pos] == '[') {
            ++pos;
            if (t.compare(pos, 2, "f=") != 0) fail("expected [f=k]");
            pos += 2;
            f.inertia = read_int();
            if (f.inertia < 1) fail("inertia degree must be positive");
            if (pos >= t.size() || t[pos] != ']') fail("expected ']'");
            ++pos;
        }
        spec.factors.push_back(f);
        if (pos == t.size()) break;
        if (t[pos] != 'x') fail("expected 'x' between factors");
        ++pos;
    }
    return spec;
}

StructuralDescriptor descriptor_for(const LieRingSpec& spec) {
    if (spec.custom_descriptor) return *spec.custom_descriptor;
    if (spec.is_custom() || spec.factors.empty())
        throw std::invalid_argument("descriptor_for: no catalog factors");
    if (!spec.unramified())
        throw std::domain_error("descriptor_for: ramified extensions are not supported "
                                "(the combinatorial hypothesis fails)");
    Composition nbar;
    std::vector<int> inertia;
    std::vector<DescriptorPair> pairs;
    int abelian_rank = 0;
    for (auto& f : spec.factors) {
        int base = static_cast<int>(nbar.size());
        switch (f.family) {
            case Family::Abelian:
                abelian_rank += f.d * f.inertia;
                break;
            case Family::FreeNilpotent: {
                nbar.push_back(f.d);
                inertia.push_back(f.inertia);
                for (int k = 0; k < f.inertia; ++k) pairs.push_back({{base}, {2}});
                break;
            }
            case Family::FreeProduct: {
                if (f.d == 0 || f.d2 == 0) {  // g_{d,0} = Z^d
                    abelian_rank += (f.d + f.d2) * f.inertia;
                    break;
                }
                nbar.push_back(f.d);
                nbar.push_back(f.d2);
                inertia.push_back(f.inertia);
                inertia.push_back(f.inertia);
                for (int k = 0; k < f.inertia; ++k) pairs.push_back({{base, base + 1}, {1, 1}});
                break;
            }
            case Family::HigherHeisenberg: {
                std::vector<int> comps;
                std::vector<int> sigma;
                for (int i = 0; i < 2 * f.d; ++i) {
                    nbar.push_back(1);
                    inertia.push_back(f.inertia);
                    comps.push_back(base + i);
                    sigma.push_back(1);
                }
                for (int k = 0; k < f.inertia; ++k) pairs.push_back({comps, sigma});
                break;
            }
        }
    }
    return StructuralDescriptor(std::move(nbar), std::move(inertia), std::move(pairs), abelian_rank);
}

namespace {

void append_block(BracketTable& t, const BracketTable& block) {
    int off = t.rank;
    t.rank += block.rank;
    for (auto& e : block.entries) t.entries.push_back({e.i + off, e.j + off, e.k + off, e.c});
}

BracketTable factor_table(const LieRingFactor& f) {
    BracketTable t;
    switch (f.family) {
        case Family::Abelian:
            t.rank = f.d;
            break;
        case Family::FreeNilpotent: {
            int d = f.d;
            t.rank = d + d * (d - 1) / 2;
            int z = d;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) t.entries.push_back({i, j, z++, 1});
            break;
        }
        case Family::FreeProduct: {
            int d = f.d, d2 = f.d2;
            t.rank = d + d2 + d * d2;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d2; ++j)
                    t.entries.push_back({i, d + j, d + d2 + i * d2 + j, 1});
            break;
        }
        case Family::HigherHeisenberg: {
            int d = f.d;
            t.rank = 2 * d + 1;
            for (int i = 0; i < d; ++i) t.entries.push_back({i, d + i, 2 * d, 1});
            break;
        }
    }
    return t;
}

// alpha^f = c1 alpha + c0 with x^f - c1 x - c0 irreducible mod p; shared by
// the bracket table and the module action so the two stay consistent.
std::vector<std::int64_t> unramified_poly_coeffs(int f, std::int64_t p);

bool irreducible_mod_p(const std::vector<std::int64_t>& coeffs, std::int64_t p) {
    // coeffs: c_0..c_{f-1} of x^f = c_{f-1} x^{f-1} + ... + c_0 over F_p.
    // A monic polynomial of degree f is irreducible iff it has no root for
    // f <= 3; for f <= 3 (all we use) root-freeness plus, for f = 3, no
    // linear factor suffices... root check covers f in {2, 3}.
    int f = static_cast<int>(coeffs.size());
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t v = 1;  // x^f
        for (int i = 0; i < f; ++i) v = v * x % p;
        std::int64_t rhs = 0, xp = 1;
        for (int i = 0; i < f; ++i) {
            rhs = (rhs + coeffs[static_cast<size_t>(i)] * xp) % p;
            xp = xp * x % p;
        }
        if ((v - rhs) % p == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> unramified_poly_coeffs(int f, std::int64_t p) {
    std::vector<std::int64_t> coeffs(static_cast<size_t>(f), 0);
    for (std::int64_t c0 = 1; c0 < p; ++c0)
        for (std::int64_t c1 = 0; c1 < p; ++c1) {
            coeffs[0] = c0;
            coeffs[1] = c1;
            if (irreducible_mod_p(coeffs, p)) return coeffs;
        }
    throw std::logic_error("unramified_poly_coeffs: no irreducible polynomial found");
}

}  // namespace

BracketTable bracket_table(const LieRingSpec& spec) {
    BracketTable t;
    if (spec.custom_table) append_block(t, *spec.custom_table);
    for (auto& f : spec.factors) {
        if (f.inertia != 1)
            throw std::domain_error("bracket_table: inertia > 1 needs a prime; use bracket_table_at");
        append_block(t, factor_table(f));
    }
    t.validate();
    return t;
}

BracketTable bracket_table_at(const LieRingSpec& spec, std::int64_t p) {
    BracketTable t;
    if (spec.custom_table) append_block(t, *spec.custom_table);
    for (auto& fac : spec.factors) {
        BracketTable base = factor_table(LieRingFactor{fac.family, fac.d, fac.d2, 1, 1});
        int f = fac.inertia;
        if (f == 1) {
            append_block(t, base);
            continue;
        }
        if (f > 3) throw std::domain_error("bracket_table_at: inertia degrees above 3 not wired up");
        std::vector<std::int64_t> coeffs = unramified_poly_coeffs(f, p);
        // Multiplication-by-alpha matrix A: alpha * alpha^i column.
        std::vector<std::vector<std::int64_t>> A(static_cast<size_t>(f),
                                                 std::vector<std::int64_t>(static_cast<size_t>(f), 0));
        for (int i = 0; i + 1 < f; ++i) A[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = 1;
        for (int i = 0; i < f; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(f - 1)] = coeffs[static_cast<size_t>(i)];
        // Powers of A give alpha^a * alpha^b in the basis 1..alpha^{f-1}.
        auto mat_mul = [&](auto& X, auto& Y) {
            std::vector<std::vector<std::int64_t>> Z(static_cast<size_t>(f),
                                                     std::vector<std::int64_t>(static_cast<size_t>(f), 0));
            for (int i = 0; i < f; ++i)
                for (int k = 0; k < f; ++k)
                    for (int j = 0; j < f; ++j)
                        Z[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                            X[static_cast<size_t>(i)][static_cast<size_t>(k)] * Y[static_cast<size_t>(k)][static_cast<size_t>(j)];
            return Z;
        };
        std::vector<std::vector<std::vector<std::int64_t>>> pw;
        std::vector<std::vector<std::int64_t>> I(static_cast<size_t>(f),
                                                 std::vector<std::int64_t>(static_cast<size_t>(f), 0));
        for (int i = 0; i < f; ++i) I[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        pw.push_back(I);
        for (int k = 1; k <= 2 * (f - 1); ++k) pw.push_back(mat_mul(A, pw.back()));

        BracketTable ext;
        ext.rank = base.rank * f;
        // Basis e_i ⊗ alpha^a at index i*f + a.
        for (auto& e : base.entries)
            for (int a = 0; a < f; ++a)
                for (int b = 0; b < f; ++b) {
                    int lhs = e.i * f + a, rhs = e.j * f + b;
                    if (lhs >= rhs) throw std::logic_error("bracket_table_at: ordering");
                    for (int k = 0; k < f; ++k) {
                        std::int64_t coef = e.c * pw[static_cast<size_t>(a + b)][static_cast<size_t>(k)][0];
                        if (coef != 0) ext.entries.push_back({lhs, rhs, e.k * f + k, coef});
                    }
                }
        append_block(t, ext);
    }
    t.validate();
    return t;
}

std::vector<std::vector<std::int64_t>> module_action_at(const LieRingSpec& spec, std::int64_t p) {
    if (spec.custom_table)
        throw std::domain_error("module_action_at: custom tables carry no extension data");
    int rank = 0;
    for (auto& fac : spec.factors) rank += factor_rank(fac) * fac.inertia;
    std::vector<std::vector<std::int64_t>> act(static_cast<size_t>(rank),
                                               std::vector<std::int64_t>(static_cast<size_t>(rank), 0));
    int off = 0;
    for (auto& fac : spec.factors) {
        int f = fac.inertia;
        if (f > 3) throw std::domain_error("module_action_at: inertia degrees above 3 not wired up");
        int base_rank = factor_rank(fac);
        std::vector<std::int64_t> coeffs =
            f > 1 ? unramified_poly_coeffs(f, p) : std::vector<std::int64_t>{};
        for (int i = 0; i < base_rank; ++i)
            for (int a = 0; a < f; ++a) {
                int row = off + i * f + a;
                if (f == 1) {
                    act[static_cast<size_t>(row)][static_cast<size_t>(row)] = 1;  // alpha = 1
                } else if (a + 1 < f) {
                    act[static_cast<size_t>(row)][static_cast<size_t>(off + i * f + a + 1)] = 1;
                } else {
                    for (int k = 0; k < f; ++k)
                        act[static_cast<size_t>(row)][static_cast<size_t>(off + i * f + k)] =
                            coeffs[static_cast<size_t>(k)];
                }
            }
        off += base_rank * f;
    }
    return act;
}

}  // namespace igusa::zeta
