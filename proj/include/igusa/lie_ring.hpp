// The catalog of class-2-nilpotent Lie rings: free class-2 f_{2,d}, free
// class-2 products g_{d,d'}, higher Heisenberg h_d, abelian Z^r, direct
// products of these over unramified extensions.  Provides the structural
// descriptor of each spec and integer structure constants for the oracle.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "igusa/descriptor.hpp"

namespace igusa::zeta {

enum class Family { FreeNilpotent, FreeProduct, HigherHeisenberg, Abelian };

struct LieRingFactor {
    Family family;
    int d = 0;        // generators (f_{2,d}, h_d) / first block (g_{d,d'}) / rank (Z^r)
    int d2 = 0;       // second block for g_{d,d'}
    int inertia = 1;  // f: inertia degree of the unramified coefficient extension
    int ram = 1;      // e: ramification index; anything but 1 is rejected by the engine
};

// Integer structure constants [e_i, e_j] = sum_k c_{ij}^k e_k.
struct BracketTable {
    int rank = 0;
    // Sparse entries for i < j; antisymmetry is implicit.
    struct Entry {
        int i, j, k;
        std::int64_t c;
    };
    std::vector<Entry> entries;

    std::vector<std::int64_t> bracket(const std::vector<std::int64_t>& v, int basis_j) const;
    void validate() const;  // antisymmetry by construction; checks class <= 2
    // Basis indices spanning an isolated subalgebra between [L,L] and Z(L).
    std::vector<int> center_indices() const;
    std::vector<int> derived_indices() const;
};

struct LieRingSpec {
    std::vector<LieRingFactor> factors;
    std::optional<BracketTable> custom_table;  // raw structure constants (oracle-only)
    // A caller-supplied descriptor: the engine cannot certify the minima
    // hypothesis for it and flags the output accordingly.
    std::optional<combinat::StructuralDescriptor> custom_descriptor;

    bool is_custom() const { return factors.empty() && custom_table.has_value(); }
    bool unramified() const;
    int rank() const;            // rk L (over o)
    int cocentral_rank() const;  // rk L/Z(L)
    std::string display() const;
};

// Parses the factor grammar: families "f2,d", "gd,d'", "hd", "Z^r",
// optional "[f=k]" inertia suffix, factors joined by "x"; whitespace is
// ignored.  Throws std::invalid_argument with a message on bad input.
LieRingSpec parse_spec(const std::string& text);

// Structural descriptor for a catalog spec (Hypothesis certified).  Throws
// std::domain_error for ramified input and std::invalid_argument for custom
// specs without catalog factors.
combinat::StructuralDescriptor descriptor_for(const LieRingSpec& spec);

// Structure constants over Z for the spec with all inertia degrees 1.
BracketTable bracket_table(const LieRingSpec& spec);
// Structure constants of the restriction of scalars along the unramified
// degree-f extension, realized with a monic polynomial irreducible mod p.
BracketTable bracket_table_at(const LieRingSpec& spec, std::int64_t p);
// Multiplication by the extension generator on the same basis; row i is the
// image of basis vector i.  Used to restrict oracle counts to O-submodules.
std::vector<std::vector<std::int64_t>> module_action_at(const LieRingSpec& spec, std::int64_t p);

}  // namespace igusa::zeta
