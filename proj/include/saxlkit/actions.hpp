#pragma once

#include "saxlkit/gf.hpp"
#include "saxlkit/perm_group.hpp"

namespace saxl {

enum class PSL2Variant { PSL, PGL, PSigmaL, PGammaL, M10 };

/// Groups with socle L_2(q) in the natural action on the projective line
/// PG(1,q). Point 0 is [1:0]; point 1+e is [e:1] for field element e, in
/// encoding order. Requires q >= 4; PSigmaL/PGammaL need f > 1, M10 needs
/// q = 9.
PermGroup psl2_projective(int q, PSL2Variant variant);

struct CosetAction {
    PermGroup image;          // the induced permutation group on [G:H]
    int index = 0;            // number of cosets; point 0 is the coset H
    bool faithful = true;
    BigInt kernel_order = 1;  // core of H in G
    std::vector<Perm> coset_reps;  // representative of each coset, in G
};

/// Right-coset action of G on [G:H]. H is given by generators, which must
/// lie in G. Throws CapExceeded when the index exceeds index_cap.
CosetAction coset_action(const PermGroup& g, const std::vector<Perm>& h_gens,
                         long index_cap = 20000);

struct PairsAction {
    PermGroup image;  // action on unordered pairs {i,j}, i<j, lex order
    bool faithful = true;
    BigInt kernel_order = 1;
    std::vector<std::pair<Point, Point>> pair_of_point;
};

PairsAction pairs_action(const PermGroup& g);

/// G = V.H <= AGL_n(q) acting on the q^n vectors of V (lexicographic by
/// coordinates, leftmost coordinate most significant). h_matrices are
/// invertible n x n matrices over GF(q), entries as field-element indices,
/// acting on row vectors from the right: v -> v * M.
PermGroup affine_group(const FiniteField& field, int n,
                       const std::vector<std::vector<std::vector<int>>>& h_matrices,
                       long degree_cap = 20000);

/// <matrices> <= GL_n(q) acting on the q^n - 1 nonzero vectors (same
/// ordering as affine_group, zero vector removed).
PermGroup linear_group_nonzero_vectors(const FiniteField& field, int n,
                                       const std::vector<std::vector<std::vector<int>>>& matrices,
                                       long degree_cap = 20000);

struct WreathAction {
    PermGroup image;  // L wr P in product action on Gamma^k
    bool primitive_shape = false;  // L primitive non-regular and P transitive
    std::vector<std::vector<Point>> tuple_of_point;
};

/// Product action of L wr P on Gamma^k, where P acts on [k]. Tuples are
/// enumerated lexicographically (leftmost coordinate most significant).
/// P may be intransitive (direct-product style powers); flagged, not an
/// error.
WreathAction wreath_product_action(const PermGroup& l, const PermGroup& p,
                                   long degree_cap = 20000);

// Index of a point tuple in the lexicographic enumeration used by
// wreath_product_action.
long tuple_index(const std::vector<Point>& tuple, int gamma_size);

}  // namespace saxl
