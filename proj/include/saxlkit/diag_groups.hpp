#pragma once

#include "saxlkit/simple_groups.hpp"

namespace saxl {

/// Diagonal-type group with socle T^k acting on the |T|^(k-1) cosets of the
/// diagonal subgroup. A point is the normalized tuple (t_2,...,t_k) of
/// element indices of T labelling the coset of (1, t_2, ..., t_k); points
/// are enumerated lexicographically over the index tuples.
struct DiagonalGroup {
    PermGroup G;
    int k = 0;
    long t_order = 0;
    bool primitive_shape = false;  // top primitive on [k], or k == 2 and top trivial

    long point_of_tuple(const std::vector<int>& t) const;  // length k-1
    std::vector<int> tuple_of_point(long p) const;
};

/// top acts on [k] (degree k; the trivial group on k points is allowed).
/// with_outer adds the bundled Out(T) generators, giving T^k.(Out(T) x P)
/// when top = P. Preconditions: T passes the nonabelian-simple gate.
DiagonalGroup diagonal_group(const BundledSimple& T, int k, const PermGroup& top,
                             bool with_outer, long degree_cap = 20000);

/// Hol(T) = T : Aut(T) acting on T by t -> (g^-1 t)^alpha. Point labels are
/// element-table indices of T; point 0 is the identity of T.
PermGroup holomorph(const BundledSimple& T);

/// Holomorph of a cyclic group (engine testing); degree n.
PermGroup holomorph_cyclic(int n);

}  // namespace saxl
