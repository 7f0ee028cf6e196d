#pragma once

#include <set>

#include "saxlkit/perm_group.hpp"

namespace saxl {

struct BaseSearchResult {
    int b = 0;
    std::vector<Point> witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact minimal base size by iterative deepening; depth d is certified
/// impossible by exhausting the orbit-representative-pruned search tree
/// before moving to d+1. hint_b skips the lower depths.
BaseSearchResult base_size(const PermGroup& g, int hint_b = -1);

/// True iff some m points of Omega have trivial pointwise H-stabilizer.
/// H may be intransitive and have fixed points.
bool has_base_of_size(const PermGroup& h, int m, std::vector<Point>* witness = nullptr,
                      std::uint64_t* nodes = nullptr);

/// Exact number of ordered k-tuples in Omega^k with trivial pointwise
/// stabilizer, via |O| * count(H_beta, k-1) summed over H-orbits.
BigInt count_ordered_bases(const PermGroup& g, int k);

struct RegularOrbitCount {
    int b = 0;
    BigInt ordered_base_count;
    BigInt reg;
};

/// reg(G) = count_ordered_bases(G, b(G)) / |G|; the division being exact is
/// an internal invariant.
RegularOrbitCount regular_base_orbits(const PermGroup& g);

struct IrredundantMax {
    int max_size = 0;
    std::vector<Point> witness;
};

/// I(G): maximal length of a strictly descending stabilizer sequence ending
/// at the trivial group. Pre: |G| > 1.
IrredundantMax irredundant_max(const PermGroup& g);

/// All sizes of irredundant bases; equals the interval [b(G), I(G)].
std::set<int> irredundant_sizes(const PermGroup& g, int degree_cap = 64);

}  // namespace saxl
