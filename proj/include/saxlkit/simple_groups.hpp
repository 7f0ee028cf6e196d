#pragma once

#include <map>
#include <memory>
#include <string>

#include "saxlkit/perm_group.hpp"

namespace saxl {

/// Sorted element list of a small group, with index arithmetic. Index 0 is
/// the identity (the identity is lexicographically least).
class ElementTable {
public:
    explicit ElementTable(const PermGroup& g, long size_cap = 100000);

    int size() const { return static_cast<int>(elems_.size()); }
    const Perm& element(int i) const { return elems_[static_cast<size_t>(i)]; }
    const std::vector<Perm>& elements() const { return elems_; }

    int index_of(const Perm& p) const;
    int mul(int a, int b) const;
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }

    // The permutation of element indices induced by conjugation t -> n^-1 t n.
    Perm conjugation_action(const Perm& n) const;
    // The permutation of element indices induced by left translation
    // t -> g^-1 t, for g = element(gi).
    Perm left_translation_action(int gi) const;

private:
    std::vector<Perm> elems_;
    std::map<std::vector<Point>, int> index_;
    std::vector<int> inv_;
};

/// A bundled nonabelian simple group with outer-automorphism data: `outer`
/// are permutations of T's natural domain normalizing T, inducing generators
/// of Out(T) by conjugation.
struct BundledSimple {
    std::string name;
    PermGroup T;
    std::vector<Perm> outer;
    long out_order = 1;

    PermGroup extended() const;  // <T, outer> acting on the natural domain
    const ElementTable& table() const;

private:
    mutable std::shared_ptr<const ElementTable> table_;
};

/// Names: A5, A6, A7, L2_7, L2_8, L2_11. A6 is realized as L_2(9) on the
/// projective line so that the full outer automorphism group (2^2) is
/// available by conjugation.
const BundledSimple& bundled_simple(const std::string& name);
std::vector<std::string> bundled_simple_names();

// Trivial center + perfect (normal closure of generator commutators is the
// whole group). A heuristic gate for diagonal-type constructions, exact for
// the bundled groups.
bool looks_nonabelian_simple(const PermGroup& g);

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);

}  // namespace saxl
