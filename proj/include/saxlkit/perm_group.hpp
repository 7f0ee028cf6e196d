#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "saxlkit/perm.hpp"

namespace saxl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One level of a stabilizer chain: the fundamental orbit of the base point
/// under the level's strong generators, with a Schreier-vector transversal.
/// `gens` is cumulative: it generates the full level subgroup (all strong
/// generators fixing the earlier base points).
struct ChainLevel {
    Point base_point = -1;
    std::vector<Perm> gens;
    std::vector<Perm> gen_invs;
    std::vector<Point> orbit;        // orbit[0] == base_point
    std::vector<int> orbit_pos;      // degree-sized; -1 if outside orbit
    std::vector<int> via_gen;        // Schreier vector; -1 at base point

    bool in_orbit(Point p) const { return orbit_pos[static_cast<size_t>(p)] >= 0; }
    // Transversal element u with base_point^u == p. Pre: p in orbit.
    Perm transversal(Point p) const;
};

/// Verified base-and-strong-generating-set structure. Immutable once built.
class StabilizerChain {
public:
    // Builds a chain for <gens>. base_hint points are installed as the
    // leading base points, in order, before the smallest-moved-point rule
    // takes over. Randomized Schreier-Sims with a deterministic seed,
    // followed by a full deterministic Schreier-generator verification pass.
    static StabilizerChain build(const std::vector<Perm>& gens, int degree,
                                 const std::vector<Point>& base_hint = {},
                                 std::uint64_t seed = 1);

    int degree() const { return degree_; }
    const std::vector<ChainLevel>& levels() const { return levels_; }
    std::vector<Point> base_points() const;
    const BigInt& order() const { return order_; }

    bool contains(const Perm& p) const;
    // Residue after sifting as far as possible; identity iff contained.
    Perm sift(const Perm& p) const;

    // Generators of the subgroup fixing the first `k` base points.
    std::vector<Perm> level_gens(size_t k) const;

private:
    int degree_ = 0;
    std::vector<ChainLevel> levels_;
    BigInt order_ = 1;
};

/// A permutation group given by generators, with a lazily built verified
/// stabilizer chain. Immutable and safe to share across threads.
class PermGroup {
public:
    PermGroup() = default;  // trivial group of degree 0

    static PermGroup from_generators(std::vector<Perm> gens);
    static PermGroup trivial(int degree);

    static PermGroup symmetric(int n);
    static PermGroup alternating(int n);
    static PermGroup cyclic(int n);
    static PermGroup dihedral(int n);  // on n vertices, order 2n

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const StabilizerChain& chain() const;  // built on first use, thread-safe

    const BigInt& order() const { return chain().order(); }
    bool is_trivial() const { return order() == 1; }
    bool contains(const Perm& p) const;

    std::vector<Point> orbit(Point a) const;
    std::vector<std::vector<Point>> orbits_all() const;
    bool is_transitive() const;

    // G_a, with a fresh chain of its own.
    PermGroup point_stabilizer(Point a) const;
    PermGroup pointwise_stabilizer(const std::vector<Point>& pts) const;
    // Order of the pointwise stabilizer, via one base change; cheaper than
    // materializing the subgroup.
    BigInt pointwise_stabilizer_order(const std::vector<Point>& pts) const;

    // Pre: transitive (throws otherwise). If imprimitive and witness is
    // non-null, it receives a minimal nontrivial block containing point 0.
    bool is_primitive(std::vector<Point>* witness = nullptr) const;

    bool transporter_exists(const std::vector<Point>& s, const std::vector<Point>& t) const;
    std::optional<Perm> transporter(const std::vector<Point>& s, const std::vector<Point>& t) const;

    // Deterministic pseudo-random element: product of random transversal
    // elements of the chain.
    Perm random_element(std::uint64_t& state) const;

    // Points fixed by every generator.
    std::vector<Point> fixed_points() const;

private:
    int degree_ = 0;
    std::vector<Perm> gens_;
    mutable std::shared_ptr<const StabilizerChain> chain_;
    mutable std::shared_ptr<std::once_flag> chain_once_ = std::make_shared<std::once_flag>();
};

/// Streams every element of a group as products of chain transversal
/// elements, without materializing the element list.
class ElementStream {
public:
    explicit ElementStream(const PermGroup& g);
    bool next(Perm& out);

private:
    const PermGroup* g_;
    std::vector<size_t> idx_;
    bool done_ = false;
};

}  // namespace saxl
