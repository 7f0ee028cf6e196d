#pragma once

#include <set>
#include <string>

#include "saxlkit/bases.hpp"
#include "saxlkit/perm_group.hpp"

namespace saxl {

struct Suborbit {
    Point rep = -1;
    long size = 0;
    bool self_paired = false;
    int paired_with = -1;  // index of the suborbit containing the reversed arcs
};

/// G_alpha-orbits on Omega minus the fixed point alpha (for transitive G).
struct OrbitalDecomposition {
    Point alpha = 0;
    std::vector<Suborbit> suborbits;
    std::vector<int> label_of;  // per point: suborbit index; -1 at alpha

    int unordered_label(int i) const {
        return std::min(i, suborbits[static_cast<size_t>(i)].paired_with);
    }
};

OrbitalDecomposition orbital_decomposition(const PermGroup& g, Point alpha);

/// Edge test of the generalised Saxl graph: {alpha,beta} extends to a base
/// of size b. Pre: alpha != beta.
bool is_edge(const PermGroup& g, int b, Point alpha, Point beta);

/// The generalised Saxl graph. For transitive groups the edge set is stored
/// as the selected suborbits at a fixed root plus a Schreier tree; the
/// intransitive fallback keeps an explicit adjacency matrix (with warnings).
class SaxlGraph {
public:
    // Throws std::invalid_argument when b(G) < 2 ("graph undefined").
    static SaxlGraph build(const PermGroup& g, int threads = 1, int fallback_degree_cap = 512);
    // For callers that already know b(G).
    static SaxlGraph build_with_b(const PermGroup& g, int b, int threads = 1,
                                  int fallback_degree_cap = 512);

    const PermGroup& group() const { return g_; }
    int b() const { return b_; }
    Point root() const { return alpha_; }
    bool transitive_mode() const { return transitive_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    const OrbitalDecomposition& decomposition() const { return dec_; }
    const std::vector<char>& selected() const { return selected_; }
    long valency() const { return valency_; }

    bool adjacent(Point u, Point v) const;
    std::vector<Point> neighbours(Point u) const;
    std::vector<Point> neighbours_by_labels(Point u, const std::set<int>& labels) const;

    // Single-source BFS from the root; vertex-transitivity makes the root's
    // eccentricity the diameter. {component_size, eccentricity}
    struct BfsResult {
        long component_size = 0;
        int eccentricity = 0;
    };
    BfsResult bfs_from_root() const;
    long num_components() const;
    // -1 when disconnected.
    int diameter() const;

    bool is_complete() const;
    bool common_neighbour_check() const;
    bool is_arc_transitive() const;
    bool is_locally_faithful() const;
    // Almost-regular suborbits at the root (the Sigma-neighbour orbits).
    std::vector<int> almost_regular_suborbit_indices() const;
    // For every beta and every almost-regular G_alpha-orbit D: N(beta) meets D.
    bool strong_common_neighbour_check() const;
    // Greedy search for a clique of size r+1 through an edge; false means
    // "inconclusive", never a refutation.
    bool clique_through_edge_at_least(long r_plus_1) const;

    void export_dot(std::ostream& os) const;
    void export_edges(std::ostream& os) const;

private:
    PermGroup g_;
    int b_ = 0;
    Point alpha_ = 0;
    bool transitive_ = true;
    std::vector<std::string> warnings_;
    OrbitalDecomposition dec_;
    std::vector<char> selected_;
    long valency_ = 0;

    // transitive mode: Schreier tree over Omega
    std::vector<int> tree_via_;  // generator index, -1 at root
    Perm tree_transversal(Point u) const;  // root^t = u
    std::vector<Point> root_neighbours_;

    // fallback mode
    std::vector<std::vector<char>> adj_;
};

/// Lemma of the isolated vertex: for transitive G with b(G) >= 3, Sigma(G)
/// is complete iff alpha is the unique isolated vertex of Sigma(G_alpha).
bool isolated_vertex_criterion(const PermGroup& g, Point alpha);

/// Max over non-diagonal orbitals of the orbital-graph diameter.
/// Pre: primitive (throws otherwise).
int orbital_diameter(const PermGroup& g);

/// The irredundant-base graph IKSigma(G): complete multipartite with parts
/// the classes of equal point stabilizers.
struct ISigmaGraph {
    std::vector<int> part_of;  // per point
    long num_parts = 0;
    bool complete = false;     // all parts singletons
    bool edgeless = false;     // one part

    bool adjacent(Point u, Point v) const {
        return u != v && part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)];
    }
};

ISigmaGraph isigma(const PermGroup& g, int intransitive_degree_cap = 128);

/// Edges of ISigma_k(G): pairs lying in a common irredundant base of size
/// exactly k. Exhaustive DFS; degree-capped.
std::set<std::pair<Point, Point>> isigma_k_edges(const PermGroup& g, int k, int degree_cap = 24);

/// Edge set of Sigma(G) as explicit pairs (for edge-for-edge comparisons at
/// small degree).
std::set<std::pair<Point, Point>> saxl_edge_set(const SaxlGraph& sg);

}  // namespace saxl
