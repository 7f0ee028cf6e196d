#include "saxlkit/saxl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <thread>

namespace saxl {

OrbitalDecomposition orbital_decomposition(const PermGroup& g, Point alpha) {
    OrbitalDecomposition dec;
    dec.alpha = alpha;
    dec.label_of.assign(static_cast<size_t>(g.degree()), -1);
    PermGroup ga = g.point_stabilizer(alpha);
    for (const auto& orb : ga.orbits_all()) {
        if (orb.size() == 1 && orb.front() == alpha) continue;
        int idx = static_cast<int>(dec.suborbits.size());
        Suborbit so;
        so.rep = *std::min_element(orb.begin(), orb.end());
        so.size = static_cast<long>(orb.size());
        dec.suborbits.push_back(so);
        for (Point p : orb) dec.label_of[static_cast<size_t>(p)] = idx;
    }
    // Pairing: the suborbit of the reversed arc (alpha,beta) -> (beta,alpha).
    for (size_t i = 0; i < dec.suborbits.size(); ++i) {
        if (dec.suborbits[i].paired_with >= 0) continue;
        Point beta = dec.suborbits[i].rep;
        auto t = g.transporter({beta}, {alpha});
        if (!t) {
            // beta not in alpha's orbit (intransitive caller); leave unpaired
            dec.suborbits[i].paired_with = static_cast<int>(i);
            dec.suborbits[i].self_paired = false;
            continue;
        }
        Point gamma = (*t)[alpha];  // (alpha,beta) ~ (beta,alpha) ~ (alpha,gamma)
        int j = dec.label_of[static_cast<size_t>(gamma)];
        dec.suborbits[i].paired_with = j;
        dec.suborbits[static_cast<size_t>(j)].paired_with = static_cast<int>(i);
        dec.suborbits[i].self_paired = (j == static_cast<int>(i));
        dec.suborbits[static_cast<size_t>(j)].self_paired = (j == static_cast<int>(i));
    }
    return dec;
}

bool is_edge(const PermGroup& g, int b, Point alpha, Point beta) {
    if (alpha == beta) throw std::invalid_argument("is_edge: points must be distinct");
    if (b < 2) throw std::invalid_argument("is_edge: b >= 2 required");
    PermGroup st = g.pointwise_stabilizer({alpha, beta});
    return has_base_of_size(st, b - 2);
}

SaxlGraph SaxlGraph::build(const PermGroup& g, int threads, int fallback_degree_cap) {
    BaseSearchResult bs = base_size(g);
    if (bs.b < 2)
        throw std::invalid_argument("saxl graph undefined: base size below 2");
    return build_with_b(g, bs.b, threads, fallback_degree_cap);
}

SaxlGraph SaxlGraph::build_with_b(const PermGroup& g, int b, int threads,
                                  int fallback_degree_cap) {
    if (b < 2) throw std::invalid_argument("saxl graph undefined: base size below 2");
    SaxlGraph sg;
    sg.g_ = g;
    sg.b_ = b;
    sg.alpha_ = 0;
    const int n = g.degree();

    sg.transitive_ = g.is_transitive();
    if (!sg.transitive_) {
        sg.warnings_.push_back("group is intransitive; falling back to all-pairs edge testing");
        if (n > fallback_degree_cap)
            throw CapExceeded("saxl graph: intransitive fallback degree cap exceeded");
        sg.adj_.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
        for (Point u = 0; u < n; ++u)
            for (Point v = u + 1; v < n; ++v) {
                if (is_edge(g, b, u, v)) {
                    sg.adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
                    sg.adj_[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
                }
            }
        long val = 0;
        for (Point v = 0; v < n; ++v)
            if (sg.adj_[0][static_cast<size_t>(v)]) ++val;
        sg.valency_ = val;  // root valency; not constant for intransitive groups
        return sg;
    }

    sg.dec_ = orbital_decomposition(g, sg.alpha_);
    sg.selected_.assign(sg.dec_.suborbits.size(), 0);

    // One edge test per suborbit representative; tests are independent.
    const size_t m = sg.dec_.suborbits.size();
    auto test_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            sg.selected_[i] =
                is_edge(g, b, sg.alpha_, sg.dec_.suborbits[i].rep) ? 1 : 0;
    };
    if (threads <= 1 || m < 2) {
        test_range(0, m);
    } else {
        size_t nt = std::min<size_t>(static_cast<size_t>(threads), m);
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nt; ++t) {
            size_t lo = m * t / nt, hi = m * (t + 1) / nt;
            pool.emplace_back(test_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    sg.valency_ = 0;
    for (size_t i = 0; i < m; ++i)
        if (sg.selected_[i]) sg.valency_ += sg.dec_.suborbits[i].size;

    // Schreier tree over Omega rooted at alpha for translating neighbour
    // lists around the graph.
    sg.tree_via_.assign(static_cast<size_t>(n), -2);
    sg.tree_via_[static_cast<size_t>(sg.alpha_)] = -1;
    std::deque<Point> queue{sg.alpha_};
    const auto& gens = g.generators();
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Point q = gens[gi][p];
            if (sg.tree_via_[static_cast<size_t>(q)] == -2) {
                sg.tree_via_[static_cast<size_t>(q)] = static_cast<int>(gi);
                queue.push_back(q);
            }
        }
    }

    for (Point v = 0; v < n; ++v) {
        int lab = sg.dec_.label_of[static_cast<size_t>(v)];
        if (lab >= 0 && sg.selected_[static_cast<size_t>(lab)]) sg.root_neighbours_.push_back(v);
    }
    return sg;
}

Perm SaxlGraph::tree_transversal(Point u) const {
    std::vector<int> path;
    Point q = u;
    const auto& gens = g_.generators();
    while (q != alpha_) {
        int gi = tree_via_[static_cast<size_t>(q)];
        path.push_back(gi);
        q = gens[static_cast<size_t>(gi)].inverse()[q];
    }
    std::vector<Point> img(static_cast<size_t>(g_.degree()));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Point> tmp(img.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        compose_into(tmp, img, gens[static_cast<size_t>(*it)].images());
        img.swap(tmp);
    }
    return Perm::from_images(std::move(img));
}

bool SaxlGraph::adjacent(Point u, Point v) const {
    if (u == v) return false;
    if (!transitive_) return adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] != 0;
    Perm t = tree_transversal(u).inverse();  // u -> root
    int lab = dec_.label_of[static_cast<size_t>(t[v])];
    return lab >= 0 && selected_[static_cast<size_t>(lab)] != 0;
}

std::vector<Point> SaxlGraph::neighbours(Point u) const {
    if (!transitive_) {
        std::vector<Point> out;
        for (Point v = 0; v < g_.degree(); ++v)
            if (adj_[static_cast<size_t>(u)][static_cast<size_t>(v)]) out.push_back(v);
        return out;
    }
    Perm t = tree_transversal(u);  // root -> u
    std::vector<Point> out;
    out.reserve(root_neighbours_.size());
    for (Point w : root_neighbours_) out.push_back(t[w]);
    return out;
}

std::vector<Point> SaxlGraph::neighbours_by_labels(Point u, const std::set<int>& labels) const {
    Perm t = tree_transversal(u);
    std::vector<Point> out;
    for (Point v = 0; v < g_.degree(); ++v) {
        int lab = dec_.label_of[static_cast<size_t>(v)];
        if (lab >= 0 && labels.count(lab)) out.push_back(t[v]);
    }
    return out;
}

SaxlGraph::BfsResult SaxlGraph::bfs_from_root() const {
    const int n = g_.degree();
    std::vector<int> dist(static_cast<size_t>(n), -1);
    dist[static_cast<size_t>(alpha_)] = 0;
    std::deque<Point> queue{alpha_};
    BfsResult res;
    res.component_size = 1;
    while (!queue.empty()) {
        Point u = queue.front();
        queue.pop_front();
        for (Point v : neighbours(u)) {
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                res.eccentricity = std::max(res.eccentricity, dist[static_cast<size_t>(v)]);
                ++res.component_size;
                queue.push_back(v);
            }
        }
    }
    return res;
}

long SaxlGraph::num_components() const {
    if (transitive_) {
        auto r = bfs_from_root();
        return g_.degree() / r.component_size;
    }
    // generic BFS over the adjacency matrix
    const int n = g_.degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    long comps = 0;
    for (Point s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++comps;
        std::deque<Point> queue{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            Point u = queue.front();
            queue.pop_front();
            for (Point v : neighbours(u))
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    queue.push_back(v);
                }
        }
    }
    return comps;
}

int SaxlGraph::diameter() const {
    if (transitive_) {
        auto r = bfs_from_root();
        if (r.component_size < g_.degree()) return -1;
        return r.eccentricity;
    }
    // all-sources BFS
    const int n = g_.degree();
    int diam = 0;
    for (Point s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<size_t>(n), -1);
        dist[static_cast<size_t>(s)] = 0;
        std::deque<Point> queue{s};
        long seen = 1;
        while (!queue.empty()) {
            Point u = queue.front();
            queue.pop_front();
            for (Point v : neighbours(u))
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    diam = std::max(diam, dist[static_cast<size_t>(v)]);
                    ++seen;
                    queue.push_back(v);
                }
        }
        if (seen < n) return -1;
    }
    return diam;
}

bool SaxlGraph::is_complete() const {
    if (!transitive_) {
        const int n = g_.degree();
        for (Point u = 0; u < n; ++u)
            for (Point v = u + 1; v < n; ++v)
                if (!adj_[static_cast<size_t>(u)][static_cast<size_t>(v)]) return false;
        return true;
    }
    for (char s : selected_)
        if (!s) return false;
    return true;
}

bool SaxlGraph::common_neighbour_check() const {
    if (!transitive_) {
        const int n = g_.degree();
        for (Point u = 0; u < n; ++u)
            for (Point v = u; v < n; ++v) {
                bool found = false;
                for (Point w = 0; w < n && !found; ++w)
                    if (w != u && w != v && adjacent(u, w) && adjacent(v, w)) found = true;
                if (!found) return false;
            }
        return true;
    }
    if (b_ >= 3) {
        int d = diameter();
        return d >= 0 && d <= 2;
    }
    // b == 2: check the root against each suborbit representative (and the
    // trivial pair (alpha,alpha)).
    std::vector<char> root_adj(static_cast<size_t>(g_.degree()), 0);
    for (Point w : root_neighbours_) root_adj[static_cast<size_t>(w)] = 1;
    if (root_neighbours_.empty()) return false;
    for (const auto& so : dec_.suborbits) {
        Point beta = so.rep;
        bool found = false;
        for (Point w : neighbours(beta))
            if (w != alpha_ && w != beta && root_adj[static_cast<size_t>(w)]) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool SaxlGraph::is_arc_transitive() const {
    if (!transitive_) return false;
    int count = 0;
    int which = -1;
    for (size_t i = 0; i < selected_.size(); ++i)
        if (selected_[i]) {
            ++count;
            which = static_cast<int>(i);
        }
    return count == 1 && dec_.suborbits[static_cast<size_t>(which)].self_paired;
}

bool SaxlGraph::is_locally_faithful() const {
    PermGroup h = g_.point_stabilizer(alpha_);
    for (Point w : transitive_ ? root_neighbours_ : neighbours(alpha_)) {
        if (h.is_trivial()) return true;
        if (h.orbit(w).size() < 2) continue;  // fixed by h, no shrink
        h = h.point_stabilizer(w);
    }
    return h.is_trivial();
}

std::vector<int> SaxlGraph::almost_regular_suborbit_indices() const {
    std::vector<int> out;
    for (size_t i = 0; i < selected_.size(); ++i)
        if (selected_[i]) out.push_back(static_cast<int>(i));
    return out;
}

bool SaxlGraph::strong_common_neighbour_check() const {
    if (!transitive_) throw std::invalid_argument("strong check needs a transitive group");
    std::vector<char> sel_label(static_cast<size_t>(g_.degree()), 0);
    // beta ranges over the root and suborbit representatives (conjugating by
    // G_alpha fixes each almost-regular orbit setwise).
    std::vector<Point> betas{alpha_};
    for (const auto& so : dec_.suborbits) betas.push_back(so.rep);
    for (Point beta : betas) {
        std::vector<char> hit(selected_.size(), 0);
        for (Point w : neighbours(beta)) {
            int lab = dec_.label_of[static_cast<size_t>(w)];
            if (lab >= 0) hit[static_cast<size_t>(lab)] = 1;
        }
        for (size_t i = 0; i < selected_.size(); ++i)
            if (selected_[i] && !hit[i]) return false;
    }
    return true;
}

bool SaxlGraph::clique_through_edge_at_least(long target) const {
    if (valency_ == 0) return target <= 1;
    // greedy: grow a clique from the root edge by repeatedly picking the
    // smallest common neighbour
    Point u = alpha_;
    Point v = root_neighbours_.empty() ? -1 : root_neighbours_.front();
    if (v < 0) return target <= 1;
    std::vector<Point> clique{u, v};
    std::vector<char> common(static_cast<size_t>(g_.degree()), 0);
    for (Point w : neighbours(u)) common[static_cast<size_t>(w)] = 1;
    while (static_cast<long>(clique.size()) < target) {
        Point next = -1;
        for (Point w : neighbours(clique.back()))
            if (common[static_cast<size_t>(w)]) {
                bool ok = true;
                for (Point c : clique)
                    if (c == w || !adjacent(c, w)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    next = w;
                    break;
                }
            }
        if (next < 0) return false;  // inconclusive
        clique.push_back(next);
    }
    return true;
}

void SaxlGraph::export_dot(std::ostream& os) const {
    os << "graph saxl {\n";
    const int n = g_.degree();
    for (Point u = 0; u < n; ++u) os << "  " << u << ";\n";
    for (Point u = 0; u < n; ++u)
        for (Point v : neighbours(u))
            if (u < v) {
                int lab = -1;
                if (transitive_) {
                    Perm t = tree_transversal(u).inverse();
                    lab = dec_.unordered_label(dec_.label_of[static_cast<size_t>(t[v])]);
                }
                os << "  " << u << " -- " << v;
                if (lab >= 0) os << " [orbital=" << lab << "]";
                os << ";\n";
            }
    os << "}\n";
}

void SaxlGraph::export_edges(std::ostream& os) const {
    const int n = g_.degree();
    for (Point u = 0; u < n; ++u)
        for (Point v : neighbours(u))
            if (u < v) {
                int lab = -1;
                if (transitive_) {
                    Perm t = tree_transversal(u).inverse();
                    lab = dec_.unordered_label(dec_.label_of[static_cast<size_t>(t[v])]);
                }
                os << u << ' ' << v << ' ' << lab << "\n";
            }
}

bool isolated_vertex_criterion(const PermGroup& g, Point alpha) {
    if (!g.is_transitive()) throw std::invalid_argument("isolated_vertex_criterion: transitive input required");
    BaseSearchResult bs = base_size(g);
    if (bs.b < 3) throw std::invalid_argument("isolated_vertex_criterion: b(G) >= 3 required");
    PermGroup h = g.point_stabilizer(alpha);
    BaseSearchResult hb = base_size(h);
    const int n = g.degree();
    std::vector<char> isolated(static_cast<size_t>(n), 1);
    for (Point u = 0; u < n; ++u)
        for (Point v = u + 1; v < n; ++v)
            if (is_edge(h, hb.b, u, v)) {
                isolated[static_cast<size_t>(u)] = 0;
                isolated[static_cast<size_t>(v)] = 0;
            }
    for (Point u = 0; u < n; ++u) {
        if (u == alpha && !isolated[static_cast<size_t>(u)]) return false;
        if (u != alpha && isolated[static_cast<size_t>(u)]) return false;
    }
    return true;
}

int orbital_diameter(const PermGroup& g) {
    if (!g.is_primitive()) throw std::invalid_argument("orbital_diameter: primitive input required");
    OrbitalDecomposition dec = orbital_decomposition(g, 0);
    // reuse the SaxlGraph neighbour machinery with a throwaway graph that
    // selects one unordered orbital at a time
    SaxlGraph sg = SaxlGraph::build_with_b(g, 2);  // b unused for BFS here
    int diam = 0;
    const int n = g.degree();
    for (size_t i = 0; i < dec.suborbits.size(); ++i) {
        int pi = dec.suborbits[i].paired_with;
        if (pi < static_cast<int>(i)) continue;  // handle each unordered orbital once
        std::set<int> labels{static_cast<int>(i), pi};
        std::vector<int> dist(static_cast<size_t>(n), -1);
        dist[0] = 0;
        std::deque<Point> queue{0};
        long seen = 1;
        int ecc = 0;
        while (!queue.empty()) {
            Point u = queue.front();
            queue.pop_front();
            for (Point v : sg.neighbours_by_labels(u, labels))
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    ecc = std::max(ecc, dist[static_cast<size_t>(v)]);
                    ++seen;
                    queue.push_back(v);
                }
        }
        if (seen < n) throw std::logic_error("orbital graph disconnected for primitive group");
        diam = std::max(diam, ecc);
    }
    return diam;
}

ISigmaGraph isigma(const PermGroup& g, int intransitive_degree_cap) {
    ISigmaGraph out;
    const int n = g.degree();
    out.part_of.assign(static_cast<size_t>(n), -1);

    if (g.is_transitive()) {
        PermGroup g0 = g.point_stabilizer(0);
        std::vector<Point> part0 = g0.fixed_points();
        // translate part0 around Omega via a Schreier tree
        std::vector<int> via(static_cast<size_t>(n), -2);
        via[0] = -1;
        std::deque<Point> queue{0};
        const auto& gens = g.generators();
        std::vector<std::pair<Point, Perm>> frontier;
        // build transversal perms incrementally
        std::vector<Perm> trans(static_cast<size_t>(n));
        trans[0] = Perm(n);
        while (!queue.empty()) {
            Point p = queue.front();
            queue.pop_front();
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                Point q = gens[gi][p];
                if (via[static_cast<size_t>(q)] == -2) {
                    via[static_cast<size_t>(q)] = static_cast<int>(gi);
                    trans[static_cast<size_t>(q)] = trans[static_cast<size_t>(p)] * gens[gi];
                    queue.push_back(q);
                }
            }
        }
        int next_id = 0;
        for (Point p = 0; p < n; ++p) {
            if (out.part_of[static_cast<size_t>(p)] >= 0) continue;
            const Perm& t = trans[static_cast<size_t>(p)];
            int id = next_id++;
            for (Point w : part0) out.part_of[static_cast<size_t>(t[w])] = id;
        }
        out.num_parts = next_id;
    } else {
        if (n > intransitive_degree_cap) throw CapExceeded("isigma: intransitive degree cap exceeded");
        std::vector<PermGroup> stabs;
        stabs.reserve(static_cast<size_t>(n));
        for (Point p = 0; p < n; ++p) stabs.push_back(g.point_stabilizer(p));
        int next_id = 0;
        for (Point p = 0; p < n; ++p) {
            if (out.part_of[static_cast<size_t>(p)] >= 0) continue;
            int id = next_id++;
            out.part_of[static_cast<size_t>(p)] = id;
            for (Point q = p + 1; q < n; ++q) {
                if (out.part_of[static_cast<size_t>(q)] >= 0) continue;
                if (stabs[static_cast<size_t>(p)].order() == stabs[static_cast<size_t>(q)].order()) {
                    bool equal = true;
                    for (const Perm& x : stabs[static_cast<size_t>(p)].generators())
                        if (!stabs[static_cast<size_t>(q)].contains(x)) {
                            equal = false;
                            break;
                        }
                    if (equal) out.part_of[static_cast<size_t>(q)] = id;
                }
            }
        }
        out.num_parts = next_id;
    }
    out.complete = (out.num_parts == n);
    out.edgeless = (out.num_parts == 1);
    return out;
}

namespace {

void isigma_k_dfs(const PermGroup& h, int remaining, std::vector<Point>& seq,
                  std::set<std::pair<Point, Point>>& edges) {
    if (remaining == 0) {
        if (!h.is_trivial()) return;
        for (size_t i = 0; i < seq.size(); ++i)
            for (size_t j = i + 1; j < seq.size(); ++j) {
                Point a = std::min(seq[i], seq[j]), b = std::max(seq[i], seq[j]);
                edges.emplace(a, b);
            }
        return;
    }
    if (h.is_trivial()) return;  // chain would become redundant
    for (Point p = 0; p < h.degree(); ++p) {
        if (h.orbit(p).size() < 2) continue;  // no strict descent
        seq.push_back(p);
        isigma_k_dfs(h.point_stabilizer(p), remaining - 1, seq, edges);
        seq.pop_back();
    }
}

}  // namespace

std::set<std::pair<Point, Point>> isigma_k_edges(const PermGroup& g, int k, int degree_cap) {
    if (g.degree() > degree_cap) throw CapExceeded("isigma_k: degree cap exceeded");
    std::set<std::pair<Point, Point>> edges;
    std::vector<Point> seq;
    isigma_k_dfs(g, k, seq, edges);
    return edges;
}

std::set<std::pair<Point, Point>> saxl_edge_set(const SaxlGraph& sg) {
    std::set<std::pair<Point, Point>> edges;
    for (Point u = 0; u < sg.group().degree(); ++u)
        for (Point v : sg.neighbours(u))
            if (u < v) edges.emplace(u, v);
    return edges;
}

}  // namespace saxl
