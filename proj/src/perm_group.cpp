#include "saxlkit/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace saxl {

namespace {

// xorshift64*; deterministic across platforms.
inline std::uint64_t next_rand(std::uint64_t& s) {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1DULL;
}

}  // namespace

Perm ChainLevel::transversal(Point p) const {
    const int n = static_cast<int>(orbit_pos.size());
    std::vector<Point> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<int> path;
    Point q = p;
    while (q != base_point) {
        int gi = via_gen[static_cast<size_t>(q)];
        path.push_back(gi);
        q = gen_invs[static_cast<size_t>(gi)][q];
    }
    std::vector<Point> tmp(static_cast<size_t>(n));
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        compose_into(tmp, img, gens[static_cast<size_t>(*it)].images());
        img.swap(tmp);
    }
    return Perm::from_images(std::move(img));
}

namespace {

struct Builder {
    int degree;
    std::vector<Point> hints;

    std::vector<Point> base;
    std::vector<std::vector<Perm>> own_gens;  // gens first placed at each level
    // caches, rebuilt when generators are added
    std::vector<std::vector<Perm>> full_gens;
    std::vector<std::vector<Perm>> full_invs;
    std::vector<std::vector<Point>> orbit;
    std::vector<std::vector<int>> orbit_pos;
    std::vector<std::vector<int>> via_gen;

    Builder(int deg, std::vector<Point> h) : degree(deg), hints(std::move(h)) {}

    size_t num_levels() const { return base.size(); }

    void push_level(Point b) {
        base.push_back(b);
        own_gens.emplace_back();
        full_gens.emplace_back();
        full_invs.emplace_back();
        orbit.emplace_back(1, b);
        orbit_pos.emplace_back(static_cast<size_t>(degree), -1);
        orbit_pos.back()[static_cast<size_t>(b)] = 0;
        via_gen.emplace_back(static_cast<size_t>(degree), -1);
    }

    void rebuild_level(size_t j) {
        full_gens[j] = own_gens[j];
        if (j + 1 < num_levels())
            full_gens[j].insert(full_gens[j].end(), full_gens[j + 1].begin(), full_gens[j + 1].end());
        full_invs[j].clear();
        for (const Perm& g : full_gens[j]) full_invs[j].push_back(g.inverse());

        Point b = base[j];
        orbit[j].assign(1, b);
        std::fill(orbit_pos[j].begin(), orbit_pos[j].end(), -1);
        orbit_pos[j][static_cast<size_t>(b)] = 0;
        std::fill(via_gen[j].begin(), via_gen[j].end(), -1);
        for (size_t h = 0; h < orbit[j].size(); ++h) {
            Point p = orbit[j][h];
            for (size_t gi = 0; gi < full_gens[j].size(); ++gi) {
                Point q = full_gens[j][gi][p];
                if (orbit_pos[j][static_cast<size_t>(q)] < 0) {
                    orbit_pos[j][static_cast<size_t>(q)] = static_cast<int>(orbit[j].size());
                    via_gen[j][static_cast<size_t>(q)] = static_cast<int>(gi);
                    orbit[j].push_back(q);
                }
            }
        }
    }

    Perm transversal(size_t j, Point p) const {
        std::vector<Point> img(static_cast<size_t>(degree));
        std::iota(img.begin(), img.end(), 0);
        std::vector<int> path;
        Point q = p;
        while (q != base[j]) {
            int gi = via_gen[j][static_cast<size_t>(q)];
            path.push_back(gi);
            q = full_invs[j][static_cast<size_t>(gi)][q];
        }
        std::vector<Point> tmp(static_cast<size_t>(degree));
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            compose_into(tmp, img, full_gens[j][static_cast<size_t>(*it)].images());
            img.swap(tmp);
        }
        return Perm::from_images(std::move(img));
    }

    // Sift as far as possible; returns residue and the level where it stuck
    // (== num_levels() when it passed every level).
    std::pair<Perm, size_t> sift(const Perm& p) const {
        Perm g = p;
        for (size_t j = 0; j < num_levels(); ++j) {
            Point img = g[base[j]];
            if (orbit_pos[j][static_cast<size_t>(img)] < 0) return {g, j};
            if (img != base[j] || via_gen[j][static_cast<size_t>(img)] >= 0) {
                Perm u = transversal(j, img);
                g = g * u.inverse();
            }
        }
        return {g, num_levels()};
    }

    void insert(Perm residue) {
        while (true) {
            auto [r, lvl] = sift(residue);
            if (r.is_identity()) return;
            if (lvl == num_levels()) {
                Point b = (lvl < hints.size()) ? hints[lvl] : r.smallest_moved();
                push_level(b);
            }
            own_gens[lvl].push_back(r);
            for (size_t j = lvl + 1; j-- > 0;) rebuild_level(j);
            residue = r;
        }
    }

    // One full verification sweep. Returns true when every Schreier
    // generator sifts to the identity; otherwise inserts a witness residue
    // and returns false.
    bool verify_and_fix() {
        for (size_t j = 0; j < num_levels(); ++j) {
            for (size_t oi = 0; oi < orbit[j].size(); ++oi) {
                Point p = orbit[j][oi];
                Perm u = transversal(j, p);
                for (const Perm& g : full_gens[j]) {
                    Point q = g[p];
                    Perm schreier = u * g * transversal(j, q).inverse();
                    if (schreier.is_identity()) continue;
                    Perm res = schreier;
                    bool stuck = false;
                    for (size_t l = j + 1; l < num_levels(); ++l) {
                        Point img = res[base[l]];
                        if (orbit_pos[l][static_cast<size_t>(img)] < 0) {
                            stuck = true;
                            break;
                        }
                        res = res * transversal(l, img).inverse();
                    }
                    if (!stuck && res.is_identity()) continue;
                    insert(schreier);
                    return false;
                }
            }
        }
        return true;
    }
};

}  // namespace

StabilizerChain StabilizerChain::build(const std::vector<Perm>& gens, int degree,
                                       const std::vector<Point>& base_hint,
                                       std::uint64_t seed) {
    for (const Perm& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    for (Point h : base_hint)
        if (h < 0 || h >= degree) throw std::invalid_argument("base hint point out of range");

    Builder b(degree, base_hint);
    for (Point h : base_hint) b.push_level(h);

    std::vector<Perm> nontrivial;
    for (const Perm& g : gens)
        if (!g.is_identity()) nontrivial.push_back(g);

    for (const Perm& g : nontrivial) b.insert(g);

    if (!nontrivial.empty()) {
        // Randomized phase ("rattle" product replacement) to find most strong
        // generators cheaply before the deterministic verification.
        std::uint64_t state = seed ^ 0x9E3779B97F4A7C15ULL;
        std::vector<Perm> slots = nontrivial;
        for (size_t i = 0; slots.size() < 8; ++i) slots.push_back(nontrivial[i % nontrivial.size()]);
        Perm acc(degree);
        int consecutive_ok = 0;
        int iterations = 0;
        while (consecutive_ok < 16 && iterations < 512) {
            ++iterations;
            size_t i = static_cast<size_t>(next_rand(state) % slots.size());
            size_t j = static_cast<size_t>(next_rand(state) % slots.size());
            if (i == j) continue;
            slots[i] = slots[i] * slots[j];
            acc = acc * slots[i];
            auto [res, lvl] = b.sift(acc);
            (void)lvl;
            if (res.is_identity()) {
                ++consecutive_ok;
            } else {
                consecutive_ok = 0;
                b.insert(res);
            }
        }
    }

    while (!b.verify_and_fix()) {
    }

    // Trailing levels with a singleton orbit carry no information (they come
    // from over-long hints).
    while (b.num_levels() > 0 && b.orbit.back().size() == 1) {
        b.base.pop_back();
        b.own_gens.pop_back();
        b.full_gens.pop_back();
        b.full_invs.pop_back();
        b.orbit.pop_back();
        b.orbit_pos.pop_back();
        b.via_gen.pop_back();
    }

    StabilizerChain chain;
    chain.degree_ = degree;
    chain.order_ = 1;
    for (size_t j = 0; j < b.num_levels(); ++j) {
        ChainLevel lv;
        lv.base_point = b.base[j];
        lv.gens = std::move(b.full_gens[j]);
        lv.gen_invs = std::move(b.full_invs[j]);
        lv.orbit = std::move(b.orbit[j]);
        lv.orbit_pos = std::move(b.orbit_pos[j]);
        lv.via_gen = std::move(b.via_gen[j]);
        chain.order_ *= static_cast<long>(lv.orbit.size());
        chain.levels_.push_back(std::move(lv));
    }
    return chain;
}

std::vector<Point> StabilizerChain::base_points() const {
    std::vector<Point> b;
    b.reserve(levels_.size());
    for (const auto& lv : levels_) b.push_back(lv.base_point);
    return b;
}

Perm StabilizerChain::sift(const Perm& p) const {
    Perm g = p;
    for (const auto& lv : levels_) {
        Point img = g[lv.base_point];
        if (!lv.in_orbit(img)) return g;
        if (img != lv.base_point || lv.via_gen[static_cast<size_t>(img)] >= 0)
            g = g * lv.transversal(img).inverse();
    }
    return g;
}

bool StabilizerChain::contains(const Perm& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
    return sift(p).is_identity();
}

std::vector<Perm> StabilizerChain::level_gens(size_t k) const {
    if (k >= levels_.size()) return {};
    return levels_[k].gens;
}

// ---------------------------------------------------------------------------

PermGroup PermGroup::from_generators(std::vector<Perm> gens) {
    if (gens.empty()) throw std::invalid_argument("generator list must be nonempty");
    const int deg = gens.front().degree();
    for (const Perm& g : gens)
        if (g.degree() != deg) throw std::invalid_argument("generator degree mismatch");
    PermGroup g;
    g.degree_ = deg;
    g.gens_ = std::move(gens);
    return g;
}

PermGroup PermGroup::trivial(int degree) {
    PermGroup g;
    g.degree_ = degree;
    g.gens_ = {Perm(degree)};
    return g;
}

PermGroup PermGroup::symmetric(int n) {
    if (n < 1) throw std::invalid_argument("symmetric: n >= 1");
    if (n == 1) return trivial(1);
    std::vector<Point> t(static_cast<size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    std::vector<Point> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (i + 1) % n;
    return from_generators({Perm::from_images(t), Perm::from_images(c)});
}

PermGroup PermGroup::alternating(int n) {
    if (n < 1) throw std::invalid_argument("alternating: n >= 1");
    if (n <= 2) return trivial(n);
    std::vector<Point> a(static_cast<size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    a[0] = 1;
    a[1] = 2;
    a[2] = 0;  // (0 1 2)
    if (n == 3) return from_generators({Perm::from_images(a)});
    std::vector<Point> b(static_cast<size_t>(n));
    std::iota(b.begin(), b.end(), 0);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = (i + 1) % n;
    } else {
        for (int i = 1; i < n; ++i) b[static_cast<size_t>(i)] = 1 + (i % (n - 1));
    }
    return from_generators({Perm::from_images(a), Perm::from_images(b)});
}

PermGroup PermGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n >= 1");
    std::vector<Point> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (i + 1) % n;
    return from_generators({Perm::from_images(c)});
}

PermGroup PermGroup::dihedral(int n) {
    if (n < 3) throw std::invalid_argument("dihedral: n >= 3");
    std::vector<Point> c(static_cast<size_t>(n)), r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        c[static_cast<size_t>(i)] = (i + 1) % n;
        r[static_cast<size_t>(i)] = (n - i) % n;
    }
    return from_generators({Perm::from_images(c), Perm::from_images(r)});
}

const StabilizerChain& PermGroup::chain() const {
    std::call_once(*chain_once_, [this] {
        chain_ = std::make_shared<const StabilizerChain>(StabilizerChain::build(gens_, degree_));
    });
    return *chain_;
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
    return chain().contains(p);
}

std::vector<Point> PermGroup::orbit(Point a) const {
    if (a < 0 || a >= degree_) throw std::invalid_argument("orbit: point out of range");
    std::vector<Point> orb{a};
    std::vector<char> seen(static_cast<size_t>(degree_), 0);
    seen[static_cast<size_t>(a)] = 1;
    for (size_t h = 0; h < orb.size(); ++h)
        for (const Perm& g : gens_) {
            Point q = g[orb[h]];
            if (!seen[static_cast<size_t>(q)]) {
                seen[static_cast<size_t>(q)] = 1;
                orb.push_back(q);
            }
        }
    return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits_all() const {
    std::vector<std::vector<Point>> out;
    std::vector<char> seen(static_cast<size_t>(degree_), 0);
    for (int a = 0; a < degree_; ++a) {
        if (seen[static_cast<size_t>(a)]) continue;
        auto orb = orbit(a);
        for (Point p : orb) seen[static_cast<size_t>(p)] = 1;
        out.push_back(std::move(orb));
    }
    return out;
}

bool PermGroup::is_transitive() const {
    return degree_ > 0 && static_cast<int>(orbit(0).size()) == degree_;
}

PermGroup PermGroup::point_stabilizer(Point a) const {
    return pointwise_stabilizer({a});
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<Point>& pts) const {
    if (pts.empty()) return *this;
    StabilizerChain c = StabilizerChain::build(gens_, degree_, pts);
    size_t consumed = 0;
    for (const auto& lv : c.levels()) {
        if (consumed < pts.size() && lv.base_point == pts[consumed])
            ++consumed;
        else
            break;
    }
    std::vector<Perm> sgens = c.level_gens(consumed);
    if (sgens.empty()) return trivial(degree_);
    PermGroup h = from_generators(std::move(sgens));
    for (Point p : pts)
        for (const Perm& g : h.generators()) assert(g[p] == p);
    return h;
}

BigInt PermGroup::pointwise_stabilizer_order(const std::vector<Point>& pts) const {
    if (pts.empty()) return order();
    StabilizerChain c = StabilizerChain::build(gens_, degree_, pts);
    BigInt ord = 1;
    size_t consumed = 0;
    for (const auto& lv : c.levels()) {
        if (consumed < pts.size() && lv.base_point == pts[consumed])
            ++consumed;
        else
            ord *= static_cast<long>(lv.orbit.size());
    }
    return ord;
}

bool PermGroup::is_primitive(std::vector<Point>* witness) const {
    if (!is_transitive()) throw std::invalid_argument("is_primitive: group must be transitive");
    const int n = degree_;
    if (n <= 2) return true;

    std::vector<int> parent(static_cast<size_t>(n));
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };

    for (Point beta = 1; beta < n; ++beta) {
        // Minimal G-congruence identifying {0, beta} (union-find closure).
        std::iota(parent.begin(), parent.end(), 0);
        std::deque<std::pair<Point, Point>> queue;
        auto merge = [&](Point x, Point y) {
            int rx = find(x), ry = find(y);
            if (rx == ry) return;
            parent[static_cast<size_t>(ry)] = rx;
            queue.emplace_back(rx, ry);
        };
        merge(0, beta);
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            for (const Perm& g : gens_) merge(g[x], g[y]);
        }
        int root0 = find(0);
        std::vector<Point> block;
        for (int i = 0; i < n; ++i)
            if (find(i) == root0) block.push_back(i);
        if (static_cast<int>(block.size()) < n) {
            if (witness) *witness = block;
            return false;
        }
    }
    return true;
}

bool PermGroup::transporter_exists(const std::vector<Point>& s,
                                   const std::vector<Point>& t) const {
    return transporter(s, t).has_value();
}

std::optional<Perm> PermGroup::transporter(const std::vector<Point>& s,
                                           const std::vector<Point>& t) const {
    if (s.size() != t.size()) throw std::invalid_argument("transporter: tuple length mismatch");
    auto check = [&](const std::vector<Point>& v) {
        for (Point p : v)
            if (p < 0 || p >= degree_) throw std::invalid_argument("transporter: point out of range");
    };
    check(s);
    check(t);
    if (s.empty()) return Perm(degree_);

    // Rebased to s, the search is a greedy walk down the chain: at each
    // consumed level the coset is forced modulo the remaining stabilizer.
    StabilizerChain c = StabilizerChain::build(gens_, degree_, s);
    Perm g(degree_);
    Perm ginv(degree_);
    size_t i = 0;
    for (const auto& lv : c.levels()) {
        if (i >= s.size() || lv.base_point != s[i]) break;
        Point target = ginv[t[i]];
        if (!lv.in_orbit(target)) return std::nullopt;
        g = lv.transversal(target) * g;
        ginv = g.inverse();
        ++i;
    }
    // Points of s beyond the consumed prefix are fixed by the residual
    // stabilizer, so their images under g are forced.
    for (size_t j = i; j < s.size(); ++j)
        if (g[s[j]] != t[j]) return std::nullopt;
    return g;
}

Perm PermGroup::random_element(std::uint64_t& state) const {
    const StabilizerChain& c = chain();
    Perm g(degree_);
    for (const auto& lv : c.levels()) {
        size_t k = static_cast<size_t>(next_rand(state) % lv.orbit.size());
        g = lv.transversal(lv.orbit[k]) * g;
    }
    return g;
}

std::vector<Point> PermGroup::fixed_points() const {
    std::vector<Point> out;
    for (int p = 0; p < degree_; ++p) {
        bool fixed = true;
        for (const Perm& g : gens_)
            if (g[p] != p) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(p);
    }
    return out;
}

ElementStream::ElementStream(const PermGroup& g) : g_(&g) {
    idx_.assign(g.chain().levels().size(), 0);
}

bool ElementStream::next(Perm& out) {
    if (done_) return false;
    const auto& levels = g_->chain().levels();
    Perm acc(g_->degree());
    for (size_t i = 0; i < levels.size(); ++i)
        acc = levels[i].transversal(levels[i].orbit[idx_[i]]) * acc;
    out = acc;
    size_t i = 0;
    for (; i < levels.size(); ++i) {
        if (++idx_[i] < levels[i].orbit.size()) break;
        idx_[i] = 0;
    }
    if (i == levels.size()) done_ = true;
    return true;
}

}  // namespace saxl
