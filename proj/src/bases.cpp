#include "saxlkit/bases.hpp"

#include <algorithm>
#include <map>

namespace saxl {

namespace {

// Orbit representatives with orbit sizes, largest orbit first; singleton
// orbits are useless for shrinking a stabilizer and are skipped when
// only_moved is set.
std::vector<std::pair<Point, long>> orbit_reps(const PermGroup& h, bool only_moved) {
    std::vector<std::pair<Point, long>> reps;
    for (const auto& orb : h.orbits_all()) {
        if (only_moved && orb.size() < 2) continue;
        reps.emplace_back(orb.front(), static_cast<long>(orb.size()));
    }
    std::stable_sort(reps.begin(), reps.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return reps;
}

bool base_dfs(const PermGroup& h, int m, std::vector<Point>& stack, std::uint64_t& nodes) {
    if (h.is_trivial()) return true;
    if (m == 0) return false;
    for (auto [beta, size] : orbit_reps(h, true)) {
        (void)size;
        ++nodes;
        stack.push_back(beta);
        PermGroup hb = h.point_stabilizer(beta);
        if (base_dfs(hb, m - 1, stack, nodes)) return true;
        stack.pop_back();
    }
    return false;
}

}  // namespace

bool has_base_of_size(const PermGroup& h, int m, std::vector<Point>* witness, std::uint64_t* nodes) {
    if (m < 0) throw std::invalid_argument("has_base_of_size: m >= 0 required");
    std::vector<Point> stack;
    std::uint64_t n = 0;
    bool ok = base_dfs(h, m, stack, n);
    if (nodes) *nodes += n;
    if (ok && witness) *witness = stack;
    return ok;
}

BaseSearchResult base_size(const PermGroup& g, int hint_b) {
    BaseSearchResult out;
    if (g.is_trivial()) return out;  // b = 0, found without search
    int d = std::max(1, hint_b);
    for (;; ++d) {
        std::vector<Point> stack;
        std::uint64_t nodes = 0;
        bool ok = base_dfs(g, d, stack, nodes);
        out.nodes_explored += nodes;
        if (ok) {
            out.b = d;
            out.witness = stack;
            return out;
        }
        if (d > g.degree()) throw std::logic_error("base_size: no base found up to the degree");
    }
}

namespace {

// Memo for count_ordered_bases and the irredundant searches. Subgroups are
// keyed by (order, orbit partition); equality is confirmed by mutual
// generator membership before a hit counts.
struct SubgroupKey {
    BigInt order;
    std::vector<std::vector<Point>> orbits;  // sorted

    bool operator<(const SubgroupKey& o) const {
        if (order != o.order) return order < o.order;
        return orbits < o.orbits;
    }
};

SubgroupKey key_of(const PermGroup& h) {
    SubgroupKey k;
    k.order = h.order();
    k.orbits = h.orbits_all();
    for (auto& o : k.orbits) std::sort(o.begin(), o.end());
    std::sort(k.orbits.begin(), k.orbits.end());
    return k;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return false;
    for (const Perm& g : a.generators())
        if (!b.contains(g)) return false;
    for (const Perm& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

struct CountMemo {
    struct Entry {
        PermGroup group;
        std::map<int, BigInt> counts;
    };
    std::map<SubgroupKey, std::vector<Entry>> slots;

    Entry& find_or_insert(const PermGroup& h) {
        auto& vec = slots[key_of(h)];
        for (auto& e : vec)
            if (same_group(e.group, h)) return e;
        vec.push_back(Entry{h, {}});
        return vec.back();
    }
};

BigInt count_rec(const PermGroup& h, int k, CountMemo& memo) {
    if (k == 0) return h.is_trivial() ? 1 : 0;
    if (h.is_trivial()) {
        // every remaining coordinate is free
        BigInt total = 1;
        for (int i = 0; i < k; ++i) total *= h.degree();
        return total;
    }
    auto& entry = memo.find_or_insert(h);
    auto it = entry.counts.find(k);
    if (it != entry.counts.end()) return it->second;
    BigInt total = 0;
    for (const auto& orb : h.orbits_all()) {
        PermGroup hb = h.point_stabilizer(orb.front());
        total += BigInt(static_cast<long>(orb.size())) * count_rec(hb, k - 1, memo);
    }
    entry.counts[k] = total;
    return total;
}

}  // namespace

BigInt count_ordered_bases(const PermGroup& g, int k) {
    if (k < 0) throw std::invalid_argument("count_ordered_bases: k >= 0 required");
    CountMemo memo;
    return count_rec(g, k, memo);
}

RegularOrbitCount regular_base_orbits(const PermGroup& g) {
    RegularOrbitCount out;
    BaseSearchResult bs = base_size(g);
    out.b = bs.b;
    out.ordered_base_count = count_ordered_bases(g, bs.b);
    if (out.ordered_base_count % g.order() != 0)
        throw std::logic_error("regular_base_orbits: count not divisible by |G|");
    out.reg = out.ordered_base_count / g.order();
    return out;
}

namespace {

struct IrredundantMemo {
    struct Entry {
        PermGroup group;
        int max_len = -1;
        std::vector<Point> witness;
        std::set<int> lengths;
        bool lengths_done = false;
    };
    std::map<SubgroupKey, std::vector<Entry>> slots;

    Entry& find_or_insert(const PermGroup& h) {
        auto& vec = slots[key_of(h)];
        for (auto& e : vec)
            if (same_group(e.group, h)) return e;
        vec.push_back(Entry{h, -1, {}, {}, false});
        return vec.back();
    }
};

// Longest strictly-descending stabilizer chain from h down to the identity.
int imax_rec(const PermGroup& h, IrredundantMemo& memo, std::vector<Point>* witness) {
    if (h.is_trivial()) {
        if (witness) witness->clear();
        return 0;
    }
    auto& e = memo.find_or_insert(h);
    if (e.max_len >= 0) {
        if (witness) *witness = e.witness;
        return e.max_len;
    }
    int best = -1;
    std::vector<Point> best_wit;
    for (auto [beta, size] : orbit_reps(h, true)) {
        (void)size;
        PermGroup hb = h.point_stabilizer(beta);
        // strict descent is guaranteed: beta is moved by h
        std::vector<Point> wit;
        int len = 1 + imax_rec(hb, memo, &wit);
        if (len > best) {
            best = len;
            wit.insert(wit.begin(), beta);
            best_wit = std::move(wit);
        }
    }
    e.max_len = best;
    e.witness = best_wit;
    if (witness) *witness = best_wit;
    return best;
}

std::set<int> lengths_rec(const PermGroup& h, IrredundantMemo& memo) {
    if (h.is_trivial()) return {0};
    auto& e = memo.find_or_insert(h);
    if (e.lengths_done) return e.lengths;
    std::set<int> out;
    for (auto [beta, size] : orbit_reps(h, true)) {
        (void)size;
        PermGroup hb = h.point_stabilizer(beta);
        for (int l : lengths_rec(hb, memo)) out.insert(l + 1);
    }
    auto& e2 = memo.find_or_insert(h);
    e2.lengths = out;
    e2.lengths_done = true;
    return out;
}

}  // namespace

IrredundantMax irredundant_max(const PermGroup& g) {
    if (g.is_trivial()) throw std::invalid_argument("irredundant_max: group must be nontrivial");
    IrredundantMemo memo;
    IrredundantMax out;
    out.max_size = imax_rec(g, memo, &out.witness);
    return out;
}

std::set<int> irredundant_sizes(const PermGroup& g, int degree_cap) {
    if (g.is_trivial()) throw std::invalid_argument("irredundant_sizes: group must be nontrivial");
    if (g.degree() > degree_cap) throw CapExceeded("irredundant_sizes: degree cap exceeded");
    IrredundantMemo memo;
    return lengths_rec(g, memo);
}

}  // namespace saxl
