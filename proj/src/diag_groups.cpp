#include "saxlkit/diag_groups.hpp"

#include <numeric>

namespace saxl {

long DiagonalGroup::point_of_tuple(const std::vector<int>& t) const {
    long idx = 0;
    for (int v : t) idx = idx * t_order + v;
    return idx;
}

std::vector<int> DiagonalGroup::tuple_of_point(long p) const {
    std::vector<int> t(static_cast<size_t>(k - 1));
    for (int i = k - 2; i >= 0; --i) {
        t[static_cast<size_t>(i)] = static_cast<int>(p % t_order);
        p /= t_order;
    }
    return t;
}

DiagonalGroup diagonal_group(const BundledSimple& T, int k, const PermGroup& top,
                             bool with_outer, long degree_cap) {
    if (k < 2) throw std::invalid_argument("diagonal_group: k >= 2 required");
    if (top.degree() != k) throw std::invalid_argument("diagonal_group: top group must act on [k]");
    if (!looks_nonabelian_simple(T.T))
        throw std::invalid_argument("diagonal_group: T fails the nonabelian-simple gate");

    const ElementTable& tab = T.table();
    const long m = tab.size();
    long n = 1;
    for (int i = 0; i < k - 1; ++i) {
        n *= m;
        if (n > degree_cap) throw CapExceeded("diagonal_group: degree cap exceeded");
    }

    DiagonalGroup out;
    out.k = k;
    out.t_order = m;

    auto decode = [&](long p) { return out.tuple_of_point(p); };
    auto encode = [&](const std::vector<int>& t) { return out.point_of_tuple(t); };

    std::vector<Perm> gens;

    // T in the first coordinate: left-divide every entry.
    for (const Perm& a : T.T.generators()) {
        int ai = tab.index_of(a);
        int ainv = tab.inv(ai);
        std::vector<Point> img(static_cast<size_t>(n));
        for (long p = 0; p < n; ++p) {
            auto t = decode(p);
            for (int& v : t) v = tab.mul(ainv, v);
            img[static_cast<size_t>(p)] = static_cast<Point>(encode(t));
        }
        gens.push_back(Perm::from_images(std::move(img)));
    }
    // T in coordinates 2..k: right-multiply one entry.
    for (int coord = 1; coord < k; ++coord)
        for (const Perm& a : T.T.generators()) {
            int ai = tab.index_of(a);
            std::vector<Point> img(static_cast<size_t>(n));
            for (long p = 0; p < n; ++p) {
                auto t = decode(p);
                t[static_cast<size_t>(coord - 1)] = tab.mul(t[static_cast<size_t>(coord - 1)], ai);
                img[static_cast<size_t>(p)] = static_cast<Point>(encode(t));
            }
            gens.push_back(Perm::from_images(std::move(img)));
        }
    // Out(T): apply the automorphism entrywise.
    if (with_outer)
        for (const Perm& nperm : T.outer) {
            Perm aut = tab.conjugation_action(nperm);
            std::vector<Point> img(static_cast<size_t>(n));
            for (long p = 0; p < n; ++p) {
                auto t = decode(p);
                for (int& v : t) v = aut[v];
                img[static_cast<size_t>(p)] = static_cast<Point>(encode(t));
            }
            gens.push_back(Perm::from_images(std::move(img)));
        }
    // Top group: permute coordinates of (t_1=1, t_2, ..., t_k), renormalize.
    for (const Perm& sigma : top.generators()) {
        if (sigma.is_identity()) continue;
        Perm sinv = sigma.inverse();
        std::vector<Point> img(static_cast<size_t>(n));
        std::vector<int> full(static_cast<size_t>(k));
        std::vector<int> moved(static_cast<size_t>(k));
        for (long p = 0; p < n; ++p) {
            auto t = decode(p);
            full[0] = 0;
            for (int i = 1; i < k; ++i) full[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)];
            for (int j = 0; j < k; ++j) moved[static_cast<size_t>(j)] = full[static_cast<size_t>(sinv[j])];
            int lead_inv = tab.inv(moved[0]);
            std::vector<int> norm(static_cast<size_t>(k - 1));
            for (int j = 1; j < k; ++j)
                norm[static_cast<size_t>(j - 1)] = tab.mul(lead_inv, moved[static_cast<size_t>(j)]);
            img[static_cast<size_t>(p)] = static_cast<Point>(encode(norm));
        }
        gens.push_back(Perm::from_images(std::move(img)));
    }

    if (gens.empty()) gens.push_back(Perm(static_cast<int>(n)));
    out.G = PermGroup::from_generators(std::move(gens));

    bool top_trivial = top.order() == 1;
    bool top_primitive = false;
    if (!top_trivial && top.is_transitive()) top_primitive = top.is_primitive();
    out.primitive_shape = top_primitive || (k == 2 && top_trivial);
    return out;
}

PermGroup holomorph(const BundledSimple& T) {
    const ElementTable& tab = T.table();
    std::vector<Perm> gens;
    for (const Perm& g : T.T.generators()) gens.push_back(tab.left_translation_action(tab.index_of(g)));
    for (const Perm& g : T.T.generators()) gens.push_back(tab.conjugation_action(g));
    for (const Perm& n : T.outer) gens.push_back(tab.conjugation_action(n));
    return PermGroup::from_generators(std::move(gens));
}

PermGroup holomorph_cyclic(int n) {
    if (n < 2) throw std::invalid_argument("holomorph_cyclic: n >= 2");
    std::vector<Perm> gens;
    {
        std::vector<Point> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;
        gens.push_back(Perm::from_images(std::move(img)));
    }
    // Multiplication maps by each unit; redundant generators are harmless at
    // these sizes.
    for (int u = 2; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        std::vector<Point> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i * u) % n;
        gens.push_back(Perm::from_images(std::move(img)));
    }
    return PermGroup::from_generators(std::move(gens));
}

}  // namespace saxl
