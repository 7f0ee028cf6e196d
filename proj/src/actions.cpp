#include "saxlkit/actions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace saxl {

namespace {

// Projective line PG(1,q): point 0 = [1:0], point 1+e = [e:1].
struct ProjLine {
    const FiniteField& F;
    explicit ProjLine(const FiniteField& f) : F(f) {}
    int n() const { return F.q() + 1; }

    // Point image under the matrix [[a,b],[c,d]] acting on row vectors
    // (x, y) -> (x, y) * M; [x : y] with y normalized to 1 when possible.
    Point apply_matrix(Point pt, int a, int b, int c, int d) const {
        int x, y;
        if (pt == 0) {
            x = 1;
            y = 0;
        } else {
            x = pt - 1;
            y = 1;
        }
        int nx = F.add(F.mul(x, a), F.mul(y, c));
        int ny = F.add(F.mul(x, b), F.mul(y, d));
        if (ny == 0) return 0;
        return 1 + F.mul(nx, F.inv(ny));
    }

    Perm matrix_perm(int a, int b, int c, int d) const {
        std::vector<Point> img(static_cast<size_t>(n()));
        for (Point p = 0; p < n(); ++p) img[static_cast<size_t>(p)] = apply_matrix(p, a, b, c, d);
        return Perm::from_images(std::move(img));
    }

    Perm frobenius_perm() const {
        std::vector<Point> img(static_cast<size_t>(n()));
        img[0] = 0;
        for (int e = 0; e < F.q(); ++e) img[static_cast<size_t>(1 + e)] = 1 + F.frobenius(e);
        return Perm::from_images(std::move(img));
    }
};

}  // namespace

PermGroup psl2_projective(int q, PSL2Variant variant) {
    if (q < 4) throw std::invalid_argument("psl2_projective: q >= 4 required");
    // factor q = p^f
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int f = 0;
    int qq = q;
    while (qq > 1) {
        if (qq % p != 0) throw std::invalid_argument("psl2_projective: q must be a prime power");
        qq /= p;
        ++f;
    }
    if ((variant == PSL2Variant::PSigmaL || variant == PSL2Variant::PGammaL) && f == 1)
        throw std::invalid_argument("psl2_projective: semilinear variant needs q non-prime");
    if (variant == PSL2Variant::M10 && q != 9)
        throw std::invalid_argument("psl2_projective: M10 variant needs q = 9");

    FiniteField F(p, f);
    ProjLine line(F);
    int s = F.primitive_element();

    std::vector<Perm> gens;
    // SL_2(q): upper transvections over a basis of GF(q), plus the Weyl
    // element [[0,1],[-1,0]].
    int lam = 1;
    for (int i = 0; i < f; ++i) {
        gens.push_back(line.matrix_perm(1, lam, 0, 1));
        lam = F.mul(lam, s);
    }
    gens.push_back(line.matrix_perm(0, 1, F.neg(1), 0));

    Perm diag = line.matrix_perm(s, 0, 0, 1);   // PGL part: x -> s*x
    Perm frob = line.frobenius_perm();          // field automorphism

    switch (variant) {
        case PSL2Variant::PSL:
            break;
        case PSL2Variant::PGL:
            gens.push_back(diag);
            break;
        case PSL2Variant::PSigmaL:
            gens.push_back(frob);
            break;
        case PSL2Variant::PGammaL:
            gens.push_back(diag);
            gens.push_back(frob);
            break;
        case PSL2Variant::M10:
            gens.push_back(diag * frob);
            break;
    }
    return PermGroup::from_generators(std::move(gens));
}

CosetAction coset_action(const PermGroup& g, const std::vector<Perm>& h_gens, long index_cap) {
    for (const Perm& h : h_gens) {
        if (h.degree() != g.degree())
            throw std::invalid_argument("coset_action: subgroup generator degree mismatch");
        if (!g.contains(h))
            throw std::invalid_argument("coset_action: subgroup generator not in G");
    }
    PermGroup h = h_gens.empty() ? PermGroup::trivial(g.degree())
                                 : PermGroup::from_generators(h_gens);

    // Canonical representative of the coset H*r: minimize the images of H's
    // base points level by level through H's chain. Greedy is exact because
    // at each level the reachable images form one orbit, and once every base
    // point's image is pinned the residual freedom in H is trivial.
    const StabilizerChain& hc = h.chain();
    auto canonical_rep = [&](Perm m) {
        for (const auto& lv : hc.levels()) {
            Point best_pt = -1, best_im = -1;
            for (Point o : lv.orbit) {
                Point im = m[o];
                if (best_im < 0 || im < best_im) {
                    best_im = im;
                    best_pt = o;
                }
            }
            if (best_pt != lv.base_point) m = lv.transversal(best_pt) * m;
        }
        return m;
    };

    CosetAction out;
    std::map<std::vector<Point>, int> index_of;
    std::vector<Perm> reps;
    reps.push_back(canonical_rep(Perm(g.degree())));
    index_of[reps[0].images()] = 0;

    const auto& gens = g.generators();
    std::vector<std::vector<Point>> images(gens.size());

    for (size_t head = 0; head < reps.size(); ++head) {
        Perm r = reps[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Perm rg = canonical_rep(r * gens[gi]);
            auto it = index_of.find(rg.images());
            int target;
            if (it == index_of.end()) {
                target = static_cast<int>(reps.size());
                if (target >= index_cap)
                    throw CapExceeded("coset_action: index cap exceeded");
                index_of.emplace(rg.images(), target);
                reps.push_back(rg);
            } else {
                target = it->second;
            }
            images[gi].push_back(target);
        }
    }

    const int index = static_cast<int>(reps.size());
    std::vector<Perm> image_gens;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        images[gi].resize(static_cast<size_t>(index));
        image_gens.push_back(Perm::from_images(images[gi]));
    }
    out.index = index;
    out.coset_reps = std::move(reps);
    out.image = PermGroup::from_generators(std::move(image_gens));
    out.kernel_order = g.order() / out.image.order();
    out.faithful = (out.kernel_order == 1);
    return out;
}

PairsAction pairs_action(const PermGroup& g) {
    const int n = g.degree();
    if (n < 2) throw std::invalid_argument("pairs_action: degree >= 2 required");
    PairsAction out;
    std::vector<std::vector<int>> pair_index(static_cast<size_t>(n),
                                             std::vector<int>(static_cast<size_t>(n), -1));
    for (Point i = 0; i < n; ++i)
        for (Point j = i + 1; j < n; ++j) {
            pair_index[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<int>(out.pair_of_point.size());
            pair_index[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                static_cast<int>(out.pair_of_point.size());
            out.pair_of_point.emplace_back(i, j);
        }
    const int m = static_cast<int>(out.pair_of_point.size());
    std::vector<Perm> image_gens;
    for (const Perm& gp : g.generators()) {
        std::vector<Point> img(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) {
            auto [a, b] = out.pair_of_point[static_cast<size_t>(k)];
            img[static_cast<size_t>(k)] = pair_index[static_cast<size_t>(gp[a])][static_cast<size_t>(gp[b])];
        }
        image_gens.push_back(Perm::from_images(std::move(img)));
    }
    out.image = PermGroup::from_generators(std::move(image_gens));
    out.kernel_order = g.order() / out.image.order();
    out.faithful = (out.kernel_order == 1);
    return out;
}

namespace {

struct VectorSpace {
    const FiniteField& F;
    int n;
    long size;

    VectorSpace(const FiniteField& f, int dim) : F(f), n(dim) {
        size = 1;
        for (int i = 0; i < n; ++i) {
            size *= F.q();
            if (size > (1L << 40)) throw CapExceeded("vector space too large");
        }
    }

    std::vector<int> decode(long idx) const {
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            v[static_cast<size_t>(i)] = static_cast<int>(idx % F.q());
            idx /= F.q();
        }
        return v;
    }

    long encode(const std::vector<int>& v) const {
        long idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * F.q() + v[static_cast<size_t>(i)];
        return idx;
    }

    std::vector<int> mat_apply(const std::vector<int>& v,
                               const std::vector<std::vector<int>>& m) const {
        std::vector<int> out(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int i = 0; i < n; ++i)
                acc = F.add(acc, F.mul(v[static_cast<size_t>(i)], m[static_cast<size_t>(i)][static_cast<size_t>(j)]));
            out[static_cast<size_t>(j)] = acc;
        }
        return out;
    }

    bool mat_invertible(const std::vector<std::vector<int>>& m) const {
        // Gaussian elimination over GF(q)
        auto a = m;
        int rank = 0;
        for (int col = 0; col < n && rank < n; ++col) {
            int pivot = -1;
            for (int r = rank; r < n; ++r)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
            int inv = F.inv(a[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
            for (int c = 0; c < n; ++c)
                a[static_cast<size_t>(rank)][static_cast<size_t>(c)] =
                    F.mul(a[static_cast<size_t>(rank)][static_cast<size_t>(c)], inv);
            for (int r = 0; r < n; ++r) {
                if (r == rank) continue;
                int factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (factor == 0) continue;
                for (int c = 0; c < n; ++c)
                    a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                        F.sub(a[static_cast<size_t>(r)][static_cast<size_t>(c)],
                              F.mul(factor, a[static_cast<size_t>(rank)][static_cast<size_t>(c)]));
            }
            ++rank;
        }
        return rank == n;
    }
};

}  // namespace

PermGroup affine_group(const FiniteField& field, int n,
                       const std::vector<std::vector<std::vector<int>>>& h_matrices,
                       long degree_cap) {
    VectorSpace V(field, n);
    if (V.size > degree_cap) throw CapExceeded("affine_group: degree cap exceeded");
    const long N = V.size;

    std::vector<Perm> gens;
    // Translations by s^j * e_i span the additive group.
    for (int i = 0; i < n; ++i) {
        int lam = 1;
        for (int j = 0; j < field.f(); ++j) {
            std::vector<Point> img(static_cast<size_t>(N));
            for (long v = 0; v < N; ++v) {
                auto vec = V.decode(v);
                vec[static_cast<size_t>(i)] = field.add(vec[static_cast<size_t>(i)], lam);
                img[static_cast<size_t>(v)] = static_cast<Point>(V.encode(vec));
            }
            gens.push_back(Perm::from_images(std::move(img)));
            lam = field.mul(lam, field.primitive_element());
        }
    }
    for (const auto& m : h_matrices) {
        if (static_cast<int>(m.size()) != n)
            throw std::invalid_argument("affine_group: matrix has wrong shape");
        if (!V.mat_invertible(m)) throw std::invalid_argument("affine_group: singular matrix");
        std::vector<Point> img(static_cast<size_t>(N));
        for (long v = 0; v < N; ++v)
            img[static_cast<size_t>(v)] = static_cast<Point>(V.encode(V.mat_apply(V.decode(v), m)));
        gens.push_back(Perm::from_images(std::move(img)));
    }
    return PermGroup::from_generators(std::move(gens));
}

PermGroup linear_group_nonzero_vectors(const FiniteField& field, int n,
                                       const std::vector<std::vector<std::vector<int>>>& matrices,
                                       long degree_cap) {
    VectorSpace V(field, n);
    if (V.size - 1 > degree_cap) throw CapExceeded("linear_group: degree cap exceeded");
    const long N = V.size;
    // nonzero vectors keep their enumeration order; index v-1
    std::vector<Perm> gens;
    for (const auto& m : matrices) {
        if (static_cast<int>(m.size()) != n)
            throw std::invalid_argument("linear_group: matrix has wrong shape");
        if (!V.mat_invertible(m)) throw std::invalid_argument("linear_group: singular matrix");
        std::vector<Point> img(static_cast<size_t>(N - 1));
        for (long v = 1; v < N; ++v)
            img[static_cast<size_t>(v - 1)] =
                static_cast<Point>(V.encode(V.mat_apply(V.decode(v), m)) - 1);
        gens.push_back(Perm::from_images(std::move(img)));
    }
    if (gens.empty()) throw std::invalid_argument("linear_group: no matrices given");
    return PermGroup::from_generators(std::move(gens));
}

long tuple_index(const std::vector<Point>& tuple, int gamma_size) {
    long idx = 0;
    for (Point t : tuple) idx = idx * gamma_size + t;
    return idx;
}

WreathAction wreath_product_action(const PermGroup& l, const PermGroup& p, long degree_cap) {
    const int gamma = l.degree();
    const int k = p.degree();
    if (gamma < 1 || k < 1) throw std::invalid_argument("wreath_product_action: empty domain");
    long N = 1;
    for (int i = 0; i < k; ++i) {
        N *= gamma;
        if (N > degree_cap) throw CapExceeded("wreath_product_action: degree cap exceeded");
    }

    WreathAction out;
    out.tuple_of_point.reserve(static_cast<size_t>(N));
    {
        std::vector<Point> tup(static_cast<size_t>(k), 0);
        for (long idx = 0; idx < N; ++idx) {
            out.tuple_of_point.push_back(tup);
            for (int i = k - 1; i >= 0; --i) {
                if (++tup[static_cast<size_t>(i)] < gamma) break;
                tup[static_cast<size_t>(i)] = 0;
            }
        }
    }

    std::vector<Perm> gens;
    // Base-group generators acting on one coordinate at a time.
    for (int coord = 0; coord < k; ++coord)
        for (const Perm& z : l.generators()) {
            std::vector<Point> img(static_cast<size_t>(N));
            for (long v = 0; v < N; ++v) {
                auto tup = out.tuple_of_point[static_cast<size_t>(v)];
                tup[static_cast<size_t>(coord)] = z[tup[static_cast<size_t>(coord)]];
                img[static_cast<size_t>(v)] = static_cast<Point>(tuple_index(tup, gamma));
            }
            gens.push_back(Perm::from_images(std::move(img)));
        }
    // Top-group generators permuting coordinates: entry j of the image tuple
    // is entry j^(sigma^-1) of the original.
    for (const Perm& sigma : p.generators()) {
        Perm sinv = sigma.inverse();
        std::vector<Point> img(static_cast<size_t>(N));
        for (long v = 0; v < N; ++v) {
            const auto& tup = out.tuple_of_point[static_cast<size_t>(v)];
            std::vector<Point> moved(static_cast<size_t>(k));
            for (int j = 0; j < k; ++j)
                moved[static_cast<size_t>(j)] = tup[static_cast<size_t>(sinv[j])];
            img[static_cast<size_t>(v)] = static_cast<Point>(tuple_index(moved, gamma));
        }
        gens.push_back(Perm::from_images(std::move(img)));
    }

    out.image = PermGroup::from_generators(std::move(gens));
    bool l_regular = l.is_transitive() && l.order() == l.degree();
    std::vector<Point> wit;
    bool l_primitive = l.is_transitive() && l.is_primitive(&wit);
    out.primitive_shape = l_primitive && !l_regular && p.is_transitive() && k >= 2;
    return out;
}

}  // namespace saxl
