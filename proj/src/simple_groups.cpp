#include "saxlkit/simple_groups.hpp"

#include <algorithm>

#include "saxlkit/actions.hpp"
#include "saxlkit/gf.hpp"

namespace saxl {

ElementTable::ElementTable(const PermGroup& g, long size_cap) {
    if (g.order() > size_cap) throw CapExceeded("ElementTable: group too large");
    ElementStream stream(g);
    Perm e;
    while (stream.next(e)) elems_.push_back(e);
    std::sort(elems_.begin(), elems_.end());
    inv_.resize(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) index_[elems_[i].images()] = static_cast<int>(i);
    for (size_t i = 0; i < elems_.size(); ++i)
        inv_[i] = index_.at(elems_[i].inverse().images());
}

int ElementTable::index_of(const Perm& p) const {
    auto it = index_.find(p.images());
    if (it == index_.end()) throw std::invalid_argument("ElementTable: element not in group");
    return it->second;
}

int ElementTable::mul(int a, int b) const {
    return index_.at((elems_[static_cast<size_t>(a)] * elems_[static_cast<size_t>(b)]).images());
}

Perm ElementTable::conjugation_action(const Perm& n) const {
    Perm ninv = n.inverse();
    std::vector<Point> img(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i)
        img[i] = index_.at((ninv * elems_[i] * n).images());
    return Perm::from_images(std::move(img));
}

Perm ElementTable::left_translation_action(int gi) const {
    const Perm ginv = elems_[static_cast<size_t>(gi)].inverse();
    std::vector<Point> img(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) img[i] = index_.at((ginv * elems_[i]).images());
    return Perm::from_images(std::move(img));
}

PermGroup BundledSimple::extended() const {
    std::vector<Perm> gens = T.generators();
    gens.insert(gens.end(), outer.begin(), outer.end());
    return PermGroup::from_generators(std::move(gens));
}

const ElementTable& BundledSimple::table() const {
    if (!table_) table_ = std::make_shared<const ElementTable>(T);
    return *table_;
}

namespace {

Perm transposition(int n, Point a, Point b) {
    std::vector<Point> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    std::swap(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]);
    return Perm::from_images(std::move(img));
}

BundledSimple make_alternating(const std::string& name, int n) {
    BundledSimple b;
    b.name = name;
    b.T = PermGroup::alternating(n);
    b.outer = {transposition(n, 0, 1)};
    b.out_order = 2;
    return b;
}

BundledSimple make_l2(const std::string& name, int q, bool with_diag, bool with_frob) {
    BundledSimple b;
    b.name = name;
    b.T = psl2_projective(q, PSL2Variant::PSL);
    PermGroup pgl = psl2_projective(q, PSL2Variant::PGL);
    PermGroup biggest = (with_frob && with_diag) ? psl2_projective(q, PSL2Variant::PGammaL)
                        : with_frob              ? psl2_projective(q, PSL2Variant::PSigmaL)
                                                 : pgl;
    // The normalizing generators are the extra generators of the bigger
    // variant beyond PSL's.
    for (const Perm& g : biggest.generators())
        if (!b.T.contains(g)) b.outer.push_back(g);
    b.out_order = 1;
    {
        PermGroup ext = b.extended();
        b.out_order = static_cast<long>(ext.order() / b.T.order());
    }
    return b;
}

std::map<std::string, BundledSimple>& registry() {
    static std::map<std::string, BundledSimple> reg = [] {
        std::map<std::string, BundledSimple> r;
        r.emplace("A5", make_alternating("A5", 5));
        r.emplace("A7", make_alternating("A7", 7));
        // A6 as L_2(9) on 10 points: conjugation by the diagonal and the
        // field automorphism realizes the full Out(A6) = 2x2.
        r.emplace("A6", make_l2("A6", 9, true, true));
        r.emplace("L2_7", make_l2("L2_7", 7, true, false));
        r.emplace("L2_8", make_l2("L2_8", 8, false, true));
        r.emplace("L2_11", make_l2("L2_11", 11, true, false));
        return r;
    }();
    return reg;
}

}  // namespace

const BundledSimple& bundled_simple(const std::string& name) {
    auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw std::invalid_argument("unknown bundled simple group: " + name);
    return it->second;
}

std::vector<std::string> bundled_simple_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
    std::vector<Perm> gens;
    for (const Perm& s : seeds)
        if (!s.is_identity()) gens.push_back(s);
    if (gens.empty()) return PermGroup::trivial(g.degree());
    while (true) {
        PermGroup n = PermGroup::from_generators(gens);
        bool grew = false;
        for (const Perm& x : std::vector<Perm>(gens)) {
            for (const Perm& ggen : g.generators()) {
                Perm c = ggen.inverse() * x * ggen;
                if (!n.contains(c)) {
                    gens.push_back(c);
                    grew = true;
                }
            }
            if (grew) break;
        }
        if (!grew) return n;
    }
}

bool looks_nonabelian_simple(const PermGroup& g) {
    if (g.order() <= 1) return false;
    // Trivial center: stream the whole group when small (exact for the
    // bundled groups); big inputs only get the perfectness gate.
    if (g.order() <= 100000) {
        ElementStream es(g);
        Perm e;
        while (es.next(e)) {
            if (e.is_identity()) continue;
            bool central = true;
            for (const Perm& gen : g.generators())
                if (!(e * gen == gen * e)) {
                    central = false;
                    break;
                }
            if (central) return false;
        }
    }
    // perfect: normal closure of commutators is everything
    std::vector<Perm> comms;
    const auto& gens = g.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    PermGroup derived = normal_closure(g, comms);
    return derived.order() == g.order();
}

}  // namespace saxl
