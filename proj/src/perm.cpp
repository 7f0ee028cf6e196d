#include "saxlkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace saxl {

Perm::Perm(int degree) : img_(static_cast<size_t>(degree)) {
    if (degree < 0) throw std::invalid_argument("permutation degree must be non-negative");
    std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<Point> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (Point v : images) {
        if (v < 0 || v >= n) throw std::invalid_argument("permutation image out of range");
        if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("permutation image repeated: not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in permutation product");
    Perm out;
    out.img_.resize(img_.size());
    compose_into(out.img_, img_, rhs.img_);
    return out;
}

Perm Perm::inverse() const {
    Perm out;
    out.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) out.img_[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    return out;
}

Point Perm::smallest_moved() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[static_cast<size_t>(i)] != i) return i;
    return -1;
}

int Perm::num_fixed() const {
    int c = 0;
    for (int i = 0; i < degree(); ++i)
        if (img_[static_cast<size_t>(i)] == i) ++c;
    return c;
}

std::vector<std::vector<Point>> Perm::cycles(bool include_fixed) const {
    std::vector<std::vector<Point>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<Point> cyc;
        Point j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            cyc.push_back(j);
            j = img_[static_cast<size_t>(j)];
        }
        if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
}

std::uint64_t Perm::order() const {
    std::uint64_t ord = 1;
    for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
    return ord;
}

std::string Perm::to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

void compose_into(std::vector<Point>& out, const std::vector<Point>& a,
                  const std::vector<Point>& b) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) out[i] = b[static_cast<size_t>(a[i])];
}

}  // namespace saxl
