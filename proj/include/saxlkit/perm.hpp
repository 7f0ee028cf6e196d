#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace saxl {

using Point = int;

/// A permutation of {0,...,n-1}, stored as its image sequence.
/// Composition is left-to-right: (a*b) applies a first, so x^(a*b) = (x^a)^b.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);  // identity

    // Validates that images is a bijection of {0,...,n-1}.
    static Perm from_images(std::vector<Point> images);

    int degree() const { return static_cast<int>(img_.size()); }
    Point operator[](Point p) const { return img_[static_cast<size_t>(p)]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const;
    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;

    bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
    bool operator!=(const Perm& rhs) const { return img_ != rhs.img_; }
    bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

    // Smallest point moved, or -1 for the identity.
    Point smallest_moved() const;
    int num_fixed() const;

    std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
    std::uint64_t order() const;  // lcm of cycle lengths

    std::string to_cycle_string() const;

private:
    std::vector<Point> img_;
};

// In-place composition helper used by hot loops: out[x] = b[a[x]].
void compose_into(std::vector<Point>& out, const std::vector<Point>& a,
                  const std::vector<Point>& b);

}  // namespace saxl
