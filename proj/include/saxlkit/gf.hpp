#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace saxl {

/// GF(p^f) with full add/mul tables. Elements are encoded as integers
/// 0..q-1: the element with coefficient vector (c_0,...,c_{f-1}) over GF(p)
/// (c_0 the constant term) has index sum_i c_i * p^i. The modulus is the
/// lexicographically least monic irreducible polynomial of degree f, least
/// meaning smallest encoding of its non-leading coefficients.
class FiniteField {
public:
    FiniteField(int p, int f);

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return q_; }
    int primitive_element() const { return primitive_; }
    // Non-leading coefficients of the modulus, constant term first (length f).
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<size_t>(b)])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
    int inv(int a) const;
    int pow(int a, long long e) const;
    int frobenius(int a) const { return pow(a, p_); }  // a^p

    int element_order(int a) const;  // multiplicative order; a != 0

private:
    size_t idx(int a, int b) const {
        return static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b);
    }

    int p_, f_, q_;
    int primitive_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

bool is_prime(long long n);

}  // namespace saxl
