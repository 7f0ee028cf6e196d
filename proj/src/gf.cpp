#include "saxlkit/gf.hpp"

namespace saxl {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomials over GF(p) encoded as coefficient vectors, constant term first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
    // m is monic of degree f; reduce a modulo m.
    const int f = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) > f) {
        int d = static_cast<int>(a.size()) - 1;
        int lead = a.back();
        if (lead != 0) {
            for (int i = 0; i <= f; ++i) {
                int& c = a[static_cast<size_t>(d - f + i)];
                c = ((c - lead * m[static_cast<size_t>(i)]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), m, p);
}

bool poly_is_zero(const Poly& a) {
    for (int c : a)
        if (c) return false;
    return true;
}

// x^(p^k) mod m, used in the Rabin irreducibility test.
Poly x_pow_pk(const Poly& m, int p, int k) {
    Poly x{0, 1};
    Poly acc = poly_mod(x, m, p);
    // repeated squaring to exponent p, k times
    for (int round = 0; round < k; ++round) {
        // acc := acc^p
        Poly result{1};
        Poly base = acc;
        int e = p;
        while (e > 0) {
            if (e & 1) result = poly_mul_mod(result, base, m, p);
            base = poly_mul_mod(base, base, m, p);
            e >>= 1;
        }
        acc = std::move(result);
    }
    return acc;
}

bool is_irreducible(const Poly& m, int p) {
    const int f = static_cast<int>(m.size()) - 1;
    if (f == 1) return true;
    // Rabin: x^(p^f) == x mod m, and x^(p^(f/r)) - x coprime... for the tiny
    // fields here, trial division by all monic polynomials of degree <= f/2
    // is simplest and exact.
    for (int d = 1; 2 * d <= f; ++d) {
        // iterate monic polynomials of degree d
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly div(static_cast<size_t>(d) + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                div[static_cast<size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            div[static_cast<size_t>(d)] = 1;
            // remainder of m by div
            Poly rem = m;
            while (rem.size() >= div.size()) {
                size_t dd = rem.size() - div.size();
                int lead = rem.back();
                if (lead != 0)
                    for (size_t i = 0; i < div.size(); ++i) {
                        int& cc = rem[dd + i];
                        cc = ((cc - lead * div[i]) % p + p) % p;
                    }
                rem.pop_back();
            }
            if (poly_is_zero(rem)) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(int p, int f) : p_(p), f_(f) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (f < 1) throw std::invalid_argument("field exponent must be >= 1");
    long long q = 1;
    for (int i = 0; i < f; ++i) {
        q *= p;
        if (q > 1 << 20) throw std::invalid_argument("field too large");
    }
    q_ = static_cast<int>(q);

    // Least monic irreducible modulus of degree f.
    Poly mod;
    for (long long code = 0;; ++code) {
        if (code >= q) throw std::logic_error("no irreducible polynomial found");
        Poly m(static_cast<size_t>(f) + 1, 0);
        long long c = code;
        for (int i = 0; i < f; ++i) {
            m[static_cast<size_t>(i)] = static_cast<int>(c % p);
            c /= p;
        }
        m[static_cast<size_t>(f)] = 1;
        if (is_irreducible(m, p)) {
            mod = m;
            break;
        }
    }
    modulus_.assign(mod.begin(), mod.end() - 1);

    auto decode = [&](int e) {
        Poly a(static_cast<size_t>(f), 0);
        for (int i = 0; i < f; ++i) {
            a[static_cast<size_t>(i)] = e % p;
            e /= p;
        }
        return a;
    };
    auto encode = [&](const Poly& a) {
        int e = 0;
        for (int i = f - 1; i >= 0; --i)
            e = e * p + (i < static_cast<int>(a.size()) ? a[static_cast<size_t>(i)] : 0);
        return e;
    };

    add_.resize(static_cast<size_t>(q_) * static_cast<size_t>(q_));
    mul_.resize(static_cast<size_t>(q_) * static_cast<size_t>(q_));
    neg_.resize(static_cast<size_t>(q_));
    inv_.assign(static_cast<size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a);
        Poly na(pa.size());
        for (size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
        neg_[static_cast<size_t>(a)] = encode(na);
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b);
            Poly s(pa.size());
            for (size_t i = 0; i < pa.size(); ++i) s[i] = (pa[i] + pb[i]) % p;
            add_[idx(a, b)] = encode(s);
            Poly m = poly_mul_mod(pa, pb, mod, p);
            mul_[idx(a, b)] = encode(m);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[static_cast<size_t>(a)] = b;
                break;
            }

    // Least element of full multiplicative order.
    primitive_ = -1;
    for (int a = 1; a < q_; ++a) {
        if (q_ == 2 || element_order(a) == q_ - 1) {
            primitive_ = a;
            break;
        }
    }
    if (primitive_ < 0) throw std::logic_error("no primitive element found");
}

int FiniteField::inv(int a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    return inv_[static_cast<size_t>(a)];
}

int FiniteField::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("field inverse of zero");
        return 0;
    }
    long long m = q_ - 1;
    e %= m;
    if (e < 0) e += m;
    int result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FiniteField::element_order(int a) const {
    if (a == 0) throw std::domain_error("element_order of zero");
    int ord = 1, x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
        if (ord > q_) throw std::logic_error("element order overflow");
    }
    return ord;
}

}  // namespace saxl
