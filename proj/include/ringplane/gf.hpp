#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringplane/common.hpp"

namespace ringplane {

// A field element is encoded as an integer in 0..q-1. Its base-p digits,
// least significant first, are the coefficients of the residue polynomial:
// digit i is the coefficient of x^i. 0 is the additive identity, 1 the
// multiplicative one.
using FieldElem = std::uint32_t;

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Factors q as p^n with p prime. Returns false when q is not a prime power.
inline bool factor_prime_power(std::uint64_t q, unsigned& p_out, unsigned& n_out) {
    if (q < 2) return false;
    std::uint64_t m = q;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            unsigned n = 0;
            while (m % d == 0) { m /= d; ++n; }
            if (m != 1) return false;
            p_out = static_cast<unsigned>(d);
            n_out = n;
            return true;
        }
    }
    p_out = static_cast<unsigned>(m); // m is prime
    n_out = 1;
    return true;
}

// GF(p^n) with exact arithmetic. The modulus polynomial is the
// lexicographically smallest monic irreducible of degree n over GF(p),
// comparing coefficient vectors low-degree-first, so construction is
// deterministic for a given (p, n). Immutable after construction; all
// operations are const and side-effect-free.
class GaloisField {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = 1ull << 20;
    static constexpr std::uint32_t kTableLimit = 256; // full op tables up to this order

    GaloisField(unsigned p, unsigned n, std::uint64_t max_order = kDefaultMaxOrder)
        : p_(p), n_(n) {
        if (n_ < 1) throw std::domain_error("GaloisField: extension degree must be at least 1");
        if (!is_prime(p_)) throw std::domain_error("GaloisField: characteristic must be prime");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < n_; ++i) {
            if (q > max_order / p_)
                throw capacity_error("GaloisField: order p^n exceeds the configured maximum");
            q *= p_;
        }
        q_ = static_cast<FieldElem>(q);
        modulus_ = smallest_irreducible();
        if (q_ <= kTableLimit) build_tables();
    }

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    FieldElem q() const { return q_; }

    // Monic modulus polynomial, little-endian coefficients, length n+1.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    std::string modulus_string() const {
        std::string s;
        for (int i = static_cast<int>(n_); i >= 0; --i) {
            unsigned c = modulus_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!s.empty()) s += '+';
            if (i == 0) {
                s += std::to_string(c);
            } else {
                if (c != 1) s += std::to_string(c);
                s += 'x';
                if (i > 1) s += '^' + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    bool is_valid(FieldElem a) const { return a < q_; }

    void check(FieldElem a) const {
        if (!is_valid(a))
            throw std::domain_error("GaloisField: element encoding " + std::to_string(a) +
                                    " out of range for q=" + std::to_string(q_));
    }

    FieldElem add(FieldElem a, FieldElem b) const {
        check(a); check(b);
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_raw(a, b);
    }

    FieldElem neg(FieldElem a) const {
        check(a);
        if (!neg_table_.empty()) return neg_table_[a];
        return neg_raw(a);
    }

    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const {
        check(a); check(b);
        if (!mul_table_.empty())
            return mul_table_[static_cast<std::size_t>(a) * q_ + b];
        return mul_raw(a, b);
    }

    FieldElem inv(FieldElem a) const {
        check(a);
        if (a == 0) throw std::domain_error("GaloisField: zero has no multiplicative inverse");
        if (!inv_table_.empty()) return inv_table_[a];
        return pow(a, q_ - 2);
    }

    FieldElem pow(FieldElem a, std::uint64_t e) const {
        check(a);
        FieldElem r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const GaloisField& l, const GaloisField& r) {
        return l.p_ == r.p_ && l.n_ == r.n_ && l.modulus_ == r.modulus_;
    }

private:
    unsigned p_;
    unsigned n_;
    FieldElem q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<FieldElem> add_table_;
    std::vector<FieldElem> neg_table_;
    std::vector<FieldElem> mul_table_;
    std::vector<FieldElem> inv_table_;

    FieldElem add_raw(FieldElem a, FieldElem b) const {
        if (n_ == 1) return (a + b) % p_;
        FieldElem r = 0;
        std::uint64_t place = 1;
        for (unsigned i = 0; i < n_; ++i) {
            r += ((a % p_ + b % p_) % p_) * static_cast<FieldElem>(place);
            a /= p_; b /= p_; place *= p_;
        }
        return r;
    }

    FieldElem neg_raw(FieldElem a) const {
        if (n_ == 1) return (p_ - a) % p_;
        FieldElem r = 0;
        std::uint64_t place = 1;
        for (unsigned i = 0; i < n_; ++i) {
            r += ((p_ - a % p_) % p_) * static_cast<FieldElem>(place);
            a /= p_; place *= p_;
        }
        return r;
    }

    void to_digits(FieldElem a, std::vector<unsigned>& out) const {
        out.assign(n_, 0);
        for (unsigned i = 0; i < n_ && a; ++i) { out[i] = a % p_; a /= p_; }
    }

    FieldElem from_digits(const std::vector<unsigned>& d) const {
        FieldElem r = 0;
        std::uint64_t place = 1;
        for (unsigned i = 0; i < n_; ++i) {
            r += (i < d.size() ? d[i] : 0u) * static_cast<FieldElem>(place);
            place *= p_;
        }
        return r;
    }

    FieldElem mul_raw(FieldElem a, FieldElem b) const {
        if (n_ == 1) return static_cast<FieldElem>((std::uint64_t(a) * b) % p_);
        std::vector<unsigned> da, db;
        to_digits(a, da); to_digits(b, db);
        std::vector<unsigned> prod(2 * n_ - 1, 0);
        for (unsigned i = 0; i < n_; ++i) {
            if (!da[i]) continue;
            for (unsigned j = 0; j < n_; ++j)
                prod[i + j] = static_cast<unsigned>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
        }
        reduce_by_modulus(prod);
        prod.resize(n_);
        return from_digits(prod);
    }

    // Subtracts multiples of the (monic) modulus until deg < n. In place.
    void reduce_by_modulus(std::vector<unsigned>& poly) const {
        for (int d = static_cast<int>(poly.size()) - 1; d >= static_cast<int>(n_); --d) {
            unsigned c = poly[static_cast<std::size_t>(d)];
            if (!c) continue;
            poly[static_cast<std::size_t>(d)] = 0;
            for (unsigned k = 0; k < n_; ++k) {
                std::size_t idx = static_cast<std::size_t>(d) - n_ + k;
                poly[idx] = static_cast<unsigned>((poly[idx] + std::uint64_t(c) * (p_ - modulus_[k])) % p_);
            }
        }
    }

    // True when the monic divisor g (little-endian, degree deg) divides f exactly.
    bool divides(const std::vector<unsigned>& f, const std::vector<unsigned>& g, unsigned deg) const {
        std::vector<unsigned> r(f);
        for (int d = static_cast<int>(r.size()) - 1; d >= static_cast<int>(deg); --d) {
            unsigned c = r[static_cast<std::size_t>(d)];
            if (!c) continue;
            r[static_cast<std::size_t>(d)] = 0;
            for (unsigned k = 0; k < deg; ++k) {
                std::size_t idx = static_cast<std::size_t>(d) - deg + k;
                r[idx] = static_cast<unsigned>((r[idx] + std::uint64_t(c) * (p_ - g[k])) % p_);
            }
        }
        return std::all_of(r.begin(), r.begin() + deg, [](unsigned v) { return v == 0; });
    }

    bool is_irreducible(const std::vector<unsigned>& f) const {
        if (n_ == 1) return true;
        std::vector<unsigned> g;
        for (unsigned deg = 1; deg <= n_ / 2; ++deg) {
            std::uint64_t combos = 1;
            for (unsigned i = 0; i < deg; ++i) combos *= p_;
            g.assign(deg + 1, 0);
            g[deg] = 1;
            for (std::uint64_t m = 0; m < combos; ++m) {
                std::uint64_t t = m;
                for (unsigned i = 0; i < deg; ++i) { g[i] = static_cast<unsigned>(t % p_); t /= p_; }
                if (divides(f, g, deg)) return false;
            }
        }
        return true;
    }

    // Candidates are scanned in lexicographic order of (c_0, c_1, ..., c_{n-1}),
    // c_0 compared first; the first irreducible wins.
    std::vector<unsigned> smallest_irreducible() const {
        std::vector<unsigned> f(n_ + 1, 0);
        f[n_] = 1;
        std::vector<unsigned> digits(n_, 0);
        for (std::uint64_t m = 0; m < q_; ++m) {
            std::uint64_t t = m;
            for (unsigned j = 0; j < n_; ++j) { digits[j] = static_cast<unsigned>(t % p_); t /= p_; }
            for (unsigned i = 0; i < n_; ++i) f[i] = digits[n_ - 1 - i];
            if (is_irreducible(f)) return f;
        }
        throw std::logic_error("GaloisField: no irreducible polynomial found"); // unreachable
    }

    void build_tables() {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (FieldElem a = 0; a < q_; ++a)
            for (FieldElem b = 0; b < q_; ++b) {
                add_table_[static_cast<std::size_t>(a) * q_ + b] = add_raw(a, b);
                mul_table_[static_cast<std::size_t>(a) * q_ + b] = mul_raw(a, b);
            }
        neg_table_.assign(q_, 0);
        for (FieldElem a = 0; a < q_; ++a) neg_table_[a] = neg_raw(a);
        inv_table_.assign(q_, 0);
        for (FieldElem a = 1; a < q_; ++a)
            for (FieldElem b = 1; b < q_; ++b)
                if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == 1) { inv_table_[a] = b; break; }
    }
};

} // namespace ringplane
