#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ringplane/gf.hpp"

namespace ringplane {

// An element of the double-number ring GF(q) x GF(q), stored as the
// component pair [a,b]. Addition and multiplication are componentwise;
// the idempotent e is fixed as [0,1], so e-1 = [-1,0].
struct DoubleNumber {
    FieldElem a = 0;
    FieldElem b = 0;

    friend constexpr bool operator==(const DoubleNumber&, const DoubleNumber&) = default;
    friend constexpr auto operator<=>(const DoubleNumber&, const DoubleNumber&) = default;
};

// Every element is a unit (both components nonzero) or a zero-divisor;
// zero is the distinguished zero-divisor lying in both maximal ideals.
enum class ElementKind { Zero, ZeroDivisor, Unit };

enum class IdealTag { E, EMinusOne };

struct ElementClass {
    ElementKind kind;
    bool in_ideal_e;           // first component vanishes: member of <e> = {[0,b]}
    bool in_ideal_e_minus_one; // second component vanishes: member of <e-1> = {[a,0]}
};

class DoubleRing {
public:
    explicit DoubleRing(GaloisField gf) : gf_(std::move(gf)) {}
    DoubleRing(unsigned p, unsigned n) : gf_(p, n) {}

    const GaloisField& field() const { return gf_; }
    std::uint64_t size() const { return std::uint64_t(gf_.q()) * gf_.q(); }

    DoubleNumber zero() const { return {0, 0}; }
    DoubleNumber one() const { return {1, 1}; }
    DoubleNumber e() const { return {0, 1}; }
    DoubleNumber e_minus_one() const { return {gf_.neg(1), 0}; }

    // Embeds GF(q) along the unit diagonal: v -> v * [1,1].
    DoubleNumber embed(FieldElem v) const { gf_.check(v); return {v, v}; }

    void check(DoubleNumber x) const { gf_.check(x.a); gf_.check(x.b); }

    DoubleNumber add(DoubleNumber x, DoubleNumber y) const {
        return {gf_.add(x.a, y.a), gf_.add(x.b, y.b)};
    }
    DoubleNumber sub(DoubleNumber x, DoubleNumber y) const {
        return {gf_.sub(x.a, y.a), gf_.sub(x.b, y.b)};
    }
    DoubleNumber neg(DoubleNumber x) const { return {gf_.neg(x.a), gf_.neg(x.b)}; }
    DoubleNumber mul(DoubleNumber x, DoubleNumber y) const {
        return {gf_.mul(x.a, y.a), gf_.mul(x.b, y.b)};
    }

    DoubleNumber inv(DoubleNumber x) const {
        if (!is_unit(x)) throw std::domain_error("DoubleRing: only units are invertible");
        return {gf_.inv(x.a), gf_.inv(x.b)};
    }

    bool is_zero(DoubleNumber x) const { check(x); return x.a == 0 && x.b == 0; }
    bool is_unit(DoubleNumber x) const { check(x); return x.a != 0 && x.b != 0; }
    bool is_zero_divisor(DoubleNumber x) const { return !is_unit(x); }

    bool in_ideal(IdealTag t, DoubleNumber x) const {
        check(x);
        return t == IdealTag::E ? x.a == 0 : x.b == 0;
    }

    ElementClass classify(DoubleNumber x) const {
        check(x);
        if (x.a == 0 && x.b == 0) return {ElementKind::Zero, true, true};
        if (x.a != 0 && x.b != 0) return {ElementKind::Unit, false, false};
        return {ElementKind::ZeroDivisor, x.a == 0, x.b == 0};
    }

    struct Census {
        std::uint64_t total = 0;
        std::uint64_t zero_divisors = 0; // includes zero
        std::uint64_t units = 0;
    };

    // Exhaustive classification of all q^2 elements. The closed forms
    // q^2 / 2q-1 / (q-1)^2 are the test oracle, not the implementation.
    Census census() const {
        Census c;
        const FieldElem q = gf_.q();
        for (FieldElem a = 0; a < q; ++a)
            for (FieldElem b = 0; b < q; ++b) {
                ++c.total;
                if (a != 0 && b != 0) ++c.units;
                else ++c.zero_divisors;
            }
        return c;
    }

    std::vector<DoubleNumber> ideal_elements(IdealTag t) const {
        std::vector<DoubleNumber> out;
        out.reserve(gf_.q());
        for (FieldElem v = 0; v < gf_.q(); ++v)
            out.push_back(t == IdealTag::E ? DoubleNumber{0, v} : DoubleNumber{v, 0});
        return out;
    }

    std::string to_string(DoubleNumber x) const {
        check(x);
        return "[" + std::to_string(x.a) + "," + std::to_string(x.b) + "]";
    }

private:
    GaloisField gf_;
};

} // namespace ringplane
