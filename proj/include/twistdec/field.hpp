#pragma once

#include <cstdint>
#include <memory>
#include <vector>

// Finite fields GF(p^e) with a deterministic canonical modulus.
//
// Elements travel as uint32_t codes relative to a Field: for e = 1 the code is
// the residue itself; for e > 1 it packs the coefficient vector (c_0, ..., c_{e-1})
// of the monomial basis as sum c_i * p^i.  The code space is [0, q) with q = p^e,
// capped at q < 2^31 so products fit in uint64_t.

namespace twistdec {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // Builds GF(p^e).  p must be prime, e >= 1, p^e < 2^31.  For e > 1 the
    // modulus is the first irreducible monic degree-e polynomial in the scan
    // order c_0 + c_1*p + ... + c_{e-1}*p^{e-1} ascending, so a given (p, e)
    // always yields the same field on every platform.
    static FieldPtr make(uint32_t p, uint32_t e = 1);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }

    // Ascending coefficients including the leading 1 (size e+1); empty for e = 1.
    const std::vector<uint32_t>& modulus() const { return mod_; }

    // Prime-field paths stay inline; they sit inside the interpolation and
    // enumeration inner loops.
    uint32_t add(uint32_t a, uint32_t b) const {
        if (e_ == 1) {
            uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_ext(a, b);
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        if (e_ == 1) return a >= b ? a - b : a + p_ - b;
        return sub_ext(a, b);
    }
    uint32_t neg(uint32_t a) const {
        if (e_ == 1) return a ? p_ - a : 0;
        return neg_ext(a);
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (e_ == 1) return uint32_t(uint64_t(a) * b % p_);
        return mul_ext(a, b);
    }
    uint32_t inv(uint32_t a) const;        // throws on a == 0
    uint32_t pow(uint32_t a, uint64_t n) const;

    bool is_prime_field() const { return e_ == 1; }

    // Coefficient view of a code: length e, ascending.
    std::vector<uint32_t> digits(uint32_t a) const;
    uint32_t from_digits(const std::vector<uint32_t>& d) const;

    // Throws std::invalid_argument when a is not a valid code for this field.
    void check(uint32_t a) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Field(uint32_t p, uint32_t e, uint32_t q, std::vector<uint32_t> mod)
        : p_(p), e_(e), q_(q), mod_(std::move(mod)) {}

    uint32_t add_ext(uint32_t a, uint32_t b) const;
    uint32_t sub_ext(uint32_t a, uint32_t b) const;
    uint32_t neg_ext(uint32_t a) const;
    uint32_t mul_ext(uint32_t a, uint32_t b) const;

    uint32_t p_, e_, q_;
    std::vector<uint32_t> mod_;
};

// Throws unless both pointers refer to the same field (structurally).
void require_same_field(const FieldPtr& a, const FieldPtr& b);

// Block <-> extension element identification used by the authentication layer.
// base = GF(q) with q = p^e, ext = GF(q^b) built as GF(p, e*b); a block of b base
// symbols maps to the ext element whose base-p digit vector is the concatenation
// of the symbols' digit vectors.  For prime q this is the monomial-basis map
// (block coordinate i becomes the coefficient of x^i).
uint32_t pack_block(const Field& base, const Field& ext, const std::vector<uint32_t>& block);
std::vector<uint32_t> unpack_block(const Field& base, const Field& ext, uint32_t element);

} // namespace twistdec
