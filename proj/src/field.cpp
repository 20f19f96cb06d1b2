#include "twistdec/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace twistdec {
namespace {

constexpr uint64_t kCodeCap = uint64_t(1) << 31;

// Elements of GF(p^e) never need more digits than this (2^30 > 2^31 caps e for p = 2).
constexpr size_t kMaxDigits = 32;

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- dense GF(p)[x] helpers used only while hunting for the field modulus ---

using PPoly = std::vector<uint32_t>; // ascending coefficients, normalized

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    // reduce by monic m
    size_t dm = m.size() - 1;
    for (size_t i = r.size(); i-- > dm;) {
        uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (size_t j = 0; j < dm; ++j) {
            uint64_t t = uint64_t(c) * m[j] % p;
            r[i - dm + j] = uint32_t((r[i - dm + j] + p - t) % p);
        }
    }
    r.resize(dm);
    ptrim(r);
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t x) {
        uint32_t r = 1;
        uint64_t base = x, n = p - 2;
        while (n) {
            if (n & 1) r = uint32_t(uint64_t(r) * base % p);
            base = base * base % p;
            n >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b, b monic-ized on the fly
        uint32_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            uint32_t c = uint32_t(uint64_t(a.back()) * lead_inv % p);
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t t = uint64_t(c) * b[j] % p;
                a[shift + j] = uint32_t((a[shift + j] + p - t) % p);
            }
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// f irreducible over GF(p) iff it shares no factor with x^{p^d} - x for d <= deg/2.
bool irreducible(const PPoly& f, uint32_t p) {
    size_t deg = f.size() - 1;
    PPoly x = {0, 1};
    PPoly frob = x; // x^{p^d} mod f, starting at d = 0
    for (size_t d = 1; 2 * d <= deg; ++d) {
        // raise to the p-th power: frob = frob^p mod f
        PPoly acc = {1};
        PPoly base = frob;
        uint64_t n = p;
        while (n) {
            if (n & 1) acc = pmulmod(acc, base, f, p);
            base = pmulmod(base, base, f, p);
            n >>= 1;
        }
        frob = acc;
        // gcd(f, frob - x)
        PPoly diff = frob;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = uint32_t((diff[1] + p - 1) % p);
        ptrim(diff);
        PPoly g = pgcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

FieldPtr Field::make(uint32_t p, uint32_t e) {
    if (!is_prime(p))
        throw std::invalid_argument("field_make: p = " + std::to_string(p) + " is not prime");
    if (e < 1)
        throw std::invalid_argument("field_make: e must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q >= kCodeCap)
            throw std::invalid_argument("field_make: p^e exceeds the 2^31 element cap");
    }
    std::vector<uint32_t> mod;
    if (e > 1) {
        // scan tails in ascending packed order; the first irreducible wins
        uint64_t tail_count = q; // p^e candidates for the e low coefficients
        bool found = false;
        PPoly f(e + 1, 0);
        f[e] = 1;
        for (uint64_t m = 0; m < tail_count; ++m) {
            uint64_t t = m;
            for (uint32_t i = 0; i < e; ++i) {
                f[i] = uint32_t(t % p);
                t /= p;
            }
            if (irreducible(f, p)) {
                mod.assign(f.begin(), f.end());
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("field_make: no irreducible modulus found"); // cannot happen
    }
    return FieldPtr(new Field(p, e, uint32_t(q), std::move(mod)));
}

void Field::check(uint32_t a) const {
    if (a >= q_)
        throw std::invalid_argument("element code " + std::to_string(a) +
                                    " out of range for GF(" + std::to_string(q_) + ")");
}

uint32_t Field::add_ext(uint32_t a, uint32_t b) const {
    std::array<uint32_t, kMaxDigits> da{}, db{};
    uint32_t ta = a, tb = b;
    for (uint32_t i = 0; i < e_; ++i) {
        da[i] = ta % p_; ta /= p_;
        db[i] = tb % p_; tb /= p_;
    }
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t s = da[i] + db[i];
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::neg_ext(uint32_t a) const {
    uint32_t out = 0, mult = 1, t = a;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = t % p_;
        t /= p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::sub_ext(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_ext(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::array<uint32_t, kMaxDigits> da{}, db{};
    std::array<uint32_t, 2 * kMaxDigits> prod{};
    uint32_t ta = a, tb = b;
    for (uint32_t i = 0; i < e_; ++i) {
        da[i] = ta % p_; ta /= p_;
        db[i] = tb % p_; tb /= p_;
    }
    for (uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < e_; ++j)
            prod[i + j] = uint32_t((prod[i + j] + uint64_t(da[i]) * db[j]) % p_);
    }
    // reduce by the monic modulus
    for (uint32_t i = 2 * e_ - 2; i >= e_; --i) {
        uint32_t c = prod[i];
        if (c) {
            prod[i] = 0;
            for (uint32_t j = 0; j < e_; ++j) {
                uint64_t t = uint64_t(c) * mod_[j] % p_;
                prod[i - e_ + j] = uint32_t((prod[i - e_ + j] + p_ - t) % p_);
            }
        }
    }
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        out += prod[i] * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::pow(uint32_t a, uint64_t n) const {
    uint32_t r = 1;
    uint32_t base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0)
        throw std::invalid_argument("inv(0) is undefined");
    return pow(a, uint64_t(q_) - 2);
}

std::vector<uint32_t> Field::digits(uint32_t a) const {
    std::vector<uint32_t> d(e_);
    for (uint32_t i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

uint32_t Field::from_digits(const std::vector<uint32_t>& d) const {
    if (d.size() != e_)
        throw std::invalid_argument("coefficient vector has wrong length for this field");
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        if (d[i] >= p_)
            throw std::invalid_argument("coefficient out of range [0, p)");
        out += d[i] * mult;
        mult *= p_;
    }
    return out;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b)
        throw std::invalid_argument("operation on an unbound field");
    if (a.get() == b.get()) return;
    if (*a != *b)
        throw std::invalid_argument("field mismatch: GF(" + std::to_string(a->q()) +
                                    ") vs GF(" + std::to_string(b->q()) + ")");
}

uint32_t pack_block(const Field& base, const Field& ext, const std::vector<uint32_t>& block) {
    if (ext.p() != base.p() || ext.e() == 0 || ext.e() % base.e() != 0)
        throw std::invalid_argument("pack_block: ext is not an extension of base");
    uint32_t b = ext.e() / base.e();
    if (block.size() != b)
        throw std::invalid_argument("pack_block: block length must be " + std::to_string(b));
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < b; ++i) {
        base.check(block[i]);
        out += block[i] * mult;
        for (uint32_t j = 0; j < base.e(); ++j) mult *= base.p();
    }
    return out;
}

std::vector<uint32_t> unpack_block(const Field& base, const Field& ext, uint32_t element) {
    if (ext.p() != base.p() || ext.e() == 0 || ext.e() % base.e() != 0)
        throw std::invalid_argument("unpack_block: ext is not an extension of base");
    ext.check(element);
    uint32_t b = ext.e() / base.e();
    std::vector<uint32_t> block(b);
    for (uint32_t i = 0; i < b; ++i) {
        block[i] = element % base.q();
        element /= base.q();
    }
    return block;
}

} // namespace twistdec
