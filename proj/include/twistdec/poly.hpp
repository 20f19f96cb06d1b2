#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "field.hpp"

namespace twistdec {

// degree of the zero polynomial: a distinguished minus-infinity stand-in,
// chosen so that sums of two sentinels still stay far below any real degree
inline constexpr int kDegNegInf = std::numeric_limits<int>::min() / 2;

// coefficients ascending by exponent; normalized so the highest stored
// coefficient is nonzero and the zero polynomial is the empty sequence
struct Poly {
    FieldPtr f;
    std::vector<uint32_t> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return c.empty() ? kDegNegInf : int(c.size()) - 1; }
    uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    uint32_t lead() const;
};

Poly make_poly(const FieldPtr& f, std::vector<uint32_t> coeffs);
Poly poly_zero(const FieldPtr& f);
Poly poly_const(const FieldPtr& f, uint32_t a);
Poly poly_x(const FieldPtr& f);

bool operator==(const Poly& a, const Poly& b);
bool operator!=(const Poly& a, const Poly& b);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, uint32_t s);

// quotient and remainder with deg(remainder) < deg(divisor); divisor must be nonzero
std::pair<Poly, Poly> quotrem(const Poly& a, const Poly& b);

uint32_t poly_eval(const Poly& f, uint32_t a);
std::vector<uint32_t> multipoint_eval(const Poly& f, const std::vector<uint32_t>& points);

// substitution of g for the variable: f(g(x))
Poly compose(const Poly& f, const Poly& g);

// all roots in the field, ascending, found by exhaustive scan; refuses the
// zero polynomial (everything is a root) and fields larger than cap
std::vector<uint32_t> univariate_roots(const Poly& f, uint64_t cap = uint64_t(1) << 16);

}
