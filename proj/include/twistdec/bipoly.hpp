#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "poly.hpp"

namespace twistdec {

// Q = sum of q_ij x^i y^j; only nonzero coefficients are stored
struct BiPoly {
    FieldPtr f;
    std::map<std::pair<int, int>, uint32_t> terms;

    bool is_zero() const { return terms.empty(); }
};

BiPoly make_bipoly(const FieldPtr& f);

// Pascal triangle mod p, rows 0..n; residues double as prime-subfield codes
std::vector<std::vector<uint32_t>> pascal_mod(uint32_t p, int n);

// maintains the no-zero-coefficients invariant
void bipoly_set(BiPoly& Q, int i, int j, uint32_t c);
uint32_t bipoly_coeff(const BiPoly& Q, int i, int j);

uint32_t bipoly_eval(const BiPoly& Q, uint32_t x0, uint32_t y0);

// max over stored terms of i + w*j; refuses the zero polynomial
int wdeg(const BiPoly& Q, int w);
int y_degree(const BiPoly& Q);

// Q(x + a, y + r), binomial coefficients reduced mod p
BiPoly bipoly_translate(const BiPoly& Q, uint32_t a, uint32_t r);

// minimal total degree of Q(x + a, y + r); this is the multiplicity of Q at (a, r)
int multiplicity_at(const BiPoly& Q, uint32_t a, uint32_t r);

// Q(x, f(x))
Poly compose(const BiPoly& Q, const Poly& f);

// largest m with x^m dividing Q, together with Q / x^m; (0, Q) for zero Q
std::pair<int, BiPoly> strip_x(const BiPoly& Q);

// Q(0, y) as a univariate polynomial in y
Poly eval_x_zero(const BiPoly& Q);

// Q(x, x*y + g), the Roth-Ruckenstein descent step
BiPoly shift_x_y(const BiPoly& Q, uint32_t g);

}
