#pragma once

#include "steenrod/matrix.hpp"

#include <vector>

namespace steenrod {

// Integer polynomial, coefficients from the constant term upward, no trailing zeros.
using Polynomial = std::vector<Integer>;

int degree(const Polynomial& p);
Integer evaluate(const Polynomial& p, const Integer& x);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
// Exact quotient a / b over Z, or empty optional-like result (false) if b does not divide a.
bool divide_exact(const Polynomial& a, const Polynomial& b, Polynomial& quotient);

// det(x I - M) by Faddeev-LeVerrier; every division is exact.
Polynomial characteristic_polynomial(const IntMatrix& m);

// Irreducible factors over Z of a monic polynomial, with multiplicity, each
// monic. Kronecker's method; intended for the small degrees met here.
std::vector<Polynomial> factor_monic(const Polynomial& p);

}  // namespace steenrod
