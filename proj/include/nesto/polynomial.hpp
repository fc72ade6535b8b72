#pragma once

#include <string>
#include <vector>

#include "nesto/errors.hpp"

namespace nesto {

/// Integer polynomial / integer vector; index = degree.
using IntVec = std::vector<long long>;

IntVec poly_add(const IntVec& a, const IntVec& b);
IntVec poly_mul(const IntVec& a, const IntVec& b);

/// a * t^k.
IntVec poly_shift(const IntVec& a, int k);

/// (1+t)^k, k >= 0.
IntVec binomial_power(int k);

/// h(t) = f(t-1).
IntVec f_to_h(const IntVec& f);

bool palindromic(const IntVec& v);

/// Unique gamma with h = sum gamma_i t^i (1+t)^(n-2i).  Throws
/// not_simple_error when h is not palindromic (the expansion only exists
/// then) and consistency_error if the subtraction leaves a remainder.
IntVec h_to_gamma(const IntVec& h);

/// f, h, gamma and the two-variable table H2[a][b] = coefficient of
/// alpha^a t^b in H(alpha,t) = sum h_i alpha^(n-i) t^i.
struct PolynomialBundle {
    IntVec f;
    IntVec h;
    IntVec gamma;
    std::vector<IntVec> H2;
};

/// Requires f_n = 1 (f counts faces per dimension including the polytope
/// itself).  The point polytope f=(1) is the n=0 base case.
PolynomialBundle polynomial_bundle(const IntVec& f);

/// f-vector of the m-simplex, m >= 0: f_i = C(m+1, i+1), f_m = 1.
IntVec f_simplex(int m);

/// gamma-vector of the m-simplex; m = -1 and m = 0 both give (1), the
/// degenerate cases of the shaving recursion.
IntVec gamma_simplex(int m);

/// "(a, b, c)" rendering used by reports and the command line.
std::string vector_str(const IntVec& v);

}  // namespace nesto
