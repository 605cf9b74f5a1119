#pragma once

// Quantum integers, Gaussian binomials and cyclotomic polynomials.

#include "specht/laurent_poly.hpp"

namespace specht {

/// [m] = 1 + q + ... + q^{m-1}; throws std::invalid_argument for m < 0.
LaurentPoly quantum_int(int m);

/// Gaussian binomial [m choose k]; zero unless m >= k >= 0. Memoized, thread-safe.
const LaurentPoly& gauss_binomial(int m, int k);

/// The e-th cyclotomic polynomial as an ordinary polynomial in q.
const LaurentPoly& cyclotomic_poly(int e);

/// m mod e in [0, e).
int residue(long m, int e);

}  // namespace specht
