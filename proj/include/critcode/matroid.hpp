#pragma once

#include <cstdint>
#include <vector>

#include "critcode/code.hpp"
#include "critcode/poly.hpp"

namespace critcode {

/// Summary of one pass over all 2^n column subsets of a parity check matrix
/// of the code: how many subsets have a given (size, nullity), and the
/// smallest subset reaching each nullity. Everything the extended weight
/// polynomials and the weight hierarchy need comes out of this single sweep.
struct MatroidTable {
    int n = 0;
    int k = 0;
    // count[size][nu] = #subsets of that size with nullity nu (nu <= k)
    std::vector<std::vector<std::uint64_t>> count;
    // min_size[nu] = smallest |X| with nullity(X) == nu, or n + 1 if none
    std::vector<int> min_size;
};

/// Cached per code; the sweep runs once (cap: n <= caps.max_n).
const MatroidTable& matroid_table(const LinearCode& c, const Caps& caps = {});

/// |X| - rank of the parity-check columns indexed by X (bit i = coordinate i).
/// For k = n there are no checks and the nullity is |X|.
int nullity(const LinearCode& c, std::uint64_t subset);

/// P_j(x): P_j(q^m) is the number of weight-j codewords of the code with the
/// same generator matrix over GF(q^m). Computed by the collapsed single sum
/// (-1)^j sum_{X subset E} (-1)^|X| C(n-|X|, j-|X|) x^nullity(X).
WeightPolynomial extended_weight_polynomial(const LinearCode& c, int j, const Caps& caps = {});

/// All of P_0 .. P_n from the shared sweep.
std::vector<WeightPolynomial> extended_weight_polynomials(const LinearCode& c,
                                                          const Caps& caps = {});

/// p(M_C; x) = sum_{A subset E} (-1)^|A| x^(rank(G) - rank(A)) over the
/// generator matroid. Equals P_n coefficient for coefficient; kept as an
/// independent second route and checked against it in the test suites.
WeightPolynomial char_poly(const LinearCode& c, const Caps& caps = {});

}  // namespace critcode
