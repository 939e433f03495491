#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "critcode/code.hpp"

namespace critcode {

/// Generator columns = one representative per point of PG(k-1, q), first
/// nonzero coordinate normalized to 1, sorted by integer encoding (first row
/// = most significant digit). [mu_k, k], constant weight q^(k-1).
LinearCode simplex(long q, int k, const Caps& caps = {});

/// dual(simplex(q, k)): [mu_k, mu_k - k, 3].
LinearCode hamming(long q, int k, const Caps& caps = {});

/// First-order Reed-Muller of rank r: columns (1, v) for all v in F_q^(r-1)
/// in ascending encoding order. [q^(r-1), r]; contains the all-ones word.
LinearCode reed_muller1(long q, int r, const Caps& caps = {});

/// Vandermonde generator on the field elements with values 0..n-1 (n <= q).
/// MDS by construction.
LinearCode reed_solomon(long q, int n, int k, const Caps& caps = {});

/// [(2l+1)m, 2lm] code whose parity check matrix has m rows of 2l+1
/// consecutive ones on the block diagonal.
LinearCode block_ones(int m, int l, long q = 2);

/// Constant-weight code using, for each point of PG(k-1, q), its j scalar
/// multiples by the nonzero scalars with the smallest encodings (j <= q-1).
/// j = 1 gives the simplex code.
LinearCode multi_projective(long q, int k, int j, const Caps& caps = {});

/// Deterministic seeded code: fills k x n matrices from a SplitMix64 stream
/// until one has rank k and no identically-zero coordinate.
LinearCode random_code(long q, int n, int k, std::uint64_t seed, const Caps& caps = {});

/// CLI-facing family selector.
struct FamilySpec {
    enum class Kind { simplex, hamming, reed_muller1, reed_solomon, block_ones, multi_projective, random };
    Kind kind = Kind::simplex;
    std::map<std::string, long> params;  // q, k, r, n, m, l, j, seed as applicable
};

LinearCode make_family(const FamilySpec& spec, const Caps& caps = {});

/// Parses the CLI names: simplex|hamming|rm1|rs|block-ones|multi-projective|random.
FamilySpec::Kind family_kind_from_name(const std::string& name);

}  // namespace critcode
