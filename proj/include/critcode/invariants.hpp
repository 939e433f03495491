#pragma once

#include <map>
#include <vector>

#include "critcode/code.hpp"
#include "critcode/subspace.hpp"

namespace critcode {

/// (d_1, ..., d_k): d_r = smallest support of an r-dimensional subcode.
/// Computed from the matroid sweep as min{|X| : nullity(X) >= r}.
std::vector<int> weight_hierarchy(const LinearCode& c, const Caps& caps = {});

/// Hierarchy of the dual code from the hierarchy of the code:
/// {1..n} minus {n+1-d_i}. Input must be strictly increasing inside [1, n].
std::vector<int> wei_dual_hierarchy(const std::vector<int>& d, int n);

/// s_i = k + i - d_i(dual) for i = 1..n-k, then -1 for i = n-k+1..n.
/// Indexable directly by the bound formula for every i in [k+1, n].
std::vector<int> singleton_defects(const LinearCode& c, const Caps& caps = {});

/// c_j for j = 1..n: least m >= 1 with sum_{i=j..n} P_i(q^m) != 0.
std::vector<int> critical_exponents_poly(const LinearCode& c, const Caps& caps = {});

/// Same values through m-dimensional subcode enumeration: least m such that
/// some m-dimensional subcode has support weight >= j.
std::vector<int> critical_exponents_subspace(const LinearCode& c, const Caps& caps = {});

/// Same values through generator columns: least m such that some
/// (k-m)-dimensional subspace of F_q^k contains at most n-j columns of G.
std::vector<int> critical_exponents_columns(const LinearCode& c, const Caps& caps = {});

/// Counts of r-dimensional subcodes by support weight.
std::map<int, BigInt> subcode_support_distribution(const LinearCode& c, int r,
                                                   const Caps& caps = {});

/// (q^s - 1) / (q - 1): number of points of PG(s-1, q).
BigInt mu(const BigInt& q, int s);

/// Throws DomainError unless d is strictly increasing inside [1, n].
void validate_hierarchy(const std::vector<int>& d, int n);

}  // namespace critcode
