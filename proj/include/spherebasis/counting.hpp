#pragma once
// Exact counting of basis spheres and related families, with the recursion
// and cross-family identities they satisfy.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <vector>

namespace sphb::counting {

using Count = boost::multiprecision::cpp_int;

// C(n, k); zero outside 0 <= k <= n (n must be >= 0).
Count binomial(int n, int k);

// Size of the cube sphere basis: s(n,k) = sum_{j=k}^{n-1} C(j,k) 2^(j-k).
// Domain 1 <= k <= n-1.
Count s(int n, int k);

// Alternating form of the same count, domain 1 <= k <= n-1:
// m(n,k) = (-1)^(1+k) + sum_{j=0}^{k} (-1)^(k-j) C(n,j) 2^(n-j).
Count m(int n, int k);

// Betti number of the simplex k-skeleton in alternating form, domain
// 1 <= k <= n-1: m'(n,k) = sum_{j=-1}^{k} (-1)^(k-j) C(n+1,j+1) = C(n,k+1).
Count m_prime(int n, int k);

// bw(n,k) = sum_{i=k}^{n} C(n,i) C(i-1,k-1), domain 3 <= k <= n.
Count bw(int n, int k);

// Alternating form gr(n,k) = sum_{i=k}^{n} (-1)^(k+i) 2^(n-i) C(n,i),
// domain 3 <= k <= n.
Count gr(int n, int k);

// The same sums evaluated on the full triangle 0 <= k <= n, as needed by the
// recursion check (the k = 0 and k = n values come from the formulas, not
// from topology; e.g. s_formula(n,0) = 2^n - 1 and s_formula(n,n) = 0).
Count s_formula(int n, int k);
Count m_formula(int n, int k);
Count m_prime_formula(int n, int k);
Count bw_formula(int n, int k);  // k >= 1 (the inner binomial needs k-1 >= 0)
Count gr_formula(int n, int k);

struct RecursionReport {
    bool holds = true;
    int n = -1;  // first violating entry when !holds
    int k = -1;
};

// Checks T(n,k) = 2 T(n-1,k) + T(n-1,k-1) for 1 <= k <= n-1, n <= nmax,
// taking out-of-domain values from the supplied full-triangle table.
RecursionReport recursion_check(const std::function<Count(int, int)>& table, int nmax);

struct IdentityReport {
    std::string name;
    bool holds = true;
    int n = -1;  // first violating entry when !holds
    int k = -1;
};

// Verifies s = m and m' = C(n,k+1) (domain 1 <= k <= n-1, n <= nmax_sm),
// the recursion for s and m, and gr = bw, bw(n,3) = s(n,2), bw(n,4) = s(n,3)
// (3 <= k <= n <= nmax_bw).
std::vector<IdentityReport> verify_identities(int nmax_sm, int nmax_bw);

}  // namespace sphb::counting
