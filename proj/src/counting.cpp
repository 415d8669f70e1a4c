#include "spherebasis/counting.hpp"

#include <stdexcept>

namespace sphb::counting {

namespace {

void require(bool ok, const char* name, int n, int k, const char* domain) {
    if (!ok)
        throw std::domain_error(std::string(name) + "(n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ") outside domain " + domain);
}

Count pow2(int e) { return Count(1) << e; }

}  // namespace

Count binomial(int n, int k) {
    if (n < 0) throw std::domain_error("binomial needs n >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Count s_formula(int n, int k) {
    require(n >= 0 && k >= 0 && k <= n, "s", n, k, "0 <= k <= n");
    Count total = 0;
    for (int j = k; j <= n - 1; ++j) total += binomial(j, k) * pow2(j - k);
    return total;
}

Count m_formula(int n, int k) {
    require(n >= 0 && k >= 0 && k <= n, "m", n, k, "0 <= k <= n");
    Count total = k % 2 == 0 ? -1 : 1;  // (-1)^(1+k)
    for (int j = 0; j <= k; ++j) {
        const Count term = binomial(n, j) * pow2(n - j);
        total += (k - j) % 2 == 0 ? term : -term;
    }
    return total;
}

Count m_prime_formula(int n, int k) {
    require(n >= 0 && k >= 0 && k <= n, "m'", n, k, "0 <= k <= n");
    Count total = 0;
    for (int j = -1; j <= k; ++j) {
        const Count term = binomial(n + 1, j + 1);
        total += (k - j) % 2 == 0 ? term : -term;
    }
    return total;
}

Count bw_formula(int n, int k) {
    require(n >= 0 && k >= 1 && k <= n, "bw", n, k, "1 <= k <= n");
    Count total = 0;
    for (int i = k; i <= n; ++i) total += binomial(n, i) * binomial(i - 1, k - 1);
    return total;
}

Count gr_formula(int n, int k) {
    require(n >= 0 && k >= 0 && k <= n, "gr", n, k, "0 <= k <= n");
    Count total = 0;
    for (int i = k; i <= n; ++i) {
        const Count term = pow2(n - i) * binomial(n, i);
        total += (k + i) % 2 == 0 ? term : -term;
    }
    return total;
}

Count s(int n, int k) {
    require(k >= 1 && k <= n - 1, "s", n, k, "1 <= k <= n-1");
    return s_formula(n, k);
}

Count m(int n, int k) {
    require(k >= 1 && k <= n - 1, "m", n, k, "1 <= k <= n-1");
    return m_formula(n, k);
}

Count m_prime(int n, int k) {
    require(k >= 1 && k <= n - 1, "m'", n, k, "1 <= k <= n-1");
    return m_prime_formula(n, k);
}

Count bw(int n, int k) {
    require(k >= 3 && k <= n, "bw", n, k, "3 <= k <= n");
    return bw_formula(n, k);
}

Count gr(int n, int k) {
    require(k >= 3 && k <= n, "gr", n, k, "3 <= k <= n");
    return gr_formula(n, k);
}

RecursionReport recursion_check(const std::function<Count(int, int)>& table, int nmax) {
    for (int n = 2; n <= nmax; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            if (table(n, k) != 2 * table(n - 1, k) + table(n - 1, k - 1))
                return {false, n, k};
        }
    }
    return {};
}

std::vector<IdentityReport> verify_identities(int nmax_sm, int nmax_bw) {
    std::vector<IdentityReport> reports;

    auto sweep = [&](const std::string& name, auto&& holds_at, int nmin, int nmax, auto&& krange) {
        IdentityReport report{name, true, -1, -1};
        for (int n = nmin; n <= nmax && report.holds; ++n) {
            const auto [klo, khi] = krange(n);
            for (int k = klo; k <= khi; ++k) {
                if (!holds_at(n, k)) {
                    report = {name, false, n, k};
                    break;
                }
            }
        }
        reports.push_back(std::move(report));
    };

    auto basis_range = [](int n) { return std::pair{1, n - 1}; };
    sweep(
        "s=m", [](int n, int k) { return s(n, k) == m(n, k); }, 2, nmax_sm, basis_range);
    sweep(
        "mprime=binomial", [](int n, int k) { return m_prime(n, k) == binomial(n, k + 1); }, 2,
        nmax_sm, basis_range);

    const auto rec_s = recursion_check(s_formula, nmax_sm);
    reports.push_back(IdentityReport{"s recursion", rec_s.holds, rec_s.n, rec_s.k});
    const auto rec_m = recursion_check(m_formula, nmax_sm);
    reports.push_back(IdentityReport{"m recursion", rec_m.holds, rec_m.n, rec_m.k});

    auto bw_range = [](int n) { return std::pair{3, n}; };
    sweep(
        "gr=bw", [](int n, int k) { return gr(n, k) == bw(n, k); }, 3, nmax_bw, bw_range);
    sweep(
        "bw3=s2", [](int n, int) { return bw(n, 3) == s(n, 2); }, 3, nmax_bw,
        [](int) { return std::pair{3, 3}; });
    sweep(
        "bw4=s3", [](int n, int) { return bw(n, 4) == s(n, 3); }, 4, nmax_bw,
        [](int) { return std::pair{4, 4}; });
    return reports;
}

}  // namespace sphb::counting
