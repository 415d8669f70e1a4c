#include "spherebasis/decompose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sphb {

namespace {

void require_cycle(const Chain& z, const char* what) {
    const Chain bd = boundary(z);
    if (!bd.empty())
        throw NotACycleError(std::string(what) + ": input is not a cycle; face " +
                             bd.cells().front().text() + " has odd degree");
}

void require_match(const Chain& z, const SphereBasis& basis, const char* what) {
    if (!(z.ambient() == basis.spec.ambient) || z.dim() != basis.spec.k)
        throw std::invalid_argument(std::string(what) +
                                    ": chain does not match the basis skeleton");
}

void verify_resum(const DecompositionResult& result, const SphereBasis& basis, const Chain& z,
                  const char* what) {
    if (!(resum(result, basis) == z))
        throw std::logic_error(std::string(what) +
                               ": internal consistency failure, re-sum differs from input");
}

}  // namespace

Chain resum(const DecompositionResult& result, const SphereBasis& basis) {
    Chain total(basis.spec.ambient, basis.spec.k);
    for (const auto i : result.indices) total += basis.elements.at(i).chain;
    total += result.residual;
    return total;
}

DecompositionResult simplex_decompose(const Chain& z) {
    if (z.family() != Family::simplex)
        throw std::invalid_argument("simplex_decompose needs a simplex chain");
    return simplex_decompose(z, simplex_basis(z.ambient().n, z.dim()));
}

DecompositionResult simplex_decompose(const Chain& z, const SphereBasis& basis) {
    require_match(z, basis, "simplex_decompose");
    require_cycle(z, "simplex_decompose");

    // generator {1} u sigma, indexed by its private face sigma
    std::map<std::string, std::size_t> by_private;
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        by_private[basis.elements[i].private_face.text()] = i;

    DecompositionResult result{{}, Chain(z.ambient(), z.dim()), "cone"};
    for (const auto& sigma : z.cells()) {
        if (sigma.vertices().front() == 1) continue;  // cone cells carry no coefficient
        result.indices.push_back(by_private.at(sigma.text()));
    }
    std::sort(result.indices.begin(), result.indices.end());
    verify_resum(result, basis, z, "simplex_decompose");
    return result;
}

DecompositionResult cube_decompose(const Chain& z) {
    if (z.family() != Family::cube)
        throw std::invalid_argument("cube_decompose needs a cube chain");
    return cube_decompose(z, cube_basis(z.ambient().n, z.dim()));
}

DecompositionResult cube_decompose(const Chain& z, const SphereBasis& basis) {
    require_match(z, basis, "cube_decompose");
    require_cycle(z, "cube_decompose");
    const int k = basis.spec.k;
    const int n = basis.spec.ambient.n;

    DecompositionResult result{{}, z, "peel"};
    for (int level = n; level >= k + 2; --level) {
        // same-level selections are independent: an element's chain contains
        // no other element's private face at its own level
        std::vector<std::size_t> selected;
        for (std::size_t i = 0; i < basis.elements.size(); ++i) {
            const auto& element = basis.elements[i];
            if (element.level == level && result.residual.contains(element.private_face))
                selected.push_back(i);
        }
        for (const auto i : selected) result.residual += basis.elements[i].chain;
        result.indices.insert(result.indices.end(), selected.begin(), selected.end());
    }
    if (!result.residual.empty()) {
        const auto& seed = basis.elements.front();
        if (result.residual == seed.chain) {
            result.indices.push_back(0);
            result.residual += seed.chain;
        } else {
            throw std::logic_error(
                "cube_decompose: internal consistency failure, residual after the "
                "peel is neither empty nor the seed sphere");
        }
    }
    std::sort(result.indices.begin(), result.indices.end());
    verify_resum(result, basis, z, "cube_decompose");
    return result;
}

DecompositionResult oracle_decompose(const Chain& z, const SphereBasis& basis) {
    require_match(z, basis, "oracle_decompose");
    const CellIndex index(basis.spec.ambient, basis.spec.k);
    std::vector<Chain> chains;
    chains.reserve(basis.elements.size());
    for (const auto& element : basis.elements) chains.push_back(element.chain);
    const Gf2Matrix columns = chains_to_columns(chains, index);
    const auto reduction = columns.solve_or_reduce(chain_to_vector(z, index));

    DecompositionResult result{{}, chain_from_vector(reduction.residual, index), "solve"};
    for (std::size_t i = 0; i < reduction.x.size(); ++i)
        if (reduction.x.get(i)) result.indices.push_back(i);
    return result;
}

SurfaceCertificate surface_certificate(const Chain& z) {
    SurfaceCertificate cert;
    if (z.empty() || z.dim() < 1) return cert;
    const CellComplex cx = closure(z);
    cert.closed_surface = true;
    for (const auto& face : cx.cells_of_dim(z.dim() - 1)) {
        int degree = 0;
        for (const auto& up : cofaces(face, z.ambient()))
            if (z.contains(up)) ++degree;
        if (degree != 2) {
            cert.closed_surface = false;
            break;
        }
    }
    cert.connected = cx.is_connected();
    cert.euler = cx.euler_characteristic();
    cert.betti = cx.betti_profile();
    return cert;
}

namespace {

bool is_torus(const SurfaceCertificate& cert) {
    return cert.closed_surface && cert.connected && cert.euler == 0 &&
           cert.betti == std::vector<std::size_t>{1, 2, 1};
}

}  // namespace

TorusReport torus_build() {
    const SphereBasis basis = cube_basis(4, 2);
    const std::size_t count = basis.elements.size();
    Chain all(basis.spec.ambient, 2);
    for (const auto& element : basis.elements) all += element.chain;

    TorusReport report{false,
                       {},
                       Chain(basis.spec.ambient, 2),
                       DecompositionResult{{}, Chain(basis.spec.ambient, 2), "peel"},
                       {},
                       ""};
    auto try_exclusion = [&](std::vector<std::size_t> excluded) {
        Chain z = all;
        for (const auto i : excluded) z += basis.elements[i].chain;
        const SurfaceCertificate cert = surface_certificate(z);
        if (!is_torus(cert)) return false;
        report.excluded = std::move(excluded);
        report.torus = std::move(z);
        report.certificate = cert;
        report.decomposition = cube_decompose(report.torus, basis);
        return true;
    };

    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (try_exclusion({i, j})) {
                report.pair_found = true;
                report.note = "exclusion pair found";
                return report;
            }

    // no 5-element sum is a torus (each is a 2-sphere); fall back to
    // 4-element sums, which do contain the product tori
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            for (std::size_t l = j + 1; l < count; ++l)
                if (try_exclusion({i, j, l})) {
                    report.note =
                        "no exclusion pair yields a torus (all 21 five-element sums are "
                        "2-spheres); returning an exclusion triple instead";
                    return report;
                }

    report.note = "no toroidal sum found among exclusion pairs or triples";
    return report;
}

namespace {

// ball proxy, k = 1: the closure-intersection must be a nontrivial simple path
bool is_nontrivial_simple_path(const CellComplex& cx) {
    const auto edges = cx.cells_of_dim(1);
    const auto verts = cx.cells_of_dim(0);
    if (edges.empty()) return false;
    if (cx.dim() != 1) return false;
    if (verts.size() != edges.size() + 1) return false;  // tree condition
    if (!cx.is_connected()) return false;
    // degree <= 2 at every vertex
    std::map<std::string, int> degree;
    for (const auto& edge : edges)
        for (const auto& end : faces(edge, 0)) ++degree[end.text()];
    for (const auto& [text, d] : degree)
        if (d > 2) return false;
    return true;
}

// ball proxy, k >= 2: pure k-dimensional, connected, positive-degree Z2 Betti
// zero, and greedily collapsible to a single vertex
bool collapses_to_point(CellComplex cx) {
    while (true) {
        if (cx.size() == 1 && cx.dim() == 0) return true;
        // find a free face: a cell with exactly one proper coface in cx
        bool collapsed = false;
        const auto& cells = cx.cells();
        for (const auto& cell : cells) {
            const Cell* unique_coface = nullptr;
            int count = 0;
            for (const auto& other : cells) {
                if (other.dim() != cell.dim() + 1) continue;
                const auto lower = faces(other, cell.dim());
                if (std::binary_search(lower.begin(), lower.end(), cell)) {
                    ++count;
                    unique_coface = &other;
                    if (count > 1) break;
                }
            }
            if (count == 1) {
                std::vector<Cell> rest;
                rest.reserve(cells.size() - 2);
                for (const auto& keep : cells)
                    if (!(keep == cell) && !(keep == *unique_coface)) rest.push_back(keep);
                cx = CellComplex(cx.ambient(), std::move(rest));
                collapsed = true;
                break;
            }
        }
        if (!collapsed) return false;
    }
}

bool ball_proxy(const CellComplex& cx, int k) {
    if (cx.empty()) return false;
    if (k == 1) return is_nontrivial_simple_path(cx);
    // pure of dimension k
    if (cx.dim() != k) return false;
    for (const auto& cell : cx.cells()) {
        if (cell.dim() == k) continue;
        bool has_coface = false;
        for (const auto& top : cx.cells_of_dim(cell.dim() + 1)) {
            const auto lower = faces(top, cell.dim());
            if (std::binary_search(lower.begin(), lower.end(), cell)) {
                has_coface = true;
                break;
            }
        }
        if (!has_coface) return false;
    }
    if (!cx.is_connected()) return false;
    const auto profile = cx.betti_profile();
    for (std::size_t ell = 1; ell < profile.size(); ++ell)
        if (profile[ell] != 0) return false;
    return collapses_to_point(cx);
}

struct OrderSearch {
    const SphereBasis& basis;
    int k;
    std::size_t budget;
    std::size_t nodes = 0;
    bool exhausted = true;
    std::vector<std::size_t> ordering;

    bool extend(const Chain& partial, const CellComplex& partial_closure,
                std::vector<std::size_t>& chosen, std::vector<std::size_t>& remaining) {
        if (remaining.empty()) {
            ordering = chosen;
            return true;
        }
        for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
            if (nodes >= budget) {
                exhausted = false;
                return false;
            }
            ++nodes;
            const std::size_t idx = remaining[pos];
            const auto& element = basis.elements[idx];
            if (!chosen.empty()) {
                const CellComplex meet =
                    intersect(closure(element.chain), partial_closure);
                if (!ball_proxy(meet, k)) continue;
            }
            Chain next = partial;
            next += element.chain;
            if (!is_cycle(next))
                throw std::logic_error("connected_sum_order: partial sum is not a cycle");
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
            chosen.push_back(idx);
            if (extend(next, closure(next), chosen, remaining)) return true;
            chosen.pop_back();
            remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(pos), idx);
        }
        return false;
    }
};

}  // namespace

OrderResult connected_sum_order(const Chain& z, const std::vector<std::size_t>& indices,
                                const SphereBasis& basis, std::size_t node_budget) {
    Chain total(basis.spec.ambient, basis.spec.k);
    for (const auto i : indices) total += basis.elements.at(i).chain;
    if (!(total == z))
        throw std::invalid_argument("connected_sum_order: indices do not sum to z");

    std::vector<std::size_t> remaining = indices;
    std::sort(remaining.begin(), remaining.end());  // ascending tie-break
    std::vector<std::size_t> chosen;
    OrderSearch search{basis, basis.spec.k, node_budget, 0, true, {}};
    const Chain empty(basis.spec.ambient, basis.spec.k);
    OrderResult result;
    if (search.extend(empty, CellComplex(basis.spec.ambient, {}), chosen, remaining)) {
        result.outcome = OrderOutcome::ordered;
        result.ordering = search.ordering;
    } else {
        result.outcome =
            search.exhausted ? OrderOutcome::none_found : OrderOutcome::inconclusive;
    }
    result.nodes = search.nodes;
    return result;
}

RobustReport robust_check_all(int n, std::size_t node_budget) {
    constexpr int kMaxN = 5;
    if (n < 2 || n > kMaxN)
        throw std::domain_error("robust_check_all supports 2 <= n <= " + std::to_string(kMaxN) +
                                " (circuit counts of larger complete graphs are impractical)");
    const SphereBasis basis = simplex_basis(n, 1);
    const Ambient ambient = basis.spec.ambient;

    // every nonzero element of the cycle space, filtered to simple circuits
    // (connected, every vertex of degree exactly 2)
    RobustReport report;
    report.n = n;
    const std::size_t dim = basis.elements.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << dim); ++mask) {
        Chain z(ambient, 1);
        for (std::size_t i = 0; i < dim; ++i)
            if (mask >> i & 1) z += basis.elements[i].chain;
        if (z.empty()) continue;

        const CellComplex cx = closure(z);
        std::map<std::string, int> degree;
        for (const auto& edge : z.cells())
            for (const auto& end : faces(edge, 0)) ++degree[end.text()];
        bool circuit = cx.is_connected();
        for (const auto& [text, d] : degree)
            if (d != 2) circuit = false;
        if (!circuit) continue;

        ++report.circuits;
        const DecompositionResult decomposition = simplex_decompose(z, basis);
        const OrderResult order =
            connected_sum_order(z, decomposition.indices, basis, node_budget);
        switch (order.outcome) {
            case OrderOutcome::ordered: ++report.verified; break;
            case OrderOutcome::none_found: ++report.failed; break;
            case OrderOutcome::inconclusive: ++report.inconclusive; break;
        }
    }
    return report;
}

}  // namespace sphb
