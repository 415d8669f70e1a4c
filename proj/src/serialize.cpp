#include "spherebasis/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphb::io {

namespace {

Ambient ambient_from_json(const json& j) {
    return Ambient{family_from_string(j.at("family").get<std::string>()), j.at("n").get<int>()};
}

std::string outcome_name(OrderOutcome outcome) {
    switch (outcome) {
        case OrderOutcome::ordered: return "ordered";
        case OrderOutcome::none_found: return "none_found";
        case OrderOutcome::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::string hex16(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (const char c : data) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

json cell_to_json(const Cell& cell) {
    if (cell.family() == Family::cube) return cell.word();
    return json(cell.vertices());
}

Cell cell_from_json(const json& j, const Ambient& ambient) {
    if (ambient.family == Family::cube) {
        if (!j.is_string()) throw std::invalid_argument("cube cell JSON must be a string");
        return parse_cell(j.get<std::string>(), ambient);
    }
    if (!j.is_array()) throw std::invalid_argument("simplex cell JSON must be an array");
    const Cell cell = Cell::simplex(j.get<std::vector<int>>());
    if (!belongs_to(cell, ambient))
        throw std::invalid_argument("cell " + cell.text() + " does not live in the ambient");
    return cell;
}

json chain_to_json(const Chain& chain) {
    json cells = json::array();
    for (const auto& cell : chain.cells()) cells.push_back(cell_to_json(cell));
    return json{{"family", to_string(chain.family())},
                {"n", chain.ambient().n},
                {"k", chain.dim()},
                {"cells", std::move(cells)}};
}

Chain chain_from_json(const json& j) {
    const Ambient ambient = ambient_from_json(j);
    const int k = j.at("k").get<int>();
    std::vector<Cell> cells;
    for (const auto& item : j.at("cells")) cells.push_back(cell_from_json(item, ambient));
    return Chain::from_cells(ambient, k, std::move(cells));
}

json basis_to_json(const SphereBasis& basis) {
    json elements = json::array();
    for (const auto& element : basis.elements) {
        json cells = json::array();
        for (const auto& cell : element.chain.cells()) cells.push_back(cell_to_json(cell));
        elements.push_back(json{{"generator", cell_to_json(element.generator)},
                                {"level", element.level},
                                {"private_face", cell_to_json(element.private_face)},
                                {"cells", std::move(cells)}});
    }
    return json{{"family", to_string(basis.spec.ambient.family)},
                {"n", basis.spec.ambient.n},
                {"k", basis.spec.k},
                {"elements", std::move(elements)}};
}

SphereBasis basis_from_json(const json& j) {
    const Ambient ambient = ambient_from_json(j);
    const int k = j.at("k").get<int>();
    if (k < 1 || k > ambient.n - 1)
        throw std::invalid_argument("basis JSON has k out of range");
    SphereBasis basis{SkeletonSpec{ambient, k}, {}};
    for (const auto& item : j.at("elements")) {
        const Cell generator = cell_from_json(item.at("generator"), ambient);
        const Cell private_face = cell_from_json(item.at("private_face"), ambient);
        std::vector<Cell> cells;
        for (const auto& c : item.at("cells")) cells.push_back(cell_from_json(c, ambient));
        Chain chain = Chain::from_cells(ambient, k, std::move(cells));
        if (!(chain == boundary(Chain::from_sorted(ambient, k + 1, {generator}))))
            throw std::invalid_argument("basis JSON corrupt: element chain is not the "
                                        "boundary of its generator " +
                                        generator.text());
        if (!chain.contains(private_face))
            throw std::invalid_argument("basis JSON corrupt: private face " +
                                        private_face.text() + " is not in its element chain");
        basis.elements.push_back(BasisElement{generator, private_face,
                                              item.at("level").get<int>(), std::move(chain)});
    }
    return basis;
}

std::string basis_file_dump(const SphereBasis& basis) {
    json core = basis_to_json(basis);
    const std::string payload = core.dump();
    core["content_hash"] = "fnv1a64:" + hex16(fnv1a64(payload));
    return core.dump(2) + "\n";
}

SphereBasis basis_file_load(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("content_hash"))
        throw std::invalid_argument("basis file has no content_hash");
    const std::string stored = j.at("content_hash").get<std::string>();
    j.erase("content_hash");
    const std::string expected = "fnv1a64:" + hex16(fnv1a64(j.dump()));
    if (stored != expected)
        throw std::invalid_argument("basis file content_hash mismatch (stored " + stored +
                                    ", computed " + expected + ")");
    return basis_from_json(j);
}

json decomposition_to_json(const DecompositionResult& result) {
    return json{{"indices", result.indices},
                {"method", result.method},
                {"residual", chain_to_json(result.residual)}};
}

json certificate_to_json(const SurfaceCertificate& cert) {
    return json{{"closed_surface", cert.closed_surface},
                {"connected", cert.connected},
                {"euler", cert.euler},
                {"betti", cert.betti}};
}

json torus_report_to_json(const TorusReport& report) {
    return json{{"pair_found", report.pair_found},
                {"excluded", report.excluded},
                {"torus", chain_to_json(report.torus)},
                {"decomposition", decomposition_to_json(report.decomposition)},
                {"certificate", certificate_to_json(report.certificate)},
                {"note", report.note}};
}

json order_result_to_json(const OrderResult& result) {
    return json{{"outcome", outcome_name(result.outcome)},
                {"ordering", result.ordering},
                {"nodes", result.nodes}};
}

json robust_report_to_json(const RobustReport& report) {
    return json{{"n", report.n},
                {"circuits", report.circuits},
                {"verified", report.verified},
                {"failed", report.failed},
                {"inconclusive", report.inconclusive}};
}

json tree_report_to_json(const TreeCheckReport& report) {
    return json{{"family", to_string(report.spec.ambient.family)},
                {"n", report.spec.ambient.n},
                {"k", report.spec.k},
                {"facet_count", report.facet_count},
                {"boundary_rank", report.boundary_rank},
                {"independent", report.independent},
                {"verdict", report.verdict},
                {"z2_analog_only", report.z2_analog_only}};
}

json identity_report_to_json(const counting::IdentityReport& report) {
    json j{{"name", report.name}, {"holds", report.holds}};
    if (!report.holds) {
        j["n"] = report.n;
        j["k"] = report.k;
    }
    return j;
}

std::string off_export(const Chain& z) {
    if (z.family() != Family::cube || z.dim() != 2 || z.empty())
        throw std::invalid_argument("off_export needs a nonempty 2-chain in a cube");
    const int n = z.ambient().n;
    const CellComplex cx = closure(z);
    const auto verts = cx.cells_of_dim(0);
    const auto f = cx.f_vector();

    auto vertex_index = [&](const std::string& word) {
        const auto it = std::lower_bound(verts.begin(), verts.end(), Cell::cube(word));
        return static_cast<std::size_t>(it - verts.begin());
    };

    std::string out = "nOFF " + std::to_string(n) + "\n";
    out += std::to_string(f[0]) + " " + std::to_string(f[2]) + " " + std::to_string(f[1]) + "\n";
    for (const auto& v : verts) {
        const auto& w = v.word();
        for (int i = 0; i < n; ++i) {
            if (i > 0) out += ' ';
            out += w[static_cast<std::size_t>(i)];
        }
        out += '\n';
    }
    for (const auto& square : z.cells()) {
        const auto& w = square.word();
        const std::size_t p = w.find('*');
        const std::size_t q = w.find('*', p + 1);
        // cyclic corner order (0,0) (1,0) (1,1) (0,1) at the star positions
        const char corners[4][2] = {{'0', '0'}, {'1', '0'}, {'1', '1'}, {'0', '1'}};
        out += '4';
        for (const auto& corner : corners) {
            std::string vertex = w;
            vertex[p] = corner[0];
            vertex[q] = corner[1];
            out += ' ';
            out += std::to_string(vertex_index(vertex));
        }
        out += '\n';
    }
    return out;
}

}  // namespace sphb::io
