#pragma once
// JSON codecs for every domain object, the hashed basis cache file format,
// and OFF-style surface export.

#include <json.hpp>
#include <string>

#include "spherebasis/bases.hpp"
#include "spherebasis/complex.hpp"
#include "spherebasis/conjectures.hpp"
#include "spherebasis/counting.hpp"
#include "spherebasis/decompose.hpp"

namespace sphb::io {

using json = nlohmann::json;

// Cube cells serialize as their word strings, simplex cells as arrays of
// vertex numbers.
json cell_to_json(const Cell& cell);
Cell cell_from_json(const json& j, const Ambient& ambient);

// {family, n, k, cells: [...]}
json chain_to_json(const Chain& chain);
Chain chain_from_json(const json& j);

// {family, n, k, elements: [{generator, level, private_face, cells}, ...]}
json basis_to_json(const SphereBasis& basis);
SphereBasis basis_from_json(const json& j);  // revalidates every element

// Basis cache file: the basis JSON plus a content_hash ("fnv1a64:<hex>") over
// the canonical dump of the rest. load throws on any hash mismatch.
std::string basis_file_dump(const SphereBasis& basis);
SphereBasis basis_file_load(const std::string& text);

// 64-bit FNV-1a, as used by the basis cache.
std::uint64_t fnv1a64(std::string_view data);

json decomposition_to_json(const DecompositionResult& result);
json certificate_to_json(const SurfaceCertificate& cert);
json torus_report_to_json(const TorusReport& report);
json order_result_to_json(const OrderResult& result);
json robust_report_to_json(const RobustReport& report);
json tree_report_to_json(const TreeCheckReport& report);
json identity_report_to_json(const counting::IdentityReport& report);

// OFF-style text for a 2-chain in a cube: "nOFF <n>" header, vertex count /
// face count / edge count, vertices as 0/1 coordinate rows, squares as
// cyclically ordered quads.
std::string off_export(const Chain& z);

}  // namespace sphb::io
