#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "gheights/heights.hpp"

namespace gheights {

using json = nlohmann::json;

/// {"order": n, "table": [[...]], "names": [...]?}
std::shared_ptr<const FiniteGroup> group_from_json(const json& j);
json group_to_json(const FiniteGroup& group);

/// {"denominator": d, "basis": [[...]]}
HNFBasis lattice_from_json(const json& j);
json lattice_to_json(const HNFBasis& basis);

/// Field schema: {"group": {...}, "min_poly": [c0,...,1],
///   "galois": {"generator_images": {"<element index>": [coords...]}},
///   "maximal_order_hint": {"denominator": d, "basis": [[...]]}?}
struct FieldInput {
    FieldPtr field;
    GaloisAction action;
    std::optional<HNFBasis> maximal_order_hint;
};
FieldInput field_from_json(const json& j);

/// Algebra schema: {"split": <group>} or {"field": <field schema>}.
GAlgebra algebra_from_json(const json& j);

/// Pair schema: {"algebra": {...}, "x": ["p/q", ...]}.
Pair pair_from_json(const json& j);
json pair_to_json(const Pair& pair);

json interval_to_json(const RealInterval& iv, int digits);
json height_report_to_json(const HeightReport& report, int digits);

json parse_json_file(const std::filesystem::path& path);

/// Advisory on-disk cache of per-field invariants keyed by a fingerprint of
/// the minimal polynomial and the action. Loaded records are re-verified
/// through the maximal-order hint path, so a cache hit can never change an
/// answer, only skip recomputation.
class FieldCache {
public:
    explicit FieldCache(std::filesystem::path dir);

    Order maximal_order_of(const FieldInput& input);

    static std::string fingerprint(const FieldInput& input);

private:
    std::filesystem::path dir_;
};

/// Order file: {"field": {"min_poly": [...]}, "denominator": d, "basis": [[..]]}.
struct OrderInput {
    FieldPtr field;
    Order order;
};
OrderInput order_from_json(const json& j);

/// Ideal file, interpreted in the field of the accompanying order:
/// {"denominator": d, "basis": [[...]]}.
KLattice ideal_lattice_from_json(const json& j, const FieldPtr& field);

std::string csv_escape(const std::string& s);

}  // namespace gheights
