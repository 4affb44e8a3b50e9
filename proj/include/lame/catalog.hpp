#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lame/curve.hpp"

namespace lame {

/// One result-table row: a labeled curve, its ramification index, the
/// expected accessory parameter (when known), and the squares of the target
/// trace triple. Rows with doubtful source data carry the
/// "unverified-transcription" flag and are excluded from hard gates.
struct CatalogEntry {
    std::string label;
    int e = 0;
    WeierstrassCurve curve;
    std::optional<AlgebraicNumber> expected_C;
    std::array<AlgebraicNumber, 3> target_squares;
    std::set<std::string> flags;

    bool flagged() const { return flags.count("unverified-transcription") > 0; }
    bool complex_C() const { return flags.count("complex-C") > 0; }
    std::array<BigFloat, 3> targets_at(const PrecisionContext& ctx) const;
};

/// Loads and validates the catalog. Invariants checked per row: e in
/// {3,4,5,6,7,9,11}; for non-flagged rows the target squares must evaluate
/// to positive reals. Throws SchemaError naming the offending row.
std::vector<CatalogEntry> load_catalog(const std::string& path);
CatalogEntry entry_from_json(const nlohmann::json& j);
nlohmann::json entry_to_json(const CatalogEntry& e);

/// All entries with the given label (labels repeat across ramification
/// indices); restricted to one index when e > 0.
std::vector<const CatalogEntry*> find_entries(const std::vector<CatalogEntry>& catalog,
                                              const std::string& label, int e = 0);

/// |x^2+y^2+z^2 - xyz - (2 - 2cos(pi/e))| for the positive square roots
/// x, y, z of the target squares.
BigFloat fricke_check(const CatalogEntry& entry, const PrecisionContext& ctx);

/// Path of the bundled catalog: $LAME_DATA_DIR/catalog.json when the
/// environment variable is set, else ./data/catalog.json.
std::string default_catalog_path();

} // namespace lame
