// Spatio-temporal panel data model: tract-year observations, response
// construction on the rate scale, and validation of raw rows into an immutable
// Panel. Missing covariate cells are first-class (NaN) and are never dropped;
// categorical covariates are encoded as level indices against a per-column
// level registry.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spanel/common.hpp"

namespace spanel {

// y = ln(((count + offset) / population) * scale)
struct RateTransform {
    double offset = 0.0001;
    double scale = 1000.0;
};

double build_response(double count, double population, const RateTransform& t = {});

// A raw covariate cell as handed over by the ingestion layer: absent, numeric,
// or a categorical label.
using RawCell = std::variant<std::monostate, double, std::string>;

struct RawRow {
    std::string tract_id;
    int time_slot = 0;  // 1..T
    double response = 0.0;
    std::vector<RawCell> covariates;
};

// Immutable after validation; safe to share across concurrent readers.
struct Panel {
    Matrix X;                       // n x p, NaN = missing, categorical as level index
    std::vector<double> y;          // n
    std::vector<int> slot;          // n, 1..T
    std::vector<int> tract;         // n, 0..C-1 into tract_ids
    std::vector<std::string> tract_ids;        // registry, size C, sorted
    std::vector<std::string> slot_labels;      // size T ("1".."T" unless ingested)
    std::vector<std::string> covariate_names;  // size p
    std::vector<FeatureInfo> features;         // size p
    std::vector<std::vector<std::string>> levels;  // size p; empty for quantitative
    int n = 0;
    int T = 0;
    int C = 0;
    int p = 0;
};

struct ValidateOptions {
    // Force these column indices categorical regardless of cell contents.
    std::vector<int> force_categorical;
    std::vector<std::string> covariate_names;  // optional, else x1..xp
    std::vector<std::string> slot_labels;      // optional, else "1".."T"
    // Fixed encodings (e.g. from a saved model): kinds and level registries to
    // encode against; unseen categorical labels become errors.
    const std::vector<FeatureInfo>* fixed_features = nullptr;
    const std::vector<std::vector<std::string>>* fixed_levels = nullptr;
};

// Checks every Panel invariant: unique (tract, slot) keys, constant covariate
// arity, slots within 1..T, at least one non-missing value per column.
// Covariate kinds are inferred (any non-numeric label makes a column
// categorical) unless fixed by options.
Panel validate_panel(const std::vector<RawRow>& rows, const ValidateOptions& opts = {});

// Inverse of validation, for idempotence checks and file emission.
std::vector<RawRow> panel_to_rows(const Panel& panel);

}  // namespace spanel
