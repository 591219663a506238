#pragma once

#include "framecalc/soliton.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace framecalc {

using Json = nlohmann::ordered_json;

/// Soliton block of a manifest. Parameter slots hold "symbolic" or an exact
/// rational literal.
struct SolitonSpec {
    std::string preset_id;
    std::string field;
    std::optional<std::string> kappa;
    std::string theta = "symbolic";
    std::string omega = "symbolic";
};

struct ContactSpec {
    int n = 0;
    int reeb = 0; // 1-based frame index of the Reeb field
    std::vector<std::vector<std::string>> phi;
};

/// Validated manifest document. Expression values stay as strings in the
/// expression grammar until a model is built from them.
struct Manifest {
    std::string name;
    int dimension = 0;
    std::vector<std::string> coordinates;
    std::vector<std::vector<std::string>> frame;
    std::optional<std::vector<std::vector<std::string>>> metric;
    std::optional<ContactSpec> contact;
    std::map<std::string, std::vector<std::string>> fields;
    std::optional<SolitonSpec> soliton;
    std::vector<std::string> checks;
};

/// Check identifiers a manifest may assert; a failed assertion fails the run.
const std::vector<std::string>& known_check_ids();

/// Parses and validates a manifest document. Unknown keys, malformed shapes,
/// unknown presets and unknown check ids are rejected; errors carry the JSON
/// path or byte position.
Manifest parse_manifest(const std::string& text);

Json manifest_to_json(const Manifest& manifest);
std::string serialize_manifest(const Manifest& manifest);

/// The geometric objects a manifest denotes.
struct Model {
    SymbolContext ctx;
    FrameManifold manifold;
    std::optional<AlmostContactData> contact;
    std::map<std::string, TensorField> fields; // includes "zeta" when contact is present
    std::optional<SolitonInstance> instance;
};

/// Builds the model, parsing every expression entry. `preset_override`
/// replaces the manifest's preset id; `bindings` give rational values to
/// symbolic parameter slots (kappa/theta/omega).
Model build_model(const Manifest& manifest, const std::optional<std::string>& preset_override = {},
                  const std::map<std::string, Rational>& bindings = {});

} // namespace framecalc
