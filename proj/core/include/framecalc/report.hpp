#pragma once

#include "framecalc/manifest.hpp"

#include <string>

namespace framecalc {

/// Structured run report. The JSON document is the source of truth; the text
/// rendering is derived from it, so both carry identical exact values
/// (serialized in the expression grammar) in a deterministic order.
struct Report {
    Json doc;
    bool failed = false; // failed assertions or error sections

    std::string to_json_string() const { return doc.dump(2) + "\n"; }
    std::string to_text() const;
};

} // namespace framecalc
