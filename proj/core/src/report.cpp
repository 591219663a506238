#include "framecalc/report.hpp"

#include <sstream>

namespace framecalc {

namespace {

void render(std::ostream& out, const Json& node, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                render(out, value, indent + 1);
            } else {
                out << pad << key << ": " << (value.is_string() ? value.get<std::string>()
                                                                : value.dump())
                    << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& value : node) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n";
                render(out, value, indent + 1);
            } else {
                out << pad << "- "
                    << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else {
        out << pad << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
    }
}

} // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    render(out, doc, 0);
    return out.str();
}

} // namespace framecalc
