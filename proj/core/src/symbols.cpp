#include "framecalc/symbols.hpp"

#include "framecalc/errors.hpp"

namespace framecalc {

namespace {
bool reserved(const std::string& name) { return name == "exp"; }
} // namespace

Symbol SymbolContext::coordinate(const std::string& name) {
    if (reserved(name)) throw Error("'" + name + "' is reserved and cannot name a symbol");
    auto it = table_.find(name);
    if (it != table_.end()) {
        if (!it->second.is_coordinate())
            throw Error("symbol '" + name + "' already declared as a parameter");
        return it->second;
    }
    Symbol s(name, SymbolKind::Coordinate);
    table_.emplace(name, s);
    return s;
}

Symbol SymbolContext::parameter(const std::string& name) {
    if (reserved(name)) throw Error("'" + name + "' is reserved and cannot name a symbol");
    auto it = table_.find(name);
    if (it != table_.end()) {
        if (!it->second.is_parameter())
            throw Error("symbol '" + name + "' already declared as a coordinate");
        return it->second;
    }
    Symbol s(name, SymbolKind::Parameter);
    table_.emplace(name, s);
    return s;
}

Symbol SymbolContext::resolve(const std::string& name) {
    auto it = table_.find(name);
    if (it != table_.end()) return it->second;
    return parameter(name);
}

std::optional<Symbol> SymbolContext::find(const std::string& name) const {
    auto it = table_.find(name);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

bool SymbolContext::is_coordinate(const std::string& name) const {
    auto s = find(name);
    return s && s->is_coordinate();
}

std::vector<Symbol> SymbolContext::coordinates() const {
    std::vector<Symbol> out;
    for (const auto& [name, sym] : table_)
        if (sym.is_coordinate()) out.push_back(sym);
    return out;
}

} // namespace framecalc
