#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace framecalc {

/// Coordinates admit nonzero partial derivatives; parameters are annihilated
/// by every partial derivative.
enum class SymbolKind { Coordinate, Parameter };

/// A named scalar symbol. Identity, ordering and hashing are all by name; a
/// SymbolContext keeps names unique so equal names always agree on the kind.
class Symbol {
public:
    Symbol(std::string name, SymbolKind kind) : name_(std::move(name)), kind_(kind) {}

    const std::string& name() const { return name_; }
    SymbolKind kind() const { return kind_; }
    bool is_coordinate() const { return kind_ == SymbolKind::Coordinate; }
    bool is_parameter() const { return kind_ == SymbolKind::Parameter; }

    friend bool operator==(const Symbol& a, const Symbol& b) { return a.name_ == b.name_; }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
    friend bool operator<(const Symbol& a, const Symbol& b) { return a.name_ < b.name_; }

private:
    std::string name_;
    SymbolKind kind_;
};

/// Registry that keeps symbol names unique within one manifold context.
/// Identifiers the expression parser has not seen before become parameters.
class SymbolContext {
public:
    /// Declares a coordinate. Throws Error if the name exists as a parameter
    /// or is reserved.
    Symbol coordinate(const std::string& name);

    /// Declares (or returns the existing) parameter of this name.
    Symbol parameter(const std::string& name);

    /// Parser hook: existing symbol, or a fresh parameter.
    Symbol resolve(const std::string& name);

    std::optional<Symbol> find(const std::string& name) const;
    bool is_coordinate(const std::string& name) const;
    std::vector<Symbol> coordinates() const;

private:
    std::map<std::string, Symbol> table_;
};

} // namespace framecalc
