#include "framecalc/builtins.hpp"

#include "framecalc/errors.hpp"

namespace framecalc {

namespace {

Manifest make_kenmotsu5() {
    Manifest m;
    m.name = "kenmotsu5";
    m.dimension = 5;
    m.coordinates = {"x1", "x2", "x3", "x4", "x5"};
    m.frame = {
        {"exp(-x5)", "0", "0", "0", "0"},
        {"0", "exp(-x5)", "0", "0", "0"},
        {"0", "0", "exp(-x5)", "0", "0"},
        {"0", "0", "0", "exp(-x5)", "0"},
        {"0", "0", "0", "0", "1"},
    };
    ContactSpec c;
    c.n = 2;
    c.reeb = 5;
    c.phi = {
        {"0", "0", "1", "0", "0"},
        {"0", "0", "0", "1", "0"},
        {"-1", "0", "0", "0", "0"},
        {"0", "-1", "0", "0", "0"},
        {"0", "0", "0", "0", "0"},
    };
    m.contact = std::move(c);
    m.fields["V"] = {"x1*exp(x5)", "x2*exp(x5)", "x3*exp(x5)", "x4*exp(x5)", "1"};
    SolitonSpec s;
    s.preset_id = "STAR_KAPPA_RBS_1_9";
    s.field = "V";
    s.kappa = "symbolic";
    s.theta = "symbolic";
    s.omega = "symbolic";
    m.soliton = std::move(s);
    m.checks = {"kenmotsu", "identities", "star_ricci_consistency"};
    return m;
}

Manifest make_kenmotsu3() {
    Manifest m;
    m.name = "kenmotsu3";
    m.dimension = 3;
    m.coordinates = {"x1", "x2", "x3"};
    m.frame = {
        {"exp(-x3)", "0", "0"},
        {"0", "exp(-x3)", "0"},
        {"0", "0", "1"},
    };
    ContactSpec c;
    c.n = 1;
    c.reeb = 3;
    c.phi = {
        {"0", "1", "0"},
        {"-1", "0", "0"},
        {"0", "0", "0"},
    };
    m.contact = std::move(c);
    m.fields["V"] = {"x1*exp(x3)", "x2*exp(x3)", "1"};
    SolitonSpec s;
    s.preset_id = "STAR_KAPPA_RBS_1_9";
    s.field = "V";
    s.kappa = "symbolic";
    s.theta = "symbolic";
    s.omega = "symbolic";
    m.soliton = std::move(s);
    m.checks = {"kenmotsu", "identities", "star_ricci_consistency"};
    return m;
}

Manifest make_euclidean3() {
    Manifest m;
    m.name = "euclidean3";
    m.dimension = 3;
    m.coordinates = {"x1", "x2", "x3"};
    m.frame = {
        {"1", "0", "0"},
        {"0", "1", "0"},
        {"0", "0", "1"},
    };
    // A formal contact structure: the algebraic axioms hold, the covariant
    // derivative conditions do not (flat space is not Kenmotsu).
    ContactSpec c;
    c.n = 1;
    c.reeb = 3;
    c.phi = {
        {"0", "1", "0"},
        {"-1", "0", "0"},
        {"0", "0", "0"},
    };
    m.contact = std::move(c);
    m.fields["radial"] = {"x1", "x2", "x3"};
    m.fields["parallel"] = {"1", "0", "0"};
    return m;
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"kenmotsu5", "kenmotsu3", "euclidean3"};
    return names;
}

Manifest builtin(const std::string& name) {
    if (name == "kenmotsu5") return make_kenmotsu5();
    if (name == "kenmotsu3") return make_kenmotsu3();
    if (name == "euclidean3") return make_euclidean3();
    throw Error("unknown builtin manifest '" + name + "'");
}

} // namespace framecalc
