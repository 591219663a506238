#include "framecalc/manifest.hpp"

#include "framecalc/errors.hpp"
#include "framecalc/expr_parser.hpp"

#include <algorithm>

namespace framecalc {

namespace {

void reject_unknown_keys(const Json& obj, const std::vector<std::string>& allowed,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw Error("manifest: unknown key '" + key + "' at " + path);
    }
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw Error("manifest: missing key '" + key + "' at " + path);
    return *it;
}

std::string require_string(const Json& obj, const std::string& key, const std::string& path) {
    const Json& v = require(obj, key, path);
    if (!v.is_string()) throw Error("manifest: '" + key + "' must be a string at " + path);
    return v.get<std::string>();
}

int require_int(const Json& obj, const std::string& key, const std::string& path) {
    const Json& v = require(obj, key, path);
    if (!v.is_number_integer()) throw Error("manifest: '" + key + "' must be an integer at " + path);
    return v.get<int>();
}

// An expression entry may be written as a string or as an exact integer.
std::string entry_string(const Json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error("manifest: expected an expression string at " + path);
}

std::vector<std::vector<std::string>> parse_matrix(const Json& v, int dim,
                                                   const std::string& path) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim)
        throw Error("manifest: " + path + " must be a " + std::to_string(dim) + "x" +
                    std::to_string(dim) + " matrix (row count mismatch)");
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Json& row = v[i];
        const std::string row_path = path + "[" + std::to_string(i + 1) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw Error("manifest: " + row_path + " must have " + std::to_string(dim) +
                        " entries");
        std::vector<std::string> out_row;
        for (std::size_t j = 0; j < row.size(); ++j)
            out_row.push_back(entry_string(row[j], row_path + "[" + std::to_string(j + 1) + "]"));
        out.push_back(std::move(out_row));
    }
    return out;
}

std::string parameter_slot(const Json& obj, const std::string& key, const std::string& path) {
    const Json& v = require(obj, key, path);
    std::string s = entry_string(v, path + "/" + key);
    if (s != "symbolic" && !parse_rational(s))
        throw Error("manifest: '" + key + "' must be \"symbolic\" or an exact rational at " +
                    path);
    return s;
}

} // namespace

const std::vector<std::string>& known_check_ids() {
    static const std::vector<std::string> ids = {"kenmotsu", "identities",
                                                 "star_ricci_consistency"};
    return ids;
}

Manifest parse_manifest(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("manifest: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) throw Error("manifest: top level must be an object");
    reject_unknown_keys(doc,
                        {"name", "dimension", "coordinates", "frame", "metric", "contact",
                         "fields", "soliton", "checks"},
                        "/");

    Manifest m;
    m.name = doc.contains("name") ? require_string(doc, "name", "/") : "manifest";
    m.dimension = require_int(doc, "dimension", "/");
    if (m.dimension <= 0) throw Error("manifest: dimension must be positive");

    const Json& coords = require(doc, "coordinates", "/");
    if (!coords.is_array() || static_cast<int>(coords.size()) != m.dimension)
        throw Error("manifest: /coordinates must list one name per dimension");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].is_string())
            throw Error("manifest: /coordinates[" + std::to_string(i + 1) + "] must be a string");
        m.coordinates.push_back(coords[i].get<std::string>());
    }

    m.frame = parse_matrix(require(doc, "frame", "/"), m.dimension, "/frame");
    if (doc.contains("metric"))
        m.metric = parse_matrix(doc["metric"], m.dimension, "/metric");

    if (doc.contains("contact")) {
        const Json& c = doc["contact"];
        if (!c.is_object()) throw Error("manifest: /contact must be an object");
        reject_unknown_keys(c, {"n", "reeb", "phi"}, "/contact");
        ContactSpec spec;
        spec.n = require_int(c, "n", "/contact");
        spec.reeb = require_int(c, "reeb", "/contact");
        if (2 * spec.n + 1 != m.dimension)
            throw Error("manifest: /contact/n must satisfy dimension = 2n+1");
        if (spec.reeb < 1 || spec.reeb > m.dimension)
            throw Error("manifest: /contact/reeb must be a 1-based frame index");
        spec.phi = parse_matrix(require(c, "phi", "/contact"), m.dimension, "/contact/phi");
        m.contact = std::move(spec);
    }

    if (doc.contains("fields")) {
        const Json& f = doc["fields"];
        if (!f.is_object()) throw Error("manifest: /fields must be an object");
        for (const auto& [name, comps] : f.items()) {
            if (m.contact && name == "zeta")
                throw Error("manifest: field name 'zeta' is reserved for the Reeb field");
            if (!comps.is_array() || static_cast<int>(comps.size()) != m.dimension)
                throw Error("manifest: /fields/" + name + " must list one component per frame "
                            "direction");
            std::vector<std::string> entries;
            for (std::size_t i = 0; i < comps.size(); ++i)
                entries.push_back(
                    entry_string(comps[i], "/fields/" + name + "[" + std::to_string(i + 1) + "]"));
            m.fields.emplace(name, std::move(entries));
        }
    }

    if (doc.contains("soliton")) {
        const Json& s = doc["soliton"];
        if (!s.is_object()) throw Error("manifest: /soliton must be an object");
        reject_unknown_keys(s, {"preset", "field", "kappa", "theta", "omega"}, "/soliton");
        SolitonSpec spec;
        spec.preset_id = require_string(s, "preset", "/soliton");
        if (!is_known_preset(spec.preset_id))
            throw Error("manifest: unknown preset id '" + spec.preset_id + "'");
        spec.field = require_string(s, "field", "/soliton");
        if (s.contains("kappa")) spec.kappa = parameter_slot(s, "kappa", "/soliton");
        spec.theta = parameter_slot(s, "theta", "/soliton");
        spec.omega = parameter_slot(s, "omega", "/soliton");
        m.soliton = std::move(spec);
    }

    if (doc.contains("checks")) {
        const Json& c = doc["checks"];
        if (!c.is_array()) throw Error("manifest: /checks must be an array");
        for (const auto& entry : c) {
            if (!entry.is_string()) throw Error("manifest: /checks entries must be strings");
            const std::string id = entry.get<std::string>();
            const auto& known = known_check_ids();
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw Error("manifest: unknown check id '" + id + "'");
            m.checks.push_back(id);
        }
    }
    return m;
}

Json manifest_to_json(const Manifest& m) {
    Json doc;
    doc["name"] = m.name;
    doc["dimension"] = m.dimension;
    doc["coordinates"] = m.coordinates;
    doc["frame"] = m.frame;
    if (m.metric) doc["metric"] = *m.metric;
    if (m.contact) {
        Json c;
        c["n"] = m.contact->n;
        c["reeb"] = m.contact->reeb;
        c["phi"] = m.contact->phi;
        doc["contact"] = std::move(c);
    }
    if (!m.fields.empty()) {
        Json f;
        for (const auto& [name, comps] : m.fields) f[name] = comps;
        doc["fields"] = std::move(f);
    }
    if (m.soliton) {
        Json s;
        s["preset"] = m.soliton->preset_id;
        s["field"] = m.soliton->field;
        if (m.soliton->kappa) s["kappa"] = *m.soliton->kappa;
        s["theta"] = m.soliton->theta;
        s["omega"] = m.soliton->omega;
        doc["soliton"] = std::move(s);
    }
    if (!m.checks.empty()) doc["checks"] = m.checks;
    return doc;
}

std::string serialize_manifest(const Manifest& m) { return manifest_to_json(m).dump(2) + "\n"; }

namespace {

Expr parse_entry(const std::string& text, SymbolContext& ctx, const std::string& where) {
    try {
        return parse_expr(text, ctx);
    } catch (const ParseError& e) {
        throw Error("manifest: " + where + ": " + e.what());
    }
}

Rational parse_metric_entry(const std::string& text, const std::string& where) {
    auto r = parse_rational(text);
    if (!r) throw Error("manifest: " + where + ": metric entries must be exact rationals");
    return *r;
}

Expr slot_value(const std::string& slot, const std::string& name,
                const std::map<std::string, Rational>& bindings, SymbolContext& ctx) {
    if (slot == "symbolic") {
        auto it = bindings.find(name);
        if (it != bindings.end()) return Expr::from_rational(it->second);
        return Expr::from_symbol(ctx.parameter(name));
    }
    return Expr::from_rational(*parse_rational(slot));
}

} // namespace

Model build_model(const Manifest& manifest, const std::optional<std::string>& preset_override,
                  const std::map<std::string, Rational>& bindings) {
    SymbolContext ctx;
    std::vector<Symbol> chart;
    for (const auto& name : manifest.coordinates) chart.push_back(ctx.coordinate(name));

    const int n = manifest.dimension;
    FrameManifold::ExprMatrix frame(n, std::vector<Expr>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            frame[i][j] = parse_entry(manifest.frame[i][j], ctx,
                                      "frame[" + std::to_string(i + 1) + "][" +
                                          std::to_string(j + 1) + "]");

    std::optional<FrameManifold::RationalMatrix> metric;
    if (manifest.metric) {
        FrameManifold::RationalMatrix hm(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                hm[i][j] = parse_metric_entry((*manifest.metric)[i][j],
                                              "metric[" + std::to_string(i + 1) + "][" +
                                                  std::to_string(j + 1) + "]");
        metric = std::move(hm);
    }

    Model model{std::move(ctx), FrameManifold::from_chart(chart, std::move(frame),
                                                          std::move(metric)),
                std::nullopt, {}, std::nullopt};

    if (manifest.contact) {
        AlmostContactData a;
        a.n = manifest.contact->n;
        a.phi.assign(n, std::vector<Expr>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a.phi[i][j] = parse_entry(manifest.contact->phi[i][j], model.ctx,
                                          "contact/phi[" + std::to_string(i + 1) + "][" +
                                              std::to_string(j + 1) + "]");
        std::vector<Expr> zeta(n), eta(n);
        const int reeb = manifest.contact->reeb - 1;
        zeta[reeb] = Expr::from_int(1);
        for (int i = 0; i < n; ++i)
            eta[i] = Expr::from_rational(model.manifold.metric()[i][reeb]);
        a.zeta = TensorField::vector(std::move(zeta));
        a.eta = TensorField::oneform(std::move(eta));
        model.contact = std::move(a);
        model.fields.emplace("zeta", model.contact->zeta);
    }

    for (const auto& [name, comps] : manifest.fields) {
        std::vector<Expr> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = parse_entry(comps[i], model.ctx,
                               "fields/" + name + "[" + std::to_string(i + 1) + "]");
        model.fields.emplace(name, TensorField::vector(std::move(v)));
    }

    if (manifest.soliton) {
        for (const auto& [name, value] : bindings) {
            (void)value;
            if (name != "kappa" && name != "theta" && name != "omega")
                throw Error("binding '" + name + "' does not name a parameter slot");
        }
        SolitonInstance inst;
        inst.convention = preset(preset_override ? *preset_override
                                                 : manifest.soliton->preset_id);
        inst.field_name = manifest.soliton->field;
        auto it = model.fields.find(inst.field_name);
        if (it == model.fields.end())
            throw Error("manifest: soliton field '" + inst.field_name + "' is not defined");
        inst.v = it->second;
        const bool overridden =
            preset_override && *preset_override != manifest.soliton->preset_id;
        if (inst.convention.kappa_on_lie) {
            if (!manifest.soliton->kappa && !overridden)
                throw Error("manifest: preset '" + inst.convention.id + "' requires a kappa slot");
            inst.kappa = slot_value(manifest.soliton->kappa ? *manifest.soliton->kappa : "symbolic",
                                    "kappa", bindings, model.ctx);
        } else if (manifest.soliton->kappa && !overridden) {
            throw Error("manifest: preset '" + inst.convention.id + "' has no kappa slot");
        }
        inst.theta = slot_value(manifest.soliton->theta, "theta", bindings, model.ctx);
        inst.omega = slot_value(manifest.soliton->omega, "omega", bindings, model.ctx);
        model.instance = std::move(inst);
    } else if (!bindings.empty()) {
        throw Error("bindings require a soliton block");
    }
    return model;
}

} // namespace framecalc
