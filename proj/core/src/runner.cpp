#include "framecalc/runner.hpp"

#include "framecalc/errors.hpp"

#include <algorithm>

namespace framecalc {

namespace {

constexpr int kResidualListCap = 12;

std::string basis_name(int i) { return "e" + std::to_string(i + 1); }

Json axiom_json(const AxiomCheck& check) {
    Json out;
    out["id"] = check.id;
    out["description"] = check.description;
    out["holds"] = check.holds;
    if (!check.nonzero.empty()) {
        Json list = Json::array();
        const int total = static_cast<int>(check.nonzero.size());
        for (int i = 0; i < total && i < kResidualListCap; ++i) list.push_back(check.nonzero[i]);
        out["residuals"] = std::move(list);
        out["residual_count"] = total;
    }
    return out;
}

Json matrix_json(const TensorField& t) {
    Json rows = Json::array();
    for (int i = 0; i < t.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < t.dim(); ++j) row.push_back(to_string(t.at({i, j})));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json structure_json(const StructureReport& report) {
    Json out;
    out["kenmotsu"] = report.kenmotsu;
    out["nabla_phi_variant_holds"] = report.nabla_phi_variant_holds;
    Json axioms = Json::array();
    for (const auto& ax : report.axioms) axioms.push_back(axiom_json(ax));
    out["axioms"] = std::move(axioms);
    return out;
}

Json identities_json(const IdentitySuiteReport& report) {
    Json out;
    out["informational"] = report.informational;
    out["all_hold"] = report.all_hold();
    Json results = Json::array();
    for (const auto& r : report.results) results.push_back(axiom_json(r));
    out["results"] = std::move(results);
    return out;
}

Json curvature_json(const Model& model, const GeometryData& geo) {
    const FrameManifold& m = model.manifold;
    const int n = m.dim();
    Json out;

    Json brackets = Json::array();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Expr> comps(n);
            for (int k = 0; k < n; ++k) comps[k] = geo.c.at(i, j, k);
            TensorField v = TensorField::vector(comps);
            if (v.is_zero()) continue;
            brackets.push_back("[" + basis_name(i) + "," + basis_name(j) + "] = " +
                               vector_to_string(v));
        }
    out["structure_functions"] = std::move(brackets);

    Json connection = Json::array();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Expr> comps(n);
            for (int k = 0; k < n; ++k) comps[k] = geo.conn.at(i, j, k);
            connection.push_back("nabla_" + basis_name(i) + " " + basis_name(j) + " = " +
                                 vector_to_string(TensorField::vector(comps)));
        }
    out["connection"] = std::move(connection);

    Json riem = Json::array();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::vector<Expr> comps(n);
                for (int l = 0; l < n; ++l) comps[l] = geo.riem.at({i, j, k, l});
                TensorField v = TensorField::vector(comps);
                if (v.is_zero()) continue;
                riem.push_back("R(" + basis_name(i) + "," + basis_name(j) + ")" + basis_name(k) +
                               " = " + vector_to_string(v));
            }
    out["riemann_nonzero"] = std::move(riem);

    out["ricci"] = matrix_json(geo.ric);
    out["scalar"] = to_string(geo.scalar);

    if (model.contact) {
        const AlmostContactData& a = *model.contact;
        TensorField direct = star_ricci_direct(m, a, geo.riem);
        TensorField shifted = star_ricci_formula(m, a, geo.ric);
        StarScalarResult ss = star_scalar(m, a, direct, geo.scalar);
        Json star;
        star["matrix"] = matrix_json(direct);
        star["routes_agree"] = direct == shifted;
        star["trace"] = to_string(ss.trace);
        star["scalar_shift"] = to_string(ss.scalar_shift);
        star["trace_equals_scalar_shift"] = ss.trace == ss.scalar_shift;
        out["star"] = std::move(star);
    }
    return out;
}

Json fields_json(const Model& model, const GeometryData& geo) {
    Json out;
    for (const auto& [name, v] : model.fields) {
        Json f;
        Json comps = Json::array();
        for (int i = 0; i < model.manifold.dim(); ++i) comps.push_back(to_string(v.at({i})));
        f["components"] = std::move(comps);
        TensorField lie = lie_derivative_metric(model.manifold, geo.conn, v);
        f["lie_derivative"] = matrix_json(lie);
        f["lie_trace"] = to_string(metric_trace(model.manifold, lie));
        f["divergence"] = to_string(divergence(model.manifold, geo.conn, v));
        out[name] = std::move(f);
    }
    return out;
}

bool omega_is_symbolic(const Expr& omega) {
    return omega.terms().size() == 1 && omega.terms()[0].coeff == 1 &&
           omega.terms()[0].expo.empty() && omega.terms()[0].powers.size() == 1 &&
           omega.terms()[0].powers.begin()->second == 1 &&
           omega.terms()[0].powers.begin()->first.is_parameter();
}

Json omega_json(const Model& model, const OmegaSolution& sol) {
    Json out;
    out["omega"] = to_string(sol.omega);
    out["equation"] = sol.equation;
    out["sign"] = to_string(classify_sign(sol.omega));
    if (auto theta = model.ctx.find("theta"); theta && theta->is_parameter() &&
                                              sol.omega.contains(*theta)) {
        Json specials = Json::array();
        for (long long tv : {0LL, 1LL, 2LL}) {
            Json s;
            s["theta"] = std::to_string(tv);
            Expr value = subst(sol.omega, *theta, Expr::from_int(tv));
            s["omega"] = to_string(value);
            s["sign"] = to_string(classify_sign(value));
            specials.push_back(std::move(s));
        }
        out["specializations"] = std::move(specials);
    }
    return out;
}

Json soliton_json(const Model& model, const GeometryData& geo, bool kenmotsu, bool& failed) {
    Json out;
    if (!model.instance) {
        out["error"] = "manifest has no soliton block";
        failed = true;
        return out;
    }
    const SolitonInstance& inst = *model.instance;
    const AlmostContactData* contact = model.contact ? &*model.contact : nullptr;
    out["preset"] = inst.convention.id;
    out["formula"] = inst.convention.formula();
    if (!inst.convention.notes.empty()) out["notes"] = inst.convention.notes;
    out["field"] = inst.field_name;
    Json params;
    if (inst.kappa) params["kappa"] = to_string(*inst.kappa);
    params["theta"] = to_string(inst.theta);
    params["omega"] = to_string(inst.omega);
    out["parameters"] = std::move(params);

    TensorField residual = soliton_residual(model.manifold, geo, contact, inst);
    out["residual"] = matrix_json(residual);
    out["residual_zero"] = residual.is_zero();

    if (omega_is_symbolic(inst.omega)) {
        OmegaSolution trace = solve_omega_trace(model.manifold, geo, contact, inst);
        out["trace"] = omega_json(model, trace);
        SolitonInstance at_solution = inst;
        at_solution.omega = trace.omega;
        TensorField res_solved = soliton_residual(model.manifold, geo, contact, at_solution);
        out["residual_at_trace_solution_zero"] = res_solved.is_zero();
        out["residual_trace_at_solution_zero"] =
            metric_trace(model.manifold, res_solved).is_zero();

        if (contact && kenmotsu && inst.v == contact->zeta)
            out["reeb"] = omega_json(model, solve_omega_reeb(model.manifold, geo, *contact, inst));

        Json variants = Json::array();
        for (const auto& conv : preset_registry()) {
            if (conv.variant_of != inst.convention.id) continue;
            SolitonInstance alt = inst;
            alt.convention = conv;
            Json v;
            v["preset"] = conv.id;
            v["formula"] = conv.formula();
            v["notes"] = conv.notes;
            v["trace"] = omega_json(model, solve_omega_trace(model.manifold, geo, contact, alt));
            if (contact && kenmotsu && inst.v == contact->zeta)
                v["reeb"] =
                    omega_json(model, solve_omega_reeb(model.manifold, geo, *contact, alt));
            variants.push_back(std::move(v));
        }
        if (!variants.empty()) out["variants"] = std::move(variants);
    } else {
        out["trace"] = Json{{"note", "omega is bound; nothing to solve"}};
    }
    return out;
}

Json torse_json(const TorseFormingCertificate& cert) {
    Json out;
    out["subtype"] = to_string(cert.subtype);
    if (cert.subtype != TorseSubtype::NotTorseForming) {
        out["psi"] = to_string(cert.psi);
        Json theta = Json::array();
        for (int i = 0; i < cert.theta_form.dim(); ++i)
            theta.push_back(to_string(cert.theta_form.at({i})));
        out["theta_form"] = std::move(theta);
        out["theta_of_field"] = to_string(cert.theta_of_v);
    }
    return out;
}

Json classification_json(const Model& model, const GeometryData& geo,
                         const std::string& only_field, bool& failed) {
    Json out;
    if (model.contact) {
        auto cert = eta_einstein(model.manifold, geo, *model.contact);
        Json ee;
        ee["exists"] = cert.has_value();
        if (cert) {
            ee["alpha"] = to_string(cert->alpha);
            ee["beta"] = to_string(cert->beta);
            ee["einstein"] = cert->einstein;
        }
        out["eta_einstein"] = std::move(ee);
    }
    Json fields;
    bool matched = false;
    for (const auto& [name, v] : model.fields) {
        if (!only_field.empty() && name != only_field) continue;
        matched = true;
        Json f;
        try {
            f["torse_forming"] = torse_json(classify_torse_forming(model.manifold, geo, v));
        } catch (const InconclusiveError& e) {
            f["torse_forming"] = Json{{"inconclusive", e.what()}};
        }
        ConformalKillingCertificate ck = conformal_killing(model.manifold, geo, v);
        Json c;
        c["class"] = to_string(ck.cls);
        if (ck.lambda) c["lambda"] = to_string(*ck.lambda);
        f["conformal_killing"] = std::move(c);
        fields[name] = std::move(f);
    }
    if (!only_field.empty() && !matched) {
        out["error"] = "unknown field '" + only_field + "'";
        failed = true;
    }
    out["fields"] = std::move(fields);
    return out;
}

Json theorems_json(const Model& model, const GeometryData& geo, bool& failed) {
    Json out = Json::array();
    if (!model.instance) {
        Json entry;
        entry["note"] = "manifest has no soliton block; no convention to check against";
        out.push_back(std::move(entry));
        return out;
    }
    const AlmostContactData* contact = model.contact ? &*model.contact : nullptr;

    std::vector<std::pair<std::string, SolitonInstance>> runs;
    for (const auto& id : theorem_ids()) runs.emplace_back(id, *model.instance);
    if (contact && model.instance->field_name != "zeta") {
        SolitonInstance reeb = *model.instance;
        reeb.field_name = "zeta";
        reeb.v = contact->zeta;
        runs.emplace_back("THM_4_1", std::move(reeb));
    }

    for (const auto& [id, inst] : runs) {
        Json entry;
        entry["id"] = id;
        try {
            CheckReport rep = theorem_check(model.manifold, geo, contact, id, inst);
            if (!rep.subject.empty()) entry["subject"] = rep.subject;
            entry["status"] = to_string(rep.status);
            if (!rep.derived.empty()) entry["derived"] = rep.derived;
            if (!rep.claimed.empty()) entry["claimed"] = rep.claimed;
            if (!rep.discrepancy.empty()) entry["discrepancy"] = rep.discrepancy;
            if (!rep.notes.empty()) entry["notes"] = rep.notes;
        } catch (const Error& e) {
            entry["error"] = e.what();
            failed = true;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

Json checks_json(const Manifest& manifest, const Model& model, const GeometryData& geo,
                 const std::optional<StructureReport>& structure,
                 const std::optional<IdentitySuiteReport>& identities, bool& failed) {
    Json out = Json::array();
    for (const auto& id : manifest.checks) {
        Json entry;
        entry["id"] = id;
        bool passed = false;
        std::string detail;
        if (id == "kenmotsu") {
            passed = structure && structure->kenmotsu;
            if (!passed) detail = "structure verification did not certify the Kenmotsu conditions";
        } else if (id == "identities") {
            passed = identities && identities->all_hold();
            if (!passed) detail = "an identity residual is nonzero";
        } else if (id == "star_ricci_consistency") {
            if (model.contact) {
                TensorField direct = star_ricci_direct(model.manifold, *model.contact, geo.riem);
                TensorField shifted = star_ricci_formula(model.manifold, *model.contact, geo.ric);
                StarScalarResult ss = star_scalar(model.manifold, *model.contact, direct,
                                                  geo.scalar);
                passed = direct == shifted && ss.trace == ss.scalar_shift;
                if (!passed) detail = "the two star-Ricci routes disagree";
            } else {
                detail = "no contact structure";
            }
        }
        entry["passed"] = passed;
        if (!detail.empty()) entry["detail"] = detail;
        if (!passed) failed = true;
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> cmds = {"verify",   "curvature", "soliton",
                                                  "classify", "theorems",  "all"};
    return cmds;
}

RunResult run(const Manifest& manifest, const RunOptions& opts) {
    if (std::find(known_commands().begin(), known_commands().end(), opts.command) ==
        known_commands().end())
        throw Error("unknown command '" + opts.command + "'");

    Model model = build_model(manifest, opts.preset_override, opts.bindings);
    GeometryData geo = compute_geometry(model.manifold);

    std::optional<StructureReport> structure;
    std::optional<IdentitySuiteReport> identities;
    if (model.contact) {
        structure = verify_structure(model.manifold, *model.contact, geo);
        identities = identity_suite(model.manifold, *model.contact, geo, structure->kenmotsu);
    }

    bool failed = false;
    Report report;
    report.doc["tool"] = "framecalc";
    report.doc["manifest"] = manifest.name;
    report.doc["command"] = opts.command;
    report.doc["dimension"] = manifest.dimension;
    if (!opts.bindings.empty()) {
        Json b;
        for (const auto& [name, value] : opts.bindings) b[name] = to_string(value);
        report.doc["bindings"] = std::move(b);
    }

    auto want = [&](const char* section) {
        return opts.command == "all" || opts.command == section;
    };

    Json sections;
    if (want("verify")) {
        if (structure) {
            sections["structure"] = structure_json(*structure);
            sections["identities"] = identities_json(*identities);
        } else {
            sections["structure"] = Json{{"note", "manifest declares no contact structure"}};
        }
    }
    if (want("curvature")) sections["curvature"] = curvature_json(model, geo);
    if (opts.command == "all") sections["fields"] = fields_json(model, geo);
    if (want("soliton")) {
        try {
            sections["soliton"] =
                soliton_json(model, geo, structure && structure->kenmotsu, failed);
        } catch (const Error& e) {
            sections["soliton"] = Json{{"error", e.what()}};
            failed = true;
        }
    }
    if (want("classify"))
        sections["classification"] = classification_json(model, geo, opts.field, failed);
    if (want("theorems")) sections["theorems"] = theorems_json(model, geo, failed);
    if (!manifest.checks.empty())
        sections["checks"] = checks_json(manifest, model, geo, structure, identities, failed);

    // Exact-identity guard: on a manifold that verified as Kenmotsu, every
    // suite residual must vanish; a nonzero one is an engine defect and must
    // never exit clean.
    if (structure && structure->kenmotsu && !identities->all_hold()) {
        sections["error"] =
            "internal inconsistency: a Kenmotsu-verified manifold has a nonzero identity residual";
        failed = true;
    }

    report.doc["sections"] = std::move(sections);
    report.doc["status"] = failed ? "failed" : "ok";
    report.failed = failed;

    RunResult result;
    result.report = std::move(report);
    result.exit_code = failed ? 1 : 0;
    return result;
}

} // namespace framecalc
