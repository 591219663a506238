#include "test_support.hpp"

#include "framecalc/runner.hpp"

#include <doctest.h>

using namespace framecalc;

TEST_CASE("builtin manifests parse, build and round-trip") {
    for (const auto& name : builtin_names()) {
        Manifest m = builtin(name);
        CHECK(m.name == name);
        // Serialization re-parses to an equal manifest.
        Manifest again = parse_manifest(serialize_manifest(m));
        CHECK(serialize_manifest(again) == serialize_manifest(m));
        Model model = build_model(m);
        CHECK(model.manifold.dim() == m.dimension);
    }
    CHECK_THROWS_AS(builtin("nope"), Error);
}

TEST_CASE("the shipped 5d manifest denotes the worked example") {
    Model model = build_model(builtin("kenmotsu5"));
    REQUIRE(model.contact.has_value());
    // The distinguished field in frame components: x_a e^{x5} on the first
    // four directions (the frame expansion of the coordinate field), then 1.
    const TensorField& v = model.fields.at("V");
    SymbolContext ctx;
    for (int i = 1; i <= 5; ++i) ctx.coordinate("x" + std::to_string(i));
    for (int i = 0; i < 4; ++i)
        CHECK(v.at({i}) == parse_expr("x" + std::to_string(i + 1) + "*exp(x5)", ctx));
    CHECK(v.at({4}).is_one());
    // And it is exactly the inverse-frame expansion of (x_a, 1) chart
    // components.
    for (int a = 0; a < 5; ++a) {
        Expr chart_comp = a < 4 ? Expr::from_symbol(*model.ctx.find("x" + std::to_string(a + 1)))
                                : Expr::from_int(1);
        Expr expanded;
        for (int k = 0; k < 5; ++k)
            expanded += v.at({k}) * model.manifold.frame()[k][a];
        CHECK(expanded == chart_comp);
    }
    CHECK(verify_structure(model.manifold, *model.contact).kenmotsu);
}

TEST_CASE("the 3d analog verifies and the flat builtin is silent") {
    Model k3 = build_model(builtin("kenmotsu3"));
    CHECK(verify_structure(k3.manifold, *k3.contact).kenmotsu);

    Model e3 = build_model(builtin("euclidean3"));
    GeometryData geo = compute_geometry(e3.manifold);
    for (const auto& c : geo.c.c) CHECK(c.is_zero());
    CHECK_FALSE(verify_structure(e3.manifold, *e3.contact).kenmotsu);
}

TEST_CASE("manifest validation errors") {
    Manifest base = builtin("kenmotsu5");

    SUBCASE("frame row count mismatch") {
        Json doc = manifest_to_json(base);
        doc["frame"].erase(4);
        CHECK_THROWS_WITH_AS(parse_manifest(doc.dump()), doctest::Contains("row count"), Error);
    }
    SUBCASE("unknown keys are rejected with their path") {
        Json doc = manifest_to_json(base);
        doc["contact"]["phy"] = 1;
        CHECK_THROWS_WITH_AS(parse_manifest(doc.dump()), doctest::Contains("unknown key 'phy'"),
                             Error);
    }
    SUBCASE("nonlinear exponential arguments fail at model build") {
        Json doc = manifest_to_json(base);
        doc["frame"][0][0] = "exp(x1*x2)";
        Manifest m = parse_manifest(doc.dump());
        CHECK_THROWS_WITH_AS(build_model(m), doctest::Contains("linear form"), Error);
    }
    SUBCASE("unknown preset ids") {
        Json doc = manifest_to_json(base);
        doc["soliton"]["preset"] = "NO_SUCH";
        CHECK_THROWS_WITH_AS(parse_manifest(doc.dump()), doctest::Contains("unknown preset"),
                             Error);
    }
    SUBCASE("unknown check ids") {
        Json doc = manifest_to_json(base);
        doc["checks"].push_back("everything");
        CHECK_THROWS_WITH_AS(parse_manifest(doc.dump()), doctest::Contains("unknown check"),
                             Error);
    }
    SUBCASE("reserved field name") {
        Json doc = manifest_to_json(base);
        doc["fields"]["zeta"] = {"0", "0", "0", "0", "1"};
        CHECK_THROWS_WITH_AS(parse_manifest(doc.dump()), doctest::Contains("reserved"), Error);
    }
    SUBCASE("syntax errors carry byte positions") {
        CHECK_THROWS_AS(parse_manifest("{\"dimension\": }"), ParseError);
    }
    SUBCASE("non-invertible frames are rejected") {
        Json doc = manifest_to_json(base);
        doc["frame"][0][0] = "x1 + 1";
        Manifest m = parse_manifest(doc.dump());
        CHECK_THROWS_AS(build_model(m), NonInvertibleFrameError);
    }
}

TEST_CASE("run: the full pipeline on the 5d example exits clean") {
    RunOptions opts;
    opts.command = "all";
    RunResult res = run(builtin("kenmotsu5"), opts);
    CHECK(res.exit_code == 0);
    const Json& doc = res.report.doc;
    CHECK(doc["status"] == "ok");
    CHECK(doc["sections"]["structure"]["kenmotsu"] == true);
    CHECK(doc["sections"]["identities"]["all_hold"] == true);
    CHECK(doc["sections"]["curvature"]["scalar"] == "-20");
    CHECK(doc["sections"]["curvature"]["star"]["trace"] == "-4");
    CHECK(doc["sections"]["curvature"]["star"]["routes_agree"] == true);
    CHECK(doc["sections"]["fields"]["V"]["divergence"] == "8");
    CHECK(doc["sections"]["fields"]["V"]["lie_trace"] == "16");
    const Json& soliton = doc["sections"]["soliton"];
    CHECK(soliton["trace"]["omega"] == "8/5*kappa + 2*theta - 4/5");
    CHECK(soliton["residual_trace_at_solution_zero"] == true);
    CHECK(soliton["residual_at_trace_solution_zero"] == false);
    // The registered variants carry the published worked-example rate and its
    // specializations.
    bool found_published = false;
    for (const auto& variant : soliton["variants"]) {
        if (variant["preset"] != "STAR_KAPPA_RBS_5_7") continue;
        found_published = true;
        CHECK(variant["trace"]["omega"] == "-8/5*kappa + 2*theta + 4/5");
        const Json& specials = variant["trace"]["specializations"];
        REQUIRE(specials.size() == 3);
        CHECK(specials[0]["omega"] == "-8/5*kappa + 4/5");
        CHECK(specials[1]["omega"] == "-8/5*kappa + 14/5");
        CHECK(specials[2]["omega"] == "-8/5*kappa + 24/5");
    }
    CHECK(found_published);
    // All three declared checks pass.
    for (const auto& entry : doc["sections"]["checks"]) CHECK(entry["passed"] == true);
}

TEST_CASE("run: determinism, byte for byte") {
    RunOptions opts;
    opts.command = "all";
    RunResult a = run(builtin("kenmotsu5"), opts);
    RunResult b = run(builtin("kenmotsu5"), opts);
    CHECK(a.report.to_json_string() == b.report.to_json_string());
    CHECK(a.report.to_text() == b.report.to_text());
}

TEST_CASE("run: corrupted phi fails the declared checks") {
    Manifest m = builtin("kenmotsu5");
    m.contact->phi[0][2] = "-1"; // one sign flip
    RunOptions opts;
    opts.command = "all";
    RunResult res = run(m, opts);
    CHECK(res.exit_code == 1);
    CHECK(res.report.doc["status"] == "failed");
    CHECK(res.report.doc["sections"]["structure"]["kenmotsu"] == false);
    // The covariant-derivative residual section is present in the report.
    bool found_nabla_phi = false;
    for (const auto& ax : res.report.doc["sections"]["structure"]["axioms"])
        if (ax["id"] == "nabla_phi") found_nabla_phi = true;
    CHECK(found_nabla_phi);
}

TEST_CASE("run: a non-Kenmotsu manifest without assertions stays clean") {
    RunOptions opts;
    opts.command = "verify";
    RunResult res = run(builtin("euclidean3"), opts);
    CHECK(res.exit_code == 0);
    CHECK(res.report.doc["sections"]["structure"]["kenmotsu"] == false);
    CHECK(res.report.doc["sections"]["identities"]["informational"] == true);
}

TEST_CASE("run: binding parameters specializes every reported value") {
    RunOptions opts;
    opts.command = "soliton";
    opts.bindings["kappa"] = rat(1, 2);
    opts.bindings["theta"] = rat(0);
    RunResult res = run(builtin("kenmotsu5"), opts);
    CHECK(res.exit_code == 0);
    const Json& soliton = res.report.doc["sections"]["soliton"];
    CHECK(soliton["trace"]["omega"] == "0");
    CHECK(soliton["trace"]["sign"] == "steady");
    CHECK(soliton["residual_at_trace_solution_zero"] == true);
}

TEST_CASE("run: preset override switches the convention") {
    RunOptions opts;
    opts.command = "soliton";
    opts.preset_override = "STAR_KAPPA_RBS_5_7";
    RunResult res = run(builtin("kenmotsu5"), opts);
    CHECK(res.exit_code == 0);
    CHECK(res.report.doc["sections"]["soliton"]["trace"]["omega"] ==
          "-8/5*kappa + 2*theta + 4/5");
}

TEST_CASE("run: classify restricted to one field") {
    RunOptions opts;
    opts.command = "classify";
    opts.field = "zeta";
    RunResult res = run(builtin("kenmotsu5"), opts);
    CHECK(res.exit_code == 0);
    const Json& cls = res.report.doc["sections"]["classification"];
    CHECK(cls["eta_einstein"]["alpha"] == "-4");
    CHECK(cls["eta_einstein"]["einstein"] == true);
    CHECK(cls["fields"]["zeta"]["torse_forming"]["subtype"] == "torse_forming");
    CHECK(cls["fields"]["zeta"]["torse_forming"]["psi"] == "1");
    CHECK_FALSE(cls["fields"].contains("V"));

    opts.field = "missing";
    RunResult bad = run(builtin("kenmotsu5"), opts);
    CHECK(bad.exit_code == 1);
}

TEST_CASE("run: theorems section flags the documented discrepancies") {
    RunOptions opts;
    opts.command = "theorems";
    RunResult res = run(builtin("kenmotsu5"), opts);
    CHECK(res.exit_code == 0); // mismatches are annotations, not failures
    std::map<std::string, std::string> status;
    std::map<std::string, std::string> discrepancy;
    for (const auto& entry : res.report.doc["sections"]["theorems"]) {
        if (!entry.contains("status")) continue;
        std::string key = entry["id"].get<std::string>();
        if (entry.contains("subject")) key += ":" + entry["subject"].get<std::string>();
        status[key] = entry["status"];
        if (entry.contains("discrepancy")) discrepancy[key] = entry["discrepancy"];
    }
    CHECK(status.at("THM_3_1:zeta") == "MISMATCH");
    CHECK(discrepancy.at("THM_3_1:zeta") == "4*theta");
    CHECK(status.at("THM_3_2:V") == "MISMATCH");
    CHECK(discrepancy.at("THM_3_2:V") == "-20*theta");
    CHECK(status.at("THM_3_5:zeta") == "MATCH");
    CHECK(status.at("THM_4_1:V") == "NotApplicable");
    CHECK(status.at("THM_4_1:zeta") == "MISMATCH");
    CHECK(discrepancy.at("THM_4_1:zeta") == "-1/5*kappa - 9/5");
    CHECK(status.at("COR_4_2_I:concircular") == "MATCH");
    CHECK(status.at("COR_4_2_III:recurrent") == "MISMATCH");
    CHECK(status.at("COR_4_2_IV:parallel") == "MISMATCH");
    CHECK(discrepancy.at("COR_4_2_IV:parallel") == "-6");
    CHECK(status.at("COR_4_2_V:torqued") == "MATCH");
}

TEST_CASE("run: unknown command is rejected") {
    RunOptions opts;
    opts.command = "everything";
    CHECK_THROWS_AS(run(builtin("kenmotsu5"), opts), Error);
}
