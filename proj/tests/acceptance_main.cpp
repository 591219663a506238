// Acceptance suite: runs every end-to-end criterion in exact arithmetic and
// prints one pass/fail line per criterion. Returns the number of failures.

#include "test_support.hpp"

#include "framecalc/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace framecalc;
using framecalc::test::Euclidean3;
using framecalc::test::Kenmotsu3;
using framecalc::test::Kenmotsu5;
using framecalc::test::Rng;

namespace {

struct Harness {
    int index = 0;
    int failures = 0;
    std::vector<std::string> details;

    void note(const std::string& msg) { details.push_back(msg); }

    void criterion(const std::string& name, const std::function<bool()>& body) {
        ++index;
        details.clear();
        bool pass = false;
        try {
            pass = body();
        } catch (const std::exception& e) {
            details.push_back(std::string("exception: ") + e.what());
        }
        std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", index, name.c_str());
        if (!pass) {
            ++failures;
            for (const auto& d : details) std::printf("       %s\n", d.c_str());
        }
    }
};

bool expect(Harness& h, bool condition, const std::string& what) {
    if (!condition) h.note("failed: " + what);
    return condition;
}

Expr parse_in(const std::string& text, SymbolContext& ctx) { return parse_expr(text, ctx); }

SolitonInstance make_instance(const Kenmotsu5& k, const std::string& preset_id,
                              const TensorField& v, const std::string& name) {
    SolitonInstance inst;
    inst.convention = preset(preset_id);
    inst.field_name = name;
    inst.v = v;
    SymbolContext ctx;
    if (inst.convention.kappa_on_lie) inst.kappa = Expr::from_symbol(ctx.parameter("kappa"));
    inst.theta = Expr::from_symbol(ctx.parameter("theta"));
    inst.omega = Expr::from_symbol(ctx.parameter("omega"));
    (void)k;
    return inst;
}

TensorField closed_form_curvature(const FrameManifold& m, const Rational& s) {
    const int n = m.dim();
    TensorField out(n, 1, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Expr val;
                    if (l == i) val += Expr::from_rational(s * m.metric()[j][k]);
                    if (l == j) val -= Expr::from_rational(s * m.metric()[i][k]);
                    out.at({i, j, k, l}) = val;
                }
    return out;
}

struct CliResult {
    int exit_code = -1;
    std::string stdout_text;
};

CliResult run_cli(const std::string& cli, const std::vector<std::string>& args) {
    std::string cmd = cli;
    for (const auto& a : args) cmd += " " + a;
    cmd += " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        result.stdout_text.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    std::string golden_dir;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") cli_path = argv[i + 1];
        if (flag == "--golden") golden_dir = argv[i + 1];
    }

    Harness h;
    const Kenmotsu5 k = Kenmotsu5::make();
    const Kenmotsu3 k3 = Kenmotsu3::make();

    h.criterion("connection table of the 5d example (25 exact entries)", [&] {
        bool ok = true;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int l = 0; l < 5; ++l) {
                    Expr expected;
                    if (i < 4 && j == i && l == 4) expected = Expr::from_int(-1);
                    if (i < 4 && j == 4 && l == i) expected = Expr::from_int(1);
                    ok &= expect(h, k.geo.conn.at(i, j, l) == expected,
                                 "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     "," + std::to_string(l + 1) + ")");
                }
        return ok;
    });

    h.criterion("curvature table and constant-curvature closed form", [&] {
        bool ok = true;
        ok &= expect(h, k.geo.riem.at({0, 1, 1, 0}) == Expr::from_int(-1), "R(e1,e2)e2 = -e1");
        ok &= expect(h, k.geo.riem.at({2, 4, 2, 4}) == Expr::from_int(1), "R(e3,e5)e3 = e5");
        ok &= expect(h, k.geo.riem.at({0, 4, 4, 0}) == Expr::from_int(-1), "R(e1,e5)e5 = -e1");
        ok &= expect(h, k.geo.riem.at({0, 1, 0, 1}) == Expr::from_int(1), "R(e1,e2)e1 = e2");
        ok &= expect(h, k.geo.riem == closed_form_curvature(k.manifold, rat(-1)),
                     "full tensor equals the constant -1 closed form");
        return ok;
    });

    h.criterion("exact curvature scalars and both star-Ricci routes", [&] {
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = 0; j < 5 && ok; ++j)
                ok &= expect(h, k.geo.ric.at({i, j}) == (i == j ? Expr::from_int(-4) : Expr()),
                             "Ric = -4h");
        ok &= expect(h, k.geo.scalar == Expr::from_int(-20), "scalar = -20");
        TensorField direct = star_ricci_direct(k.manifold, k.contact, k.geo.riem);
        TensorField shifted = star_ricci_formula(k.manifold, k.contact, k.geo.ric);
        TensorField expected = Expr::from_int(-1) * metric_tensor(k.manifold) +
                               eta_outer_eta(k.manifold, k.contact);
        ok &= expect(h, direct == expected, "trace route gives -h + eta x eta");
        ok &= expect(h, shifted == expected, "shift route gives -h + eta x eta");
        StarScalarResult ss = star_scalar(k.manifold, k.contact, direct, k.geo.scalar);
        ok &= expect(h, ss.trace == Expr::from_int(-4), "star scalar = -4");
        ok &= expect(h, ss.scalar_shift == Expr::from_int(-4), "scalar + 4n^2 = -4");
        return ok;
    });

    h.criterion("identity suite exactly zero on both Kenmotsu examples", [&] {
        bool ok = true;
        IdentitySuiteReport s5 = identity_suite(k.manifold, k.contact, k.geo, true);
        ok &= expect(h, !s5.informational && s5.all_hold(), "5d suite");
        IdentitySuiteReport s3 = identity_suite(k3.manifold, k3.contact, k3.geo, true);
        ok &= expect(h, !s3.informational && s3.all_hold(), "3d suite");
        ok &= expect(h, verify_structure(k.manifold, k.contact, k.geo).kenmotsu, "5d verifies");
        ok &= expect(h, verify_structure(k3.manifold, k3.contact, k3.geo).kenmotsu, "3d verifies");
        return ok;
    });

    h.criterion("Lie derivative, trace and divergence of the distinguished field", [&] {
        bool ok = true;
        TensorField lie = lie_derivative_metric(k.manifold, k.geo.conn, k.v);
        TensorField expected = Expr::from_int(4) * (metric_tensor(k.manifold) -
                                                    eta_outer_eta(k.manifold, k.contact));
        ok &= expect(h, lie == expected, "L_V h = 4(h - eta x eta)");
        ok &= expect(h, metric_trace(k.manifold, lie) == Expr::from_int(16), "trace = 16");
        ok &= expect(h, divergence(k.manifold, k.geo.conn, k.v) == Expr::from_int(8),
                     "div V = 8");
        return ok;
    });

    h.criterion("rate solving under the printed and variant conventions", [&] {
        bool ok = true;
        SymbolContext pctx;
        SolitonInstance printed = make_instance(k, "STAR_KAPPA_RBS_1_9", k.v, "V");
        OmegaSolution sol = solve_omega_trace(k.manifold, k.geo, &k.contact, printed);
        // Oracle contraction: 16 kappa - 8 - 10 Omega + 20 theta = 0.
        ok &= expect(h, sol.equation == "16*kappa - 10*omega + 20*theta - 8 = 0",
                     "trace identity");
        ok &= expect(h, sol.omega == parse_in("8/5*kappa + 2*theta - 4/5", pctx),
                     "printed-form rate");
        SolitonInstance variant = make_instance(k, "STAR_KAPPA_RBS_5_7", k.v, "V");
        OmegaSolution vol = solve_omega_trace(k.manifold, k.geo, &k.contact, variant);
        ok &= expect(h, vol.omega == parse_in("4/5 + 2*theta - 8/5*kappa", pctx),
                     "published-form rate");
        const Symbol theta = pctx.parameter("theta");
        ok &= expect(h, subst(vol.omega, theta, Expr::from_int(0)) ==
                            parse_in("4/5 - 8/5*kappa", pctx),
                     "specialization theta = 0");
        ok &= expect(h, subst(vol.omega, theta, Expr::from_int(2)) ==
                            parse_in("24/5 - 8/5*kappa", pctx),
                     "specialization theta = 2");
        ok &= expect(h, subst(vol.omega, theta, Expr::from_int(1)) ==
                            parse_in("14/5 - 8/5*kappa", pctx),
                     "specialization theta = 1");
        return ok;
    });

    h.criterion("classification certificates on the 5d example", [&] {
        bool ok = true;
        TorseFormingCertificate cert = classify_torse_forming(k.manifold, k.geo, k.contact.zeta);
        ok &= expect(h, cert.subtype == TorseSubtype::TorseForming, "reeb subtype");
        ok &= expect(h, cert.psi.is_one(), "psi = 1");
        bool theta_matches = true;
        for (int i = 0; i < 5; ++i)
            theta_matches &= cert.theta_form.at({i}) == -k.contact.eta.at({i});
        ok &= expect(h, theta_matches, "theta form = -eta");
        auto ee = eta_einstein(k.manifold, k.geo, k.contact);
        ok &= expect(h, ee && ee->alpha == Expr::from_int(-4) && ee->beta.is_zero() &&
                            ee->einstein,
                     "eta-Einstein certificate (-4, 0)");
        ok &= expect(h, conformal_killing(k.manifold, k.geo, k.v).cls == ConformalClass::None,
                     "no conformal certificate for the distinguished field");
        return ok;
    });

    h.criterion("randomized structural property suite", [&] {
        bool ok = true;
        Rng rng(0xacce97edULL);
        std::uniform_int_distribution<int> dim_dist(2, 5);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            SymbolContext ctx;
            const int dim = dim_dist(rng);
            FrameManifold m = framecalc::test::random_diagonal_manifold(rng, ctx, dim);
            GeometryData geo = compute_geometry(m);
            ok &= expect(h, jacobi_identity_holds(m, geo.c), "Jacobi identity");
            for (int i = 0; i < dim && ok; ++i)
                for (int j = 0; j < dim && ok; ++j)
                    for (int l = 0; l < dim && ok; ++l)
                        ok &= expect(h,
                                     (geo.conn.at(i, j, l) - geo.conn.at(j, i, l) -
                                      geo.c.at(i, j, l))
                                         .is_zero(),
                                     "torsion-freeness");
            for (int i = 0; i < dim && ok; ++i)
                for (int j = 0; j < dim && ok; ++j)
                    for (int l = 0; l < dim && ok; ++l) {
                        Expr r;
                        for (int p = 0; p < dim; ++p) {
                            r += geo.conn.at(i, j, p) * Expr::from_rational(m.metric()[p][l]);
                            r += geo.conn.at(i, l, p) * Expr::from_rational(m.metric()[j][p]);
                        }
                        ok &= expect(h, r.is_zero(), "metric compatibility");
                    }
            TensorField low = lower_riemann(m, geo.riem);
            for (int i = 0; i < dim && ok; ++i)
                for (int j = 0; j < dim && ok; ++j)
                    for (int p = 0; p < dim && ok; ++p)
                        for (int q = 0; q < dim && ok; ++q) {
                            ok &= expect(h, (low.at({i, j, p, q}) + low.at({j, i, p, q}))
                                                .is_zero(),
                                         "antisymmetry in the first pair");
                            ok &= expect(h, (low.at({i, j, p, q}) + low.at({i, j, q, p}))
                                                .is_zero(),
                                         "antisymmetry in the second pair");
                            ok &= expect(h, (low.at({i, j, p, q}) - low.at({p, q, i, j}))
                                                .is_zero(),
                                         "pair symmetry");
                            ok &= expect(h,
                                         (low.at({i, j, p, q}) + low.at({j, p, i, q}) +
                                          low.at({p, i, j, q}))
                                             .is_zero(),
                                         "first Bianchi identity");
                        }
            for (int i = 0; i < dim && ok; ++i)
                for (int j = 0; j < dim && ok; ++j)
                    ok &= expect(h, geo.ric.at({i, j}) == geo.ric.at({j, i}), "Ricci symmetry");
        }
        Rng rng2(0xacce97eeULL);
        SymbolContext ctx2;
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            Expr a = framecalc::test::random_expr(rng2, ctx2);
            Expr b = framecalc::test::random_expr(rng2, ctx2);
            Expr c = framecalc::test::random_expr(rng2, ctx2);
            ok &= expect(h, (a + b) + c == a + (b + c), "additive associativity");
            ok &= expect(h, a + b == b + a, "additive commutativity");
            ok &= expect(h, (a * b) * c == a * (b * c), "multiplicative associativity");
            ok &= expect(h, a * b == b * a, "multiplicative commutativity");
            ok &= expect(h, a * (b + c) == a * b + a * c, "distributivity");
            std::vector<Term> soup(a.terms());
            soup.insert(soup.end(), b.terms().begin(), b.terms().end());
            soup.insert(soup.end(), a.terms().begin(), a.terms().end());
            Expr once = Expr::from_terms(soup);
            ok &= expect(h, Expr::from_terms(once.terms()) == once, "canonical idempotence");
        }
        return ok;
    });

    h.criterion("claimed-identity checks are deterministic and pin the sign discrepancies", [&] {
        bool ok = true;
        SolitonInstance inst = make_instance(k, "STAR_KAPPA_RBS_1_9", k.v, "V");
        SolitonInstance reeb = make_instance(k, "STAR_KAPPA_RBS_1_9", k.contact.zeta, "zeta");
        auto check = [&](const std::string& id, const SolitonInstance& with,
                         CheckStatus expected_status, const std::string& expected_discrepancy) {
            CheckReport a = theorem_check(k.manifold, k.geo, &k.contact, id, with);
            CheckReport b = theorem_check(k.manifold, k.geo, &k.contact, id, with);
            bool same = a.status == b.status && a.discrepancy == b.discrepancy;
            bool good = same && a.status == expected_status &&
                        a.discrepancy == expected_discrepancy;
            if (!good)
                h.note(id + ": status " + to_string(a.status) + ", discrepancy '" +
                       a.discrepancy + "'");
            return good;
        };
        ok &= check("THM_3_1", inst, CheckStatus::Mismatch, "4*theta");
        ok &= check("THM_3_2", inst, CheckStatus::Mismatch, "-20*theta");
        ok &= check("THM_3_5", inst, CheckStatus::Match, "");
        ok &= check("THM_4_1", reeb, CheckStatus::Mismatch, "-1/5*kappa - 9/5");
        ok &= check("COR_4_2_I", inst, CheckStatus::Match, "");
        ok &= check("COR_4_2_II", inst, CheckStatus::Match, "");
        ok &= check("COR_4_2_III", inst, CheckStatus::Mismatch,
                    "1/5*kappa*theta_rho - 1/5*theta_rho - 6");
        ok &= check("COR_4_2_IV", inst, CheckStatus::Mismatch, "-6");
        ok &= check("COR_4_2_V", inst, CheckStatus::Match, "");
        return ok;
    });

    h.criterion("command-line contract: clean run, golden sections, corrupted phi", [&] {
        if (cli_path.empty()) {
            h.note("no --cli path given");
            return false;
        }
        bool ok = true;
        CliResult all = run_cli(cli_path, {"--builtin", "kenmotsu5", "--command", "all",
                                           "--format", "structured"});
        ok &= expect(h, all.exit_code == 0, "exit code 0 for the full run");
        Json doc;
        try {
            doc = Json::parse(all.stdout_text);
        } catch (...) {
            h.note("report is not valid JSON");
            return false;
        }
        Json sections;
        sections["curvature"] = doc["sections"]["curvature"];
        sections["soliton"] = doc["sections"]["soliton"];
        const std::string rendered = sections.dump(2) + "\n";
        const std::filesystem::path golden_path =
            std::filesystem::path(golden_dir) / "kenmotsu5_curvature_soliton.json";
        const std::string golden = read_file(golden_path);
        if (golden.empty()) {
            h.note("golden file missing at " + golden_path.string());
            ok = false;
        } else {
            ok &= expect(h, rendered == golden, "curvature+soliton sections byte-match golden");
        }

        Manifest corrupted = builtin("kenmotsu5");
        corrupted.contact->phi[0][2] = "-1";
        const auto tmp = std::filesystem::temp_directory_path() / "framecalc_corrupted.json";
        {
            std::ofstream out(tmp, std::ios::binary);
            out << serialize_manifest(corrupted);
        }
        CliResult bad = run_cli(cli_path, {"--manifest", tmp.string(), "--command", "all",
                                           "--format", "structured"});
        std::filesystem::remove(tmp);
        ok &= expect(h, bad.exit_code == 1, "corrupted phi exits 1");
        try {
            Json bad_doc = Json::parse(bad.stdout_text);
            ok &= expect(h, bad_doc["sections"]["structure"]["kenmotsu"] == false,
                         "kenmotsu = false");
            bool has_nabla_phi = false;
            for (const auto& ax : bad_doc["sections"]["structure"]["axioms"])
                if (ax["id"] == "nabla_phi") has_nabla_phi = true;
            ok &= expect(h, has_nabla_phi, "covariant-derivative residual section present");
        } catch (...) {
            h.note("corrupted-run report is not valid JSON");
            ok = false;
        }
        return ok;
    });

    std::printf("%d of %d criteria passed\n", h.index - h.failures, h.index);
    return h.failures;
}
