#include "framecalc/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw framecalc::Error("cannot open manifest file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::pair<std::string, framecalc::Rational> parse_binding(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw framecalc::Error("binding '" + text + "' must look like name=p/q");
    const std::string name = text.substr(0, eq);
    auto value = framecalc::parse_rational(text.substr(eq + 1));
    if (name.empty() || !value)
        throw framecalc::Error("binding '" + text + "' must look like name=p/q");
    return {name, *value};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"framecalc: exact frame-presented tensor calculus and soliton laboratory"};
    std::string manifest_path, builtin_name, field, preset;
    std::string command = "all";
    std::string format = "text";
    std::vector<std::string> binds;
    app.add_option("--manifest", manifest_path, "path to a manifest document (JSON)");
    app.add_option("--builtin", builtin_name,
                   "shipped manifest name: kenmotsu5, kenmotsu3, euclidean3");
    app.add_option("--command", command, "one of: verify, curvature, soliton, classify, theorems, all");
    app.add_option("--field", field, "restrict 'classify' to one named field");
    app.add_option("--preset", preset, "override the soliton preset id");
    app.add_option("--bind", binds, "bind a parameter slot to an exact rational, e.g. kappa=1/2")
        ->take_all();
    app.add_option("--format", format, "output format: text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (manifest_path.empty() == builtin_name.empty())
            throw framecalc::Error("exactly one of --manifest or --builtin is required");

        framecalc::Manifest manifest = manifest_path.empty()
                                           ? framecalc::builtin(builtin_name)
                                           : framecalc::parse_manifest(read_file(manifest_path));

        framecalc::RunOptions opts;
        opts.command = command;
        opts.field = field;
        if (!preset.empty()) opts.preset_override = preset;
        for (const auto& b : binds) opts.bindings.insert(parse_binding(b));

        framecalc::RunResult result = framecalc::run(manifest, opts);
        std::cout << (format == "structured" ? result.report.to_json_string()
                                             : result.report.to_text());
        return result.exit_code;
    } catch (const framecalc::Error& e) {
        std::cerr << "framecalc: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "framecalc: " << e.what() << "\n";
        return 2;
    }
}
