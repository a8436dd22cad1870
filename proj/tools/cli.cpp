#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "retro/engine.hpp"
#include "retro/graph_export.hpp"
#include "service.hpp"

namespace retro::cli {

namespace {

struct Options {
    std::string scenario;
    std::string ethics;
    std::string policy;
    std::string validation;
    std::string format = "text";
    std::string out;
    std::string listen = "127.0.0.1:8080";
    std::string snapshot_dir;
};

/// Distinguishes unreadable files from malformed content.
struct IoFailure {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure{"cannot read '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Loads the scenario, applies --ethics/--policy/--validation overrides.
ScenarioDocument load_document(const Options& opts) {
    ScenarioDocument doc = read_scenario_document(read_file(opts.scenario));
    if (!opts.ethics.empty()) apply_ethics(doc, parse_ethics(read_file(opts.ethics)));
    if (!opts.policy.empty()) doc.policy = *parse_policy(opts.policy);
    if (!opts.validation.empty()) doc.validation = *parse_validation_mode(opts.validation);
    return doc;
}

std::string fixed3(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

std::string render_run(const DecisionResult& result) {
    std::size_t width = 0;
    for (const auto& entry : result.acceptability) width = std::max(width, entry.action.size());

    std::ostringstream out;
    out << "selected: " << result.default_pick() << "\n";
    if (result.tie()) {
        out << "tied:";
        for (const auto& action : result.selected) out << " " << action;
        out << "\n";
    }
    out << "acceptability:\n";
    for (const auto& entry : result.acceptability) {
        out << "  " << entry.action << std::string(width - entry.action.size() + 2, ' ')
            << fixed3(entry.acceptability) << "\n";
    }
    out << "attacks: " << result.graph.attacks.size() << "\n";
    out << "fully acceptable: " << (result.fully_acceptable ? "yes" : "no") << "\n";
    out << "dilemma: " << (result.dilemma ? "yes" : "no") << "\n";
    return out.str();
}

void print_warnings(const ValidationReport& report, std::ostream& err) {
    for (const auto& v : report.violations) {
        if (v.severity == Severity::warning) err << "warning: " << v.location << ": " << v.message << "\n";
    }
}

int emit(const Options& opts, const std::string& text, std::ostream& out, std::ostream& err) {
    if (opts.out.empty()) {
        out << text;
        return kOk;
    }
    std::ofstream file(opts.out, std::ios::binary);
    file << text;
    if (!file) {
        err << "error: cannot write '" << opts.out << "'\n";
        return kIoError;
    }
    return kOk;
}

int serve(const Options& opts, std::ostream& out, std::ostream& err) {
    const auto colon = opts.listen.rfind(':');
    if (colon == std::string::npos) {
        err << "error: --listen expects host:port\n";
        return kUsageOrParseError;
    }
    const std::string host = opts.listen.substr(0, colon);
    int port = 0;
    try {
        port = std::stoi(opts.listen.substr(colon + 1));
    } catch (const std::exception&) {
        err << "error: invalid port in '" << opts.listen << "'\n";
        return kUsageOrParseError;
    }

    std::optional<std::filesystem::path> snapshots;
    if (!opts.snapshot_dir.empty()) snapshots = opts.snapshot_dir;
    service::SessionStore store(snapshots);
    httplib::Server server;
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    service::register_routes(server, store);

    out << "listening on " << host << ":" << port << std::endl;
    if (!server.listen(host, port)) {
        err << "error: cannot listen on " << opts.listen << "\n";
        return kIoError;
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Hypothetical retrospection decision engine", "retro"};
    app.require_subcommand(1, 1);

    const auto policy_check = CLI::IsMember({"midpoint", "conservative"});
    const auto mode_check = CLI::IsMember({"strict", "lenient"});
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scenario", opts.scenario, "Scenario JSON file")->required();
        cmd->add_option("--ethics", opts.ethics, "JSON file replacing utility classes, forbidden states or policy");
        cmd->add_option("--policy", opts.policy, "Probability comparison policy")->check(policy_check);
        cmd->add_option("--validation", opts.validation, "Validation mode")->check(mode_check);
        cmd->add_option("--out", opts.out, "Write output to this file instead of stdout");
    };

    auto* run = app.add_subcommand("run", "Select the permissible action");
    add_common(run);
    auto* validate = app.add_subcommand("validate", "Check a scenario and print the validation report");
    add_common(validate);
    auto* explain_cmd = app.add_subcommand("explain", "Print the retrospective dialogue for every attack");
    add_common(explain_cmd);
    auto* export_cmd = app.add_subcommand("export", "Write the attack graph");
    add_common(export_cmd);
    export_cmd->add_option("--format", opts.format, "Graph format")->check(CLI::IsMember({"dot", "json", "text"}));
    auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP workbench service");
    serve_cmd->add_option("--listen", opts.listen, "host:port to bind");
    serve_cmd->add_option("--snapshot-dir", opts.snapshot_dir, "Directory for on-demand session snapshots");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageOrParseError;
    }

    if (serve_cmd->parsed()) return serve(opts, out, err);

    try {
        ScenarioDocument doc = load_document(opts);
        const ValidationReport report = validate_problem(doc.problem, doc.validation);

        if (validate->parsed()) {
            std::string text;
            for (const auto& line : report.lines()) text += line + "\n";
            if (report.empty()) text = "ok: scenario passes " + std::string(to_string(doc.validation)) + " validation\n";
            const int status = emit(opts, text, out, err);
            if (status != kOk) return status;
            return report.has_errors() ? kValidationFailed : kOk;
        }

        if (report.has_errors()) {
            err << "validation failed (" << to_string(doc.validation) << "):\n";
            for (const auto& line : report.lines()) err << "  " << line << "\n";
            return kValidationFailed;
        }
        print_warnings(report, err);

        const DecisionResult result = run_retrospection(doc);
        if (run->parsed()) return emit(opts, render_run(result), out, err);
        if (explain_cmd->parsed()) return emit(opts, explain(result), out, err);
        return emit(opts, export_graph(result, opts.format), out, err);
    } catch (const IoFailure& e) {
        err << "error: " << e.message << "\n";
        return kIoError;
    } catch (const ScenarioError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& d : e.details()) err << "  " << d << "\n";
        return e.kind() == ScenarioError::Kind::validation ? kValidationFailed : kUsageOrParseError;
    }
}

}  // namespace retro::cli
