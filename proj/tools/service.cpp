#include "service.hpp"

#include <fstream>

#include <httplib.h>

#include "retro/engine.hpp"
#include "retro/graph_export.hpp"

namespace retro::service {

using nlohmann::ordered_json;

namespace {

Response error(int status, std::string message, std::vector<std::string> details = {}) {
    return {status, ordered_json{{"error", std::move(message)}, {"details", std::move(details)}}};
}

Response from_scenario_error(const ScenarioError& e) {
    std::vector<std::string> details = e.details();
    if (details.empty() && !e.path().empty()) details.push_back(e.path());
    return error(400, e.what(), std::move(details));
}

Response unknown_session(std::string_view id) { return error(404, "unknown session '" + std::string(id) + "'"); }

std::vector<std::string> warnings_of(const ValidationReport& report) {
    std::vector<std::string> out;
    for (const auto& v : report.violations) {
        if (v.severity == Severity::warning) out.push_back(v.location + ": " + v.message);
    }
    return out;
}

/// Rejects documents whose validation report carries errors.
std::optional<Response> check(const ScenarioDocument& document) {
    const auto report = validate_problem(document.problem, document.validation);
    if (!report.has_errors()) return std::nullopt;
    return error(400, "scenario failed " + std::string(to_string(document.validation)) + " validation",
                 report.lines());
}

}  // namespace

SessionStore::SessionStore(std::optional<std::filesystem::path> snapshot_dir)
    : snapshot_dir_(std::move(snapshot_dir)) {}

std::shared_ptr<SessionStore::Session> SessionStore::find(std::string_view id) const {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() const {
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

Response SessionStore::create(std::string_view body) {
    ParsedScenario parsed;
    try {
        parsed = parse_scenario(body);
    } catch (const ScenarioError& e) {
        return from_scenario_error(e);
    }

    auto session = std::make_shared<Session>();
    session->document = std::move(parsed.document);
    {
        std::lock_guard lock(mutex_);
        session->id = "s" + std::to_string(next_id_++);
        sessions_.emplace(session->id, session);
    }
    return {201, ordered_json{{"id", session->id}, {"revision", 0}, {"warnings", warnings_of(parsed.report)}}};
}

Response SessionStore::get(std::string_view id) const {
    auto session = find(id);
    if (!session) return unknown_session(id);
    std::lock_guard lock(session->mutex);
    ordered_json body = scenario_to_json(session->document);
    return {200, std::move(body)};
}

Response SessionStore::update_ethics(std::string_view id, std::string_view body) {
    auto session = find(id);
    if (!session) return unknown_session(id);

    EthicsPatch patch;
    try {
        patch = parse_ethics(body);
    } catch (const ScenarioError& e) {
        return from_scenario_error(e);
    }

    std::lock_guard lock(session->mutex);
    if (patch.empty()) return {200, ordered_json{{"revision", session->revision}, {"changed", false}}};

    ScenarioDocument edited = session->document;
    apply_ethics(edited, patch);
    if (auto rejected = check(edited)) return *rejected;
    session->document = std::move(edited);
    ++session->revision;
    return {200, ordered_json{{"revision", session->revision}, {"changed", true}}};
}

Response SessionStore::replace_scenario(std::string_view id, std::string_view body) {
    auto session = find(id);
    if (!session) return unknown_session(id);

    ParsedScenario parsed;
    try {
        parsed = parse_scenario(body);
    } catch (const ScenarioError& e) {
        return from_scenario_error(e);
    }

    std::lock_guard lock(session->mutex);
    session->document = std::move(parsed.document);
    ++session->revision;
    return {200, ordered_json{{"revision", session->revision}, {"warnings", warnings_of(parsed.report)}}};
}

Response SessionStore::run(std::string_view id) {
    auto session = find(id);
    if (!session) return unknown_session(id);

    std::lock_guard lock(session->mutex);
    ordered_json body;
    try {
        body = graph_to_json(run_retrospection(session->document));
    } catch (const ScenarioError& e) {
        return from_scenario_error(e);
    }
    body["revision"] = session->revision;
    session->last_result = body;
    session->result_revision = session->revision;
    return {200, std::move(body)};
}

Response SessionStore::result(std::string_view id) const {
    auto session = find(id);
    if (!session) return unknown_session(id);

    std::lock_guard lock(session->mutex);
    if (!session->last_result) return error(404, "session '" + std::string(id) + "' has not been run");
    ordered_json body = *session->last_result;
    body["stale"] = session->result_revision < session->revision;
    return {200, std::move(body)};
}

Response SessionStore::snapshot(std::string_view id) const {
    auto session = find(id);
    if (!session) return unknown_session(id);
    if (!snapshot_dir_) return error(409, "snapshots are disabled; start the service with a snapshot directory");

    std::lock_guard lock(session->mutex);
    std::error_code ec;
    std::filesystem::create_directories(*snapshot_dir_, ec);
    const auto path = *snapshot_dir_ / (session->id + "-r" + std::to_string(session->revision) + ".json");
    std::ofstream file(path);
    file << serialize_scenario(session->document);
    if (!file) return error(500, "could not write snapshot", {path.string()});
    return {200, ordered_json{{"path", path.string()}, {"revision", session->revision}}};
}

void register_routes(httplib::Server& server, SessionStore& store) {
    const auto reply = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body.dump(2) + "\n", "application/json; charset=utf-8");
    };

    server.Post("/sessions", [&store, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.create(req.body));
    });
    server.Get(R"(/sessions/([^/]+))", [&store, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.get(req.matches[1].str()));
    });
    server.Put(R"(/sessions/([^/]+)/ethics)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.update_ethics(req.matches[1].str(), req.body));
    });
    server.Put(R"(/sessions/([^/]+)/scenario)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.replace_scenario(req.matches[1].str(), req.body));
    });
    server.Post(R"(/sessions/([^/]+)/run)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.run(req.matches[1].str()));
    });
    server.Get(R"(/sessions/([^/]+)/result)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.result(req.matches[1].str()));
    });
    server.Post(R"(/sessions/([^/]+)/snapshot)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.snapshot(req.matches[1].str()));
    });
}

}  // namespace retro::service
