#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "retro/scenario_io.hpp"

namespace httplib {
class Server;
}

namespace retro::service {

struct Response {
    int status = 200;
    nlohmann::ordered_json body;
};

/// In-memory what-if sessions. Each session holds an editable scenario, a
/// revision counter bumped by every effective edit, and the last result
/// tagged with the revision it was computed from.
///
/// Requests on different sessions proceed in parallel; requests on one
/// session are serialized.
class SessionStore {
public:
    /// With a snapshot directory, sessions can be written to disk on demand.
    explicit SessionStore(std::optional<std::filesystem::path> snapshot_dir = std::nullopt);

    Response create(std::string_view body);
    Response get(std::string_view id) const;
    Response update_ethics(std::string_view id, std::string_view body);
    Response replace_scenario(std::string_view id, std::string_view body);
    Response run(std::string_view id);
    Response result(std::string_view id) const;
    Response snapshot(std::string_view id) const;

    std::size_t size() const;

private:
    struct Session {
        mutable std::mutex mutex;
        std::string id;
        ScenarioDocument document;
        std::uint64_t revision = 0;
        std::optional<nlohmann::ordered_json> last_result;
        std::uint64_t result_revision = 0;
    };

    std::shared_ptr<Session> find(std::string_view id) const;

    std::optional<std::filesystem::path> snapshot_dir_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
    std::uint64_t next_id_ = 1;
};

/// Wires the store onto HTTP routes:
///   POST /sessions                  -> {id, revision, warnings}
///   GET  /sessions/{id}             -> scenario document
///   PUT  /sessions/{id}/ethics      -> {revision}
///   PUT  /sessions/{id}/scenario    -> {revision}
///   POST /sessions/{id}/run         -> result graph + {revision}
///   GET  /sessions/{id}/result      -> last result or 404
///   POST /sessions/{id}/snapshot    -> {path}
void register_routes(httplib::Server& server, SessionStore& store);

}  // namespace retro::service
