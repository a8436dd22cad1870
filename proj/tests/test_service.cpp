#include <doctest.h>

#include <filesystem>
#include <thread>

#include <httplib.h>

#include "retro/engine.hpp"
#include "retro/graph_export.hpp"
#include "service.hpp"
#include "support/fixtures.hpp"

using namespace retro;
using retro::service::SessionStore;
using retro::testing::read_text;
using retro::testing::scenario_path;

namespace {

std::string library_text() { return read_text(scenario_path("library.json")); }
std::string ethics_text(const std::string& name) { return read_text(scenario_path("ethics/" + name + ".json")); }

}  // namespace

TEST_SUITE("service") {

TEST_CASE("session lifecycle") {
    SessionStore store;
    const auto created = store.create(library_text());
    REQUIRE(created.status == 201);
    const std::string id = created.body["id"];
    CHECK(created.body["revision"] == 0);
    CHECK(created.body["warnings"].empty());
    CHECK(store.size() == 1);

    CHECK(store.result(id).status == 404);

    auto run = store.run(id);
    CHECK(run.status == 200);
    CHECK(run.body["edges"].size() == 4);
    CHECK(run.body["revision"] == 0);
    CHECK(store.result(id).body["stale"] == false);

    const auto noop = store.update_ethics(id, "{}");
    CHECK(noop.status == 200);
    CHECK(noop.body["changed"] == false);
    CHECK(noop.body["revision"] == 0);

    const auto edited = store.update_ethics(id, ethics_text("data-protection"));
    CHECK(edited.status == 200);
    CHECK(edited.body["revision"] == 1);
    CHECK(store.result(id).body["stale"] == true);

    run = store.run(id);
    CHECK(run.body["edges"].size() == 20);
    CHECK(run.body["selected"] == nlohmann::json::array({"ignore"}));
    CHECK(run.body["revision"] == 1);
    CHECK(store.get(id).body["forbidden"].size() == 1);
}

TEST_CASE("ethics edges follow the bundled ethics files") {
    SessionStore store;
    const std::string id = store.create(library_text()).body["id"];
    const std::vector<std::pair<std::string, std::size_t>> steps{
        {"pass-only", 4}, {"pass-and-found-out", 2}, {"found-out-heavy", 10}, {"data-protection", 20}};
    for (const auto& [name, edges] : steps) {
        CHECK(store.update_ethics(id, ethics_text(name)).status == 200);
        CHECK(store.run(id).body["edges"].size() == edges);
    }
}

TEST_CASE("run matches the shared engine path") {
    SessionStore store;
    const std::string id = store.create(library_text()).body["id"];
    store.update_ethics(id, ethics_text("found-out-tiered"));
    auto body = store.run(id).body;
    body.erase("revision");
    auto doc = retro::testing::library_with("found-out-tiered");
    CHECK(body == graph_to_json(run_retrospection(doc)));
}

TEST_CASE("errors") {
    SessionStore store;
    CHECK(store.get("s99").status == 404);
    CHECK(store.run("s99").status == 404);
    CHECK(store.update_ethics("s99", "{}").status == 404);

    const auto bad = store.create("{");
    CHECK(bad.status == 400);
    CHECK(bad.body.contains("error"));

    const auto invalid = store.create(read_text(scenario_path("coin-apple-printed.json")));
    CHECK(invalid.status == 400);
    CHECK(invalid.body["details"][0].get<std::string>().find("1.5") != std::string::npos);

    const std::string id = store.create(library_text()).body["id"];
    const auto rejected = store.update_ethics(id, R"({"utilityClasses":[[{"var":"ghost","utility":1}]]})");
    CHECK(rejected.status == 400);
    CHECK(store.get(id).body["utilityClasses"].size() == 1);
    CHECK(store.update_ethics(id, R"({"variables":[]})").status == 400);
    CHECK(store.snapshot(id).status == 409);
}

TEST_CASE("lenient documents report warnings") {
    SessionStore store;
    auto j = nlohmann::json::parse(read_text(scenario_path("coin-apple-printed.json")));
    j["validation"] = "lenient";
    const auto created = store.create(j.dump());
    REQUIRE(created.status == 201);
    CHECK(created.body["warnings"].size() == 1);
    CHECK(store.run(created.body["id"].get<std::string>()).status == 200);
}

TEST_CASE("sessions are isolated") {
    SessionStore store;
    const std::string a = store.create(library_text()).body["id"];
    const std::string b = store.create(library_text()).body["id"];
    CHECK(a != b);
    store.update_ethics(a, ethics_text("data-protection"));
    CHECK(store.run(a).body["edges"].size() == 20);
    CHECK(store.run(b).body["edges"].size() == 4);
    CHECK(store.get(b).body["forbidden"].empty());
}

TEST_CASE("scenario replacement and snapshots") {
    const auto dir = std::filesystem::temp_directory_path() / "retro-snapshots-test";
    std::filesystem::remove_all(dir);
    SessionStore store(dir);
    const std::string id = store.create(library_text()).body["id"];
    const auto replaced = store.replace_scenario(id, read_text(scenario_path("coin-apple.json")));
    CHECK(replaced.status == 200);
    CHECK(replaced.body["revision"] == 1);
    CHECK(store.run(id).body["selected"] == nlohmann::json::array({"flip-coin"}));

    const auto snap = store.snapshot(id);
    REQUIRE(snap.status == 200);
    const std::string path = snap.body["path"];
    CHECK(std::filesystem::path(path).filename() == id + "-r1.json");
    CHECK(parse_scenario(read_text(path)).document.name == retro::testing::load("coin-apple.json").name);
    std::filesystem::remove_all(dir);
}

TEST_CASE("http round trip") {
    SessionStore store;
    httplib::Server server;
    retro::service::register_routes(server, store);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/sessions", library_text(), "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    const std::string id = nlohmann::json::parse(created->body)["id"];

    CHECK(client.Get("/sessions/" + id + "/result")->status == 404);
    auto ethics = client.Put("/sessions/" + id + "/ethics", ethics_text("data-protection"), "application/json");
    CHECK(ethics->status == 200);
    auto run = client.Post("/sessions/" + id + "/run", "", "application/json");
    REQUIRE(run);
    const auto body = nlohmann::json::parse(run->body);
    CHECK(body["edges"].size() == 20);
    CHECK(body["dilemma"] == true);
    CHECK(client.Get("/sessions/" + id + "/result")->status == 200);
    CHECK(client.Get("/sessions/" + id)->status == 200);
    CHECK(client.Get("/sessions/nope")->status == 404);
    CHECK(client.Post("/sessions/" + id + "/snapshot", "", "application/json")->status == 409);
    CHECK(client.Put("/sessions/" + id + "/scenario", "{", "application/json")->status == 400);

    server.stop();
    worker.join();
}

}  // TEST_SUITE
