#include <doctest.h>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <thread>

#include "respeval/http_chat_client.hpp"

using namespace respeval;
using namespace respeval::judge;
using json = nlohmann::json;

namespace {

// Serves one chat-completions route on a free localhost port for the lifetime of the object.
class LocalEndpoint {
public:
    explicit LocalEndpoint(httplib::Server::Handler handler) {
        server_.Post("/v1/chat/completions", std::move(handler));
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~LocalEndpoint() {
        server_.stop();
        thread_.join();
    }
    [[nodiscard]] std::string url() const {
        return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
    }

private:
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

std::string reply(const std::string& content) {
    return json{{"choices", json::array({{{"message", {{"role", "assistant"}, {"content", content}}}}})}}.dump();
}

}  // namespace

TEST_CASE("request body") {
    JudgeConfig c;
    c.temperature = 0.0;
    c.max_tokens = 300;
    const auto body = json::parse(build_chat_request("sys", "usr", c));
    CHECK(body["model"] == "gpt-4o-mini-2024-07-18");
    CHECK(body["temperature"] == 0.0);
    CHECK(body["max_tokens"] == 300);
    REQUIRE(body["messages"].size() == 2);
    CHECK(body["messages"][0]["role"] == "system");
    CHECK(body["messages"][0]["content"] == "sys");
    CHECK(body["messages"][1]["role"] == "user");
    CHECK(body["messages"][1]["content"] == "usr");
}

TEST_CASE("response parsing") {
    CHECK(parse_chat_response(reply("hello")) == "hello");
    CHECK_THROWS_AS(parse_chat_response("not json"), TransportError);
    CHECK_THROWS_AS(parse_chat_response(R"({"choices": []})"), TransportError);
    CHECK_THROWS_AS(parse_chat_response(R"({"error": {"message": "quota"}})"), TransportError);
}

TEST_CASE("round trip against a local endpoint") {
    std::string seen_auth;
    json seen_body;
    LocalEndpoint ep([&](const httplib::Request& req, httplib::Response& res) {
        seen_auth = req.get_header_value("Authorization");
        seen_body = json::parse(req.body);
        res.set_content(reply(R"({"effort": 3, "reason": "ok"})"), "application/json");
    });
    JudgeConfig c;
    c.endpoint_url = ep.url();
    c.timeout = std::chrono::seconds(5);
    HttpChatClient client("secret-key");
    CHECK(client.complete("system text", "user text", c) == R"({"effort": 3, "reason": "ok"})");
    CHECK(seen_auth == "Bearer secret-key");
    CHECK(seen_body["messages"][1]["content"] == "user text");

    HttpChatClient anonymous("");
    anonymous.complete("s", "u", c);
    CHECK(seen_auth.empty());
}

TEST_CASE("non-200 and unreachable endpoints raise TransportError") {
    LocalEndpoint ep([](const httplib::Request&, httplib::Response& res) {
        res.status = 429;
        res.set_content(R"({"error": "rate limited"})", "application/json");
    });
    JudgeConfig c;
    c.endpoint_url = ep.url();
    c.timeout = std::chrono::seconds(5);
    HttpChatClient client("k");
    CHECK_THROWS_AS(client.complete("s", "u", c), TransportError);

    c.endpoint_url = "http://127.0.0.1:1/v1/chat/completions";
    c.timeout = std::chrono::seconds(1);
    CHECK_THROWS_AS(client.complete("s", "u", c), TransportError);
    c.endpoint_url = "not a url";
    CHECK_THROWS(client.complete("s", "u", c));
}
