#include "respeval/http_chat_client.hpp"

#include <cstdlib>
#include <regex>

#include <fmt/format.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

namespace respeval::judge {

using json = nlohmann::json;

namespace {

struct Endpoint {
    std::string origin;  // scheme://host[:port]
    std::string path;
};

Endpoint split_url(const std::string& url) {
    static const std::regex pattern(R"(^(https?://[^/]+)(/.*)?$)");
    std::smatch m;
    if (!std::regex_match(url, m, pattern)) throw ConfigError("unsupported endpoint URL: " + url);
    return {m[1].str(), m[2].matched ? m[2].str() : std::string("/")};
}

}  // namespace

std::string build_chat_request(std::string_view system_text, std::string_view user_text, const JudgeConfig& config) {
    json body = {
        {"model", config.model_identifier},
        {"messages",
         json::array({{{"role", "system"}, {"content", std::string(system_text)}},
                      {{"role", "user"}, {"content", std::string(user_text)}}})},
        {"temperature", config.temperature},
        {"max_tokens", config.max_tokens},
    };
    return body.dump();
}

std::string parse_chat_response(std::string_view body) {
    const json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded()) throw TransportError("chat response is not JSON");
    try {
        return doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw TransportError(fmt::format("chat response lacks choices[0].message.content ({})", e.what()));
    }
}

HttpChatClient::HttpChatClient(std::string api_key) : api_key_(std::move(api_key)) {}

HttpChatClient HttpChatClient::from_environment() {
    const char* key = std::getenv("RESPEVAL_LLM_API_KEY");
    return HttpChatClient(key ? key : "");
}

std::string HttpChatClient::complete(std::string_view system_text, std::string_view user_text,
                                     const JudgeConfig& config) {
    const Endpoint ep = split_url(config.endpoint_url);
    httplib::Client client(ep.origin);
    const auto secs = static_cast<time_t>(config.timeout.count());
    client.set_connection_timeout(secs, 0);
    client.set_read_timeout(secs, 0);
    client.set_write_timeout(secs, 0);

    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    auto res = client.Post(ep.path, headers, build_chat_request(system_text, user_text, config), "application/json");
    if (!res) throw TransportError(fmt::format("request to {} failed: {}", ep.origin, httplib::to_string(res.error())));
    if (res->status != 200) {
        throw TransportError(fmt::format("endpoint returned HTTP {}: {}", res->status, res->body.substr(0, 200)));
    }
    return parse_chat_response(res->body);
}

}  // namespace respeval::judge
