#pragma once

#include <string>
#include <string_view>

#include "respeval/judge.hpp"

namespace respeval::judge {

/// Chat-completions request body: {model, messages:[system, user], temperature, max_tokens}.
std::string build_chat_request(std::string_view system_text, std::string_view user_text, const JudgeConfig& config);

/// Pulls choices[0].message.content out of a chat-completions response. Throws TransportError.
std::string parse_chat_response(std::string_view body);

/// Talks to an OpenAI-compatible endpoint over HTTP(S). Safe for concurrent use.
class HttpChatClient : public ChatClient {
public:
    /// Empty api_key means no Authorization header.
    explicit HttpChatClient(std::string api_key);
    /// Reads the key from RESPEVAL_LLM_API_KEY.
    static HttpChatClient from_environment();

    std::string complete(std::string_view system_text, std::string_view user_text,
                         const JudgeConfig& config) override;

private:
    std::string api_key_;
};

}  // namespace respeval::judge
