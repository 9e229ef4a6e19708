#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "respeval/judge.hpp"

namespace respeval::judge {

/// Hex SHA-256 over the length-framed system text, user text, model identifier,
/// temperature and max_tokens.
std::string cache_key(std::string_view system_text, std::string_view user_text, const JudgeConfig& config);

/// Directory of immutable <key>.json entries holding raw model responses.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path dir);

    [[nodiscard]] std::optional<std::string> lookup(const std::string& key) const;
    /// Atomic insert; an existing entry is kept as is. Returns false if the key was present.
    bool insert(const std::string& key, std::string_view response, std::string_view model) const;
    [[nodiscard]] const std::filesystem::path& directory() const { return dir_; }

private:
    std::filesystem::path dir_;
};

/// Consults the cache before delegating to the wrapped client.
class CachingChatClient : public ChatClient {
public:
    /// With offline set, a cache miss throws TransportError instead of calling `inner`.
    CachingChatClient(ChatClient& inner, ResponseCache cache, bool offline = false);

    std::string complete(std::string_view system_text, std::string_view user_text,
                         const JudgeConfig& config) override;

    [[nodiscard]] std::size_t hits() const { return hits_.load(); }
    [[nodiscard]] std::size_t misses() const { return misses_.load(); }

private:
    ChatClient& inner_;
    ResponseCache cache_;
    bool offline_;
    std::atomic<std::size_t> hits_{0};
    std::atomic<std::size_t> misses_{0};
};

}  // namespace respeval::judge
