#include "respeval/response_cache.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <system_error>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace respeval::judge {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

void frame(std::string& buf, std::string_view field) {
    buf += std::to_string(field.size());
    buf += ':';
    buf += field;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

std::string unique_suffix() {
    thread_local std::mt19937_64 gen{std::random_device{}()};
    return fmt::format("{:016x}", gen());
}

}  // namespace

std::string cache_key(std::string_view system_text, std::string_view user_text, const JudgeConfig& config) {
    std::string buf;
    frame(buf, system_text);
    frame(buf, user_text);
    frame(buf, config.model_identifier);
    frame(buf, fmt::format("{:.17g}", config.temperature));
    frame(buf, std::to_string(config.max_tokens));
    return sha256_hex(buf);
}

ResponseCache::ResponseCache(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoFailure(fmt::format("cannot create cache directory {}: {}", dir_.string(), ec.message()));
}

std::optional<std::string> ResponseCache::lookup(const std::string& key) const {
    std::ifstream in(dir_ / (key + ".json"));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    const json doc = json::parse(ss.str(), nullptr, false);
    if (doc.is_discarded() || !doc.contains("response") || !doc["response"].is_string()) {
        throw IoFailure(fmt::format("corrupt cache entry {}.json", key));
    }
    return doc["response"].get<std::string>();
}

bool ResponseCache::insert(const std::string& key, std::string_view response, std::string_view model) const {
    const fs::path target = dir_ / (key + ".json");
    if (fs::exists(target)) return false;
    const fs::path temp = dir_ / fmt::format(".{}.{}.tmp", key, unique_suffix());
    {
        std::ofstream out(temp, std::ios::binary);
        if (!out) throw IoFailure("cannot write cache entry " + temp.string());
        out << json{{"key", key}, {"model", std::string(model)}, {"response", std::string(response)}}.dump() << '\n';
        if (!out) throw IoFailure("write failed for cache entry " + temp.string());
    }
    // Hard-linking fails if the target exists, so a concurrent writer never clobbers an entry.
    std::error_code ec;
    fs::create_hard_link(temp, target, ec);
    fs::remove(temp);
    if (ec == std::errc::file_exists) return false;
    if (ec) throw IoFailure(fmt::format("cannot publish cache entry {}: {}", target.string(), ec.message()));
    return true;
}

CachingChatClient::CachingChatClient(ChatClient& inner, ResponseCache cache, bool offline)
    : inner_(inner), cache_(std::move(cache)), offline_(offline) {}

std::string CachingChatClient::complete(std::string_view system_text, std::string_view user_text,
                                        const JudgeConfig& config) {
    const std::string key = cache_key(system_text, user_text, config);
    if (auto hit = cache_.lookup(key)) {
        ++hits_;
        return *hit;
    }
    ++misses_;
    if (offline_) throw TransportError("cache miss for " + key + " in offline mode");
    std::string response = inner_.complete(system_text, user_text, config);
    cache_.insert(key, response, config.model_identifier);
    return response;
}

}  // namespace respeval::judge
