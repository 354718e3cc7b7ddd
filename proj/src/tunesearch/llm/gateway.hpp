#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tunesearch/common/errors.hpp"
#include "tunesearch/priolang/program.hpp"

namespace tunesearch::llm {

struct BudgetExhausted : Error {
    using Error::Error;
};
struct TransportError : Error {
    using Error::Error;
};
struct MalformedResponse : Error {
    using Error::Error;
};
struct ScriptExhausted : Error {
    using Error::Error;
};
struct NoProgramFound : Error {
    using Error::Error;
};

struct ChatMessage {
    std::string role;
    std::string content;
};

struct ChatRequest {
    std::string model;
    std::vector<ChatMessage> messages; // exactly one user message with the prompt
    double temperature = 1.0;
    int max_tokens = 4096;
    int process_id = 0; // lets the scripted backend route per-process scripts
};

// Global LLM-call budget shared by all search processes. Increments are
// serialized; every call, successful or failed, consumes one unit.
class BudgetCounter {
public:
    explicit BudgetCounter(std::uint64_t limit) : limit_(limit) {}

    void consume() {
        std::lock_guard lock(mutex_);
        if (used_ >= limit_) throw BudgetExhausted("LLM call budget exhausted");
        ++used_;
    }
    std::uint64_t used() const {
        std::lock_guard lock(mutex_);
        return used_;
    }
    std::uint64_t limit() const { return limit_; }
    bool exhausted() const { return used() >= limit_; }

private:
    std::uint64_t limit_;
    mutable std::uint64_t used_ = 0;
    mutable std::mutex mutex_;
};

class Backend {
public:
    virtual ~Backend() = default;
    virtual std::string complete(const ChatRequest& request) = 0;
};

struct HttpConfig {
    std::string base_url; // e.g. https://openrouter.ai/api/v1
    std::string api_key;
    int retries = 3;
    // Seconds before retry attempt i (defaults 1, 4, 16). Injectable so
    // tests do not sleep.
    std::function<void(int)> sleeper;
};

// OpenRouter-compatible chat-completions client: POSTs to
// {base_url}/chat/completions with bearer auth and returns the first
// choice's message content.
class HttpBackend : public Backend {
public:
    explicit HttpBackend(HttpConfig config) : config_(std::move(config)) {}
    std::string complete(const ChatRequest& request) override;

private:
    HttpConfig config_;
};

// Deterministic backend replaying canned responses, either from a shared
// queue or per-process queues (JSON-lines entries carrying a "process" key).
class ScriptedBackend : public Backend {
public:
    explicit ScriptedBackend(std::vector<std::string> responses);
    static std::unique_ptr<ScriptedBackend> from_file(const std::string& path);

    std::string complete(const ChatRequest& request) override;

private:
    std::mutex mutex_;
    std::deque<std::string> shared_;
    std::map<int, std::deque<std::string>> per_process_;
};

// Backend plus budget accounting.
class Gateway {
public:
    Gateway(std::unique_ptr<Backend> backend, std::uint64_t budget_limit)
        : backend_(std::move(backend)), budget_(budget_limit) {}

    std::string complete(const ChatRequest& request) {
        budget_.consume();
        return backend_->complete(request);
    }
    const BudgetCounter& budget() const { return budget_; }

private:
    std::unique_ptr<Backend> backend_;
    BudgetCounter budget_;
};

// Pulls the program out of a raw model response: strips Markdown fences and
// comments, then returns the last function defined. Throws NoProgramFound.
priolang::SourceProgram extract_program(const std::string& response);

// Environment-variable names used by the CLI to configure the HTTP backend.
inline constexpr const char* kEnvApiKey = "LLM_API_KEY";
inline constexpr const char* kEnvBaseUrl = "LLM_BASE_URL";
inline constexpr const char* kEnvModel = "LLM_MODEL";

} // namespace tunesearch::llm
