#include "tunesearch/llm/gateway.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace tunesearch::llm {

namespace {

void default_sleep_for(int attempt) {
    // 1s, 4s, 16s
    int seconds = 1;
    for (int i = 0; i < attempt; ++i) seconds *= 4;
    std::this_thread::sleep_for(std::chrono::seconds(seconds));
}

// Splits e.g. "https://host:443/api/v1" into the scheme-host-port part the
// client wants and the path prefix for requests.
std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
    std::size_t scheme_end = base_url.find("://");
    std::size_t path_start =
        base_url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    if (path_start == std::string::npos) return {base_url, ""};
    std::string prefix = base_url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    return {base_url.substr(0, path_start), prefix};
}

} // namespace

std::string HttpBackend::complete(const ChatRequest& request) {
    nlohmann::json body{
        {"model", request.model},
        {"temperature", request.temperature},
        {"max_tokens", request.max_tokens},
    };
    body["messages"] = nlohmann::json::array();
    for (const ChatMessage& m : request.messages)
        body["messages"].push_back({{"role", m.role}, {"content", m.content}});
    std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= config_.retries; ++attempt) {
        if (attempt > 0) {
            if (config_.sleeper) config_.sleeper(attempt - 1);
            else default_sleep_for(attempt - 1);
        }
        auto [host, prefix] = split_base_url(config_.base_url);
        httplib::Client client(host);
        client.set_connection_timeout(30);
        client.set_read_timeout(300);
        httplib::Headers headers{{"Authorization", "Bearer " + config_.api_key}};
        httplib::Result res =
            client.Post(prefix + "/chat/completions", headers, payload, "application/json");
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status < 200 || res->status >= 300) {
            last_error = "HTTP status " + std::to_string(res->status);
            continue;
        }
        try {
            nlohmann::json parsed = nlohmann::json::parse(res->body);
            return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw MalformedResponse(std::string("response lacks message content: ") + e.what());
        }
    }
    throw TransportError("request failed after " + std::to_string(config_.retries + 1) +
                         " attempts: " + last_error);
}

ScriptedBackend::ScriptedBackend(std::vector<std::string> responses) {
    for (std::string& r : responses) shared_.push_back(std::move(r));
}

std::unique_ptr<ScriptedBackend> ScriptedBackend::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open replay file '" + path + "'");
    auto backend = std::make_unique<ScriptedBackend>(std::vector<std::string>{});
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            std::string response = j.at("response").get<std::string>();
            if (j.contains("process"))
                backend->per_process_[j.at("process").get<int>()].push_back(std::move(response));
            else
                backend->shared_.push_back(std::move(response));
        } catch (const nlohmann::json::exception& e) {
            throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return backend;
}

std::string ScriptedBackend::complete(const ChatRequest& request) {
    std::lock_guard lock(mutex_);
    auto it = per_process_.find(request.process_id);
    if (it != per_process_.end() && !it->second.empty()) {
        std::string r = std::move(it->second.front());
        it->second.pop_front();
        return r;
    }
    if (!shared_.empty()) {
        std::string r = std::move(shared_.front());
        shared_.pop_front();
        return r;
    }
    throw ScriptExhausted("scripted backend has no response left for process " +
                          std::to_string(request.process_id));
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool is_fence(const std::string& line) {
    std::size_t i = line.find_first_not_of(" \t");
    return i != std::string::npos && line.compare(i, 3, "```") == 0;
}

// Markdown fences removed: if any fenced block exists, only fenced content
// survives.
std::vector<std::string> strip_fences(const std::vector<std::string>& lines) {
    bool has_fence = false;
    for (const std::string& l : lines)
        if (is_fence(l)) {
            has_fence = true;
            break;
        }
    if (!has_fence) return lines;
    std::vector<std::string> out;
    bool inside = false;
    for (const std::string& l : lines) {
        if (is_fence(l)) {
            inside = !inside;
            continue;
        }
        if (inside) out.push_back(l);
    }
    return out;
}

std::string strip_comment(const std::string& line) {
    char quote = '\0';
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quote != '\0') {
            if (c == '\\') ++i;
            else if (c == quote) quote = '\0';
        } else if (c == '\'' || c == '"') {
            quote = c;
        } else if (c == '#') {
            std::string trimmed = line.substr(0, i);
            while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t'))
                trimmed.pop_back();
            return trimmed;
        }
    }
    return line;
}

int bracket_delta(const std::string& line) {
    int delta = 0;
    char quote = '\0';
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quote != '\0') {
            if (c == '\\') ++i;
            else if (c == quote) quote = '\0';
        } else if (c == '\'' || c == '"') {
            quote = c;
        } else if (c == '(' || c == '[') {
            ++delta;
        } else if (c == ')' || c == ']') {
            --delta;
        }
    }
    return delta;
}

} // namespace

priolang::SourceProgram extract_program(const std::string& response) {
    std::vector<std::string> lines = strip_fences(split_lines(response));
    for (std::string& l : lines) l = strip_comment(l);

    std::size_t last_def = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].rfind("def ", 0) == 0) last_def = i;
    if (last_def == lines.size()) throw NoProgramFound("response contains no function definition");

    std::string out = lines[last_def] + "\n";
    int depth = bracket_delta(lines[last_def]);
    for (std::size_t i = last_def + 1; i < lines.size(); ++i) {
        const std::string& l = lines[i];
        bool blank = l.find_first_not_of(" \t") == std::string::npos;
        if (!blank && depth <= 0 && l[0] != ' ' && l[0] != '\t') break; // end of the def block
        out += l;
        out += "\n";
        depth += bracket_delta(l);
    }
    return priolang::SourceProgram{out, priolang::Origin::Llm};
}

} // namespace tunesearch::llm
