#pragma once

#include "geomove/class_breaks.hpp"
#include "geomove/geo_binning.hpp"
#include "geomove/movement_scorer.hpp"
#include "geomove/search_index.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geomove {

inline constexpr int kApiVersion = 1;
inline constexpr char kConfigEnvVar[] = "GEOMOVE_CONFIG";

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::filesystem::path gazetteer;
    std::filesystem::path boundaries;  // optional
    std::filesystem::path lexicon;     // optional; built-in lexicon when empty
    std::filesystem::path rules;       // optional; built-in modified rules when empty
    std::filesystem::path index_dir;
    double threshold = kDefaultMovementThreshold;
    BreakMethod default_method = BreakMethod::Jenks;
    int default_k = 5;
    std::vector<std::string> cors_allow;  // exact origins, or "*"
    HexSizes hex;

    /// Keys: listen ("host:port"), gazetteer, boundaries, lexicon, rules,
    /// index_dir, threshold, default_method, default_k, cors_allow,
    /// hex {large, small}. Relative paths resolve against `base_dir`.
    /// Throws Error(BadConfig).
    static ServiceConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
    static ServiceConfig load(const std::filesystem::path& path);

    /// Throws Error(BadConfig) for bad values; with `check_paths`, also when
    /// a configured path does not exist.
    void validate(bool check_paths) const;
};

/// GEOMOVE_CONFIG, when set and non-empty, wins over `flag`.
std::filesystem::path resolve_config_path(const std::filesystem::path& flag);

/// Query-string parameters; repeated keys allowed.
using Params = std::multimap<std::string, std::string>;

struct Response {
    int status = 200;
    std::string body;
};

struct ApiOptions {
    double threshold = kDefaultMovementThreshold;
    BreakMethod default_method = BreakMethod::Jenks;
    int default_k = 5;
    std::shared_ptr<const Boundaries> boundaries;  // may be null
};

/// Request handler for the read-only endpoints /search, /bins,
/// /connections, /bigrams, /timeline and /statements. Every request reads
/// one snapshot, and statements at or below the threshold are never
/// returned, whatever the index holds.
///
/// Parameters: text, sources, movement_class, t0, t1, scale, bins, page,
/// page_size, method, k, exclude, limit. List parameters are
/// comma-separated or repeated. Scale defaults to country.
class Api {
public:
    Api(const SearchIndex& index, ApiOptions opts);

    Response handle(std::string_view path, const Params& params) const;

private:
    const SearchIndex& index_;
    ApiOptions opts_;
};

/// HTTP front end for an Api. GET only; adds CORS headers for allowed origins.
class HttpServer {
public:
    HttpServer(const Api& api, std::vector<std::string> cors_allow);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Port 0 picks a free port. Returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after bind().
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace geomove
