#include "geomove/api.hpp"

#include <httplib.h>

#include <algorithm>

namespace geomove {

struct HttpServer::Impl {
    httplib::Server svr;
};

HttpServer::HttpServer(const Api& api, std::vector<std::string> cors_allow) : impl_(std::make_unique<Impl>()) {
    auto allowed = [cors = std::move(cors_allow)](const std::string& origin) {
        return std::find(cors.begin(), cors.end(), "*") != cors.end() ||
               std::find(cors.begin(), cors.end(), origin) != cors.end();
    };
    impl_->svr.Get(R"(/.*)", [&api, allowed](const httplib::Request& req, httplib::Response& res) {
        Response r = api.handle(req.path, req.params);
        res.status = r.status;
        res.set_content(r.body, "application/json; charset=utf-8");
        if (req.has_header("Origin")) {
            const auto origin = req.get_header_value("Origin");
            if (allowed(origin)) {
                res.set_header("Access-Control-Allow-Origin", origin);
                res.set_header("Vary", "Origin");
            }
        }
    });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->svr.bind_to_any_port(host);
    return impl_->svr.bind_to_port(host, port) ? port : -1;
}

void HttpServer::run() { impl_->svr.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_->svr.is_running()) impl_->svr.stop();
}

}  // namespace geomove
