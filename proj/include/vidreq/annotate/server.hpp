#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "vidreq/annotate/store.hpp"
#include "vidreq/core/model.hpp"

namespace httplib {
class Server;
}

namespace vidreq::annotate {

struct ServerContext {
    LabelStore* store = nullptr;
    CorpusManifest manifest;
    std::filesystem::path bundles_dir;  // bundles/<id>.json, optional
    std::filesystem::path themes_dir;   // themes/<product>.json, optional
};

// JSON API for the annotation UI. Handlers may run concurrently; the store
// serializes writes.
class AnnotationServer {
public:
    explicit AnnotationServer(ServerContext context);
    ~AnnotationServer();

    AnnotationServer(const AnnotationServer&) = delete;
    AnnotationServer& operator=(const AnnotationServer&) = delete;

    // Binds; port 0 picks a free port. Returns the bound port.
    int bind(const std::string& host, int port);
    // Serves until stop(); call after bind().
    void run();
    void stop();

private:
    void routes();

    ServerContext ctx_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace vidreq::annotate
