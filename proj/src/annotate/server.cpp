#include "vidreq/annotate/server.hpp"

#include <httplib.h>

#include "vidreq/core/error.hpp"
#include "vidreq/core/io.hpp"
#include "vidreq/themes/report.hpp"

namespace vidreq::annotate {

namespace {

int status_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::UnknownSession: return 404;
    case ErrorKind::ForeignAnnotator: return 403;
    case ErrorKind::KeySetMismatch:
    case ErrorKind::UnresolvedDisagreement: return 409;
    default: return is_backend_failure(kind) ? 502 : 400;
    }
}

void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, ErrorKind kind, const std::string& detail) {
    send_json(res, status_for(kind), {{"error", to_string(kind)}, {"detail", detail}});
}

// Runs a handler body, turning failures into JSON error replies.
template <typename F>
httplib::Server::Handler guarded(F f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
        try {
            f(req, res);
        } catch (const Error& e) {
            send_error(res, e.kind(), e.detail());
        } catch (const nlohmann::json::exception& e) {
            send_error(res, ErrorKind::InvalidRecord, e.what());
        }
    };
}

nlohmann::json parse_body(const httplib::Request& req) {
    auto j = nlohmann::json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error(ErrorKind::InvalidRecord, "request body must be a JSON object");
    return j;
}

Label label_arg(const nlohmann::json& j) {
    auto l = parse_label(j.at("label").get<std::string>());
    if (!l) throw Error(ErrorKind::InvalidRecord, "label must be \"relevant\" or \"irrelevant\"");
    return *l;
}

}  // namespace

AnnotationServer::AnnotationServer(ServerContext context)
    : ctx_(std::move(context)), server_(std::make_unique<httplib::Server>()) {
    if (!ctx_.store) throw Error(ErrorKind::InvalidConfig, "annotation server needs a label store");
    routes();
}

AnnotationServer::~AnnotationServer() { stop(); }

int AnnotationServer::bind(const std::string& host, int port) {
    const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw Error(ErrorKind::Io, "cannot bind " + host + ":" + std::to_string(port));
    return bound;
}

void AnnotationServer::run() { server_->listen_after_bind(); }

void AnnotationServer::stop() {
    if (server_) server_->stop();
}

void AnnotationServer::routes() {
    auto& s = *server_;
    LabelStore& store = *ctx_.store;
    const ServerContext& ctx = ctx_;

    s.Get("/healthz", [](const httplib::Request&, httplib::Response& res) { send_json(res, 200, {{"status", "ok"}}); });

    s.Post("/api/sessions", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const auto body = parse_body(req);
               auto mode = parse_session_mode(body.at("mode").get<std::string>());
               if (!mode) throw Error(ErrorKind::InvalidRecord, "mode must be \"pair\" or \"solo\"");
               const auto id = store.create_session(*mode, body.at("annotators").get<std::vector<std::string>>(),
                                                    body.at("record_ids").get<std::vector<std::string>>(),
                                                    body.value("session_id", ""));
               send_json(res, 201, {{"session_id", id}});
           }));

    s.Get(R"(/api/sessions/([^/]+)/next)", guarded([&store, &ctx](const httplib::Request& req, httplib::Response& res) {
              const std::string session = req.matches[1];
              const auto annotator = req.get_param_value("annotator");
              if (annotator.empty()) throw Error(ErrorKind::InvalidRecord, "annotator query parameter required");
              const auto next = store.next_record(session, annotator);
              if (!next) {
                  res.status = 204;
                  return;
              }
              const VideoRecord* r = ctx.manifest.find(*next);
              nlohmann::json task = {{"record_id", *next}};
              if (r) {
                  task["title"] = r->title;
                  task["description"] = r->description;
                  task["platform"] = to_string(r->platform);
              }
              TextBundle bundle;
              const auto path = ctx.bundles_dir / (*next + ".json");
              if (!ctx.bundles_dir.empty() && std::filesystem::exists(path)) bundle = bundle_from_json(read_json(path));
              task["audio_text"] = bundle.audio_text;
              nlohmann::json lines = nlohmann::json::array();
              for (const auto& l : bundle.visual_lines) lines.push_back({{"frame_ts_s", l.frame_ts_s}, {"text", l.text}});
              task["visual_lines"] = lines;
              send_json(res, 200, task);
          }));

    s.Post(R"(/api/sessions/([^/]+)/labels)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const auto body = parse_body(req);
               const auto e = store.record_label(req.matches[1], body.at("record_id").get<std::string>(),
                                                 body.at("annotator").get<std::string>(), label_arg(body));
               send_json(res, 201,
                         {{"session_id", e.session}, {"record_id", e.record_id}, {"annotator", e.annotator},
                          {"label", to_string(e.label)}});
           }));

    s.Get(R"(/api/sessions/([^/]+)/agreement)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
              send_json(res, 200, to_json(store.session_agreement(req.matches[1])));
          }));

    s.Post(R"(/api/sessions/([^/]+)/resolutions)",
           guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const auto body = parse_body(req);
               const std::string record = body.at("record_id").get<std::string>();
               const Label label = label_arg(body);
               store.record_resolution(req.matches[1], record, label);
               send_json(res, 201, {{"session_id", std::string(req.matches[1])}, {"record_id", record},
                                    {"label", to_string(label)}});
           }));

    s.Get("/api/themes", guarded([&store, &ctx](const httplib::Request&, httplib::Response& res) {
              std::vector<themes::ProductThemes> products;
              if (!ctx.themes_dir.empty() && std::filesystem::is_directory(ctx.themes_dir)) {
                  for (const auto& entry : std::filesystem::directory_iterator(ctx.themes_dir)) {
                      if (entry.path().extension() != ".json" || entry.path().filename() == "rollup.json") continue;
                      products.push_back(themes::product_themes_from_json(read_json(entry.path())));
                  }
              }
              const auto report = themes::build_theme_report(std::move(products), store.theme_names());
              nlohmann::json out = nlohmann::json::array();
              for (const auto& p : report.products) out.push_back(themes::to_json(p));
              send_json(res, 200, {{"products", out}, {"rollup", themes::rollup_to_json(report)}});
          }));

    s.Post(R"(/api/themes/(-?\d+)/name)", guarded([&store, &ctx](const httplib::Request& req, httplib::Response& res) {
               const auto body = parse_body(req);
               const int cluster = std::stoi(req.matches[1]);
               const auto name = body.at("name").get<std::string>();
               std::string product = body.value("product", "");
               if (product.empty()) {
                   // Unambiguous only when a single product has theme output.
                   std::vector<std::string> found;
                   if (!ctx.themes_dir.empty() && std::filesystem::is_directory(ctx.themes_dir)) {
                       for (const auto& entry : std::filesystem::directory_iterator(ctx.themes_dir)) {
                           if (entry.path().extension() == ".json" && entry.path().filename() != "rollup.json") {
                               found.push_back(read_json(entry.path()).at("product").get<std::string>());
                           }
                       }
                   }
                   if (found.size() != 1) throw Error(ErrorKind::InvalidRecord, "product required");
                   product = found.front();
               }
               store.set_theme_name(product, cluster, name);
               send_json(res, 201, {{"product", product}, {"cluster_id", cluster}, {"name", name}});
           }));
}

}  // namespace vidreq::annotate
