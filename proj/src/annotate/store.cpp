#include "vidreq/annotate/store.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "vidreq/core/clock.hpp"
#include "vidreq/core/error.hpp"
#include "vidreq/core/io.hpp"
#include "vidreq/core/text.hpp"

namespace vidreq::annotate {

std::string_view to_string(SessionMode m) { return m == SessionMode::Pair ? "pair" : "solo"; }

std::optional<SessionMode> parse_session_mode(std::string_view s) {
    if (s == "pair" || s == "Pair") return SessionMode::Pair;
    if (s == "solo" || s == "Solo") return SessionMode::Solo;
    return std::nullopt;
}

bool AnnotationSession::has_annotator(const std::string& a) const {
    return std::find(annotators.begin(), annotators.end(), a) != annotators.end();
}

bool AnnotationSession::has_record(const std::string& r) const {
    return std::find(assigned_records.begin(), assigned_records.end(), r) != assigned_records.end();
}

namespace {

Label label_field(const nlohmann::json& j) {
    auto l = parse_label(j.at("label").get<std::string>());
    if (!l) throw Error(ErrorKind::InvalidRecord, "unknown label " + j.at("label").dump());
    return *l;
}

// Mutation against a plain state; shared by live writes and replay.
void apply_event(StoreState& state, const nlohmann::json& e) {
    const auto type = e.at("event").get<std::string>();
    if (type == "session_created") {
        AnnotationSession s;
        s.session_id = e.at("session_id").get<std::string>();
        auto mode = parse_session_mode(e.at("mode").get<std::string>());
        if (!mode) throw Error(ErrorKind::InvalidRecord, "unknown session mode");
        s.mode = *mode;
        s.annotators = e.at("annotators").get<std::vector<std::string>>();
        s.assigned_records = e.at("record_ids").get<std::vector<std::string>>();
        s.created_at = e.value("created_at", "");
        if (state.sessions.contains(s.session_id)) {
            throw Error(ErrorKind::InvalidRecord, "session '" + s.session_id + "' created twice");
        }
        state.session_order.push_back(s.session_id);
        state.sessions.emplace(s.session_id, std::move(s));
    } else if (type == "label") {
        auto& s = state.sessions.at(e.at("session_id").get<std::string>());
        s.labels[e.at("annotator").get<std::string>()][e.at("record_id").get<std::string>()] = label_field(e);
    } else if (type == "resolution") {
        auto& s = state.sessions.at(e.at("session_id").get<std::string>());
        s.resolutions[e.at("record_id").get<std::string>()] = label_field(e);
    } else if (type == "theme_name") {
        state.theme_names[{e.at("product").get<std::string>(), e.at("cluster_id").get<int>()}] =
            e.at("name").get<std::string>();
    } else {
        throw Error(ErrorKind::InvalidRecord, "unknown event '" + type + "'");
    }
}

}  // namespace

StoreState replay(const std::string& log_text) {
    StoreState state;
    std::istringstream in(log_text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            apply_event(state, nlohmann::json::parse(line));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::InvalidRecord, "label log line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::out_of_range&) {
            throw Error(ErrorKind::InvalidRecord, "label log line " + std::to_string(lineno) + ": unknown session");
        }
    }
    return state;
}

LabelStore::LabelStore() : clock_(now_timestamp) {}

LabelStore::LabelStore(std::filesystem::path log_path) : log_path_(std::move(log_path)), clock_(now_timestamp) {
    if (std::filesystem::exists(*log_path_)) state_ = replay(read_file(*log_path_));
}

void LabelStore::set_known_records(std::set<std::string> ids) {
    std::unique_lock lock(mutex_);
    known_records_ = std::move(ids);
}

void LabelStore::set_clock(Clock clock) {
    std::unique_lock lock(mutex_);
    clock_ = std::move(clock);
}

void LabelStore::append(const nlohmann::json& event) {
    if (log_path_) {
        std::ofstream out(*log_path_, std::ios::app | std::ios::binary);
        if (!out) throw Error(ErrorKind::Io, "cannot append to " + log_path_->string());
        out << event.dump() << '\n';
        out.flush();
        if (!out) throw Error(ErrorKind::Io, "write failed: " + log_path_->string());
    }
    apply_event(state_, event);
}

const AnnotationSession& LabelStore::session_locked(const std::string& id) const {
    auto it = state_.sessions.find(id);
    if (it == state_.sessions.end()) throw Error(ErrorKind::UnknownSession, id);
    return it->second;
}

std::string LabelStore::create_session(SessionMode mode, const std::vector<std::string>& annotators,
                                       const std::vector<std::string>& record_ids, std::string session_id) {
    const std::size_t want = mode == SessionMode::Pair ? 2 : 1;
    if (annotators.size() != want) {
        throw Error(ErrorKind::InvalidRecord, std::string(to_string(mode)) + " session needs " +
                                                  std::to_string(want) + " annotator(s)");
    }
    if (mode == SessionMode::Pair && annotators[0] == annotators[1]) {
        throw Error(ErrorKind::InvalidRecord, "pair session needs two distinct annotators");
    }
    for (const auto& a : annotators) {
        if (a.empty()) throw Error(ErrorKind::InvalidRecord, "empty annotator name");
    }
    std::set<std::string> seen;
    for (const auto& r : record_ids) {
        if (!seen.insert(r).second) throw Error(ErrorKind::InvalidRecord, "record '" + r + "' assigned twice");
    }

    std::unique_lock lock(mutex_);
    if (known_records_) {
        for (const auto& r : record_ids) {
            if (!known_records_->contains(r)) throw Error(ErrorKind::InvalidRecord, "record '" + r + "' not in corpus");
        }
    }
    if (session_id.empty()) {
        for (std::size_t n = state_.sessions.size() + 1;; ++n) {
            session_id = "S" + std::to_string(n);
            if (!state_.sessions.contains(session_id)) break;
        }
    } else if (state_.sessions.contains(session_id)) {
        throw Error(ErrorKind::InvalidRecord, "session '" + session_id + "' already exists");
    }
    append({{"event", "session_created"},
            {"session_id", session_id},
            {"mode", to_string(mode)},
            {"annotators", annotators},
            {"record_ids", record_ids},
            {"created_at", clock_()}});
    return session_id;
}

relevance::LabeledExample LabelStore::record_label(const std::string& session_id, const std::string& record_id,
                                                   const std::string& annotator, Label label) {
    std::unique_lock lock(mutex_);
    const auto& s = session_locked(session_id);
    if (!s.has_annotator(annotator)) {
        throw Error(ErrorKind::ForeignAnnotator, "'" + annotator + "' is not part of session " + session_id);
    }
    if (!s.has_record(record_id)) {
        throw Error(ErrorKind::UnassignedRecord, "'" + record_id + "' is not assigned to session " + session_id);
    }
    append({{"event", "label"},
            {"session_id", session_id},
            {"record_id", record_id},
            {"annotator", annotator},
            {"label", to_string(label)}});
    return {record_id, "", label, annotator, session_id};
}

void LabelStore::record_resolution(const std::string& session_id, const std::string& record_id, Label label) {
    std::unique_lock lock(mutex_);
    const auto& s = session_locked(session_id);
    if (s.mode != SessionMode::Pair) throw Error(ErrorKind::InvalidRecord, "resolutions apply to pair sessions");
    if (!s.has_record(record_id)) {
        throw Error(ErrorKind::UnassignedRecord, "'" + record_id + "' is not assigned to session " + session_id);
    }
    append({{"event", "resolution"}, {"session_id", session_id}, {"record_id", record_id}, {"label", to_string(label)}});
}

void LabelStore::set_theme_name(const std::string& product, int cluster_id, const std::string& name) {
    if (product.empty()) throw Error(ErrorKind::InvalidRecord, "theme name needs a product");
    std::unique_lock lock(mutex_);
    append({{"event", "theme_name"}, {"product", product}, {"cluster_id", cluster_id}, {"name", name}});
}

std::optional<std::string> LabelStore::next_record(const std::string& session_id,
                                                   const std::string& annotator) const {
    std::shared_lock lock(mutex_);
    const auto& s = session_locked(session_id);
    if (!s.has_annotator(annotator)) {
        throw Error(ErrorKind::ForeignAnnotator, "'" + annotator + "' is not part of session " + session_id);
    }
    auto it = s.labels.find(annotator);
    for (const auto& r : s.assigned_records) {
        if (it == s.labels.end() || !it->second.contains(r)) return r;
    }
    return std::nullopt;
}

namespace {

AgreementReport agreement_of(const AnnotationSession& s) {
    if (s.mode != SessionMode::Pair) throw Error(ErrorKind::InvalidRecord, "agreement needs a pair session");
    static const LabelMap kEmpty;
    auto find = [&](const std::string& a) -> const LabelMap& {
        auto it = s.labels.find(a);
        return it == s.labels.end() ? kEmpty : it->second;
    };
    const auto& a = find(s.annotators[0]);
    const auto& b = find(s.annotators[1]);
    LabelMap ca, cb;
    for (const auto& [r, l] : a) {
        if (auto it = b.find(r); it != b.end()) {
            ca.emplace(r, l);
            cb.emplace(r, it->second);
        }
    }
    if (ca.empty()) throw Error(ErrorKind::KeySetMismatch, "no record in " + s.session_id + " carries both labels");
    return compute_kappa(ca, cb);
}

}  // namespace

AgreementReport LabelStore::session_agreement(const std::string& session_id) const {
    std::shared_lock lock(mutex_);
    return agreement_of(session_locked(session_id));
}

AnnotationSession LabelStore::session(const std::string& session_id) const {
    std::shared_lock lock(mutex_);
    return session_locked(session_id);
}

StoreState LabelStore::snapshot() const {
    std::shared_lock lock(mutex_);
    return state_;
}

std::map<ThemeKey, std::string> LabelStore::theme_names() const {
    std::shared_lock lock(mutex_);
    return state_.theme_names;
}

KappaSummary summarize_kappa(const LabelStore& store) {
    const auto state = store.snapshot();
    KappaSummary out;
    double sum = 0.0;
    for (const auto& id : state.session_order) {
        const auto& s = state.sessions.at(id);
        if (s.mode != SessionMode::Pair) continue;
        try {
            out.sessions.push_back({id, agreement_of(s)});
            sum += out.sessions.back().report.kappa;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::KeySetMismatch) throw;
        }
    }
    if (!out.sessions.empty()) out.mean_kappa = sum / static_cast<double>(out.sessions.size());
    return out;
}

nlohmann::json to_json(const KappaSummary& s) {
    nlohmann::json sessions = nlohmann::json::array();
    for (const auto& k : s.sessions) {
        auto j = to_json(k.report);
        j["session_id"] = k.session_id;
        sessions.push_back(std::move(j));
    }
    return {{"sessions", sessions}, {"mean_kappa", s.mean_kappa}};
}

std::vector<relevance::LabeledExample> export_ground_truth(const StoreState& state) {
    std::map<std::string, relevance::LabeledExample> by_record;
    std::vector<std::string> unresolved;
    for (const auto& id : state.session_order) {
        const auto& s = state.sessions.at(id);
        const std::string who = join(s.annotators, "+");
        for (const auto& r : s.assigned_records) {
            std::optional<Label> label;
            if (s.mode == SessionMode::Solo) {
                auto it = s.labels.find(s.annotators[0]);
                if (it != s.labels.end()) {
                    if (auto l = it->second.find(r); l != it->second.end()) label = l->second;
                }
            } else if (auto res = s.resolutions.find(r); res != s.resolutions.end()) {
                label = res->second;
            } else {
                auto a = s.labels.find(s.annotators[0]);
                auto b = s.labels.find(s.annotators[1]);
                if (a == s.labels.end() || b == s.labels.end()) continue;
                auto la = a->second.find(r);
                auto lb = b->second.find(r);
                if (la == a->second.end() || lb == b->second.end()) continue;
                if (la->second != lb->second) {
                    unresolved.push_back(r);
                    continue;
                }
                label = la->second;
            }
            if (label) by_record[r] = {r, "", *label, who, s.session_id};
        }
    }
    if (!unresolved.empty()) {
        std::sort(unresolved.begin(), unresolved.end());
        throw Error(ErrorKind::UnresolvedDisagreement, join(unresolved, ","));
    }
    std::vector<relevance::LabeledExample> out;
    out.reserve(by_record.size());
    for (auto& [_, e] : by_record) out.push_back(std::move(e));
    return out;
}

}  // namespace vidreq::annotate
