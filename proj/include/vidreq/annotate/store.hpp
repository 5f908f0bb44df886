#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vidreq/annotate/agreement.hpp"
#include "vidreq/core/model.hpp"
#include "vidreq/relevance/dataset.hpp"

namespace vidreq::annotate {

enum class SessionMode { Pair, Solo };

std::string_view to_string(SessionMode m);  // "pair", "solo"
std::optional<SessionMode> parse_session_mode(std::string_view s);

struct AnnotationSession {
    std::string session_id;
    SessionMode mode = SessionMode::Solo;
    std::vector<std::string> annotators;
    std::vector<std::string> assigned_records;
    std::string created_at;
    // Current label per annotator and record (latest event wins).
    std::map<std::string, LabelMap> labels;
    LabelMap resolutions;

    bool has_annotator(const std::string& a) const;
    bool has_record(const std::string& r) const;

    bool operator==(const AnnotationSession&) const = default;
};

struct ThemeKey {
    std::string product;
    int cluster_id = 0;

    auto operator<=>(const ThemeKey&) const = default;
};

struct StoreState {
    std::map<std::string, AnnotationSession> sessions;
    std::vector<std::string> session_order;  // creation order
    std::map<ThemeKey, std::string> theme_names;

    bool operator==(const StoreState&) const = default;
};

// Label store backed by an append-only JSON-lines event log. Each mutation
// appends one event; opening a log replays it. Writers are serialized, readers
// share a lock and see a consistent snapshot.
class LabelStore {
public:
    using Clock = std::function<std::string()>;

    // In-memory store (no log file).
    LabelStore();
    // Replays `log_path` if it exists; later mutations are appended to it.
    explicit LabelStore(std::filesystem::path log_path);

    // Restricts session records to ids this set contains (InvalidRecord otherwise).
    void set_known_records(std::set<std::string> ids);
    void set_clock(Clock clock);

    // Throws InvalidRecord for a wrong annotator count, an unknown or repeated
    // record, or a session id already in use. An empty id picks "S<n>".
    std::string create_session(SessionMode mode, const std::vector<std::string>& annotators,
                               const std::vector<std::string>& record_ids, std::string session_id = "");

    // Throws UnknownSession, ForeignAnnotator, UnassignedRecord.
    relevance::LabeledExample record_label(const std::string& session_id, const std::string& record_id,
                                           const std::string& annotator, Label label);

    // Tie-break label for a pair-session record. Throws UnknownSession,
    // UnassignedRecord, InvalidRecord for a solo session.
    void record_resolution(const std::string& session_id, const std::string& record_id, Label label);

    void set_theme_name(const std::string& product, int cluster_id, const std::string& name);

    // First assigned record this annotator has not labeled yet.
    std::optional<std::string> next_record(const std::string& session_id, const std::string& annotator) const;

    // Agreement over the records both annotators of a pair session labeled.
    // Throws UnknownSession, InvalidRecord for solo sessions, KeySetMismatch
    // when no record carries both labels.
    AgreementReport session_agreement(const std::string& session_id) const;

    AnnotationSession session(const std::string& session_id) const;
    StoreState snapshot() const;
    std::map<ThemeKey, std::string> theme_names() const;

    const std::optional<std::filesystem::path>& log_path() const { return log_path_; }

private:
    void apply(const nlohmann::json& event);
    void append(const nlohmann::json& event);
    const AnnotationSession& session_locked(const std::string& id) const;

    mutable std::shared_mutex mutex_;
    std::optional<std::filesystem::path> log_path_;
    std::optional<std::set<std::string>> known_records_;
    Clock clock_;
    StoreState state_;
};

// Replays an event log given as text into a store state.
StoreState replay(const std::string& log_text);

struct SessionKappa {
    std::string session_id;
    AgreementReport report;
};

struct KappaSummary {
    std::vector<SessionKappa> sessions;  // pair sessions with overlapping labels
    double mean_kappa = 0.0;
};

KappaSummary summarize_kappa(const LabelStore& store);
nlohmann::json to_json(const KappaSummary& s);

// Ground truth for relevance training, sorted by record id. Pair-session
// records need agreement or a resolution; solo labels pass through. When a
// record appears in several sessions the latest created session wins.
// Records that are not fully labeled are skipped. The text field is left
// empty. Throws UnresolvedDisagreement listing every offending id.
std::vector<relevance::LabeledExample> export_ground_truth(const StoreState& state);

}  // namespace vidreq::annotate
