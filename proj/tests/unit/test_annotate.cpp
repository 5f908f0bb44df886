#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "testing.hpp"
#include "vidreq/annotate/agreement.hpp"
#include "vidreq/annotate/store.hpp"
#include "vidreq/core/error.hpp"
#include "vidreq/core/io.hpp"
#include "vidreq/core/rng.hpp"

using namespace vidreq;
using namespace vidreq::annotate;

namespace {

ErrorKind error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Io;
}

// Label maps realising a confusion matrix (index 0 = relevant).
std::pair<LabelMap, LabelMap> from_matrix(const std::array<std::array<int, 2>, 2>& m) {
    LabelMap a, b;
    int n = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < m[i][j]; ++k) {
                char id[16];
                std::snprintf(id, sizeof id, "r%04d", n++);
                a[id] = i == 0 ? Label::Relevant : Label::Irrelevant;
                b[id] = j == 0 ? Label::Relevant : Label::Irrelevant;
            }
    return {a, b};
}

double oracle_kappa(const std::array<std::array<int, 2>, 2>& m) {
    return oracle::kappa({{{double(m[0][0]), double(m[0][1])}, {double(m[1][0]), double(m[1][1])}}});
}

std::string fixed_clock() { return "2024-01-01T00:00:00Z"; }

}  // namespace

TEST_CASE("kappa hand fixtures") {
    const std::array<std::array<int, 2>, 2> m04{{{20, 5}, {10, 15}}}, m02{{{15, 10}, {10, 15}}};
    CHECK(oracle_kappa(m04) == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(oracle_kappa(m02) == doctest::Approx(0.2).epsilon(1e-14));

    auto [a, b] = from_matrix(m04);
    const auto r = compute_kappa(a, b);
    CHECK(std::abs(r.kappa - 0.4) <= 1e-12);
    CHECK(std::abs(r.observed_agreement - 0.7) <= 1e-12);
    CHECK(std::abs(r.expected_agreement - 0.5) <= 1e-12);
    CHECK(r.confusion[0][1] == 5);
    CHECK(r.confusion[1][0] == 10);
    CHECK(r.disagreements.size() == 15);

    auto [c, d] = from_matrix(m02);
    const auto r2 = compute_kappa(c, d);
    CHECK(std::abs(r2.kappa - 0.2) <= 1e-12);
    CHECK(std::abs(r2.observed_agreement - 0.6) <= 1e-12);
    CHECK(std::abs(r2.expected_agreement - 0.5) <= 1e-12);
}

TEST_CASE("kappa perfect and degenerate") {
    auto [a, b] = from_matrix({{{7, 0}, {0, 5}}});
    CHECK(compute_kappa(a, b).kappa == 1.0);
    auto [c, d] = from_matrix({{{9, 0}, {0, 0}}});
    CHECK(compute_kappa(c, d).kappa == 1.0);  // p_e = 1, full agreement
    auto [e, f] = from_matrix({{{0, 4}, {0, 0}}});
    const auto r = compute_kappa(e, f);
    CHECK(std::isfinite(r.kappa));
    CHECK(r.kappa == 0.0);
}

TEST_CASE("kappa errors") {
    CHECK(error_of([] { compute_kappa({}, {}); }) == ErrorKind::KeySetMismatch);
    LabelMap a{{"x", Label::Relevant}}, b{{"y", Label::Relevant}};
    CHECK(error_of([&] { compute_kappa(a, b); }) == ErrorKind::KeySetMismatch);
}

TEST_CASE("kappa is symmetric and matches the oracle on random matrices") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<std::array<int, 2>, 2> m{};
        for (auto& row : m)
            for (auto& v : row) v = int(rng.below(12));
        m[0][0] += 1;
        m[1][1] += 1;
        auto [a, b] = from_matrix(m);
        const auto ab = compute_kappa(a, b), ba = compute_kappa(b, a);
        CHECK(std::abs(ab.kappa - ba.kappa) <= 1e-12);
        CHECK(std::abs(ab.kappa - oracle_kappa(m)) <= 1e-12);
        CHECK(ab.confusion[0][1] == ba.confusion[1][0]);
    }
}

TEST_CASE("store session lifecycle") {
    LabelStore store;
    store.set_clock(fixed_clock);
    store.set_known_records({"r1", "r2", "r3"});
    CHECK(error_of([&] { store.create_session(SessionMode::Pair, {"a"}, {"r1"}); }) == ErrorKind::InvalidRecord);
    CHECK(error_of([&] { store.create_session(SessionMode::Pair, {"a", "a"}, {"r1"}); }) == ErrorKind::InvalidRecord);
    CHECK(error_of([&] { store.create_session(SessionMode::Solo, {"a"}, {"r9"}); }) == ErrorKind::InvalidRecord);
    CHECK(error_of([&] { store.create_session(SessionMode::Solo, {"a"}, {"r1", "r1"}); }) == ErrorKind::InvalidRecord);

    const auto s = store.create_session(SessionMode::Pair, {"alice", "bob"}, {"r1", "r2", "r3"});
    CHECK(s == "S1");
    CHECK(error_of([&] { store.create_session(SessionMode::Solo, {"c"}, {"r1"}, "S1"); }) == ErrorKind::InvalidRecord);
    CHECK(store.next_record(s, "alice") == std::optional<std::string>("r1"));
    store.record_label(s, "r1", "alice", Label::Relevant);
    CHECK(store.next_record(s, "alice") == std::optional<std::string>("r2"));
    CHECK(error_of([&] { store.record_label("S9", "r1", "alice", Label::Relevant); }) == ErrorKind::UnknownSession);
    CHECK(error_of([&] { store.record_label(s, "r1", "mallory", Label::Relevant); }) == ErrorKind::ForeignAnnotator);
    CHECK(error_of([&] { store.next_record(s, "mallory"); }) == ErrorKind::ForeignAnnotator);
    CHECK(error_of([&] { store.session_agreement(s); }) == ErrorKind::KeySetMismatch);

    store.record_label(s, "r1", "bob", Label::Irrelevant);
    store.record_label(s, "r2", "alice", Label::Relevant);
    store.record_label(s, "r2", "bob", Label::Relevant);
    const auto ag = store.session_agreement(s);
    CHECK(ag.disagreements == std::vector<std::string>{"r1"});
    CHECK(ag.confusion[0][1] == 1);

    // Unresolved pair disagreement blocks export.
    CHECK(error_of([&] { export_ground_truth(store.snapshot()); }) == ErrorKind::UnresolvedDisagreement);
    store.record_resolution(s, "r1", Label::Relevant);
    const auto gt = export_ground_truth(store.snapshot());
    REQUIRE(gt.size() == 2);  // r3 is unlabeled and skipped
    CHECK(gt[0].record_id == "r1");
    CHECK(gt[0].label == Label::Relevant);
    CHECK(gt[0].annotator == "alice+bob");
    CHECK(gt[0].session == "S1");

    const auto solo = store.create_session(SessionMode::Solo, {"carol"}, {"r1"});
    CHECK(solo == "S2");
    CHECK(error_of([&] { store.record_resolution(solo, "r1", Label::Relevant); }) == ErrorKind::InvalidRecord);
    CHECK(error_of([&] { store.session_agreement(solo); }) == ErrorKind::InvalidRecord);
    CHECK(error_of([&] { store.record_label(solo, "r2", "carol", Label::Relevant); }) == ErrorKind::UnassignedRecord);
    store.record_label(solo, "r1", "carol", Label::Irrelevant);
    const auto gt2 = export_ground_truth(store.snapshot());
    CHECK(gt2[0].label == Label::Irrelevant);  // later session wins
    CHECK(gt2[0].annotator == "carol");
}

TEST_CASE("label log replays to the same state") {
    testing::TempDir dir;
    const auto log = dir / "labels.log.jsonl";
    StoreState before;
    {
        LabelStore store(log);
        store.set_clock(fixed_clock);
        const auto s = store.create_session(SessionMode::Pair, {"a", "b"}, {"x", "y"});
        store.record_label(s, "x", "a", Label::Relevant);
        store.record_label(s, "x", "b", Label::Irrelevant);
        store.record_label(s, "x", "b", Label::Relevant);  // relabel: latest wins
        store.record_resolution(s, "y", Label::Irrelevant);
        store.set_theme_name("Pixel", 2, "Battery Life");
        before = store.snapshot();
        CHECK(before.sessions.at("S1").labels.at("b").at("x") == Label::Relevant);
    }
    LabelStore reopened(log);
    CHECK(reopened.snapshot() == before);
    CHECK(replay(read_file(log)) == before);
    CHECK(reopened.theme_names().at({"Pixel", 2}) == "Battery Life");
    // New ids continue after the replayed ones.
    CHECK(reopened.create_session(SessionMode::Solo, {"c"}, {"x"}) == "S2");

    CHECK(error_of([] { replay("{\"event\":\"label\",\"session_id\":\"S1\"}\n"); }) == ErrorKind::InvalidRecord);
    CHECK(error_of([] { replay("not json\n"); }) == ErrorKind::InvalidRecord);
}

TEST_CASE("replay property over random event sequences") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        testing::TempDir dir;
        StoreState live;
        {
            LabelStore store(dir / "log.jsonl");
            store.set_clock(fixed_clock);
            const std::vector<std::string> records{"a", "b", "c", "d"};
            std::vector<std::string> sessions;
            for (int step = 0; step < 40; ++step) {
                try {
                    const auto roll = rng.below(10);
                    if (sessions.empty() || roll == 0) {
                        const bool pair = rng.below(2);
                        sessions.push_back(store.create_session(pair ? SessionMode::Pair : SessionMode::Solo,
                                                                pair ? std::vector<std::string>{"p", "q"}
                                                                     : std::vector<std::string>{"p"},
                                                                records));
                    } else if (roll < 8) {
                        store.record_label(sessions[rng.below(sessions.size())], records[rng.below(4)],
                                           rng.below(2) ? "p" : "q", rng.below(2) ? Label::Relevant : Label::Irrelevant);
                    } else if (roll == 8) {
                        store.record_resolution(sessions[rng.below(sessions.size())], records[rng.below(4)],
                                                Label::Relevant);
                    } else {
                        store.set_theme_name("P", int(rng.below(3)), "n" + std::to_string(step));
                    }
                } catch (const Error&) {
                    // rejected mutations must not reach the log
                }
            }
            live = store.snapshot();
        }
        CHECK(replay(read_file(dir / "log.jsonl")) == live);
    }
}

TEST_CASE("kappa summary") {
    LabelStore store;
    store.set_clock(fixed_clock);
    auto [a, b] = from_matrix({{{20, 5}, {10, 15}}});
    std::vector<std::string> ids;
    for (auto& [id, l] : a) ids.push_back(id);
    const auto s = store.create_session(SessionMode::Pair, {"a", "b"}, ids);
    for (auto& id : ids) {
        store.record_label(s, id, "a", a[id]);
        store.record_label(s, id, "b", b[id]);
    }
    store.create_session(SessionMode::Solo, {"c"}, {ids[0]});
    const auto sum = summarize_kappa(store);
    REQUIRE(sum.sessions.size() == 1);
    CHECK(std::abs(sum.mean_kappa - 0.4) <= 1e-12);
    CHECK(to_json(sum)["mean_kappa"].get<double>() == doctest::Approx(0.4));
}
