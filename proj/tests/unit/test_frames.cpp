#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "testing.hpp"
#include "vidreq/core/error.hpp"
#include "vidreq/core/io.hpp"
#include "vidreq/core/rng.hpp"
#include "vidreq/frames/divergence.hpp"
#include "vidreq/frames/saliency.hpp"
#include "vidreq/frames/sampler.hpp"
#include "vidreq/frames/synthetic.hpp"

using namespace vidreq;
using namespace vidreq::frames;

namespace {

std::vector<double> pixels(const GrayFrame& f) { return {f.values.begin(), f.values.end()}; }

std::vector<double> random_distribution(Rng& rng, std::size_t n, bool sparse) {
    std::vector<double> v(n);
    double s = 0;
    for (auto& x : v) {
        x = sparse && rng.uniform() < 0.3 ? 0.0 : rng.uniform();
        s += x;
    }
    if (s == 0) v[0] = s = 1;
    for (auto& x : v) x /= s;
    return v;
}

std::vector<int> indices(const std::vector<CandidateFrame>& c) {
    std::vector<int> out;
    for (auto& x : c) out.push_back(x.frame_index);
    return out;
}

}  // namespace

TEST_CASE("saliency matches the plain DFT oracle") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto f = random_texture(12, 8, seed);
        const auto got = compute_saliency(f);
        const auto want = oracle::saliency(pixels(f), f.height, f.width);
        double scale = 0;
        for (double v : want) scale = std::max(scale, v);
        REQUIRE(scale > 0);
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(got.values[i] == doctest::Approx(want[i]).epsilon(1e-9).scale(scale));
    }
}

TEST_CASE("saliency of a constant frame is zero") {
    const GrayFrame f(16, 16, 128);
    const auto m = compute_saliency(f);
    for (double v : m.values) CHECK(v == 0.0);
    CHECK_THROWS_AS(compute_saliency(GrayFrame{}), Error);
}

TEST_CASE("saliency peaks around a single bright pixel") {
    GrayFrame f(16, 16, 0);
    f.at(5, 9) = 255;
    const auto m = compute_saliency(f);
    std::size_t best = 0;
    for (std::size_t i = 0; i < m.values.size(); ++i)
        if (m.values[i] > m.values[best]) best = i;
    const int r = int(best) / 16, c = int(best) % 16;
    CHECK(std::abs(r - 5) <= 1);
    CHECK(std::abs(c - 9) <= 1);
}

TEST_CASE("saliency ignores a global brightness shift") {
    auto f = random_texture(16, 12, 9);
    auto g = f;
    for (auto& v : f.values) v = static_cast<std::uint8_t>(v / 2);
    for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] = static_cast<std::uint8_t>(f.values[i] + 40);
    const auto a = compute_saliency(f), b = compute_saliency(g);
    double scale = 0;
    for (double v : a.values) scale = std::max(scale, v);
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(b.values[i] == doctest::Approx(a.values[i]).scale(scale).epsilon(1e-9));
}

TEST_CASE("slices") {
    EnergyMap m(4, 4, 0.0);
    const double row[] = {2, 2, 4, 0};
    for (int c = 0; c < 4; ++c) m.at(2, c) = row[c];
    const auto s = extract_slices(m, 4);
    const auto& h = s.slices[int(SliceAxis::Horizontal)];
    CHECK(h[0] == doctest::Approx(0.25));
    CHECK(h[1] == doctest::Approx(0.25));
    CHECK(h[2] == doctest::Approx(0.5));
    CHECK(h[3] == doctest::Approx(0.0));
    CHECK_FALSE(s.degenerate);

    const auto z = extract_slices(EnergyMap(5, 3, 0.0), 8);
    CHECK(z.degenerate);
    for (auto& v : z.slices)
        for (double x : v) CHECK(x == doctest::Approx(1.0 / 8));

    CHECK_THROWS_AS(extract_slices(m, 1), Error);
}

TEST_CASE("slices sum to one and agree with the oracle") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int w = 2 + int(rng.below(30)), h = 2 + int(rng.below(30));
        EnergyMap m(w, h);
        for (auto& v : m.values) v = rng.uniform() * 100;
        const auto s = extract_slices(m, 64);
        const auto o = oracle::slices(m.values, h, w, 64);
        for (int k = 0; k < 3; ++k) {
            double sum = 0;
            for (double x : s.slices[k]) sum += x;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
            for (int i = 0; i < 64; ++i) CHECK(s.slices[k][i] == doctest::Approx(o[k][i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("kl divergence hand values") {
    const std::vector<double> p{0.5, 0.5}, q{0.25, 0.75};
    CHECK(kl_divergence(p, p) == 0.0);
    CHECK(kl_divergence(p, q) == doctest::Approx(0.143841).epsilon(1e-6 / 0.143841));
    CHECK(kl_divergence(std::vector<double>{1, 0}, p) == doctest::Approx(0.693147).epsilon(1e-4));
    CHECK(kl_divergence(p, q) == doctest::Approx(0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("kl divergence errors") {
    CHECK_THROWS_AS(kl_divergence(std::vector<double>{1}, std::vector<double>{0.5, 0.5}), Error);
    try {
        kl_divergence(std::vector<double>{0.7, 0.7}, std::vector<double>{0.5, 0.5});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidDistribution);
    }
    CHECK_THROWS_AS(kl_divergence(std::vector<double>{1.5, -0.5}, std::vector<double>{0.5, 0.5}), Error);
}

TEST_CASE("kl divergence is non-negative and matches the oracle") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + rng.below(64);
        const auto p = random_distribution(rng, n, i % 2 == 0);
        const auto q = random_distribution(rng, n, i % 3 == 0);
        const double d = kl_divergence(p, q);
        CHECK(d >= -1e-9);
        CHECK(d == doctest::Approx(oracle::kl(p, q)).epsilon(1e-9).scale(1.0));
        CHECK(kl_divergence(p, p) == 0.0);
    }
}

TEST_CASE("identical frames give only the first candidate") {
    FrameStream s{"r", 30, std::vector<GrayFrame>(100, random_texture(32, 32, 4)), Platform::TikTok};
    const auto c = select_candidates(s);
    REQUIRE(c.size() == 1);
    CHECK(c[0].frame_index == 0);
    CHECK(c[0].reason == CandidateReason::Initial);
}

TEST_CASE("scene cuts are found and match the oracle") {
    SceneSpec spec;
    spec.width = 48;
    spec.height = 32;
    spec.frame_count = 90;
    spec.cuts = {30, 60};
    spec.seed = 21;
    FrameStream s{"r", 10, scene_stream(spec), Platform::TikTok};
    const auto got = indices(select_candidates(s));
    std::vector<std::array<std::vector<double>, 3>> sl;
    for (auto& f : s.frames) sl.push_back(oracle::slices(oracle::saliency(pixels(f), f.height, f.width), f.height, f.width, 64));
    CHECK(got == oracle::select(sl, 10, 1.5, {1e-4, 1e-4, 1e-4}));
    CHECK(got == std::vector<int>{0, 30, 60});
}

TEST_CASE("min gap caps candidates when every frame changes") {
    std::vector<GrayFrame> frames;
    for (int t = 0; t < 900; ++t) frames.push_back(random_texture(32, 32, 100 + t));
    FrameStream s{"r", 30, frames, Platform::TikTok};
    CHECK(select_candidates(s).size() <= 21);
}

TEST_CASE("candidate count bound and trailing frames property") {
    Rng rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        SceneSpec spec;
        spec.width = 32;
        spec.height = 24;
        spec.frame_count = 40 + int(rng.below(80));
        for (int c = 0; c < 6; ++c) spec.cuts.push_back(1 + int(rng.below(spec.frame_count - 1)));
        spec.moving_patch = trial % 2 == 1;
        spec.seed = 300 + trial;
        const Platform platform = trial % 3 == 0 ? Platform::YouTube : Platform::TikTok;
        const double fps = 2.0 + double(rng.below(28));
        FrameStream s{"r", fps, scene_stream(spec), platform};
        SamplerConfig config;
        const auto c = select_candidates(s, config);
        const double duration = spec.frame_count / fps;
        CHECK(c.size() <= 1 + std::size_t(std::floor(duration / config.min_gap_s(platform))));
        CHECK(indices(select_candidates(s, config)) == indices(c));
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i].frame_index > c[i - 1].frame_index);

        auto longer = s;
        for (int k = 0; k < 20; ++k) longer.frames.push_back(s.frames.back());
        CHECK(indices(select_candidates(longer, config)) == indices(c));
    }
}

TEST_CASE("any rule selects at least what the all rule selects") {
    SceneSpec spec;
    spec.width = 32;
    spec.height = 32;
    spec.frame_count = 60;
    spec.cuts = {20, 40};
    spec.moving_patch = true;
    spec.seed = 8;
    FrameStream s{"r", 5, scene_stream(spec), Platform::TikTok};
    SamplerConfig any;
    any.rule = SliceRule::Any;
    const auto all_c = indices(select_candidates(s));
    const auto any_c = indices(select_candidates(s, any));
    CHECK(any_c.size() >= all_c.size());
}

TEST_CASE("selector rejects a frame of another size") {
    CandidateSelector sel(10, Platform::TikTok);
    sel.push(random_texture(16, 16, 1));
    CHECK_THROWS_AS(sel.push(random_texture(8, 8, 1)), Error);
}

TEST_CASE("frame directories") {
    testing::TempDir dir;
    try {
        scan_frame_directory(dir / "nope");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MissingFrames);
    }
    std::filesystem::create_directories(dir / "r");
    SceneSpec spec;
    spec.width = 16;
    spec.height = 16;
    spec.frame_count = 12;
    spec.cuts = {6};
    const auto frames = scene_stream(spec);
    for (int i = 0; i < 12; ++i) {
        char name[16];
        std::snprintf(name, sizeof name, "%06d.pgm", i);
        write_pgm(dir / "r" / name, frames[i]);
    }
    CHECK_THROWS_AS(scan_frame_directory(dir / "r"), Error);  // no meta.json yet
    write_json(dir / "r/meta.json", {{"fps", 2}, {"platform", "TikTok"}});
    const auto d = scan_frame_directory(dir / "r");
    CHECK(d.frame_files.size() == 12);
    CHECK(read_pgm(d.frame_files[7]) == frames[7]);
    CHECK(read_pgm_size(d.frame_files[0]).width == 16);
    const auto c = select_candidates(d);
    CHECK(indices(c) == std::vector<int>{0, 6});
    CHECK(c[1].timestamp_s == doctest::Approx(3.0));
    CHECK(candidate_from_json(to_json(c[1])) == c[1]);
}
