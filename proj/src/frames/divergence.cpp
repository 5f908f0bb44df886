#include "vidreq/frames/divergence.hpp"

#include <cmath>
#include <string>

#include "vidreq/core/error.hpp"

namespace vidreq::frames {

namespace {

std::vector<double> resample(const std::vector<double>& src, std::size_t length) {
    std::vector<double> out(length);
    if (src.size() == 1) {
        std::fill(out.begin(), out.end(), src.front());
        return out;
    }
    const double step = static_cast<double>(src.size() - 1) / static_cast<double>(length - 1);
    for (std::size_t i = 0; i < length; ++i) {
        const double pos = static_cast<double>(i) * step;
        const std::size_t lo = std::min(static_cast<std::size_t>(pos), src.size() - 1);
        const std::size_t hi = std::min(lo + 1, src.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        out[i] = src[lo] * (1.0 - frac) + src[hi] * frac;
    }
    return out;
}

double bilinear(const EnergyMap& map, double row, double col) {
    const int r0 = std::min(static_cast<int>(row), map.height - 1);
    const int c0 = std::min(static_cast<int>(col), map.width - 1);
    const int r1 = std::min(r0 + 1, map.height - 1);
    const int c1 = std::min(c0 + 1, map.width - 1);
    const double fr = row - r0;
    const double fc = col - c0;
    return map.at(r0, c0) * (1 - fr) * (1 - fc) + map.at(r0, c1) * (1 - fr) * fc +
           map.at(r1, c0) * fr * (1 - fc) + map.at(r1, c1) * fr * fc;
}

std::vector<double> normalize(std::vector<double> v) {
    double sum = 0.0;
    for (auto& x : v) {
        x = std::max(0.0, x);
        sum += x;
    }
    const double denom = sum + kProbabilityFloor * static_cast<double>(v.size());
    for (auto& x : v) x = (x + kProbabilityFloor) / denom;
    return v;
}

void check_distribution(std::span<const double> p, const char* name) {
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) throw Error(ErrorKind::InvalidDistribution, std::string(name) + " has a negative or NaN entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kDistributionSumTolerance) {
        throw Error(ErrorKind::InvalidDistribution, std::string(name) + " sums to " + std::to_string(sum));
    }
}

}  // namespace

SliceSet extract_slices(const EnergyMap& map, std::size_t length) {
    if (length < 2) throw Error(ErrorKind::InvalidConfig, "slice length must be >= 2");
    if (map.empty()) throw Error(ErrorKind::EmptyFrame, "saliency map has no values");

    SliceSet out;
    bool all_zero = true;
    for (double v : map.values) all_zero = all_zero && v == 0.0;
    if (all_zero) {
        out.degenerate = true;
        for (auto& s : out.slices) s.assign(length, 1.0 / static_cast<double>(length));
        return out;
    }

    const int mid_col = map.width / 2;
    const int mid_row = map.height / 2;
    std::vector<double> vertical(map.height), horizontal(map.width);
    for (int r = 0; r < map.height; ++r) vertical[r] = map.at(r, mid_col);
    for (int c = 0; c < map.width; ++c) horizontal[c] = map.at(mid_row, c);

    std::vector<double> diagonal(length);
    for (std::size_t i = 0; i < length; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(length - 1);
        diagonal[i] = bilinear(map, t * (map.height - 1), t * (map.width - 1));
    }

    out.slices[static_cast<int>(SliceAxis::Vertical)] = normalize(resample(vertical, length));
    out.slices[static_cast<int>(SliceAxis::Horizontal)] = normalize(resample(horizontal, length));
    out.slices[static_cast<int>(SliceAxis::Diagonal)] = normalize(std::move(diagonal));
    return out;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::LengthMismatch, std::to_string(p.size()) + " vs " + std::to_string(q.size()));
    }
    check_distribution(p, "p");
    check_distribution(q, "q");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        d += p[i] * std::log(std::max(p[i], kProbabilityFloor) / std::max(q[i], kProbabilityFloor));
    }
    return d;
}

}  // namespace vidreq::frames
