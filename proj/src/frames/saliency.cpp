#include "vidreq/frames/saliency.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>

#include "vidreq/core/error.hpp"

namespace vidreq::frames {

namespace {

// Relative amplitude below which a spectral bin is treated as empty.
constexpr double kAmplitudeFloor = 1e-9;

// FFTW planning is not thread-safe; execution with the new-array API is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer alloc(std::size_t n) {
    auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (p == nullptr) throw std::bad_alloc();
    return Buffer(p);
}

void transform(int height, int width, fftw_complex* data, int sign) {
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_2d(height, width, data, data, sign, FFTW_ESTIMATE);
    }
    fftw_execute_dft(plan, data, data);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

}  // namespace

EnergyMap compute_saliency(const GrayFrame& frame) {
    if (frame.empty() || frame.width <= 0 || frame.height <= 0) {
        throw Error(ErrorKind::EmptyFrame, "frame has no pixels");
    }
    const int h = frame.height;
    const int w = frame.width;
    const std::size_t n = frame.values.size();

    double sum = 0.0;
    for (auto v : frame.values) sum += v;
    const double mean = sum / static_cast<double>(n);

    EnergyMap out(w, h, 0.0);
    bool constant = true;
    for (auto v : frame.values) constant = constant && v == frame.values.front();
    if (constant) return out;

    Buffer spec = alloc(n);
    for (std::size_t i = 0; i < n; ++i) {
        spec[i][0] = static_cast<double>(frame.values[i]) - mean;
        spec[i][1] = 0.0;
    }
    transform(h, w, spec.get(), FFTW_FORWARD);
    spec[0][0] = spec[0][1] = 0.0;

    std::vector<double> amplitude(n);
    double max_amp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        amplitude[i] = std::hypot(spec[i][0], spec[i][1]);
        max_amp = std::max(max_amp, amplitude[i]);
    }
    const double floor = kAmplitudeFloor * max_amp;

    std::vector<double> log_amp(n);
    for (std::size_t i = 0; i < n; ++i) log_amp[i] = std::log(amplitude[i] + floor);

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * w + c;
            if (i == 0 || amplitude[i] <= floor) {
                spec[i][0] = spec[i][1] = 0.0;
                continue;
            }
            double local = 0.0;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    local += log_amp[static_cast<std::size_t>(wrap(r + dr, h)) * w + wrap(c + dc, w)];
                }
            }
            const double residual = log_amp[i] - local / 9.0;
            const double scale = std::exp(residual) / amplitude[i];
            spec[i][0] *= scale;
            spec[i][1] *= scale;
        }
    }

    transform(h, w, spec.get(), FFTW_BACKWARD);
    EnergyMap energy(w, h, 0.0);
    const double norm = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double re = spec[i][0] * norm;
        const double im = spec[i][1] * norm;
        energy.values[i] = re * re + im * im;
    }

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double acc = 0.0;
            int count = 0;
            for (int rr = std::max(0, r - 1); rr <= std::min(h - 1, r + 1); ++rr) {
                for (int cc = std::max(0, c - 1); cc <= std::min(w - 1, c + 1); ++cc) {
                    acc += energy.at(rr, cc);
                    ++count;
                }
            }
            out.at(r, c) = acc / count;
        }
    }
    return out;
}

}  // namespace vidreq::frames
