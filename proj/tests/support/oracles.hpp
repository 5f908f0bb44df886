#pragma once

// Independent reference computations used to freeze expected values. Nothing
// here calls into the library under test.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace oracle {

inline double kl(const std::vector<double>& p, const std::vector<double>& q) {
    const double eps = 1e-12;
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double a = std::max(p[i], eps);
        const double b = std::max(q[i], eps);
        d += p[i] * std::log(a / b);
    }
    return d;
}

// ---- spectral residual via a plain separable DFT ----

using Cplx = std::complex<double>;
using Plane = std::vector<Cplx>;  // row-major h x w

inline void dft_rows(Plane& a, int h, int w, int sign) {
    std::vector<Cplx> tmp(w);
    for (int r = 0; r < h; ++r) {
        for (int k = 0; k < w; ++k) {
            Cplx acc = 0;
            for (int n = 0; n < w; ++n) {
                const double ang = sign * 2.0 * M_PI * k * n / w;
                acc += a[r * w + n] * Cplx(std::cos(ang), std::sin(ang));
            }
            tmp[k] = acc;
        }
        for (int k = 0; k < w; ++k) a[r * w + k] = tmp[k];
    }
}

inline void dft_cols(Plane& a, int h, int w, int sign) {
    std::vector<Cplx> tmp(h);
    for (int c = 0; c < w; ++c) {
        for (int k = 0; k < h; ++k) {
            Cplx acc = 0;
            for (int n = 0; n < h; ++n) {
                const double ang = sign * 2.0 * M_PI * k * n / h;
                acc += a[n * w + c] * Cplx(std::cos(ang), std::sin(ang));
            }
            tmp[k] = acc;
        }
        for (int k = 0; k < h; ++k) a[k * w + c] = tmp[k];
    }
}

// pixels: row-major, h x w. Returns the smoothed energy map.
inline std::vector<double> saliency(const std::vector<double>& pixels, int h, int w) {
    const std::size_t n = pixels.size();
    double mean = 0;
    for (double v : pixels) mean += v;
    mean /= n;
    std::vector<double> out(n, 0.0);
    if (std::all_of(pixels.begin(), pixels.end(), [&](double v) { return v == pixels[0]; })) return out;

    Plane f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = pixels[i] - mean;
    dft_rows(f, h, w, -1);
    dft_cols(f, h, w, -1);
    f[0] = 0;

    std::vector<double> amp(n), la(n);
    double max_amp = 0;
    for (std::size_t i = 0; i < n; ++i) max_amp = std::max(max_amp, amp[i] = std::abs(f[i]));
    const double floor = 1e-9 * max_amp;
    for (std::size_t i = 0; i < n; ++i) la[i] = std::log(amp[i] + floor);

    Plane g(n, 0);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const int i = r * w + c;
            if (i == 0 || amp[i] <= floor) continue;
            double avg = 0;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) avg += la[((r + dr + h) % h) * w + (c + dc + w) % w];
            avg /= 9;
            g[i] = std::polar(std::exp(la[i] - avg), std::arg(f[i]));
        }
    }
    dft_rows(g, h, w, +1);
    dft_cols(g, h, w, +1);
    std::vector<double> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = std::norm(g[i] / double(n));

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double acc = 0;
            int cnt = 0;
            for (int rr = r - 1; rr <= r + 1; ++rr)
                for (int cc = c - 1; cc <= c + 1; ++cc)
                    if (rr >= 0 && rr < h && cc >= 0 && cc < w) {
                        acc += e[rr * w + cc];
                        ++cnt;
                    }
            out[r * w + c] = acc / cnt;
        }
    }
    return out;
}

// Center column, center row, corner-to-corner diagonal; linear resampling;
// epsilon-smoothed L1 normalisation.
inline std::array<std::vector<double>, 3> slices(const std::vector<double>& m, int h, int w, int L) {
    auto at = [&](int r, int c) { return m[r * w + c]; };
    auto lerp = [&](const std::vector<double>& src) {
        std::vector<double> out(L);
        for (int i = 0; i < L; ++i) {
            const double x = src.size() == 1 ? 0.0 : double(i) * (src.size() - 1) / (L - 1);
            const int lo = std::min<int>(int(x), src.size() - 1);
            const int hi = std::min<int>(lo + 1, src.size() - 1);
            out[i] = src[lo] + (src[hi] - src[lo]) * (x - lo);
        }
        return out;
    };
    auto norm = [&](std::vector<double> v) {
        const double eps = 1e-12;
        double s = 0;
        for (double x : v) s += x;
        for (double& x : v) x = (x + eps) / (s + eps * v.size());
        return v;
    };
    std::array<std::vector<double>, 3> out;
    if (std::all_of(m.begin(), m.end(), [](double v) { return v == 0.0; })) {
        for (auto& s : out) s.assign(L, 1.0 / L);
        return out;
    }
    std::vector<double> col(h), row(w), diag(L);
    for (int r = 0; r < h; ++r) col[r] = at(r, w / 2);
    for (int c = 0; c < w; ++c) row[c] = at(h / 2, c);
    for (int i = 0; i < L; ++i) {
        const double t = double(i) / (L - 1);
        const double y = t * (h - 1), x = t * (w - 1);
        const int r0 = std::min(int(y), h - 1), c0 = std::min(int(x), w - 1);
        const int r1 = std::min(r0 + 1, h - 1), c1 = std::min(c0 + 1, w - 1);
        const double fy = y - r0, fx = x - c0;
        diag[i] = at(r0, c0) * (1 - fy) * (1 - fx) + at(r0, c1) * (1 - fy) * fx + at(r1, c0) * fy * (1 - fx) +
                  at(r1, c1) * fy * fx;
    }
    out[0] = norm(lerp(col));
    out[1] = norm(lerp(row));
    out[2] = norm(diag);
    return out;
}

// Frame selection from the per-frame slice sets: s_0 = 0, s_t = D(p_t || p_{t-1});
// pick t when every increment beats its threshold and the gap allows it.
inline std::vector<int> select(const std::vector<std::array<std::vector<double>, 3>>& sl, double fps, double gap_s,
                               std::array<double, 3> th) {
    std::vector<std::array<double, 3>> s(sl.size(), {0, 0, 0});
    for (std::size_t t = 1; t < sl.size(); ++t)
        for (int k = 0; k < 3; ++k) s[t][k] = kl(sl[t][k], sl[t - 1][k]);
    std::vector<int> picked;
    if (sl.empty()) return picked;
    picked.push_back(0);
    for (std::size_t t = 1; t < sl.size(); ++t) {
        bool all = true;
        for (int k = 0; k < 3; ++k) all = all && (s[t][k] - s[t - 1][k]) > th[k];
        if (all && (double(t) - picked.back()) / fps >= gap_s - 1e-9) picked.push_back(int(t));
    }
    return picked;
}

// ---- Norvig spelling correction, literally ----

inline std::set<std::string> edits1(const std::string& w) {
    static const std::string letters = "abcdefghijklmnopqrstuvwxyz";
    std::set<std::string> out;
    for (std::size_t i = 0; i <= w.size(); ++i) {
        const std::string L = w.substr(0, i), R = w.substr(i);
        if (!R.empty()) out.insert(L + R.substr(1));
        if (R.size() > 1) out.insert(L + R[1] + R[0] + R.substr(2));
        for (char c : letters) {
            if (!R.empty()) out.insert(L + c + R.substr(1));
            out.insert(L + c + R);
        }
    }
    return out;
}

inline std::string correct(const std::string& w, const std::unordered_map<std::string, std::uint64_t>& lex) {
    auto best = [&](const std::set<std::string>& cands) -> std::string {
        std::string pick;
        std::uint64_t top = 0;
        for (const auto& c : cands) {
            auto it = lex.find(c);
            if (it != lex.end() && it->second > top) {  // set order gives the alphabetical tie-break
                top = it->second;
                pick = c;
            }
        }
        return pick;
    };
    if (lex.count(w)) return w;
    const auto e1 = edits1(w);
    if (auto b = best(e1); !b.empty()) return b;
    std::set<std::string> e2;
    for (const auto& x : e1)
        for (auto& y : edits1(x)) e2.insert(std::move(y));
    if (auto b = best(e2); !b.empty()) return b;
    return w;
}

// ---- ranking / agreement / clustering ----

inline double auc_pairs(const std::vector<double>& scores, const std::vector<int>& positive) {
    double wins = 0;
    long pairs = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!positive[i]) continue;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (positive[j]) continue;
            ++pairs;
            wins += scores[i] > scores[j] ? 1.0 : (scores[i] == scores[j] ? 0.5 : 0.0);
        }
    }
    return wins / pairs;
}

// m[i][j]: rater A class i, rater B class j.
inline double kappa(const std::array<std::array<double, 2>, 2>& m) {
    const double n = m[0][0] + m[0][1] + m[1][0] + m[1][1];
    const double po = (m[0][0] + m[1][1]) / n;
    const double pe = ((m[0][0] + m[0][1]) * (m[0][0] + m[1][0]) + (m[1][0] + m[1][1]) * (m[0][1] + m[1][1])) / (n * n);
    return (po - pe) / (1 - pe);
}

inline double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

inline double silhouette(const std::vector<std::vector<double>>& x, const std::vector<int>& lab) {
    std::map<int, int> size;
    for (int l : lab) ++size[l];
    double total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (size[lab[i]] == 1) continue;
        std::map<int, double> sum;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) sum[lab[j]] += dist(x[i], x[j]);
        const double a = sum[lab[i]] / (size[lab[i]] - 1);
        double b = INFINITY;
        for (auto& [l, s] : sum)
            if (l != lab[i]) b = std::min(b, s / size[l]);
        total += (b - a) / std::max(a, b);
    }
    return total / x.size();
}

// Smallest within-cluster sum of squares over every 2-partition.
inline double best_two_partition_inertia(const std::vector<std::vector<double>>& x) {
    const std::size_t n = x.size(), d = x[0].size();
    double best = INFINITY;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        double inertia = 0;
        for (int side = 0; side < 2; ++side) {
            std::vector<double> c(d, 0);
            int cnt = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (((mask >> i) & 1u) == std::uint32_t(side)) {
                    for (std::size_t k = 0; k < d; ++k) c[k] += x[i][k];
                    ++cnt;
                }
            for (auto& v : c) v /= cnt;
            for (std::size_t i = 0; i < n; ++i)
                if (((mask >> i) & 1u) == std::uint32_t(side)) inertia += std::pow(dist(x[i], c), 2);
        }
        best = std::min(best, inertia);
    }
    return best;
}

// c-TF-IDF straight from the definition.
inline double ctfidf(const std::map<int, std::vector<std::string>>& clusters, int c, const std::string& t) {
    double tf = 0, f = 0, total = 0;
    for (auto& [id, toks] : clusters) {
        total += toks.size();
        for (auto& w : toks) {
            if (w != t) continue;
            f += 1;
            if (id == c) tf += 1;
        }
    }
    if (f == 0) return 0;
    return tf * std::log(1 + total / f);
}

}  // namespace oracle
