#pragma once

#include <array>
#include <span>
#include <vector>

#include "vidreq/frames/image.hpp"

namespace vidreq::frames {

inline constexpr double kProbabilityFloor = 1e-12;
inline constexpr double kDistributionSumTolerance = 1e-6;

enum class SliceAxis { Vertical = 0, Horizontal = 1, Diagonal = 2 };

struct SliceSet {
    // Indexed by SliceAxis: vertical, horizontal, diagonal.
    std::array<std::vector<double>, 3> slices;
    bool degenerate = false;  // the map was all zero; slices are uniform
};

/// Center column, center row and main diagonal of `map`, each linearly
/// resampled to `length` points and turned into a probability vector by
/// (v + eps) / (sum + length * eps). The diagonal runs from the top-left to the
/// bottom-right corner regardless of aspect ratio. Requires length >= 2.
SliceSet extract_slices(const EnergyMap& map, std::size_t length);

/// Sum of p_i * ln(p_i / q_i) with both operands floored at 1e-12.
/// Throws LengthMismatch on size mismatch and InvalidDistribution when either
/// input has a negative entry or does not sum to 1 within 1e-6.
double kl_divergence(std::span<const double> p, std::span<const double> q);

}  // namespace vidreq::frames
