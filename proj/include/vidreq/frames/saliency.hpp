#pragma once

#include "vidreq/frames/image.hpp"

namespace vidreq::frames {

/// Spectral-residual saliency energy of a grayscale frame.
///
/// Steps: subtract the frame mean; 2-D DFT; log-amplitude minus its 3x3
/// (circular) local average; recombine that residual with the original phase;
/// inverse DFT; squared magnitude; 3x3 box smoothing. The DC bin and bins with
/// no measurable amplitude carry no energy, so a constant frame maps to all
/// zeros and a global brightness offset leaves the result unchanged.
///
/// Throws Error(EmptyFrame) for a frame without pixels.
EnergyMap compute_saliency(const GrayFrame& frame);

}  // namespace vidreq::frames
