#pragma once

#include <cstddef>

#include "hypermorph/image.hpp"

namespace hypermorph {

struct ThinningReport {
  std::size_t iterations = 0;  // full passes, including the final no-op pass
  std::size_t removed_pixels = 0;
};

struct ThinningResult {
  BinaryImage image;
  ThinningReport report;
};

/// Zhang-Suen parallel thinning.
///
/// Neighbours of P1 are P2..P9 clockwise from north. B is the number of
/// foreground neighbours, A the number of 0->1 transitions in P2..P9,P2.
/// A pixel is deleted in sub-pass 1 when 2 <= B <= 6, A == 1,
/// P2*P4*P6 == 0 and P4*P6*P8 == 0; sub-pass 2 uses P2*P4*P8 == 0 and
/// P2*P6*P8 == 0 instead. Each sub-pass marks against a frozen copy and
/// deletes all marks at once. Pixels outside the image are background.
ThinningResult zhang_suen_thin(const BinaryImage& img);

}  // namespace hypermorph
