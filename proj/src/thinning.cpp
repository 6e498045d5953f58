#include "hypermorph/thinning.hpp"

#include <array>
#include <vector>

namespace hypermorph {
namespace {

// P2..P9: N, NE, E, SE, S, SW, W, NW.
constexpr std::array<int, 8> kDx{0, 1, 1, 1, 0, -1, -1, -1};
constexpr std::array<int, 8> kDy{-1, -1, 0, 1, 1, 1, 0, -1};

bool deletable(const BinaryImage& img, std::size_t x, std::size_t y, int subpass) {
  std::array<int, 8> p{};
  int b = 0;
  for (int k = 0; k < 8; ++k) {
    p[k] = img.at_or_background(static_cast<long>(x) + kDx[k], static_cast<long>(y) + kDy[k]);
    b += p[k];
  }
  if (b < 2 || b > 6) return false;
  int a = 0;
  for (int k = 0; k < 8; ++k) a += (p[k] == 0 && p[(k + 1) % 8] == 1);
  if (a != 1) return false;
  const int p2 = p[0], p4 = p[2], p6 = p[4], p8 = p[6];
  if (subpass == 0) return p2 * p4 * p6 == 0 && p4 * p6 * p8 == 0;
  return p2 * p4 * p8 == 0 && p2 * p6 * p8 == 0;
}

}  // namespace

ThinningResult zhang_suen_thin(const BinaryImage& img) {
  ThinningResult result{img, {}};
  BinaryImage& cur = result.image;
  std::vector<std::size_t> marked;
  bool changed = true;
  while (changed) {
    changed = false;
    ++result.report.iterations;
    for (int subpass = 0; subpass < 2; ++subpass) {
      marked.clear();
      for (std::size_t y = 0; y < cur.height(); ++y) {
        for (std::size_t x = 0; x < cur.width(); ++x) {
          if (cur.at(x, y) && deletable(cur, x, y, subpass)) marked.push_back(y * cur.width() + x);
        }
      }
      for (std::size_t i : marked) cur.set_pixel(i, false);
      result.report.removed_pixels += marked.size();
      changed = changed || !marked.empty();
    }
  }
  return result;
}

}  // namespace hypermorph
