#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypermorph/hypergraph.hpp"
#include "hypermorph/index_set.hpp"
#include "hypermorph/morphology.hpp"

namespace hypermorph {

/// Row-major binary mask, 1 = foreground (object), 0 = background.
class BinaryImage {
 public:
  BinaryImage() = default;
  /// Throws std::invalid_argument when either dimension is zero.
  BinaryImage(std::size_t width, std::size_t height, bool fill = false);

  /// Test helper: one string per row, '#' or '1' is foreground, anything
  /// else background. All rows must have the same length.
  static BinaryImage from_rows(const std::vector<std::string>& rows);
  std::vector<std::string> to_rows() const;

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return bits_.size(); }

  bool at(std::size_t x, std::size_t y) const { return bits_[y * width_ + x] != 0; }
  void set(std::size_t x, std::size_t y, bool v) { bits_[y * width_ + x] = v ? 1 : 0; }
  bool pixel(std::size_t i) const { return bits_[i] != 0; }
  void set_pixel(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }

  /// Reads (x, y) with anything outside the image as background.
  bool at_or_background(long x, long y) const {
    if (x < 0 || y < 0 || x >= static_cast<long>(width_) || y >= static_cast<long>(height_)) {
      return false;
    }
    return at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  }

  std::size_t foreground_count() const;
  BinaryImage inverted() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct Offset {
  int dx = 0;
  int dy = 0;
  friend auto operator<=>(const Offset&, const Offset&) = default;
};

/// Set of pixel offsets. The origin is always a member: it is inserted
/// when missing and origin_added() reports that it was.
class StructuringElement {
 public:
  /// Throws std::invalid_argument on an empty offset list.
  StructuringElement(std::vector<Offset> offsets, std::string name = {});

  const std::vector<Offset>& offsets() const { return offsets_; }
  const std::string& name() const { return name_; }
  bool origin_added() const { return origin_added_; }
  std::size_t size() const { return offsets_.size(); }

 private:
  std::vector<Offset> offsets_;
  std::string name_;
  bool origin_added_ = false;
};

StructuringElement cross5();
StructuringElement square9();
/// cross5 and square9.
std::vector<StructuringElement> builtin_structuring_elements();
/// Builtin by name, or throws std::invalid_argument.
StructuringElement builtin_structuring_element(std::string_view name);

/// One "dx dy" pair per line, '#' comments.
StructuringElement parse_structuring_element(std::istream& in, std::string name = {});
StructuringElement load_structuring_element(const std::string& path);

enum class BorderPolicy { clip };

struct ImageHypergraphConfig {
  StructuringElement se = cross5();
  BorderPolicy border_policy = BorderPolicy::clip;
};

struct ImageHypergraph {
  Hypergraph graph;
  VertexSet foreground;
};

/// One vertex per pixel (id = y * width + x) and one hyperedge per pixel p
/// holding the in-bounds pixels p + o, o in the SE. The origin in the SE
/// keeps every vertex inside its own edge, so there are no isolated
/// vertices.
ImageHypergraph image_to_hypergraph(const BinaryImage& img, const ImageHypergraphConfig& cfg);

VertexSet foreground_set(const BinaryImage& img);
/// Throws std::out_of_range if the set's universe is not width * height.
BinaryImage vertex_set_to_image(std::size_t width, std::size_t height, const VertexSet& x);

/// Flips every pixel independently with probability `density`, drawing one
/// 64-bit Mersenne Twister output per pixel in row-major order. The result
/// depends only on (img, density, seed).
BinaryImage add_salt_pepper_noise(const BinaryImage& img, double density, std::uint64_t seed);

/// The image hypergraph evaluated directly on the pixel grid, without
/// materialising edge lists. Edge p is the clipped neighbourhood of pixel p,
/// exactly as image_to_hypergraph builds it.
class PixelGridDomain {
 public:
  PixelGridDomain(std::size_t width, std::size_t height, const StructuringElement& se);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t vertex_count() const { return width_ * height_; }
  std::size_t edge_count() const { return width_ * height_; }
  const std::vector<Offset>& offsets() const { return offsets_; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Offset> offsets_;
};

VertexSet edge_to_vertex_dilation(const PixelGridDomain& d, const EdgeSet& x);
EdgeSet vertex_to_edge_erosion(const PixelGridDomain& d, const VertexSet& x);
VertexSet edge_to_vertex_erosion(const PixelGridDomain& d, const EdgeSet& x);
EdgeSet vertex_to_edge_dilation(const PixelGridDomain& d, const VertexSet& x);

}  // namespace hypermorph
