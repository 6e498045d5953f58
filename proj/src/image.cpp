#include "hypermorph/image.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hypermorph/parallel.hpp"

namespace hypermorph {

BinaryImage::BinaryImage(std::size_t width, std::size_t height, bool fill)
    : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("image dimensions must be at least 1x1, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
  bits_.assign(width * height, fill ? 1 : 0);
}

BinaryImage BinaryImage::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
  BinaryImage img(rows.front().size(), rows.size());
  for (std::size_t y = 0; y < rows.size(); ++y) {
    if (rows[y].size() != img.width()) {
      throw std::invalid_argument("from_rows: ragged row " + std::to_string(y));
    }
    for (std::size_t x = 0; x < img.width(); ++x) {
      img.set(x, y, rows[y][x] == '#' || rows[y][x] == '1');
    }
  }
  return img;
}

std::vector<std::string> BinaryImage::to_rows() const {
  std::vector<std::string> rows(height_, std::string(width_, '.'));
  for (std::size_t y = 0; y < height_; ++y) {
    for (std::size_t x = 0; x < width_; ++x) {
      if (at(x, y)) rows[y][x] = '#';
    }
  }
  return rows;
}

std::size_t BinaryImage::foreground_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

BinaryImage BinaryImage::inverted() const {
  BinaryImage out(*this);
  for (auto& b : out.bits_) b = b ? 0 : 1;
  return out;
}

StructuringElement::StructuringElement(std::vector<Offset> offsets, std::string name)
    : offsets_(std::move(offsets)), name_(std::move(name)) {
  if (offsets_.empty()) {
    throw std::invalid_argument("structuring element has no offsets");
  }
  std::sort(offsets_.begin(), offsets_.end());
  offsets_.erase(std::unique(offsets_.begin(), offsets_.end()), offsets_.end());
  if (!std::binary_search(offsets_.begin(), offsets_.end(), Offset{0, 0})) {
    offsets_.insert(std::lower_bound(offsets_.begin(), offsets_.end(), Offset{0, 0}),
                    Offset{0, 0});
    origin_added_ = true;
  }
}

StructuringElement cross5() {
  return StructuringElement({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}, "cross5");
}

StructuringElement square9() {
  std::vector<Offset> o;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) o.push_back({dx, dy});
  }
  return StructuringElement(std::move(o), "square9");
}

std::vector<StructuringElement> builtin_structuring_elements() {
  return {cross5(), square9()};
}

StructuringElement builtin_structuring_element(std::string_view name) {
  for (auto& se : builtin_structuring_elements()) {
    if (se.name() == name) return se;
  }
  throw std::invalid_argument("unknown structuring element '" + std::string(name) + "'");
}

StructuringElement parse_structuring_element(std::istream& in, std::string name) {
  std::vector<Offset> offsets;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::istringstream ls(raw);
    Offset o;
    if (!(ls >> o.dx)) {
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::invalid_argument("structuring element line " + std::to_string(line_no) +
                                  ": expected 'dx dy'");
    }
    std::string extra;
    if (!(ls >> o.dy) || (ls >> extra)) {
      throw std::invalid_argument("structuring element line " + std::to_string(line_no) +
                                  ": expected 'dx dy'");
    }
    offsets.push_back(o);
  }
  return StructuringElement(std::move(offsets), std::move(name));
}

StructuringElement load_structuring_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open structuring element file '" + path + "'");
  return parse_structuring_element(in, path);
}

namespace {

// In-bounds pixel index of (x + dx, y + dy), or -1.
inline long shifted(std::size_t width, std::size_t height, std::size_t x, std::size_t y,
                    int dx, int dy) {
  long nx = static_cast<long>(x) + dx;
  long ny = static_cast<long>(y) + dy;
  if (nx < 0 || ny < 0 || nx >= static_cast<long>(width) || ny >= static_cast<long>(height)) {
    return -1;
  }
  return ny * static_cast<long>(width) + nx;
}

}  // namespace

ImageHypergraph image_to_hypergraph(const BinaryImage& img, const ImageHypergraphConfig& cfg) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  std::vector<std::vector<std::size_t>> edges(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      auto& e = edges[y * w + x];
      for (const Offset& o : cfg.se.offsets()) {
        long q = shifted(w, h, x, y, o.dx, o.dy);
        if (q >= 0) e.push_back(static_cast<std::size_t>(q));
      }
    }
  }
  return {Hypergraph(w * h, edges), foreground_set(img)};
}

VertexSet foreground_set(const BinaryImage& img) {
  VertexSet out(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img.pixel(i)) out.insert(i);
  }
  return out;
}

BinaryImage vertex_set_to_image(std::size_t width, std::size_t height, const VertexSet& x) {
  BinaryImage img(width, height);
  if (x.universe_size() != width * height) {
    throw std::out_of_range("vertex set universe " + std::to_string(x.universe_size()) +
                            " does not match a " + std::to_string(width) + "x" +
                            std::to_string(height) + " image");
  }
  x.for_each([&](std::size_t i) { img.set_pixel(i, true); });
  return img;
}

BinaryImage add_salt_pepper_noise(const BinaryImage& img, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("noise density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  BinaryImage out(img);
  // Top 53 bits as a uniform double in [0, 1); avoids the
  // implementation-defined std::uniform_real_distribution.
  constexpr double kScale = 1.0 / 9007199254740992.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    double u = static_cast<double>(rng() >> 11) * kScale;
    if (u < density) out.set_pixel(i, !out.pixel(i));
  }
  return out;
}

PixelGridDomain::PixelGridDomain(std::size_t width, std::size_t height,
                                 const StructuringElement& se)
    : width_(width), height_(height), offsets_(se.offsets()) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("pixel grid must be at least 1x1");
  }
}

namespace {

template <typename Out, typename In>
Out grid_kernel(const PixelGridDomain& d, const In& x, int sign, bool any) {
  if (x.universe_size() != d.vertex_count()) {
    throw std::invalid_argument("operand universe does not match pixel grid");
  }
  Out out(d.vertex_count());
  const std::size_t w = d.width();
  const std::size_t h = d.height();
  parallel_for_aligned(d.vertex_count(), Out::kBlockBits, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const std::size_t px = p % w;
      const std::size_t py = p / w;
      bool result = !any;
      for (const Offset& o : d.offsets()) {
        long q = shifted(w, h, px, py, sign * o.dx, sign * o.dy);
        if (q < 0) continue;
        if (x.contains(static_cast<std::size_t>(q)) == any) {
          result = any;
          break;
        }
      }
      if (result) out.insert(p);
    }
  });
  return out;
}

}  // namespace

// Edge p contains pixel p + o, so pixel x lies in edges x - o.
VertexSet edge_to_vertex_dilation(const PixelGridDomain& d, const EdgeSet& x) {
  return grid_kernel<VertexSet>(d, x, -1, true);
}

EdgeSet vertex_to_edge_erosion(const PixelGridDomain& d, const VertexSet& x) {
  return grid_kernel<EdgeSet>(d, x, +1, false);
}

VertexSet edge_to_vertex_erosion(const PixelGridDomain& d, const EdgeSet& x) {
  return grid_kernel<VertexSet>(d, x, -1, false);
}

EdgeSet vertex_to_edge_dilation(const PixelGridDomain& d, const VertexSet& x) {
  return grid_kernel<EdgeSet>(d, x, +1, true);
}

}  // namespace hypermorph
