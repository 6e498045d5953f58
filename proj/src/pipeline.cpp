#include "hypermorph/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace hypermorph {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<OperatorSpec> parse_ops(std::string_view text) {
  std::vector<OperatorSpec> ops;
  if (trim(text).empty()) return ops;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(start, comma - start));
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw OpsSyntaxError("operator '" + std::string(item) + "' is missing ':count'");
    }
    std::string_view name = trim(item.substr(0, colon));
    std::string_view count_text = trim(item.substr(colon + 1));
    OperatorSpec spec;
    try {
      spec.kind = parse_operator_kind(name);
    } catch (const std::invalid_argument& e) {
      throw OpsSyntaxError(e.what());
    }
    std::size_t count = 0;
    auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc{} || ptr != count_text.data() + count_text.size() || count < 1) {
      throw OpsSyntaxError("operator '" + std::string(name) +
                           "' needs a positive integer count, got '" +
                           std::string(count_text) + "'");
    }
    spec.iterations = count;
    ops.push_back(spec);
    start = comma + 1;
  }
  return ops;
}

std::string format_ops(const std::vector<OperatorSpec>& ops) {
  std::string out;
  for (const auto& op : ops) {
    if (!out.empty()) out += ',';
    out += operator_name(op.kind);
    out += ':';
    out += std::to_string(op.iterations);
  }
  return out;
}

BinaryImage preprocess(const BinaryImage& img, const PipelineConfig& cfg) {
  if (cfg.ops.empty()) return img;
  ImageHypergraph ih = image_to_hypergraph(img, {cfg.se, BorderPolicy::clip});
  VertexSet x = ih.foreground;
  for (const auto& op : cfg.ops) x = iterate(ih.graph, op, x);
  return vertex_set_to_image(img.width(), img.height(), x);
}

PipelineResult run_pipeline(const BinaryImage& img, const PipelineConfig& cfg) {
  PipelineResult r{preprocess(img, cfg), {}, {}};
  if (cfg.thin) {
    ThinningResult t = zhang_suen_thin(r.image);
    r.image = std::move(t.image);
    r.thinning = t.report;
  }
  r.metrics = measure(r.image);
  return r;
}

ComponentLabels connected_components(const BinaryImage& img, int connectivity) {
  if (connectivity != 4 && connectivity != 8) {
    throw std::invalid_argument("connectivity must be 4 or 8");
  }
  const long w = static_cast<long>(img.width());
  const long h = static_cast<long>(img.height());
  ComponentLabels out;
  out.labels.assign(img.size(), 0);
  std::queue<std::size_t> frontier;
  for (std::size_t seed = 0; seed < img.size(); ++seed) {
    if (!img.pixel(seed) || out.labels[seed] != 0) continue;
    const auto label = static_cast<std::uint32_t>(++out.count);
    out.labels[seed] = label;
    frontier.push(seed);
    while (!frontier.empty()) {
      const std::size_t p = frontier.front();
      frontier.pop();
      const long px = static_cast<long>(p) % w;
      const long py = static_cast<long>(p) / w;
      for (long dy = -1; dy <= 1; ++dy) {
        for (long dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (connectivity == 4 && dx != 0 && dy != 0) continue;
          const long nx = px + dx;
          const long ny = py + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const auto q = static_cast<std::size_t>(ny * w + nx);
          if (img.pixel(q) && out.labels[q] == 0) {
            out.labels[q] = label;
            frontier.push(q);
          }
        }
      }
    }
  }
  return out;
}

SkeletonMetrics measure(const BinaryImage& img) {
  SkeletonMetrics m;
  m.component_count_8 = connected_components(img, 8).count;
  m.foreground_pixels = img.foreground_count();
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (!img.at(x, y)) continue;
      bool lonely = true;
      for (long dy = -1; dy <= 1 && lonely; ++dy) {
        for (long dx = -1; dx <= 1; ++dx) {
          if ((dx != 0 || dy != 0) &&
              img.at_or_background(static_cast<long>(x) + dx, static_cast<long>(y) + dy)) {
            lonely = false;
            break;
          }
        }
      }
      if (lonely) ++m.isolated_pixels;
    }
  }
  return m;
}

SkeletonComparison compare_skeletons(const BinaryImage& a, const BinaryImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("cannot compare " + std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " with " +
                                std::to_string(b.width()) + "x" + std::to_string(b.height()));
  }
  SkeletonComparison c;
  for (std::size_t i = 0; i < a.size(); ++i) c.differing_pixels += a.pixel(i) != b.pixel(i);
  c.first = measure(a);
  c.second = measure(b);
  c.component_delta = static_cast<long>(c.first.component_count_8) -
                      static_cast<long>(c.second.component_count_8);
  return c;
}

TestShape parse_test_shape(std::string_view name) {
  if (name == "ring") return TestShape::ring;
  if (name == "bar") return TestShape::bar;
  if (name == "L" || name == "l") return TestShape::l_shape;
  if (name == "O" || name == "o" || name == "O-glyph") return TestShape::o_glyph;
  throw std::invalid_argument("unknown test shape '" + std::string(name) + "'");
}

BinaryImage make_test_image(TestShape shape, std::size_t width, std::size_t height,
                            std::size_t thickness) {
  if (thickness < 1) throw std::invalid_argument("thickness must be >= 1");
  BinaryImage img(width, height);
  const double cx = (static_cast<double>(width) - 1.0) / 2.0;
  const double cy = (static_cast<double>(height) - 1.0) / 2.0;
  const auto t = static_cast<double>(thickness);

  switch (shape) {
    case TestShape::ring: {
      const long outer = static_cast<long>(std::min(width, height) / 2) - 2;
      if (outer < 1 || t > static_cast<double>(outer)) {
        throw std::invalid_argument("ring thickness " + std::to_string(thickness) +
                                    " exceeds radius " + std::to_string(outer));
      }
      const double r2_out = static_cast<double>(outer * outer);
      const double r_in = static_cast<double>(outer) - t;
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          const double dx = static_cast<double>(x) - cx;
          const double dy = static_cast<double>(y) - cy;
          const double d2 = dx * dx + dy * dy;
          img.set(x, y, d2 <= r2_out && d2 > r_in * r_in);
        }
      }
      break;
    }
    case TestShape::bar: {
      if (thickness > width) {
        throw std::invalid_argument("bar thickness exceeds image width");
      }
      const std::size_t x0 = (width - thickness) / 2;
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = x0; x < x0 + thickness; ++x) img.set(x, y, true);
      }
      break;
    }
    case TestShape::l_shape: {
      if (width < 4 || height < 4 || thickness >= width - 4 || thickness >= height - 4) {
        throw std::invalid_argument("L shape does not fit");
      }
      for (std::size_t y = 2; y < height - 2; ++y) {
        for (std::size_t x = 2; x < width - 2; ++x) {
          const bool vertical = x < 2 + thickness;
          const bool horizontal = y >= height - 2 - thickness;
          img.set(x, y, vertical || horizontal);
        }
      }
      break;
    }
    case TestShape::o_glyph: {
      const double a = static_cast<double>(width / 2) - 2.0;
      const double b = static_cast<double>(height / 2) - 2.0;
      if (a < 1.0 || b < 1.0 || t >= std::min(a, b)) {
        throw std::invalid_argument("O glyph thickness exceeds its semi-axes");
      }
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          const double dx = static_cast<double>(x) - cx;
          const double dy = static_cast<double>(y) - cy;
          const double outer = (dx * dx) / (a * a) + (dy * dy) / (b * b);
          const double inner = (dx * dx) / ((a - t) * (a - t)) + (dy * dy) / ((b - t) * (b - t));
          img.set(x, y, outer <= 1.0 && inner > 1.0);
        }
      }
      break;
    }
  }
  return img;
}

namespace {

nlohmann::ordered_json metrics_object(const SkeletonMetrics& m, const ThinningReport& t) {
  nlohmann::ordered_json j;
  j["components_8"] = m.component_count_8;
  j["foreground"] = m.foreground_pixels;
  j["isolated"] = m.isolated_pixels;
  j["passes"] = t.iterations;
  j["removed"] = t.removed_pixels;
  return j;
}

}  // namespace

std::string metrics_text_record(const SkeletonMetrics& m, const ThinningReport& t) {
  std::ostringstream os;
  os << "components_8=" << m.component_count_8 << " foreground=" << m.foreground_pixels
     << " isolated=" << m.isolated_pixels << " passes=" << t.iterations
     << " removed=" << t.removed_pixels;
  return os.str();
}

std::string metrics_json(const SkeletonMetrics& m, const ThinningReport& t) {
  return metrics_object(m, t).dump(2) + "\n";
}

RingExperiment run_ring_experiment(const RingExperimentConfig& cfg) {
  RingExperiment r;
  r.original = make_test_image(TestShape::ring, cfg.size, cfg.size, cfg.thickness);
  r.noisy = add_salt_pepper_noise(r.original, cfg.density, cfg.seed);
  r.baseline = run_pipeline(r.noisy, {cross5(), {}, true});
  r.preprocessed = run_pipeline(r.noisy, {cross5(), cfg.ops, true});
  return r;
}

std::string ring_experiment_json(const RingExperimentConfig& cfg, const RingExperiment& r) {
  nlohmann::ordered_json j;
  j["shape"] = "ring";
  j["size"] = cfg.size;
  j["thickness"] = cfg.thickness;
  j["density"] = cfg.density;
  j["seed"] = cfg.seed;
  j["se"] = "cross5";
  j["ops"] = format_ops(cfg.ops);
  j["baseline"] = metrics_object(r.baseline.metrics, r.baseline.thinning);
  j["preprocessed"] = metrics_object(r.preprocessed.metrics, r.preprocessed.thinning);
  return j.dump(2) + "\n";
}

}  // namespace hypermorph
