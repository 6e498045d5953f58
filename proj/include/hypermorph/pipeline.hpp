#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypermorph/image.hpp"
#include "hypermorph/morphology.hpp"
#include "hypermorph/thinning.hpp"

namespace hypermorph {

/// Preprocessing recipe. An empty op list is the unfiltered baseline.
struct PipelineConfig {
  StructuringElement se = cross5();
  std::vector<OperatorSpec> ops;
  bool thin = true;
};

class OpsSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Comma-separated `name:count` items, e.g. "open:1,close:2". The empty
/// string (or only whitespace) means no operators.
std::vector<OperatorSpec> parse_ops(std::string_view text);
std::string format_ops(const std::vector<OperatorSpec>& ops);

/// Builds the image hypergraph once and applies cfg.ops left to right.
BinaryImage preprocess(const BinaryImage& img, const PipelineConfig& cfg);

struct SkeletonMetrics {
  std::size_t component_count_8 = 0;
  std::size_t foreground_pixels = 0;
  std::size_t isolated_pixels = 0;  // foreground with no foreground 8-neighbour

  friend bool operator==(const SkeletonMetrics&, const SkeletonMetrics&) = default;
};

struct PipelineResult {
  BinaryImage image;
  SkeletonMetrics metrics;
  ThinningReport thinning;  // zeros when thinning is disabled
};

PipelineResult run_pipeline(const BinaryImage& img, const PipelineConfig& cfg);

struct ComponentLabels {
  std::size_t count = 0;
  // 0 for background, components numbered 1..count in row-major order of
  // their first pixel.
  std::vector<std::uint32_t> labels;
};

/// connectivity must be 4 or 8.
ComponentLabels connected_components(const BinaryImage& img, int connectivity);

SkeletonMetrics measure(const BinaryImage& img);

struct SkeletonComparison {
  std::size_t differing_pixels = 0;
  SkeletonMetrics first;
  SkeletonMetrics second;
  // first.component_count_8 - second.component_count_8
  long component_delta = 0;
};

/// Throws std::invalid_argument on a dimension mismatch.
SkeletonComparison compare_skeletons(const BinaryImage& a, const BinaryImage& b);

enum class TestShape { ring, bar, l_shape, o_glyph };

TestShape parse_test_shape(std::string_view name);

/// Deterministic rasterisations:
///   ring    - circular band of radial width `thickness`, outer radius
///             min(width, height) / 2 - 2, centred
///   bar     - vertical bar `thickness` columns wide spanning the full height
///   l_shape - vertical stroke down the left and horizontal stroke along the
///             bottom, both `thickness` wide, 2 pixel margin
///   o_glyph - elliptical band with semi-axes width / 2 - 2 and height / 2 - 2
/// Throws std::invalid_argument when the shape does not fit.
BinaryImage make_test_image(TestShape shape, std::size_t width, std::size_t height,
                            std::size_t thickness);

// Report records. Keys: components_8, foreground, isolated, passes, removed.
std::string metrics_text_record(const SkeletonMetrics& m, const ThinningReport& t);
std::string metrics_json(const SkeletonMetrics& m, const ThinningReport& t);

/// The ring denoising experiment: one clean ring, its noisy copy, and the
/// noisy copy thinned with and without hypergraph preprocessing.
struct RingExperimentConfig {
  std::size_t size = 64;
  std::size_t thickness = 5;
  double density = 0.02;
  std::uint64_t seed = 20240917;
  std::vector<OperatorSpec> ops{{OperatorKind::open, 1}, {OperatorKind::close, 1}};
};

struct RingExperiment {
  BinaryImage original;
  BinaryImage noisy;
  PipelineResult baseline;
  PipelineResult preprocessed;
};

RingExperiment run_ring_experiment(const RingExperimentConfig& cfg);
std::string ring_experiment_json(const RingExperimentConfig& cfg, const RingExperiment& r);

}  // namespace hypermorph
