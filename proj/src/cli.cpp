#include "hypermorph/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypermorph/hypergraph.hpp"
#include "hypermorph/image.hpp"
#include "hypermorph/morphology.hpp"
#include "hypermorph/netpbm.hpp"
#include "hypermorph/pipeline.hpp"
#include "hypermorph/thinning.hpp"

namespace hypermorph::cli {
namespace {

// Raised for bad flag values detected after CLI11 has parsed the line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputFormat {
  bool ascii = false;
  bool binary = false;

  PbmEncoding encoding() const { return ascii ? PbmEncoding::ascii : PbmEncoding::binary; }
};

void add_format_flags(CLI::App* cmd, OutputFormat& fmt) {
  auto* a = cmd->add_flag("--ascii", fmt.ascii, "Write plain PBM (P1)");
  auto* b = cmd->add_flag("--binary", fmt.binary, "Write raw PBM (P4, default)");
  a->excludes(b);
}

StructuringElement resolve_se(const std::string& spec, std::ostream& err) {
  for (const auto& se : builtin_structuring_elements()) {
    if (se.name() == spec) return se;
  }
  if (!std::filesystem::exists(spec)) {
    throw UsageError("--se: '" + spec + "' is neither a builtin (cross5, square9) nor a file");
  }
  StructuringElement se = load_structuring_element(spec);
  if (se.origin_added()) {
    err << "warning: structuring element '" << spec << "' lacks (0,0); origin added\n";
  }
  return se;
}

std::vector<OperatorSpec> resolve_ops(const std::string& text) {
  try {
    return parse_ops(text);
  } catch (const OpsSyntaxError& e) {
    throw UsageError(std::string("--ops: ") + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void print_metrics(std::ostream& out, const std::string& label, const SkeletonMetrics& m) {
  out << label << "components_8=" << m.component_count_8 << " foreground=" << m.foreground_pixels
      << " isolated=" << m.isolated_pixels << '\n';
}

std::vector<std::size_t> parse_vertex_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (tok[0] == '-') throw std::invalid_argument(tok);
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("--vertices: bad vertex id '" + tok + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string format_set(const std::vector<std::size_t>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(members[i]);
  }
  return s + "}";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph morphology preprocessing and Zhang-Suen thinning for binary images",
               "hypermorph"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::function<void()> action;

  // filter
  std::string filter_in, filter_out, filter_se = "cross5", filter_ops;
  OutputFormat filter_fmt;
  auto* filter = app.add_subcommand("filter", "Apply hypergraph morphology to an image");
  filter->add_option("input", filter_in, "Input PBM/PGM")->required();
  filter->add_option("--se", filter_se, "Structuring element: cross5, square9 or a file");
  filter->add_option("--ops", filter_ops, "Operators, e.g. open:1,close:1")->required();
  filter->add_option("-o,--output", filter_out, "Output PBM")->required();
  add_format_flags(filter, filter_fmt);
  filter->callback([&] {
    action = [&] {
      PipelineConfig cfg{resolve_se(filter_se, err), resolve_ops(filter_ops), false};
      BinaryImage img = load_netpbm(filter_in);
      save_pbm(filter_out, preprocess(img, cfg), filter_fmt.encoding());
    };
  });

  // thin
  std::string thin_in, thin_out;
  OutputFormat thin_fmt;
  auto* thin = app.add_subcommand("thin", "Zhang-Suen thinning");
  thin->add_option("input", thin_in, "Input PBM/PGM")->required();
  thin->add_option("-o,--output", thin_out, "Output PBM")->required();
  add_format_flags(thin, thin_fmt);
  thin->callback([&] {
    action = [&] {
      ThinningResult r = zhang_suen_thin(load_netpbm(thin_in));
      save_pbm(thin_out, r.image, thin_fmt.encoding());
      out << "passes=" << r.report.iterations << " removed=" << r.report.removed_pixels << '\n';
    };
  });

  // pipeline
  std::string pipe_in, pipe_out, pipe_se = "cross5", pipe_ops, pipe_report;
  bool pipe_thin = false;
  OutputFormat pipe_fmt;
  auto* pipeline = app.add_subcommand("pipeline", "Preprocess, optionally thin, and measure");
  pipeline->add_option("input", pipe_in, "Input PBM/PGM")->required();
  pipeline->add_option("--se", pipe_se, "Structuring element: cross5, square9 or a file");
  pipeline->add_option("--ops", pipe_ops, "Operators, e.g. open:1,close:1");
  pipeline->add_flag("--thin", pipe_thin, "Thin after preprocessing");
  pipeline->add_option("-o,--output", pipe_out, "Output PBM");
  pipeline->add_option("--report", pipe_report, "Write the JSON metrics report here");
  add_format_flags(pipeline, pipe_fmt);
  pipeline->callback([&] {
    action = [&] {
      PipelineConfig cfg{resolve_se(pipe_se, err), resolve_ops(pipe_ops), pipe_thin};
      PipelineResult r = run_pipeline(load_netpbm(pipe_in), cfg);
      if (!pipe_out.empty()) save_pbm(pipe_out, r.image, pipe_fmt.encoding());
      if (!pipe_report.empty()) write_text_file(pipe_report, metrics_json(r.metrics, r.thinning));
      out << metrics_text_record(r.metrics, r.thinning) << '\n';
    };
  });

  // noise
  std::string noise_in, noise_out;
  double noise_density = 0.0;
  std::uint64_t noise_seed = 0;
  OutputFormat noise_fmt;
  auto* noise = app.add_subcommand("noise", "Add seeded salt-and-pepper noise");
  noise->add_option("input", noise_in, "Input PBM/PGM")->required();
  noise->add_option("--density", noise_density, "Flip probability per pixel")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  noise->add_option("--seed", noise_seed, "PRNG seed")->required();
  noise->add_option("-o,--output", noise_out, "Output PBM")->required();
  add_format_flags(noise, noise_fmt);
  noise->callback([&] {
    action = [&] {
      BinaryImage img = load_netpbm(noise_in);
      save_pbm(noise_out, add_salt_pepper_noise(img, noise_density, noise_seed),
               noise_fmt.encoding());
    };
  });

  // metrics
  std::vector<std::string> metrics_in;
  auto* metrics = app.add_subcommand("metrics", "Print skeleton metrics, or compare two images");
  metrics->add_option("inputs", metrics_in, "One or two PBM/PGM images")
      ->required()
      ->expected(1, 2);
  metrics->callback([&] {
    action = [&] {
      BinaryImage a = load_netpbm(metrics_in[0]);
      if (metrics_in.size() == 1) {
        print_metrics(out, "", measure(a));
        return;
      }
      BinaryImage b = load_netpbm(metrics_in[1]);
      if (a.width() != b.width() || a.height() != b.height()) {
        throw std::runtime_error("images differ in size");
      }
      SkeletonComparison c = compare_skeletons(a, b);
      print_metrics(out, "first: ", c.first);
      print_metrics(out, "second: ", c.second);
      out << "differing_pixels=" << c.differing_pixels
          << " component_delta=" << c.component_delta << '\n';
    };
  });

  // demo
  std::string demo_dir;
  RingExperimentConfig demo_cfg;
  auto* demo = app.add_subcommand("demo", "Noisy-ring experiment with and without preprocessing");
  demo->add_option("--outdir", demo_dir, "Directory for the five output files")->required();
  demo->add_option("--seed", demo_cfg.seed, "Noise seed")->capture_default_str();
  demo->callback([&] {
    action = [&] {
      namespace fs = std::filesystem;
      fs::create_directories(demo_dir);
      const fs::path dir(demo_dir);
      RingExperiment r = run_ring_experiment(demo_cfg);
      save_pbm((dir / "original.pbm").string(), r.original);
      save_pbm((dir / "noisy.pbm").string(), r.noisy);
      save_pbm((dir / "skeleton_baseline.pbm").string(), r.baseline.image);
      save_pbm((dir / "skeleton_preprocessed.pbm").string(), r.preprocessed.image);
      write_text_file(dir / "report.json", ring_experiment_json(demo_cfg, r));
      out << "baseline:     " << metrics_text_record(r.baseline.metrics, r.baseline.thinning)
          << '\n'
          << "preprocessed: "
          << metrics_text_record(r.preprocessed.metrics, r.preprocessed.thinning) << '\n';
    };
  });

  // hypergraph fixture inspection
  std::string hg_fixture, hg_vertices, hg_ops;
  auto* hg = app.add_subcommand("hypergraph", "Inspect a text hypergraph fixture");
  hg->add_option("--hypergraph-fixture", hg_fixture, "Fixture file (vertices N / edge k: ...)")
      ->required();
  hg->add_option("--vertices", hg_vertices, "Vertex subset to filter, e.g. \"0,1,4\"");
  hg->add_option("--ops", hg_ops, "Operators applied to --vertices");
  hg->callback([&] {
    action = [&] {
      Hypergraph h = load_hypergraph_fixture(hg_fixture);
      out << "vertices=" << h.vertex_count() << " edges=" << h.edge_count()
          << " isolated=" << h.isolated_vertices().count() << '\n';
      for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge_members(EdgeId{e});
        out << "edge " << e << " rank=" << m.size() << ' '
            << format_set({m.begin(), m.end()}) << '\n';
      }
      if (hg_vertices.empty() && hg_ops.empty()) return;
      VertexSet x(h.vertex_count());
      for (std::size_t v : parse_vertex_list(hg_vertices)) {
        if (v >= h.vertex_count()) throw UsageError("--vertices: id " + std::to_string(v) + " out of range");
        x.insert(v);
      }
      for (const auto& op : resolve_ops(hg_ops)) x = iterate(h, op, x);
      out << "result=" << format_set(x.members()) << '\n';
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace hypermorph::cli
