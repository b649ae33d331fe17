// fa2: ForceAtlas2 graph layout, transforms, styling, SVG rendering and a
// scaling benchmark, held together by five subcommands.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fa2/bench.hpp"
#include "fa2/engine.hpp"
#include "fa2/graph.hpp"
#include "fa2/layout_io.hpp"
#include "fa2/style.hpp"
#include "fa2/svg.hpp"
#include "fa2/timeseries.hpp"
#include "fa2/transforms.hpp"

namespace {

struct GraphInputOpts {
  std::string path;
  bool matrix = false;
  bool undirected = false;
  std::string attrs_path;
};

void add_graph_input(CLI::App* cmd, GraphInputOpts& opts) {
  cmd->add_option("graph", opts.path, "Graph file (edge-list CSV, or weight-matrix CSV with --matrix)")
      ->required();
  cmd->add_flag("--matrix", opts.matrix, "Input is a square weight matrix");
  cmd->add_flag("--undirected", opts.undirected, "Treat edges as undirected (no arrowheads)");
  cmd->add_option("--attrs", opts.attrs_path, "Node attribute CSV (header: id[,label][,attr...])");
}

fa2::Graph load_graph(const GraphInputOpts& opts) {
  const std::string text = fa2::read_file(opts.path);
  fa2::Graph graph = opts.matrix ? fa2::parse_weight_matrix(text)
                                 : fa2::parse_edge_list(text, !opts.undirected);
  if (!opts.attrs_path.empty()) {
    fa2::parse_node_attributes(fa2::read_file(opts.attrs_path), graph);
  }
  return graph;
}

struct ParamOpts {
  fa2::Fa2Params params;
  std::string center_arg;
  std::string pos_path;
  bool fixed_tolerance = false;
  std::optional<std::uint64_t> seed;
};

void add_param_flags(CLI::App* cmd, ParamOpts& o) {
  cmd->add_option("--iterations", o.params.iterations, "Iteration count")->capture_default_str();
  cmd->add_option("--plotstep", o.params.plotstep, "Snapshot stride; 0 disables")
      ->capture_default_str();
  cmd->add_flag("--linlog", o.params.linlog, "log(1+d) attraction");
  cmd->add_flag("--stronggravity", o.params.strong_gravity, "Pull nodes toward --center");
  cmd->add_option("--gravity", o.params.gravity_constant, "Gravity constant k_g")
      ->capture_default_str();
  cmd->add_option("--jittertol", o.params.tolerance, "Swinging tolerance tau")
      ->capture_default_str();
  cmd->add_option("--scaling", o.params.scaling_s, "Repulsion constant S")->capture_default_str();
  cmd->add_option("--delta", o.params.edge_weight_influence, "Edge weight influence (0 or 1)")
      ->capture_default_str();
  cmd->add_option("--ks", o.params.speed_constant, "Speed constant k_s")->capture_default_str();
  cmd->add_option("--center", o.center_arg, "Gravity center as x,y (default 0,0)");
  cmd->add_option("--pos", o.pos_path, "Warm-start layout TSV");
  cmd->add_option("--seed", o.seed, "Random seed for initial positions");
  cmd->add_flag("--fixed-tolerance", o.fixed_tolerance,
                "Disable the adaptive tolerance heuristic");
}

fa2::Vec2 parse_point(const std::string& arg) {
  const auto comma = arg.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("expected x,y, got '" + arg + "'");
  try {
    return fa2::Vec2(std::stod(arg.substr(0, comma)), std::stod(arg.substr(comma + 1)));
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected x,y, got '" + arg + "'");
  }
}

fa2::Fa2Params finish_params(const ParamOpts& o) {
  fa2::Fa2Params p = o.params;
  if (!o.center_arg.empty()) p.center = parse_point(o.center_arg);
  if (o.seed) p.seed = o.seed;
  p.adaptive_tolerance = !o.fixed_tolerance;
  p.validate();
  return p;
}

std::optional<fa2::PositionMatrix> load_warm_start(const std::string& path,
                                                   const fa2::Graph& graph) {
  if (path.empty()) return std::nullopt;
  return fa2::layout_for_graph(fa2::parse_layout_tsv(fa2::read_file(path)), graph);
}

void write_snapshot_svgs(const std::string& prefix, const fa2::Graph& graph,
                         const fa2::LayoutResult& result, const fa2::StyleMap& style) {
  const auto frames = fa2::render_snapshots(graph, result.snapshots, style);
  for (const auto& [iteration, svg] : frames) {
    fa2::write_file(prefix + "_iter" + std::to_string(iteration) + ".svg", svg);
  }
}

int run_layout_cmd(const GraphInputOpts& gopts, const ParamOpts& popts, const std::string& out,
                   const std::string& diagnostics, const std::string& snapshots, int threads) {
  const fa2::Graph graph = load_graph(gopts);
  const fa2::Fa2Params params = finish_params(popts);
  const auto warm = load_warm_start(popts.pos_path, graph);
  const fa2::LayoutResult result = fa2::run_layout(graph, params, warm, threads);
  fa2::write_file(out, fa2::format_layout_tsv(graph, result.positions));
  if (!diagnostics.empty()) {
    fa2::write_file(diagnostics, fa2::format_diagnostics_csv(result.trace));
  }
  if (!snapshots.empty()) write_snapshot_svgs(snapshots, graph, result, {});
  return 0;
}

struct RenderOpts {
  std::string layout_path;
  std::string out = "graph.svg";
  std::string style_path;
  std::string color_attr;
  bool edge_colors_by_origin = false;
  std::string size_attr;
  double size_min = 3.0, size_max = 10.0;
  std::string canvas_arg;
  std::string edge_color;
  bool no_labels = false;
  fa2::RenderSpec spec;
};

int run_render_cmd(const GraphInputOpts& gopts, RenderOpts& o) {
  const fa2::Graph graph = load_graph(gopts);
  const auto layout = fa2::layout_for_graph(fa2::parse_layout_tsv(fa2::read_file(o.layout_path)),
                                            graph);
  fa2::StyleMap style;
  if (!o.style_path.empty()) {
    style = fa2::load_style_json(fa2::read_file(o.style_path), graph);
  } else if (!o.color_attr.empty()) {
    style = fa2::assign_node_colors(graph, o.color_attr);
  }
  if (o.edge_colors_by_origin) {
    if (style.node_colors.empty()) {
      throw std::runtime_error("--edge-colors-by-origin needs --color-attr or --style");
    }
    style = fa2::assign_edge_colors(graph, style);
  }
  if (!o.size_attr.empty()) {
    style = fa2::size_from_attribute(graph, o.size_attr, o.size_min, o.size_max, style);
  }
  if (!o.canvas_arg.empty()) {
    const auto x = o.canvas_arg.find('x');
    if (x == std::string::npos) throw std::runtime_error("--canvas expects WxH");
    o.spec.canvas_width = std::stod(o.canvas_arg.substr(0, x));
    o.spec.canvas_height = std::stod(o.canvas_arg.substr(x + 1));
  }
  if (!o.edge_color.empty()) o.spec.edge_color = o.edge_color;
  o.spec.draw_labels = !o.no_labels;
  fa2::write_file(o.out, fa2::render_svg(graph, layout, style, o.spec));
  return 0;
}

int run_transform_cmd(CLI::App* cmd, const std::string& in, const std::string& out,
                      const std::vector<double>& scales, const std::vector<double>& rotations,
                      const std::vector<std::string>& centers) {
  fa2::NamedLayout layout = fa2::parse_layout_tsv(fa2::read_file(in));

  // Replay options in command-line order.
  std::size_t si = 0, ri = 0, ci = 0;
  const auto* scale_opt = cmd->get_option("--scale");
  const auto* rotate_opt = cmd->get_option("--rotate");
  const auto* center_opt = cmd->get_option("--center");
  for (const auto* opt : cmd->parse_order()) {
    if (opt == scale_opt) {
      layout.positions = fa2::scale_positions(layout.positions, scales.at(si++));
    } else if (opt == rotate_opt) {
      layout.positions = fa2::rotate_positions(layout.positions, rotations.at(ri++));
    } else if (opt == center_opt) {
      layout.positions = fa2::translate_to(layout.positions, parse_point(centers.at(ci++)));
    }
  }

  std::string text;
  for (std::size_t r = 0; r < layout.ids.size(); ++r) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "\t%.17g\t%.17g\n",
                  layout.positions(static_cast<Eigen::Index>(r), 0),
                  layout.positions(static_cast<Eigen::Index>(r), 1));
    text += layout.ids[r] + buf;
  }
  fa2::write_file(out, text);
  return 0;
}

int run_timeseries_cmd(const std::string& manifest_path, const std::string& outdir,
                       const std::string& pos_path, int threads) {
  const auto base_dir = std::filesystem::path(manifest_path).parent_path().string();
  const auto manifest = fa2::parse_manifest_json(fa2::read_file(manifest_path), base_dir);

  std::vector<std::pair<std::string, fa2::Graph>> periods;
  for (const auto& spec : manifest.periods) {
    try {
      const std::string text = fa2::read_file(spec.graph_file);
      periods.emplace_back(spec.label, manifest.matrix ? fa2::parse_weight_matrix(text)
                                                       : fa2::parse_edge_list(text));
    } catch (const std::exception& e) {
      throw std::runtime_error("period '" + spec.label + "': " + e.what());
    }
  }
  const auto start = load_warm_start(pos_path, periods.front().second);
  const auto result =
      fa2::run_time_series(periods, manifest.params, manifest.chain, start, threads);

  std::filesystem::create_directories(outdir);
  const std::filesystem::path out(outdir);
  for (std::size_t k = 0; k < result.periods.size(); ++k) {
    const auto& period = result.periods[k];
    const auto& graph = periods[k].second;
    fa2::write_file((out / (period.label + ".tsv")).string(),
                    fa2::format_layout_tsv(graph, period.layout));
    fa2::write_file((out / (period.label + ".svg")).string(),
                    fa2::render_svg(graph, period.layout, {}));
  }
  fa2::write_file((out / "displacements.csv").string(),
                  fa2::format_displacement_csv(result.transitions));
  return 0;
}

int run_bench_cmd(const std::vector<int>& nodes, const std::vector<int>& iterations, int reps,
                  std::uint64_t seed, const std::string& out, int threads) {
  if (nodes.size() < 2) {
    throw std::runtime_error("bench needs at least 2 node counts for a scaling fit");
  }
  const auto results = fa2::run_bench(nodes, iterations, reps, seed, threads);
  const std::string csv = fa2::format_bench_csv(results);
  if (out.empty()) {
    std::cout << csv;
  } else {
    fa2::write_file(out, csv);
  }
  for (int iters : iterations) {
    std::printf("loglog_slope iterations=%d slope=%.4f\n", iters,
                fa2::fitted_loglog_slope(results, iters));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ForceAtlas2 layout engine and plotting toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware)")->capture_default_str();

  // layout
  auto* layout_cmd = app.add_subcommand("layout", "Compute a ForceAtlas2 layout");
  GraphInputOpts layout_graph;
  ParamOpts layout_params;
  std::string layout_out = "layout.tsv", layout_diag, layout_snapshots;
  add_graph_input(layout_cmd, layout_graph);
  add_param_flags(layout_cmd, layout_params);
  layout_cmd->add_option("-o,--out", layout_out, "Output layout TSV")->capture_default_str();
  layout_cmd->add_option("--diagnostics", layout_diag, "Write per-iteration diagnostics CSV");
  layout_cmd->add_option("--snapshots", layout_snapshots,
                         "Write snapshot SVGs as <prefix>_iter<k>.svg");

  // timeseries
  auto* ts_cmd = app.add_subcommand("timeseries", "Chain layouts across a period manifest");
  std::string ts_manifest, ts_outdir = "timeseries_out", ts_pos;
  ts_cmd->add_option("manifest", ts_manifest, "Manifest JSON")->required();
  ts_cmd->add_option("--outdir", ts_outdir, "Output directory")->capture_default_str();
  ts_cmd->add_option("--pos", ts_pos, "Warm-start layout TSV for the first period");

  // transform
  auto* tf_cmd = app.add_subcommand("transform", "Scale / rotate / recenter a layout TSV");
  std::string tf_in, tf_out = "transformed.tsv";
  std::vector<double> tf_scales, tf_rotations;
  std::vector<std::string> tf_centers;
  tf_cmd->add_option("layout", tf_in, "Input layout TSV")->required();
  tf_cmd->add_option("-o,--out", tf_out, "Output layout TSV")->capture_default_str();
  tf_cmd->add_option("--scale", tf_scales, "Scale about the centroid by a factor")
      ->allow_extra_args(false);
  tf_cmd->add_option("--rotate", tf_rotations, "Rotate counterclockwise by degrees")
      ->allow_extra_args(false);
  tf_cmd->add_option("--center", tf_centers, "Move the centroid to x,y")
      ->allow_extra_args(false);

  // render
  auto* render_cmd = app.add_subcommand("render", "Render graph + layout to SVG");
  GraphInputOpts render_graph;
  RenderOpts render_opts;
  add_graph_input(render_cmd, render_graph);
  render_cmd->add_option("layout", render_opts.layout_path, "Layout TSV")->required();
  render_cmd->add_option("-o,--out", render_opts.out, "Output SVG")->capture_default_str();
  render_cmd->add_option("--style", render_opts.style_path, "Style JSON file");
  render_cmd->add_option("--color-attr", render_opts.color_attr,
                         "Color nodes by this attribute with the default palette");
  render_cmd->add_flag("--edge-colors-by-origin", render_opts.edge_colors_by_origin,
                       "Color each edge like its source node");
  render_cmd->add_option("--vertex-size", render_opts.spec.default_vertex_size,
                         "Uniform vertex size")->capture_default_str();
  render_cmd->add_option("--vertex-size-attr", render_opts.size_attr,
                         "Size nodes by this numeric attribute");
  render_cmd->add_option("--size-min", render_opts.size_min, "Smallest vertex size")
      ->capture_default_str();
  render_cmd->add_option("--size-max", render_opts.size_max, "Largest vertex size")
      ->capture_default_str();
  render_cmd->add_option("--label-size", render_opts.spec.label_size, "Label size in em")
      ->capture_default_str();
  render_cmd->add_option("--edge-arrow-size", render_opts.spec.edge_arrow_size, "Arrowhead scale")
      ->capture_default_str();
  render_cmd->add_option("--edge-color", render_opts.edge_color, "Force one color on all edges");
  render_cmd->add_option("--vertex-label-color", render_opts.spec.vertex_label_color,
                         "Label color")->capture_default_str();
  render_cmd->add_option("--canvas", render_opts.canvas_arg, "Canvas size WxH (default 2000x2000)");
  render_cmd->add_option("--margin", render_opts.spec.margin, "Margin fraction")
      ->capture_default_str();
  render_cmd->add_flag("--no-labels", render_opts.no_labels, "Skip node labels");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Runtime scaling benchmark");
  std::vector<int> bench_nodes{250, 500, 1000};
  std::vector<int> bench_iters{100};
  int bench_reps = 10;
  std::uint64_t bench_seed = 42;
  std::string bench_out;
  int bench_threads = 1;
  bench_cmd->add_option("--nodes", bench_nodes, "Node counts")->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--iterations", bench_iters, "Iteration counts")->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--reps", bench_reps, "Repetitions per point")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "Graph + layout seed")->capture_default_str();
  bench_cmd->add_option("-o,--out", bench_out, "Output CSV (default: stdout)");
  bench_cmd->add_option("--threads", bench_threads, "Solver threads during timing")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (layout_cmd->parsed()) {
      return run_layout_cmd(layout_graph, layout_params, layout_out, layout_diag,
                            layout_snapshots, threads);
    }
    if (ts_cmd->parsed()) return run_timeseries_cmd(ts_manifest, ts_outdir, ts_pos, threads);
    if (tf_cmd->parsed()) {
      return run_transform_cmd(tf_cmd, tf_in, tf_out, tf_scales, tf_rotations, tf_centers);
    }
    if (render_cmd->parsed()) return run_render_cmd(render_graph, render_opts);
    if (bench_cmd->parsed()) {
      return run_bench_cmd(bench_nodes, bench_iters, bench_reps, bench_seed, bench_out,
                           bench_threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "fa2: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
