// conetop command line: causal classification, neighborhood rendering and
// the convergence / limit-curve / finite-kernel experiment reports.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conetop/format.hpp"
#include "conetop/report.hpp"
#include "conetop/svg.hpp"

namespace {

using namespace conetop;

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

void ensure_out_dir(const std::string& dir) {
  std::filesystem::create_directories(dir);
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

int emit_report(const Report& rep, const std::string& out_dir, const std::string& stem) {
  ensure_out_dir(out_dir);
  write_file(join_path(out_dir, stem + ".json"), rep.to_json());
  write_file(join_path(out_dir, stem + ".csv"), rep.to_csv());
  const int fails = rep.failures();
  std::cout << stem << ": " << rep.rows.size() << " rows, " << fails << " failures -> "
            << join_path(out_dir, stem + ".json") << "\n";
  return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cone topologies on Minkowski space: predicates, set algebra and "
               "convergence experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 42;
  int threads = 1;
  bool seed_given = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
      seed_given = true;
    });
    cmd->add_option("--threads", threads, "worker threads")->capture_default_str();
  };

  auto load_config = [&]() {
    ExperimentConfig c;
    if (!config_path.empty()) c = load_config_file(config_path);
    if (seed_given) c.seed = seed;
    c.threads = threads;
    c.out_dir = out_dir;
    return c;
  };

  // classify
  std::string x_text, y_text;
  double tau_rel = 1e-9;
  CLI::App* classify_cmd = app.add_subcommand("classify", "causal class of an ordered pair");
  classify_cmd->add_option("--x", x_text, "event x as comma separated coordinates")->required();
  classify_cmd->add_option("--y", y_text, "event y")->required();
  classify_cmd->add_option("--tau", tau_rel, "relative tolerance")->capture_default_str();

  // nbhd-render
  std::string kind_text = "ZT", center_text = "0,0,0,0", plane_text = "0,1", fixed_text,
              svg_out = "nbhd.svg", axis_text;
  double eps = 1.0, span = 0.0;
  int resolution = 512;
  CLI::App* render_cmd = app.add_subcommand("nbhd-render", "rasterize a basic set slice to SVG");
  render_cmd->add_option("--kind", kind_text, "topology kind")->capture_default_str();
  render_cmd->add_option("--center", center_text, "center event")->capture_default_str();
  render_cmd->add_option("--eps", eps, "radius for bounded kinds")->capture_default_str();
  render_cmd->add_option("--plane", plane_text, "two coordinate indices, e.g. 0,1")
      ->capture_default_str();
  render_cmd->add_option("--fixed", fixed_text, "values for the remaining coordinates");
  render_cmd->add_option("--res", resolution, "grid resolution")->capture_default_str();
  render_cmd->add_option("--span", span, "half width of the window (default 1.5 eps)");
  render_cmd->add_option("--axis", axis_text, "partition axis for spacelike interval kinds");
  render_cmd->add_option("--out", svg_out, "output SVG path")->capture_default_str();
  render_cmd->add_option("--tau", tau_rel, "relative tolerance");

  CLI::App* converge_cmd =
      app.add_subcommand("converge", "discriminator sequences across the topology kinds");
  add_common(converge_cmd);
  CLI::App* lct_cmd = app.add_subcommand("lct-run", "limit-curve experiment matrix");
  add_common(lct_cmd);
  CLI::App* props_cmd = app.add_subcommand("props-run", "invariant property suites");
  add_common(props_cmd);
  CLI::App* kernel_cmd =
      app.add_subcommand("kernel-verify", "exact finite-set base/intersection checks");
  add_common(kernel_cmd);
  int kernel_n = 6, kernel_trials = 1000;
  kernel_cmd->add_option("--n", kernel_n, "max ground-set size")->capture_default_str();
  kernel_cmd->add_option("--trials", kernel_trials, "random base pairs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) {
      const Event x = make_event(parse_coords(x_text));
      const Event y = make_event(parse_coords(y_text));
      const TolerancePolicy tol{tau_rel};
      const Displacement d = y - x;
      std::cout << to_string(classify(d, tol)) << " q=" << fmt_double(quadratic_form(d))
                << " band=" << fmt_double(tol.band(d)) << "\n";
      return 0;
    }
    if (render_cmd->parsed()) {
      const auto kind = parse_topology_kind(kind_text);
      if (!kind) throw std::invalid_argument("unknown topology kind: " + kind_text);
      const Event center = make_event(parse_coords(center_text));
      const auto plane_idx = parse_coords(plane_text);
      if (plane_idx.size() != 2) throw std::invalid_argument("plane needs two indices");
      SlicePlane plane;
      plane.axis_u = static_cast<int>(plane_idx[0]);
      plane.axis_v = static_cast<int>(plane_idx[1]);
      plane.fixed = center.c;
      if (!fixed_text.empty()) {
        const auto fixed = parse_coords(fixed_text);
        if (fixed.size() != static_cast<std::size_t>(center.n) + 1) {
          throw std::invalid_argument("--fixed needs one value per coordinate");
        }
        for (std::size_t i = 0; i < fixed.size(); ++i) plane.fixed[i] = fixed[i];
      }
      std::optional<Partition> part;
      if (!axis_text.empty()) {
        const auto axis = parse_coords(axis_text);
        part = make_partition(std::span<const double>(axis.data(), axis.size()));
      }
      BasicNbhd nb;
      if (*kind == TopologyKind::Alexandrov) {
        Displacement up;
        up.n = center.n;
        up.v[0] = eps;
        nb = alexandrov_nbhd(translate(center, scaled(up, -1.0)), translate(center, up));
      } else {
        nb = make_basic_nbhd(*kind, center,
                             is_bounded(*kind) ? std::optional<double>(eps) : std::nullopt, part);
      }
      const double window = span > 0.0 ? span : 1.5 * eps;
      const std::string svg =
          render_nbhd_svg(nb, plane, resolution, window, TolerancePolicy{tau_rel});
      write_file(svg_out, svg);
      std::cout << "wrote " << svg_out << "\n";
      return 0;
    }
    if (converge_cmd->parsed()) {
      return emit_report(converge_run(load_config()), out_dir, "converge");
    }
    if (lct_cmd->parsed()) {
      const Report rep = lct_run(load_config());
      ensure_out_dir(out_dir);
      write_file(join_path(out_dir, "lct.json"), rep.to_json());
      write_file(join_path(out_dir, "lct_matrix.csv"), rep.to_csv());
      std::cout << "lct-run: " << rep.rows.size() << " rows -> "
                << join_path(out_dir, "lct.json") << "\n";
      return 0;
    }
    if (props_cmd->parsed()) {
      return emit_report(props_run(load_config()), out_dir, "props");
    }
    if (kernel_cmd->parsed()) {
      ExperimentConfig c = load_config();
      c.kernel_n = kernel_n;
      c.trials = kernel_trials;
      const Report rep = kernel_verify_run(c);
      ensure_out_dir(out_dir);
      write_file(join_path(out_dir, "kernel.json"), rep.to_json());
      write_file(join_path(out_dir, "kernel.csv"), rep.to_csv());
      for (const auto& row : rep.rows) {
        std::cout << row.case_id << ": " << row.detail << " [" << row.verdict << "]\n";
      }
      return rep.failures() == 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
