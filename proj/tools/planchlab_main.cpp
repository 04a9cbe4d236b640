// planchlab command line: reproducible experiments on Plancherel diagrams,
// descent kernels and their variances. All randomness flows from --seed via
// per-sample counter streams, so output is byte-identical for a given
// command line under any thread count.

#include <CLI11.hpp>
#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "planchlab/bessel.hpp"
#include "planchlab/contour.hpp"
#include "planchlab/dpp.hpp"
#include "planchlab/errors.hpp"
#include "planchlab/kernels.hpp"
#include "planchlab/mc.hpp"
#include "planchlab/parallel.hpp"
#include "planchlab/partition.hpp"
#include "planchlab/sampling.hpp"
#include "planchlab/stats.hpp"
#include "planchlab/variance.hpp"

namespace {

using planch::PatternSpec;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

/// Resolved configuration echoed into every artifact. Values are kept as
/// (key, literal, quoted?) so CSV comments and JSON agree exactly.
class ConfigEcho {
 public:
  void add(const std::string& key, const std::string& value, bool quoted) {
    entries_.push_back({key, value, quoted});
  }
  void add_int(const std::string& key, std::int64_t v) { add(key, std::to_string(v), false); }
  void add_uint(const std::string& key, std::uint64_t v) { add(key, std::to_string(v), false); }
  void add_real(const std::string& key, double v) { add(key, fmt17(v), false); }
  void add_str(const std::string& key, const std::string& v) { add(key, v, true); }

  std::string json() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out << ',';
      const auto& e = entries_[i];
      out << '"' << e.key << "\":";
      if (e.quoted)
        out << '"' << json_escape(e.value) << '"';
      else
        out << e.value;
    }
    out << '}';
    return out.str();
  }

 private:
  struct Entry {
    std::string key, value;
    bool quoted;
  };
  std::vector<Entry> entries_;
};

/// One tabular result: header + rows of preformatted cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> quoted_in_json;  // per column

  void set_header(std::vector<std::string> h, std::vector<bool> quoted = {}) {
    header = std::move(h);
    quoted_in_json = quoted.empty() ? std::vector<bool>(header.size(), false) : std::move(quoted);
  }
};

void write_output(const ConfigEcho& config, const Table& table, const std::string& format,
                  const std::string& output_path) {
  std::ostringstream out;
  if (format == "json") {
    out << "{\"config\":" << config.json() << ",\"data\":[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (r) out << ',';
      out << '{';
      for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c) out << ',';
        out << '"' << table.header[c] << "\":";
        const std::string& cell = table.rows[r][c];
        if (cell.empty() || cell == "nan" || cell == "-nan" || cell == "inf" || cell == "-inf")
          out << "null";
        else if (table.quoted_in_json[c])
          out << '"' << json_escape(cell) << '"';
        else
          out << cell;
      }
      out << '}';
    }
    out << "]}\n";
  } else {
    out << "# config: " << config.json() << '\n';
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (c) out << ',';
      out << table.header[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        out << csv_escape(row[c]);
      }
      out << '\n';
    }
  }
  if (output_path.empty() || output_path == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
      std::cerr << "planchlab: cannot open output file '" << output_path << "'\n";
      std::exit(2);
    }
    f << out.str();
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      planch::raise(planch::Errc::invalid_argument, std::string("bad ") + what + " entry '" + tok + "'");
    }
  }
  if (out.empty()) planch::raise(planch::Errc::invalid_argument, std::string(what) + " list is empty");
  return out;
}

struct GlobalOpts {
  std::string format = "csv";
  std::string output;
  int threads = 0;
};

int run_cli(int argc, char** argv) {
  CLI::App app{"Plancherel diagrams, descent kernels and variance experiments"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", g.output, "Output path (default stdout)");
  app.add_option("--threads", g.threads,
                 "Worker cap, 0 = auto (PLANCHLAB_THREADS, then hardware)");

  // --- enumerate -----------------------------------------------------------
  auto* cmd_enum = app.add_subcommand("enumerate", "List all diagrams of n cells");
  std::int64_t en_n = 0, en_cap = 40;
  cmd_enum->add_option("--n", en_n, "Cell count")->required();
  cmd_enum->add_option("--cap", en_cap, "Enumeration cap")->capture_default_str();
  cmd_enum->callback([&] {
    ConfigEcho cfg;
    cfg.add_str("command", "enumerate");
    cfg.add_int("n", en_n);
    cfg.add_int("cap", en_cap);
    cfg.add_str("format", g.format);
    Table t;
    t.set_header({"partition", "dim", "prob_exact", "prob"}, {true, false, true, false});
    for (const auto& lambda : planch::enumerate_partitions(en_n, en_cap)) {
      const auto p = planch::plancherel_prob(lambda);
      t.rows.push_back({lambda.to_string(), planch::dimension(lambda).str(),
                        p.numerator.str() + "/" + p.denominator.str(), fmt17(p.value())});
    }
    write_output(cfg, t, g.format, g.output);
  });

  // --- sample --------------------------------------------------------------
  auto* cmd_sample = app.add_subcommand("sample", "Draw Plancherel-random diagrams");
  std::int64_t sa_n = 0, sa_samples = 1;
  std::uint64_t sa_seed = 0;
  cmd_sample->add_option("--n", sa_n, "Cell count")->required();
  cmd_sample->add_option("--samples", sa_samples, "Sample count")->capture_default_str();
  cmd_sample->add_option("--seed", sa_seed, "Seed (decimal 64-bit)")->required();
  cmd_sample->callback([&] {
    ConfigEcho cfg;
    cfg.add_str("command", "sample");
    cfg.add_int("n", sa_n);
    cfg.add_int("samples", sa_samples);
    cfg.add_uint("seed", sa_seed);
    cfg.add_str("format", g.format);
    Table t;
    t.set_header({"sample", "partition"}, {false, true});
    for (std::int64_t k = 0; k < sa_samples; ++k) {
      planch::RngStream rng(planch::RngSeed{sa_seed}, static_cast<std::uint64_t>(k));
      const auto lambda = planch::sample_plancherel(sa_n, rng);
      t.rows.push_back({std::to_string(k), lambda.to_string()});
    }
    write_output(cfg, t, g.format, g.output);
  });

  // --- descents ------------------------------------------------------------
  auto* cmd_desc = app.add_subcommand("descents", "Descent bits c_k of a diagram");
  std::string de_partition;
  std::int64_t de_from = 0, de_to = 0;
  cmd_desc->add_option("--partition", de_partition, "Partition, e.g. 4,2,1 or - for empty")
      ->required();
  cmd_desc->add_option("--from", de_from, "First index")->required();
  cmd_desc->add_option("--to", de_to, "Last index")->required();
  cmd_desc->callback([&] {
    const auto lambda = planch::Partition::parse(de_partition);
    const auto w = planch::descent_window(lambda, de_from, de_to);
    ConfigEcho cfg;
    cfg.add_str("command", "descents");
    cfg.add_str("partition", lambda.to_string());
    cfg.add_int("from", de_from);
    cfg.add_int("to", de_to);
    cfg.add_str("format", g.format);
    Table t;
    t.set_header({"k", "c"});
    for (std::int64_t k = de_from; k <= de_to; ++k)
      t.rows.push_back({std::to_string(k), std::to_string(w.at(k))});
    write_output(cfg, t, g.format, g.output);
  });

  // --- kernel --------------------------------------------------------------
  auto* cmd_kernel = app.add_subcommand("kernel", "Evaluate descent kernels");
  cmd_kernel->require_subcommand(1);

  auto* k_sine = cmd_kernel->add_subcommand("sine", "Discrete sine kernel");
  std::int64_t ks_d = 0;
  double ks_phi = 0.0;
  k_sine->add_option("--d", ks_d, "Lag")->required();
  k_sine->add_option("--phi", ks_phi, "Density angle in (0,pi)")->required();
  k_sine->callback([&] {
    if (!(ks_phi > 0.0 && ks_phi < 3.1415926535897932))
      planch::raise(planch::Errc::invalid_argument, "phi must lie in (0, pi)");
    ConfigEcho cfg;
    cfg.add_str("command", "kernel sine");
    cfg.add_int("d", ks_d);
    cfg.add_real("phi", ks_phi);
    cfg.add_str("format", g.format);
    Table t;
    t.set_header({"d", "phi", "value"});
    t.rows.push_back({std::to_string(ks_d), fmt17(ks_phi), fmt17(planch::sine_kernel(ks_d, ks_phi))});
    write_output(cfg, t, g.format, g.output);
  });

  auto* k_bessel = cmd_kernel->add_subcommand("bessel", "Discrete Bessel kernel");
  std::int64_t kb_x = 0, kb_y = 0, kb_order = 0;
  double kb_theta = 0.0;
  k_bessel->add_option("--x", kb_x)->required();
  k_bessel->add_option("--y", kb_y)->required();
  k_bessel->add_option("--theta", kb_theta, "theta > 0 (eta = theta^2)")->required();
  k_bessel->add_option("--max-order", kb_order, "Table order (default edge_cutoff+1)");
  k_bessel->callback([&] {
    if (!(kb_theta > 0.0)) planch::raise(planch::Errc::invalid_argument, "theta must be positive");
    const std::int64_t order =
        kb_order > 0 ? kb_order
                     : std::max<std::int64_t>(planch::edge_cutoff(kb_theta),
                                              std::max(std::llabs(kb_x), std::llabs(kb_y))) + 1;
    const planch::BesselTable table(2.0 * kb_theta, order);
    ConfigEcho cfg;
    cfg.add_str("command", "kernel bessel");
    cfg.add_int("x", kb_x);
    cfg.add_int("y", kb_y);
    cfg.add_real("theta", kb_theta);
    cfg.add_int("max_order", order);
    cfg.add_str("format", g.format);
    Table t;
    t.set_header({"x", "y", "theta", "value"});
    t.rows.push_back({std::to_string(kb_x), std::to_string(kb_y), fmt17(kb_theta),
                      fmt17(planch::bessel_kernel(kb_x, kb_y, kb_theta, table))});
    write_output(cfg, t, g.format, g.output);
  });

  auto* k_contour = cmd_kernel->add_subcommand("contour", "Contour-integral kernel oracle");
  std::int64_t kc_x = 0, kc_y = 0, kc_nodes = 256;
  double kc_theta = 0.0, kc_r = 0.5, kc_R = 2.0;
  k_contour->add_option("--x", kc_x)->required();
  k_contour->add_option("--y", kc_y)->required();
  k_contour->add_option("--theta", kc_theta)->required();
  k_contour->add_option("--inner-r", kc_r, "Inner radius in (0,1)")->capture_default_str();
  k_contour->add_option("--outer-r", kc_R, "Outer radius > 1")->capture_default_str();
  k_contour->add_option("--nodes", kc_nodes, "Nodes per circle (power of two >= 16)")
      ->capture_default_str();
  k_contour->callback([&] {
    const planch::ContourGrid grid{kc_r, kc_R, kc_nodes};
    ConfigEcho cfg;
    cfg.add_str("command", "kernel contour");
    cfg.add_int("x", kc_x);
    cfg.add_int("y", kc_y);
    cfg.add_real("theta", kc_theta);
    cfg.add_real("inner_r", kc_r);
    cfg.add_real("outer_r", kc_R);
    cfg.add_int("nodes", kc_nodes);
    cfg.add_str("format", g.format);
    Table t;
    t.set_header({"x", "y", "theta", "value"});
    t.rows.push_back({std::to_string(kc_x), std::to_string(kc_y), fmt17(kc_theta),
                      fmt17(planch::contour_kernel_oracle(kc_x, kc_y, kc_theta, grid))});
    write_output(cfg, t, g.format, g.output);
  });

  // --- variance ------------------------------------------------------------
  auto* cmd_var = app.add_subcommand("variance", "Variances of descent statistics");
  cmd_var->require_subcommand(1);

  auto* v_poisson = cmd_var->add_subcommand("poisson", "Exact poissonized kernel-sum variance");
  double vp_theta = 0.0;
  std::int64_t vp_a = 0, vp_b = 0;
  std::string vp_sweep;
  v_poisson->add_option("--theta", vp_theta)->required();
  v_poisson->add_option("--a", vp_a, "Interval start (ignored in sweep mode)");
  v_poisson->add_option("--b", vp_b, "Interval end (ignored in sweep mode)");
  v_poisson->add_option("--sweep", vp_sweep, "Comma list of centered lengths, e.g. 64,256,1024");
  v_poisson->callback([&] {
    ConfigEcho cfg;
    cfg.add_str("command", "variance poisson");
    cfg.add_real("theta", vp_theta);
    cfg.add_str("format", g.format);
    Table t;
    t.set_header(
        {"theta", "a", "b", "L", "var_io", "var_trace", "predicted", "ratio", "slope"});
    if (vp_sweep.empty()) {
      cfg.add_int("a", vp_a);
      cfg.add_int("b", vp_b);
      const auto v = planch::poissonized_variance(vp_a, vp_b, vp_theta, nullptr, g.threads);
      const std::int64_t L = vp_b - vp_a + 1;
      const double pred = L >= 2 ? planch::predicted_log_variance(L) : 0.0;
      t.rows.push_back({fmt17(vp_theta), std::to_string(vp_a), std::to_string(vp_b),
                        std::to_string(L), fmt17(v.value_inside_outside), fmt17(v.value_trace_form),
                        fmt17(pred), pred > 0 ? fmt17(v.value_inside_outside / pred) : "",
                        ""});
    } else {
      const auto lengths = parse_int_list(vp_sweep, "sweep");
      cfg.add_str("lengths", vp_sweep);
      const auto table = std::make_shared<planch::BesselTable>(
          2.0 * vp_theta, planch::edge_cutoff(vp_theta) + 1);
      std::vector<double> vars;
      std::vector<std::vector<std::string>> rows;
      for (const std::int64_t L : lengths) {
        if (L < 2) planch::raise(planch::Errc::invalid_argument, "sweep lengths must be >= 2");
        const std::int64_t a = -L / 2, b = L / 2 - 1;
        const auto v = planch::poissonized_variance(a, b, vp_theta, table, g.threads);
        const double pred = planch::predicted_log_variance(L);
        vars.push_back(v.value_inside_outside);
        rows.push_back({fmt17(vp_theta), std::to_string(a), std::to_string(b), std::to_string(L),
                        fmt17(v.value_inside_outside), fmt17(v.value_trace_form), fmt17(pred),
                        fmt17(v.value_inside_outside / pred), ""});
        std::fprintf(stderr, "planchlab: variance sweep L=%" PRId64 " done\n", L);
      }
      const double slope = planch::fit_log_slope(lengths, vars);
      for (auto& row : rows) row.back() = fmt17(slope);
      t.rows = std::move(rows);
    }
    write_output(cfg, t, g.format, g.output);
  });

  auto* v_mc = cmd_var->add_subcommand("mc", "Monte-Carlo variance over Plancherel samples");
  std::int64_t vm_n = 0, vm_a = 0, vm_b = 0, vm_samples = 0;
  std::uint64_t vm_seed = 0;
  std::string vm_pattern = "0";
  v_mc->add_option("--n", vm_n)->required();
  v_mc->add_option("--a", vm_a)->required();
  v_mc->add_option("--b", vm_b)->required();
  v_mc->add_option("--pattern", vm_pattern, "Offsets, e.g. 0,1")->capture_default_str();
  v_mc->add_option("--samples", vm_samples)->required();
  v_mc->add_option("--seed", vm_seed)->required();
  v_mc->callback([&] {
    const auto pattern = PatternSpec::parse(vm_pattern);
    ConfigEcho cfg;
    cfg.add_str("command", "variance mc");
    cfg.add_int("n", vm_n);
    cfg.add_int("a", vm_a);
    cfg.add_int("b", vm_b);
    cfg.add_str("pattern", pattern.to_string());
    cfg.add_int("samples", vm_samples);
    cfg.add_uint("seed", vm_seed);
    cfg.add_str("format", g.format);
    const auto rep = planch::mc_linear_statistic(vm_n, vm_a, vm_b, pattern, vm_samples,
                                                 planch::RngSeed{vm_seed}, g.threads);
    Table t;
    t.set_header({"n_samples", "seed", "mean", "variance", "std_error_of_variance", "skewness",
                  "excess_kurtosis"});
    t.rows.push_back({std::to_string(rep.n_samples), std::to_string(rep.seed), fmt17(rep.mean),
                      fmt17(rep.variance), fmt17(rep.std_error_of_variance), fmt17(rep.skewness),
                      fmt17(rep.excess_kurtosis)});
    write_output(cfg, t, g.format, g.output);
  });

  // --- pattern -------------------------------------------------------------
  auto* cmd_pattern = app.add_subcommand("pattern", "Sine-process local patterns");
  cmd_pattern->require_subcommand(1);
  auto* p_density = cmd_pattern->add_subcommand("density", "Per-site variance density");
  std::string pd_pattern = "0,1";
  double pd_phi = 1.5707963267948966;
  std::int64_t pd_tail = 1000000;
  bool pd_corner = false;
  p_density->add_option("--pattern", pd_pattern)->capture_default_str();
  p_density->add_option("--phi", pd_phi)->capture_default_str();
  p_density->add_option("--tail", pd_tail, "Lag cutoff (>= 1000)")->capture_default_str();
  p_density->add_flag("--corner", pd_corner,
                      "Density of the corner statistic c_i - c_i c_{i+1} instead of --pattern");
  p_density->callback([&] {
    ConfigEcho cfg;
    cfg.add_str("command", "pattern density");
    cfg.add_real("phi", pd_phi);
    cfg.add_int("tail", pd_tail);
    cfg.add_str("format", g.format);
    Table t;
    t.set_header({"pattern", "phi", "tail", "density", "tail_bound"}, {true, false, false, false, false});
    if (pd_corner) {
      cfg.add_str("pattern", "corner");
      const PatternSpec a({0}), b({0, 1});
      const auto d = planch::pattern_variance_density(a, b, pd_phi, pd_tail);
      t.rows.push_back({"corner", fmt17(pd_phi), std::to_string(pd_tail), fmt17(d.value),
                        fmt17(d.tail_bound)});
    } else {
      const auto pattern = PatternSpec::parse(pd_pattern);
      cfg.add_str("pattern", pattern.to_string());
      const auto d = planch::pattern_variance_density(pattern, pd_phi, pd_tail);
      t.rows.push_back({pattern.to_string(), fmt17(pd_phi), std::to_string(pd_tail), fmt17(d.value),
                        fmt17(d.tail_bound)});
    }
    write_output(cfg, t, g.format, g.output);
  });

  // --- clt -----------------------------------------------------------------
  auto* cmd_clt = app.add_subcommand("clt", "Normality diagnostics for windowed statistics");
  std::string cl_mode = "corners";
  std::int64_t cl_n = 0, cl_a = 0, cl_b = 0, cl_samples = 0;
  std::uint64_t cl_seed = 0;
  double cl_phi = 1.5707963267948966;
  cmd_clt->add_option("--mode", cl_mode)->check(CLI::IsMember({"corners", "plain"}))
      ->capture_default_str();
  cmd_clt->add_option("--n", cl_n, "Plancherel cell count; 0 samples the sine process")
      ->capture_default_str();
  cmd_clt->add_option("--a", cl_a)->required();
  cmd_clt->add_option("--b", cl_b)->required();
  cmd_clt->add_option("--samples", cl_samples)->required();
  cmd_clt->add_option("--seed", cl_seed)->required();
  cmd_clt->add_option("--phi", cl_phi, "Sine density angle (sine mode)")->capture_default_str();
  cmd_clt->callback([&] {
    const PatternSpec single({0}), corner_pair({0, 1});
    ConfigEcho cfg;
    cfg.add_str("command", "clt");
    cfg.add_str("mode", cl_mode);
    cfg.add_int("n", cl_n);
    cfg.add_int("a", cl_a);
    cfg.add_int("b", cl_b);
    cfg.add_int("samples", cl_samples);
    cfg.add_uint("seed", cl_seed);
    cfg.add_real("phi", cl_phi);
    cfg.add_str("format", g.format);

    std::vector<double> values;
    double predicted = 0.0;
    const std::int64_t L = cl_b - cl_a + 1;
    if (cl_n > 0) {
      if (cl_mode == "plain") {
        values = planch::mc_linear_statistic_samples(cl_n, cl_a, cl_b, single, cl_samples,
                                                     planch::RngSeed{cl_seed}, g.threads);
        const double theta = std::sqrt(static_cast<double>(cl_n));
        predicted =
            planch::poissonized_variance(cl_a, cl_b, theta, nullptr, g.threads).value_inside_outside;
      } else {
        const auto with = planch::mc_linear_statistic_samples(cl_n, cl_a, cl_b, single, cl_samples,
                                                              planch::RngSeed{cl_seed}, g.threads);
        const auto pair = planch::mc_linear_statistic_samples(cl_n, cl_a, cl_b, corner_pair,
                                                              cl_samples, planch::RngSeed{cl_seed},
                                                              g.threads);
        values.resize(with.size());
        for (std::size_t i = 0; i < with.size(); ++i) values[i] = with[i] - pair[i];
        predicted = planch::difference_window_variance(single, corner_pair, L, cl_phi);
      }
    } else {
      const std::int64_t diam = cl_mode == "corners" ? 1 : 0;
      const planch::DppWindowSampler sampler(planch::KernelSpec::sine(cl_phi), cl_a, cl_b + diam);
      if (cl_mode == "plain") {
        values = planch::mc_dpp_pattern_samples(sampler, cl_a, cl_b, single, cl_samples,
                                                planch::RngSeed{cl_seed}, g.threads);
        predicted = planch::pattern_window_variance(single, L, cl_phi);
      } else {
        values = planch::mc_dpp_difference_samples(sampler, cl_a, cl_b, single, corner_pair,
                                                   cl_samples, planch::RngSeed{cl_seed}, g.threads);
        predicted = planch::difference_window_variance(single, corner_pair, L, cl_phi);
      }
    }
    const auto rep = planch::normality_report(values, predicted);
    Table t;
    t.set_header({"n_samples", "mean", "variance", "skewness", "excess_kurtosis", "ks_statistic",
                  "predicted_variance"});
    t.rows.push_back({std::to_string(rep.n_samples), fmt17(rep.mean), fmt17(rep.variance),
                      fmt17(rep.skewness), fmt17(rep.excess_kurtosis), fmt17(rep.ks_statistic),
                      fmt17(rep.predicted_variance)});
    write_output(cfg, t, g.format, g.output);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "planchlab: " << e.what() << '\n';
    return 2;
  } catch (const planch::Error& e) {
    std::cerr << "planchlab: " << e.what() << '\n';
    return planch::is_numeric_guard(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "planchlab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
