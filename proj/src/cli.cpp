#include "twodist/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twodist/errors.hpp"
#include "twodist/graph.hpp"
#include "twodist/oracle.hpp"
#include "twodist/report.hpp"
#include "twodist/representations.hpp"
#include "twodist/sweep.hpp"

namespace twodist::cli {

using nlohmann::json;

namespace {

struct InputOptions {
  std::string edges_path;
  std::string graph6;
};

struct ToleranceOptions {
  Tolerances tol;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  auto* edges = cmd.add_option("--edges", in.edges_path, "Edge-list file (first line n, then 'u v' per line)");
  auto* g6 = cmd.add_option("--g6", in.graph6, "Inline graph6 string");
  edges->excludes(g6);
  g6->excludes(edges);
}

void add_tolerance_options(CLI::App& cmd, ToleranceOptions& t) {
  cmd.add_option("--tol-eig", t.tol.eig, "Relative eigenvalue clustering tolerance")->capture_default_str();
  cmd.add_option("--tol-psd", t.tol.psd, "Relative PSD / rank tolerance")->capture_default_str();
  cmd.add_option("--tol-residual", t.tol.residual, "Relative residual tolerance")->capture_default_str();
}

Graph load_graph(const InputOptions& in) {
  if (!in.graph6.empty()) return parse_graph6(in.graph6);
  if (in.edges_path.empty()) throw ParseError("no input graph: pass --edges <file> or --g6 <string>");
  std::ifstream f(in.edges_path);
  if (!f) throw ParseError("cannot open '" + in.edges_path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_edge_list(ss.str());
}

json graph6_or_null(const Graph& g) { return g.n() <= 62 ? json(encode_graph6(g)) : json(nullptr); }

void emit(std::ostream& out, const json& doc, bool pretty) { out << (pretty ? doc.dump(2) : doc.dump()) << '\n'; }

// Runs body, mapping library errors to exit codes.
template <typename Body>
int guarded(std::ostream& err, int infeasible_code, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kInternal;
  } catch (const DegenerateGraphError& e) {
    err << "error: " << e.what() << '\n';
    return infeasible_code;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return infeasible_code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

int cmd_analyze(const InputOptions& in, const ToleranceOptions& t, bool pretty, std::ostream& out,
                std::ostream& err) {
  return guarded(err, kInternal, [&] {
    const Graph g = load_graph(in);
    const GraphAnalyzer an(g, t.tol);
    const ReprReport r = an.report();
    json doc = report_document(r, t.tol, "");
    doc["input"] = {{"graph6", graph6_or_null(g)}, {"n", g.n()}, {"edges", g.edges()}};
    emit(out, doc, pretty);
    return static_cast<int>(kOk);
  });
}

struct EmbedOptions {
  std::string mode;
  std::string beta;
  std::string side = "best";
  std::string out_path;
};

double parse_beta(const std::string& s, const GraphAnalyzer& an) {
  if (s == "l" || s == "lower") {
    const auto b = an.beta_l();
    if (!b) throw InfeasibleError("beta_l does not exist for this graph");
    return *b;
  }
  if (s == "u" || s == "upper") {
    const auto b = an.beta_u();
    if (!b) throw InfeasibleError("beta_u does not exist for this graph");
    return *b;
  }
  if (s == "interior") return an.interior_beta();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("--beta must be a number, 'l', 'u' or 'interior'");
  return v;
}

int cmd_embed(const InputOptions& in, const ToleranceOptions& t, const EmbedOptions& eo, bool pretty,
              std::ostream& out, std::ostream& err) {
  return guarded(err, kInfeasible, [&] {
    const Graph g = load_graph(in);
    const GraphAnalyzer an(g, t.tol);
    Configuration config;
    double alpha = 1.0, beta = 0.0;
    std::optional<double> radius;
    if (eo.mode == "euclidean") {
      if (eo.beta.empty()) throw std::invalid_argument("--beta is required for euclidean mode");
      const auto rep = an.euclidean_representation(parse_beta(eo.beta, an));
      config = rep.config;
      beta = rep.beta;
    } else if (eo.mode == "spherical") {
      std::optional<Side> side;
      if (eo.side == "lower") side = Side::Lower;
      else if (eo.side == "upper") side = Side::Upper;
      else if (eo.side != "best") throw std::invalid_argument("--side must be lower, upper or best");
      const auto rep = an.spherical_representation(side);
      config = rep.config;
      beta = rep.beta;
      radius = rep.radius;
    } else if (eo.mode == "jspherical") {
      const auto js = an.j_spherical();
      config = js.config;
      alpha = 2.0;
      beta = js.beta;
      radius = 1.0;
    } else {
      throw std::invalid_argument("--mode must be euclidean, spherical or jspherical");
    }

    const double vtol = 1e-7;
    const VerificationReport vr = verify_two_distance(config, g, alpha, beta, vtol);
    if (!vr.pass) {
      std::ostringstream os;
      os << "emitted configuration failed two-distance verification (max deviation " << vr.max_deviation << ")";
      throw ConsistencyError(os.str());
    }

    json distances = json::array();
    for (const auto& c : vr.distinct_sq_distances) distances.push_back({{"value", c.value}, {"count", c.count}});
    const json sidecar = {{"tool", "twodist"},
                          {"version", kToolVersion},
                          {"mode", eo.mode},
                          {"graph6", graph6_or_null(g)},
                          {"n", g.n()},
                          {"dim", config.dim()},
                          {"alpha", alpha},
                          {"beta", beta},
                          {"radius", radius ? json(*radius) : json(nullptr)},
                          {"centering", config.centering == Centering::Centroid ? "centroid" : "circumcenter"},
                          {"tolerances", to_json(t.tol)},
                          {"verification",
                           {{"pass", vr.pass}, {"max_deviation", vr.max_deviation}, {"tol", vtol},
                            {"distinct_sq_distances", distances}}},
                          {"csv", eo.out_path}};

    std::ofstream csv(eo.out_path);
    if (!csv) throw std::invalid_argument("cannot write '" + eo.out_path + "'");
    write_coordinates_csv(config.points, csv);
    std::ofstream side(eo.out_path + ".json");
    if (!side) throw std::invalid_argument("cannot write '" + eo.out_path + ".json'");
    side << sidecar.dump(2) << '\n';
    emit(out, sidecar, pretty);
    return static_cast<int>(kOk);
  });
}

struct SweepCliOptions {
  int n_max = 6;
  int exhaustive_max = 6;
  std::size_t samples = 500;
  std::uint64_t seed = SweepOptions{}.seed;
  std::string out_path;
  bool serial = false;
};

int cmd_sweep(const SweepCliOptions& so, const ToleranceOptions& t, bool pretty, std::ostream& out,
              std::ostream& err) {
  return guarded(err, kInternal, [&] {
    SweepOptions opts;
    opts.n_max = so.n_max;
    opts.exhaustive_max = so.exhaustive_max;
    opts.samples = so.samples;
    opts.seed = so.seed;
    opts.tol = t.tol;
    const SweepSummary s = so.serial ? invariant_sweep_serial(opts) : invariant_sweep(opts);
    const json doc = to_json(s);
    if (!so.out_path.empty()) {
      std::ofstream f(so.out_path);
      if (!f) throw std::invalid_argument("cannot write '" + so.out_path + "'");
      f << doc.dump(2) << '\n';
    }
    emit(out, doc, pretty);
    return static_cast<int>(s.violations() == 0 ? kOk : kViolations);
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-distance representations of graphs", "twodist"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  InputOptions in;
  ToleranceOptions tol;
  auto* analyze = app.add_subcommand("analyze", "Compute dim_E, dim_S, dim_J and related spectral data");
  add_input_options(*analyze, in);
  add_tolerance_options(*analyze, tol);
  analyze->add_flag("--pretty", pretty, "Indent the JSON output");

  EmbedOptions eo;
  auto* embed = app.add_subcommand("embed", "Write coordinates of a two-distance representation");
  add_input_options(*embed, in);
  add_tolerance_options(*embed, tol);
  embed->add_option("--mode", eo.mode, "euclidean | spherical | jspherical")->required();
  embed->add_option("--beta", eo.beta, "Second squared distance for euclidean mode: number, l, u or interior");
  embed->add_option("--side", eo.side, "Endpoint for spherical mode: lower, upper or best")->capture_default_str();
  embed->add_option("--out", eo.out_path, "Coordinate CSV path; sidecar written to <out>.json")->required();
  embed->add_flag("--pretty", pretty, "Indent the JSON output");

  SweepCliOptions so;
  auto* sweep = app.add_subcommand("sweep", "Check every invariant over small labelled graphs");
  sweep->add_option("--n", so.n_max, "Largest order, at most 8")->required();
  sweep->add_option("--exhaustive-max", so.exhaustive_max, "Enumerate every labelled graph up to this order (1..6)")
      ->capture_default_str();
  sweep->add_option("--samples", so.samples, "Random graphs spread over orders above --exhaustive-max")->capture_default_str();
  sweep->add_option("--seed", so.seed, "Sampling seed")->capture_default_str();
  sweep->add_option("--out", so.out_path, "Also write the summary JSON here");
  sweep->add_flag("--serial", so.serial, "Use the serial reference loop");
  add_tolerance_options(*sweep, tol);
  sweep->add_flag("--pretty", pretty, "Indent the JSON output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  if (*analyze) return cmd_analyze(in, tol, pretty, out, err);
  if (*embed) return cmd_embed(in, tol, eo, pretty, out, err);
  return cmd_sweep(so, tol, pretty, out, err);
}

void write_coordinates_csv(const Matrix& points, std::ostream& os) {
  char buf[40];
  for (std::size_t i = 0; i < points.rows(); ++i) {
    for (std::size_t j = 0; j < points.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", points(i, j));
      os << (j ? "," : "") << buf;
    }
    os << '\n';
  }
}

Matrix read_coordinates_csv(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("read_coordinates_csv: ragged rows");
    rows.push_back(std::move(row));
  }
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace twodist::cli
