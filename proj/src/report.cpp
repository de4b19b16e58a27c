#include "twodist/report.hpp"

#include <stdexcept>

namespace twodist {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

ClassTag tag_from_string(const std::string& s) {
  for (ClassTag t : {ClassTag::Complete, ClassTag::Null, ClassTag::Cluster, ClassTag::CompleteMultipartite,
                     ClassTag::General})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown graph class tag '" + s + "'");
}

}  // namespace

json to_json(const ReprReport& r) {
  json j;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["class"] = {{"tag", std::string(to_string(r.graph_class.tag))},
                {"partition", r.graph_class.partition},
                {"is_cluster", r.graph_class.is_cluster},
                {"is_multipartite", r.graph_class.is_multipartite}};
  j["degenerate"] = r.degenerate;
  j["mu_min"] = opt(r.mu_min);
  j["mu_max"] = opt(r.mu_max);
  j["m_min"] = opt(r.m_min);
  j["m_max"] = opt(r.m_max);
  j["beta_l"] = opt(r.beta_l);
  j["beta_u"] = opt(r.beta_u);
  j["dim_e"] = opt(r.dim_e);
  j["dim_e_beta"] = opt(r.dim_e_beta);
  j["dim_s"] = opt(r.dim_s);
  j["dim_s_beta"] = opt(r.dim_s_beta);
  j["dim_s_radius"] = opt(r.dim_s_radius);
  j["spherical_at_l"] = opt(r.spherical_at_l);
  j["spherical_at_u"] = opt(r.spherical_at_u);
  j["rho_l"] = opt(r.rho_l);
  j["rho_u"] = opt(r.rho_u);
  j["lambda1_complement"] = opt(r.lambda1_complement);
  j["m_lambda1_complement"] = opt(r.m_lambda1_complement);
  j["delta"] = opt(r.delta);
  j["beta_j"] = opt(r.beta_j);
  j["dim_j"] = opt(r.dim_j);
  j["lower_bound_e"] = opt(r.lower_bound_e);
  j["lower_bound_s"] = opt(r.lower_bound_s);
  // Scale conventions: Euclidean/spherical quantities use α = 1, J-spherical α = 2.
  j["alpha_euclidean"] = 1;
  j["alpha_j"] = 2;
  return j;
}

ReprReport report_from_json(const json& j) {
  ReprReport r;
  r.n = j.at("n").get<int>();
  r.edges = j.at("edges").get<std::size_t>();
  const auto& c = j.at("class");
  r.graph_class.tag = tag_from_string(c.at("tag").get<std::string>());
  r.graph_class.partition = c.at("partition").get<std::vector<int>>();
  r.graph_class.is_cluster = c.at("is_cluster").get<bool>();
  r.graph_class.is_multipartite = c.at("is_multipartite").get<bool>();
  r.degenerate = j.at("degenerate").get<bool>();
  r.mu_min = get_opt<double>(j, "mu_min");
  r.mu_max = get_opt<double>(j, "mu_max");
  r.m_min = get_opt<std::size_t>(j, "m_min");
  r.m_max = get_opt<std::size_t>(j, "m_max");
  r.beta_l = get_opt<double>(j, "beta_l");
  r.beta_u = get_opt<double>(j, "beta_u");
  r.dim_e = get_opt<std::size_t>(j, "dim_e");
  r.dim_e_beta = get_opt<double>(j, "dim_e_beta");
  r.dim_s = get_opt<std::size_t>(j, "dim_s");
  r.dim_s_beta = get_opt<double>(j, "dim_s_beta");
  r.dim_s_radius = get_opt<double>(j, "dim_s_radius");
  r.spherical_at_l = get_opt<bool>(j, "spherical_at_l");
  r.spherical_at_u = get_opt<bool>(j, "spherical_at_u");
  r.rho_l = get_opt<double>(j, "rho_l");
  r.rho_u = get_opt<double>(j, "rho_u");
  r.lambda1_complement = get_opt<double>(j, "lambda1_complement");
  r.m_lambda1_complement = get_opt<std::size_t>(j, "m_lambda1_complement");
  r.delta = get_opt<double>(j, "delta");
  r.beta_j = get_opt<double>(j, "beta_j");
  r.dim_j = get_opt<std::size_t>(j, "dim_j");
  r.lower_bound_e = get_opt<double>(j, "lower_bound_e");
  r.lower_bound_s = get_opt<double>(j, "lower_bound_s");
  return r;
}

json to_json(const Tolerances& tol) {
  return {{"eig", tol.eig}, {"psd", tol.psd}, {"residual", tol.residual}};
}

Tolerances tolerances_from_json(const json& j) {
  return {j.at("eig").get<double>(), j.at("psd").get<double>(), j.at("residual").get<double>()};
}

json report_document(const ReprReport& r, const Tolerances& tol, const std::string& graph6) {
  json doc;
  doc["tool"] = "twodist";
  doc["version"] = kToolVersion;
  doc["tolerances"] = to_json(tol);
  doc["input"] = {{"graph6", graph6}};
  doc["report"] = to_json(r);
  return doc;
}

json to_json(const SweepSummary& s) {
  json checks = json::object();
  for (std::size_t c = 0; c < kCheckCount; ++c)
    checks[std::string(check_name(static_cast<Check>(c)))] = {{"applied", s.checks[c].applied},
                                                             {"violations", s.checks[c].violations}};
  json ce = nullptr;
  if (s.first)
    ce = {{"index", s.first->index},
          {"check", std::string(check_name(s.first->check))},
          {"graph6", s.first->graph6},
          {"detail", s.first->detail}};
  return {{"tool", "twodist"},
          {"version", kToolVersion},
          {"n_max", s.options.n_max},
          {"exhaustive_max", s.options.exhaustive_max},
          {"samples", s.options.samples},
          {"seed", s.options.seed},
          {"tolerances", to_json(s.options.tol)},
          {"check_tol", s.options.check_tol},
          {"graphs_checked", s.graphs_checked()},
          {"exhaustive_graphs", s.exhaustive_graphs},
          {"sampled_graphs", s.sampled_graphs},
          {"violations", s.violations()},
          {"checks", checks},
          {"counterexample", ce},
          {"seconds", s.seconds},
          {"threads", s.threads},
          {"mode", s.parallel ? "parallel" : "serial"}};
}

}  // namespace twodist
