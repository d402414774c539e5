#include "entmono/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace entmono {

using nlohmann::json;

json operator_to_json(const HermitianOperator& h) {
  json entries = json::array();
  const int n = h.dim();
  for (int k = 0; k < n; ++k) {
    json row = json::array();
    for (int l = 0; l < n; ++l) {
      const cplx& v = h.entry(k, l);
      row.push_back(json::array({v.real(), v.imag()}));
    }
    entries.push_back(std::move(row));
  }
  return json{{"dim_a", h.dim_a()}, {"dim_b", h.dim_b()}, {"entries", std::move(entries)}};
}

HermitianOperator operator_from_json(const json& j, bool symmetrize) {
  if (!j.contains("dim_a") || !j.contains("dim_b") || !j.contains("entries"))
    throw std::invalid_argument("operator file: missing dim_a, dim_b or entries");
  const int da = j.at("dim_a").get<int>();
  const int db = j.at("dim_b").get<int>();
  if (da < 1 || db < 1) throw std::invalid_argument("operator file: dimensions must be positive");
  if (da * db > kDimensionCap)
    throw std::length_error("operator file: total dimension exceeds the desk-scale cap");
  const int n = da * db;
  const json& e = j.at("entries");
  if (!e.is_array() || static_cast<int>(e.size()) != n)
    throw std::invalid_argument("operator file: entries must be a " + std::to_string(n) + "-row array");
  CMatrix m(n, n);
  for (int k = 0; k < n; ++k) {
    const json& row = e.at(k);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("operator file: row " + std::to_string(k) + " has wrong length");
    for (int l = 0; l < n; ++l) {
      const json& cell = row.at(l);
      if (!cell.is_array() || cell.size() != 2)
        throw std::invalid_argument("operator file: entries must be [re, im] pairs");
      m(k, l) = cplx(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  const double tol = symmetrize ? std::numeric_limits<double>::infinity() : kParseHermiticityTol;
  return HermitianOperator(da, db, std::move(m), tol);
}

void write_operator_file(const std::string& path, const HermitianOperator& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << operator_to_json(h).dump(1) << "\n";
}

HermitianOperator read_operator_file(const std::string& path, bool symmetrize) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("operator file: ") + e.what());
  }
  return operator_from_json(j, symmetrize);
}

json result_to_json(const MonotoneResult& r) {
  json flags = json::object();
  flags["heuristic"] = r.heuristic;
  flags["undecided_band"] = r.undecided_band;
  flags["infeasible_dictionary"] = r.infeasible_dictionary;
  json diag{{"probes", r.diag.probes},
            {"member_probes", r.diag.member_probes},
            {"nonmember_probes", r.diag.nonmember_probes},
            {"undecided_probes", r.diag.undecided_probes},
            {"iterations", r.diag.iterations}};
  json out{{"kind", kind_name(r.kind)}, {"lo", r.lo},     {"hi", r.hi},
           {"value", r.value()},        {"flags", flags}, {"diagnostics", diag}};
  if (r.kind == MonotoneKind::r_g_ppt) out["robustness_bound"] = r.robustness_bound;
  return out;
}

namespace {

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    case Membership::undecided: return "undecided";
  }
  return "unknown";
}

}  // namespace

json verdict_to_json(const ConeVerdict& v) {
  json out{{"status", membership_name(v.status)},
           {"gap", v.gap},
           {"iterations", v.iterations},
           {"converged", v.converged},
           {"heuristic", v.heuristic}};
  out["has_ppt_witness"] = v.ppt_witness.has_value();
  out["has_product_witness"] = v.product_witness.has_value();
  out["has_decomposition"] = v.decomposition.has_value();
  return out;
}

json harness_to_json(const HarnessReport& r) {
  json rows = json::array();
  for (const HarnessRow& row : r.rows)
    rows.push_back(json{{"map", row.map_id},
                        {"branch", row.branch},
                        {"probability", row.probability},
                        {"m_in", row.m_in},
                        {"m_out", row.m_out},
                        {"delta", row.delta}});
  return json{{"m_in", r.m_in}, {"max_violation", r.max_violation}, {"rows", std::move(rows)}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string harness_to_csv(const HarnessReport& r) {
  std::string out = "# entmono harness v1\nmap,branch,probability,m_in,m_out,delta\n";
  for (const HarnessRow& row : r.rows) {
    out += row.map_id + "," + std::to_string(row.branch) + "," + format_double(row.probability) +
           "," + format_double(row.m_in) + "," + format_double(row.m_out) + "," +
           format_double(row.delta) + "\n";
  }
  return out;
}

}  // namespace entmono
