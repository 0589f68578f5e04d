#include "chromabound/report.hpp"

#include <sstream>

namespace chromabound {

namespace {

std::string str(long long x) { return std::to_string(x); }

std::string flag_names(const BoundFlags& f) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ';';
    out += name;
  };
  add(f.bound_holds, "bound_holds");
  add(f.dominates_li_tian, "dominates_li_tian");
  add(f.tight_at_leading, "tight_at_leading");
  return out;
}

}  // namespace

Json to_json(const ChromaticPolynomial& p) {
  Json j;
  j["v"] = str(p.vertex_count());
  j["polynomial"] = p.to_string();
  j["magnitudes"] = p.magnitude_strings();
  return j;
}

Json to_json(const EdgeChoice& c) {
  Json j;
  j["id"] = str(c.edge);
  j["x"] = str(c.x);
  j["y"] = str(c.y);
  j["lg"] = std::to_string(c.lg);
  j["lgp1star"] = std::to_string(c.lgp1star);
  j["S"] = c.s_value.str();
  j["correction"] = c.correction.str();
  j["mode"] = to_string(c.mode);
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["graph"] = {{"id", report.graph_id},
                {"v", str(report.graph.vertex_count())},
                {"e", str(report.graph.edge_count())},
                {"edge_list", to_edge_list(report.graph)}};
  j["girth"] = str(report.girth);
  j["k_g"] = std::to_string(report.kg);
  j["mode"] = to_string(report.mode);
  j["edge_override"] =
      report.edge_override ? Json(str(*report.edge_override)) : Json(nullptr);
  Json rows = Json::array();
  for (const BoundRow& row : report.rows) {
    Json r;
    r["r"] = str(row.r);
    r["exact"] = row.exact.str();
    r["li_tian"] = row.li_tian.str();
    r["improved"] = row.improved.str();
    r["improved_alt"] = row.improved_alt.str();
    r["leading"] = row.leading ? Json(row.leading->str()) : Json(nullptr);
    r["edge"] = to_json(row.choice);
    r["flags"] = {{"bound_holds", row.flags.bound_holds},
                  {"dominates_li_tian", row.flags.dominates_li_tian},
                  {"tight_at_leading", row.flags.tight_at_leading}};
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string to_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "r,exact,li_tian,improved,edge,lg,lgp1star,S,flags\n";
  for (const BoundRow& row : report.rows) {
    out << row.r << ',' << row.exact << ',' << row.li_tian << ','
        << row.improved << ',' << row.choice.x << '-' << row.choice.y << ','
        << row.choice.lg << ',' << row.choice.lgp1star << ','
        << row.choice.s_value << ',' << flag_names(row.flags) << '\n';
  }
  return out.str();
}

Json witness_json(const BoundReport& report, const BoundRow& row) {
  Json j;
  j["graph_id"] = report.graph_id;
  j["edge_list"] = to_edge_list(report.graph);
  j["mode"] = to_string(report.mode);
  j["r"] = str(row.r);
  j["edge"] = to_json(row.choice);
  j["exact"] = row.exact.str();
  j["li_tian"] = row.li_tian.str();
  j["improved"] = row.improved.str();
  j["replay"] = "bounds --input <edge_list file> --edge " +
                str(row.choice.x) + "," + str(row.choice.y) +
                " --mode fixed";
  return j;
}

}  // namespace chromabound
