#include "solvlen/tables.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "solvlen/analytics.hpp"
#include "solvlen/constructors.hpp"
#include "solvlen/error.hpp"
#include "solvlen/series.hpp"

namespace solvlen {

using nlohmann::json;

TableKind parse_table_kind(const std::string& s) {
  if (s == "theorem1a") return TableKind::theorem1a;
  if (s == "theorem1b") return TableKind::theorem1b;
  if (s == "un") return TableKind::un;
  if (s == "wd") return TableKind::wd;
  throw Error("unknown table '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "markdown") return OutputFormat::markdown;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw Error("unknown format '" + s + "'");
}

namespace {

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

json report_to_json(const GroupReport& r) {
  json j;
  j["name"] = r.name;
  j["degree"] = r.degree;
  json factors = json::array();
  for (const auto& [p, e] : r.order.factors) factors.push_back({p, e});
  j["order_factors"] = factors;
  j["order"] = r.order.str();
  j["c"] = r.c;
  j["d"] = r.d;
  j["transitive"] = r.transitive;
  if (r.expected_c) j["expected_c"] = *r.expected_c;
  if (r.expected_d) j["expected_d"] = *r.expected_d;
  j["match"] = r.match;
  return j;
}

GroupReport report_from_json(const json& j) {
  GroupReport r;
  r.name = j.at("name").get<std::string>();
  r.degree = j.at("degree").get<uint32_t>();
  for (const auto& pe : j.at("order_factors"))
    r.order.factors.emplace_back(pe.at(0).get<uint64_t>(),
                                 pe.at(1).get<uint64_t>());
  r.c = j.at("c").get<uint64_t>();
  r.d = j.at("d").get<uint32_t>();
  r.transitive = j.at("transitive").get<bool>();
  if (j.contains("expected_c")) r.expected_c = j["expected_c"].get<uint64_t>();
  if (j.contains("expected_d")) r.expected_d = j["expected_d"].get<uint32_t>();
  r.match = j.at("match").get<bool>();
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

} // namespace

std::string Table::render(OutputFormat f) const {
  std::string out;
  switch (f) {
    case OutputFormat::markdown: {
      out += "# " + title + "\n\n|";
      for (const auto& c : columns) out += " " + c + " |";
      out += "\n|";
      for (size_t i = 0; i < columns.size(); ++i) out += "---|";
      out += "\n";
      for (const auto& row : rows) {
        out += "|";
        for (const auto& cell : row) out += " " + cell + " |";
        out += "\n";
      }
      break;
    }
    case OutputFormat::csv: {
      for (size_t i = 0; i < columns.size(); ++i)
        out += (i ? "," : "") + csv_escape(columns[i]);
      out += "\n";
      for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
          out += (i ? "," : "") + csv_escape(row[i]);
        out += "\n";
      }
      break;
    }
    case OutputFormat::json: {
      json j;
      j["title"] = title;
      j["columns"] = columns;
      j["rows"] = rows;
      json reps = json::array();
      for (const auto& r : reports) reps.push_back(report_to_json(r));
      j["reports"] = reps;
      out = j.dump(2);
      out += "\n";
      break;
    }
  }
  return out;
}

namespace {

Table table_theorem1a(uint32_t r_max, bool opt_in) {
  if (r_max < 1 || r_max > 2)
    throw Error("table theorem1a: feasibility cutoff is r <= 2");
  Table t;
  t.title = "G towers: d, order, c, x_n";
  t.columns = {"G_n", "d", "|G_n|", "c", "x_n", "ceil(5log9(c)-2/3)"};
  std::vector<std::pair<Family, uint32_t>> members;
  for (uint32_t r = 1; r <= r_max; ++r)
    for (Family f : {Family::Gm, Family::G2m, Family::G3m, Family::G4m,
                     Family::G8m}) {
      if (r >= 2 && !opt_in &&
          (f == Family::G3m || f == Family::G4m || f == Family::G8m))
        continue; // degrees 243..648 are opt-in
      members.push_back({f, r});
    }
  std::vector<FamilyRequest> reqs;
  for (auto [f, r] : members) reqs.push_back({f, r});
  std::vector<GroupReport> reports = family_reports_parallel(reqs);
  for (size_t i = 0; i < reports.size(); ++i) {
    const GroupReport& rep = reports[i];
    uint32_t k = 0;
    switch (members[i].first) {
      case Family::Gm: k = 7; break;
      case Family::G2m: k = 15; break;
      case Family::G3m: k = 23; break;
      case Family::G4m: k = 39; break;
      default: k = 47; break;
    }
    t.rows.push_back({rep.name, std::to_string(rep.d), rep.order.str(),
                      std::to_string(rep.c), fmt2(x_n(k)),
                      std::to_string(ceiling_identity_value(rep.c))});
    t.reports.push_back(rep);
  }
  return t;
}

Table table_theorem1b(uint32_t r_max, bool opt_in) {
  if (r_max < 1 || r_max > 3)
    throw Error("table theorem1b: feasibility cutoff is r <= 3");
  Table t;
  t.title = "H towers (odd order): d, order, c";
  t.columns = {"H_n", "d", "|H_n|", "c"};
  std::vector<FamilyRequest> reqs;
  for (uint32_t r = 1; r <= r_max; ++r) {
    if (r == 3 && !opt_in)
      throw Error("table theorem1b: r = 3 (degree 343) needs --opt-in");
    reqs.push_back({Family::Hm, r});
    if (r <= 2) reqs.push_back({Family::H3m, r}); // degree 1029 is out
  }
  std::vector<GroupReport> reports = family_reports_parallel(reqs);
  for (const GroupReport& rep : reports) {
    t.rows.push_back({rep.name, std::to_string(rep.d), rep.order.str(),
                      std::to_string(rep.c)});
    t.reports.push_back(rep);
  }
  return t;
}

Table table_un(uint32_t n_max, uint32_t p) {
  if (p != 2 && p != 3) throw Error("table un: p must be 2 or 3");
  uint32_t cutoff = p == 2 ? 9 : 6;
  if (n_max < 2 || n_max > cutoff)
    throw Error("table un: feasibility cutoff for p = " + std::to_string(p) +
                " is n <= " + std::to_string(cutoff));
  Table t;
  t.title = "U_n over F_" + std::to_string(p) + ": order, c, d";
  t.columns = {"n", "degree", "|U_n|", "c", "d", "n(n-1)/2",
               "floor(log2(n-1))+1"};
  for (uint32_t n = 2; n <= n_max; ++n) {
    PermutationGroup u = unitriangular(p, n);
    GroupReport rep = make_report("U" + std::to_string(n), u,
                                  uint64_t(n) * (n - 1) / 2,
                                  static_cast<uint32_t>(std::floor(
                                      std::log2(double(n - 1)))) + 1);
    t.rows.push_back({std::to_string(n), std::to_string(rep.degree),
                      rep.order.str(), std::to_string(rep.c),
                      std::to_string(rep.d), std::to_string(*rep.expected_c),
                      std::to_string(*rep.expected_d)});
    t.reports.push_back(rep);
  }
  return t;
}

Table table_wd(uint32_t d_max) {
  if (d_max < 1 || d_max > 6)
    throw Error("table wd: feasibility cutoff is d <= 6");
  Table t;
  t.title = "S2 towers W_d: order, c, d";
  t.columns = {"d", "degree", "|W_d|", "c", "2^d-1"};
  std::vector<FamilyRequest> reqs;
  for (uint32_t d = 1; d <= d_max; ++d) reqs.push_back({Family::Wd, d});
  std::vector<GroupReport> reports = family_reports_parallel(reqs);
  for (size_t i = 0; i < reports.size(); ++i) {
    const GroupReport& rep = reports[i];
    t.rows.push_back({std::to_string(i + 1), std::to_string(rep.degree),
                      rep.order.str(), std::to_string(rep.c),
                      std::to_string(*rep.expected_c)});
    t.reports.push_back(rep);
  }
  return t;
}

} // namespace

Table cmd_table(TableKind kind, uint32_t r_max, uint32_t p, bool opt_in) {
  switch (kind) {
    case TableKind::theorem1a: return table_theorem1a(r_max, opt_in);
    case TableKind::theorem1b: return table_theorem1b(r_max, opt_in);
    case TableKind::un: return table_un(r_max, p);
    case TableKind::wd: return table_wd(r_max);
  }
  throw Error("unknown table kind");
}

std::string reports_to_json(const std::vector<GroupReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2);
}

std::vector<GroupReport> reports_from_json(const std::string& text) {
  json arr = json::parse(text);
  std::vector<GroupReport> out;
  for (const auto& j : arr) out.push_back(report_from_json(j));
  return out;
}

} // namespace solvlen
