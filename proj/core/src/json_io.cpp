#include "bicross/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bicross {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON");
  return j;
}

std::vector<std::vector<int>> int_matrix(const json& j, const char* field) {
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, std::string(field) + " must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array())
      throw Error(ErrorCode::ParseError, std::string(field) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError, std::string(field) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

FiniteGroup group_from_value(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw Error(ErrorCode::ParseError, "group file needs \"order\" and \"table\"");
  if (!j["order"].is_number_integer())
    throw Error(ErrorCode::ParseError, "\"order\" must be an integer");
  const int n = j["order"].get<int>();
  auto rows = int_matrix(j["table"], "table");
  if (static_cast<int>(rows.size()) != n)
    throw Error(ErrorCode::ParseError, "\"table\" size does not match \"order\"");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
    if (static_cast<int>(labels.size()) != n)
      throw Error(ErrorCode::ParseError, "\"labels\" size does not match \"order\"");
  }

  // re-index so the identity lands at 0, if one exists anywhere
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int j2 = 0; j2 < n && ok; ++j2)
      ok = static_cast<int>(rows[e].size()) == n && rows[e][j2] == j2 &&
           static_cast<int>(rows[j2].size()) == n && rows[j2][e] == j2;
    if (ok) id = e;
  }
  if (id > 0) {
    auto relabel = [&](int x) { return x == id ? 0 : (x == 0 ? id : x); };
    std::vector<std::vector<int>> fixed(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        int v = rows[i][k];
        if (v >= 0 && v < n) v = relabel(v);
        fixed[relabel(i)][relabel(k)] = v;
      }
    rows = std::move(fixed);
    if (!labels.empty()) std::swap(labels[0], labels[id]);
  }
  return validate_group(rows, std::move(labels));
}

json group_to_value(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["table"] = g.table_rows();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

json action_rows(const std::vector<int>& table, int ng, int nh) {
  json rows = json::array();
  for (int g = 0; g < ng; ++g) {
    json row = json::array();
    for (int h = 0; h < nh; ++h) row.push_back(table[g * nh + h]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FiniteGroup group_from_json(const std::string& text) {
  return group_from_value(parse(text));
}

std::string group_to_json(const FiniteGroup& g) { return group_to_value(g).dump(); }

std::string bicrossed_to_json(const BicrossedGroup& bi) {
  json j = group_to_value(bi.group);
  j["factorization"] = {{"h_order", bi.h_order()},
                        {"g_order", bi.g_order()},
                        {"encoding", "row-major"}};
  return j.dump();
}

MatchedPair matched_pair_from_json(const std::string& text) {
  json j = parse(text);
  for (const char* field : {"H", "G", "alpha", "beta"})
    if (!j.contains(field))
      throw Error(ErrorCode::ParseError,
                  std::string("matched-pair file needs \"") + field + "\"");
  FiniteGroup h = group_from_value(j["H"]);
  FiniteGroup g = group_from_value(j["G"]);
  auto alpha = int_matrix(j["alpha"], "alpha");
  auto beta = int_matrix(j["beta"], "beta");
  return validate_matched_pair(h, g, alpha, beta);
}

std::string matched_pair_to_json(const MatchedPair& mp) {
  json j;
  j["H"] = group_to_value(mp.H);
  j["G"] = group_to_value(mp.G);
  j["alpha"] = action_rows(mp.alpha, mp.G.order(), mp.H.order());
  j["beta"] = action_rows(mp.beta, mp.G.order(), mp.H.order());
  return j.dump();
}

std::string certificate_to_json(const IsomorphismCertificate& cert) {
  json j;
  j["iso"] = cert.iso();
  if (cert.iso())
    j["map"] = *cert.bijection;
  else
    j["reason"] = cert.refutation;
  return j.dump();
}

std::string theorem_report_to_json(const TheoremReport& report) {
  json j;
  j["p"] = report.p;
  j["m"] = report.m;
  json pairs = json::array();
  for (size_t i = 0; i < report.pairs.size(); ++i) {
    json entry;
    entry["theta"] = report.pairs[i].theta;
    entry["phi"] = report.pairs[i].phi;
    entry["group_order_profile"] = report.profiles[i];
    pairs.push_back(std::move(entry));
  }
  j["pairs"] = std::move(pairs);
  json matches = json::array();
  for (const auto& m : report.matches)
    matches.push_back(json{{"pair", m.pair_index},
                           {"semidirect_r", m.residue},
                           {"orientation", witness_branch_name(m.orientation)}});
  j["matches"] = std::move(matches);
  int counts[3] = {0, 0, 0};
  for (const auto& w : report.witnesses) ++counts[static_cast<int>(w.branch)];
  j["witness_branches"] = {{"NormalH", counts[0]},
                           {"NormalG", counts[1]},
                           {"Corrected", counts[2]}};
  j["all_matched"] = report.all_matched;
  return j.dump();
}

std::string factorizations_to_json(const std::vector<ExactFactorization>& list) {
  json arr = json::array();
  for (const auto& f : list) {
    RecoveredPair rec = recover_matched_pair(f);
    json entry;
    entry["h"] = f.H.elements();
    entry["g"] = f.G.elements();
    entry["alpha"] = action_rows(rec.mp.alpha, rec.mp.G.order(), rec.mp.H.order());
    entry["beta"] = action_rows(rec.mp.beta, rec.mp.G.order(), rec.mp.H.order());
    arr.push_back(std::move(entry));
  }
  return arr.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << content;
}

}  // namespace bicross
