#include "eforder/golden.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace eforder {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataIntegrityError("cannot open golden data file: " + path);
  json doc;
  in >> doc;
  return doc;
}

Polynomial poly_from_numerators(const json& numerators, const Int& den) {
  Polynomial p;
  for (const auto& n : numerators) {
    Rat c(Int(n.get<std::string>()), den);
    c.canonicalize();
    p.coeffs.push_back(c);
  }
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

// {"period":P, rows:[{"residues":[..],"numerators":[..]}]} with a
// shared denominator -> expanded QuasiPolynomial.
QuasiPolynomial table_from_rows(const json& rows, long period, const Int& den) {
  QuasiPolynomial qp;
  qp.period = period;
  qp.polys.resize(static_cast<size_t>(period));
  std::vector<bool> filled(static_cast<size_t>(period), false);
  for (const auto& row : rows) {
    Polynomial p = poly_from_numerators(row.at("numerators"), den);
    for (long r : row.at("residues").get<std::vector<long>>()) {
      if (r < 0 || r >= period || filled[static_cast<size_t>(r)])
        throw DataIntegrityError("golden table: bad or duplicate residue");
      qp.polys[static_cast<size_t>(r)] = p;
      filled[static_cast<size_t>(r)] = true;
    }
  }
  for (bool f : filled)
    if (!f) throw DataIntegrityError("golden table: residue class not covered");
  return qp;
}

}  // namespace

QuasiPolynomial golden_ngm(GroupType g, const std::string& data_dir) {
  json doc = load_json(data_dir + "/golden/ngm_tables.json");
  const json& entry = doc.at(name(g));
  Int den(entry.at("denominator").get<std::string>());
  return table_from_rows(entry.at("rows"), entry.at("period").get<long>(), den);
}

std::map<int, QuasiPolynomial> golden_ng2ms(const std::string& data_dir) {
  json doc = load_json(data_dir + "/golden/ng2ms_table.json");
  const long period = doc.at("period").get<long>();
  std::map<int, QuasiPolynomial> out;
  for (const auto& col : doc.at("columns")) {
    Int den(col.at("denominator").get<std::string>());
    out[col.at("s").get<int>()] = table_from_rows(col.at("rows"), period, den);
  }
  return out;
}

std::map<int, QuasiPolynomial> golden_nf4ms(const std::string& data_dir) {
  json doc = load_json(data_dir + "/golden/nf4ms_columns.json");
  std::map<int, QuasiPolynomial> out;
  for (const auto& col : doc.at("columns"))
    out[col.at("s").get<int>()] =
        table_from_rows(col.at("rows"), col.at("period").get<long>(), Int(1));
  return out;
}

std::vector<GoldenPosetNode> golden_g2_poset_nodes(const std::string& data_dir) {
  json doc = load_json(data_dir + "/golden/g2_eigen_poset.json");
  std::vector<GoldenPosetNode> out;
  for (const auto& n : doc.at("nodes")) {
    GoldenPosetNode node;
    node.rows = n.at("rows").get<std::vector<std::vector<long>>>();
    node.s = n.at("s").get<int>();
    node.power = n.at("power").get<int>();
    node.divisors = n.at("divisors").get<std::vector<long>>();
    out.push_back(std::move(node));
  }
  return out;
}

std::vector<GoldenSwEntry> golden_g2_sw(const std::string& data_dir) {
  json doc = load_json(data_dir + "/golden/g2_sw_table.json");
  std::vector<GoldenSwEntry> out;
  for (const auto& c : doc.at("classes")) {
    GoldenSwEntry e;
    e.size = c.at("size").get<long>();
    e.word = c.at("word").get<std::vector<int>>();
    e.rows = c.at("rows").get<std::vector<std::vector<long>>>();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace eforder
