#include "isingpair/engine/serialize.hpp"

#include <sstream>

namespace isingpair {

namespace {

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : m.row(r)) row.push_back(x.str());
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

nlohmann::json to_json(const Element& x, const SpanningBasis& basis) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [label, c] : x.coords()) out[basis.name(label)] = c.str();
  return out;
}

nlohmann::json to_json(const DihedralAlgebra& alg) {
  nlohmann::json j;
  j["n"] = alg.n;
  j["params"] = {{"lambda1", alg.params.lambda1.str()},
                 {"lambda2", alg.params.lambda2.str()},
                 {"ef", alg.params.bracket1().str()},
                 {"e_etf", alg.params.bracket2().str()}};
  j["orbit"] = to_json(alg.orbit);
  j["basis"] = alg.basis.names();
  nlohmann::json mu = nlohmann::json::array();
  for (const auto& m : alg.gram_table.mu) mu.push_back(m.str());
  j["mu"] = mu;
  j["gram"] = matrix_json(alg.gram);
  j["rank"] = alg.rank;
  nlohmann::json piv = nlohmann::json::array();
  for (auto p : alg.pivots) piv.push_back(alg.basis.name(p));
  j["pivots"] = piv;
  nlohmann::json rad = nlohmann::json::array();
  for (const auto& v : alg.radical) rad.push_back(vector_json(v));
  j["radical"] = rad;
  nlohmann::json table = nlohmann::json::object();
  for (std::size_t x = 0; x < alg.dim(); ++x) {
    nlohmann::json row = nlohmann::json::object();
    for (std::size_t y = 0; y < alg.dim(); ++y) row[alg.basis.name(y)] = to_json(alg.table[x][y], alg.basis);
    table[alg.basis.name(x)] = row;
  }
  j["table"] = table;
  j["tau_e"] = matrix_json(alg.tau_e.transpose());
  j["tau_f"] = matrix_json(alg.tau_f.transpose());
  return j;
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json e = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"passed", report.all_passed()}, {"checks", checks}};
}

std::string to_csv(const DihedralAlgebra& alg) {
  std::ostringstream os;
  os << "x,y,label,coefficient\n";
  for (std::size_t x = 0; x < alg.dim(); ++x)
    for (std::size_t y = 0; y < alg.dim(); ++y)
      for (const auto& [label, c] : alg.table[x][y].coords())
        os << alg.basis.name(x) << ',' << alg.basis.name(y) << ',' << alg.basis.name(label) << ',' << c.str() << '\n';
  return os.str();
}

}  // namespace isingpair
