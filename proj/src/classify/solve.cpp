#include "isingpair/classify/solve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "isingpair/linalg/quadratic.hpp"
#include "isingpair/model/gram.hpp"

namespace isingpair {

namespace {

using Values = std::vector<Rational>;

std::vector<Values> solve_system(std::vector<Polynomial> eqs, std::vector<bool> open, bool& irrational) {
  std::vector<Polynomial> live;
  for (auto& e : eqs) {
    if (e.is_zero()) continue;
    if (e.is_constant()) return {};
    live.push_back(std::move(e));
  }
  const std::size_t k = open.size();
  if (live.empty()) {
    if (std::find(open.begin(), open.end(), true) != open.end()) {
      throw std::runtime_error("constraint system leaves a positive-dimensional family");
    }
    return {Values(k)};
  }

  for (const auto& e : live) {
    const auto vars = e.variables();
    if (vars.size() != 1) continue;
    const std::size_t v = vars[0];
    if (e.degree() > 2) throw std::runtime_error("univariate constraint of degree above 2");
    const Rational a = e.coefficient(v, 2).constant_term();
    const Rational b = e.coefficient(v, 1).constant_term();
    const Rational c = e.coefficient(v, 0).constant_term();
    const QuadraticRoots roots = solve_quadratic(a, b, c);
    irrational = irrational || roots.irrational;
    std::vector<Values> out;
    for (const auto& r : roots.roots) {
      std::vector<Polynomial> next;
      for (const auto& f : live) next.push_back(f.substitute(v, r));
      auto sub_open = open;
      sub_open[v] = false;
      for (auto& sol : solve_system(std::move(next), sub_open, irrational)) {
        sol[v] = r;
        out.push_back(std::move(sol));
      }
    }
    return out;
  }

  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t v : live[i].variables()) {
      if (live[i].degree_in(v) != 1) continue;
      const Polynomial lead = live[i].coefficient(v, 1);
      if (!lead.is_constant()) continue;
      const Polynomial expr = (-lead.constant_term().inverse()) * live[i].coefficient(v, 0);
      std::vector<Polynomial> next;
      for (std::size_t j = 0; j < live.size(); ++j)
        if (j != i) next.push_back(live[j].substitute(v, expr));
      auto sub_open = open;
      sub_open[v] = false;
      std::vector<Values> out;
      for (auto& sol : solve_system(std::move(next), sub_open, irrational)) {
        sol[v] = expr.evaluate(sol);
        out.push_back(std::move(sol));
      }
      return out;
    }
  }
  throw std::runtime_error("constraint system has no univariate or linear handle");
}

std::optional<std::string> reject_reason(int n, const Rational& l1, const Rational& l2) {
  const Rational one(1);
  auto bounded = [](const Rational& l) { return l.sign() >= 0 && l <= Rational(1, 3); };
  if (n >= 2 && l1 == one) return "lambda1 = 1 but e != f";
  if (n >= 3 && l2 == one) return "lambda2 = 1 but e != e^{tau_f}";
  if (l1 != one && !bounded(l1)) return "lambda1 outside the bound 0 <= lambda <= 1/3";
  if (l2 != one && !bounded(l2)) return "lambda2 outside the bound 0 <= lambda <= 1/3";
  if (n >= 3 && l1.is_zero()) return "lambda1 != 0 since e != e^{tau_f}";
  return std::nullopt;
}

}  // namespace

const std::vector<ClassColumn>& class_columns() {
  static const std::vector<ClassColumn> cols{
      {"1A", Rational(1, 4)},   {"2A", Rational(1, 32)},   {"3A", Rational(13, 1024)},
      {"4A", Rational(1, 128)}, {"5A", Rational(3, 512)},  {"6A", Rational(5, 1024)},
      {"3C", Rational(1, 256)}, {"4B", Rational(1, 256)},  {"2B", Rational(0)},
  };
  return cols;
}

std::string class_label(int n, const Rational& ef, const Rational& e_etf) {
  using Key = std::tuple<int, std::string, std::string>;
  static const std::map<Key, std::string> labels{
      {{1, "1/4", "1/4"}, "1A"},           {{2, "1/32", "1/4"}, "2A"},          {{2, "0", "1/4"}, "2B"},
      {{3, "13/1024", "13/1024"}, "3A"},   {{3, "1/256", "1/256"}, "3C"},       {{4, "1/128", "0"}, "4A"},
      {{4, "1/256", "1/32"}, "4B"},        {{5, "3/512", "3/512"}, "5A"},       {{6, "5/1024", "13/1024"}, "6A"},
  };
  auto it = labels.find({n, ef.str(), e_etf.str()});
  return it == labels.end() ? "unknown" : it->second;
}

ParameterSolution solve_parameters_detailed(int n) {
  const ConstraintSystem sys = constraint_system(n);
  std::vector<Polynomial> eqs;
  for (const auto& c : sys.equations) eqs.push_back(c.poly);
  ParameterSolution out;
  out.n = n;
  const auto sols = solve_system(eqs, {true, true}, out.irrational_roots);
  for (const auto& s : sols) {
    const Rational& l1 = s[kLambda1];
    const Rational& l2 = s[kLambda2];
    if (auto why = reject_reason(n, l1, l2)) {
      out.rejected.push_back({l1, l2, *why});
      continue;
    }
    ClassRow row;
    row.n = n;
    row.ef = l1 / Rational(4);
    row.e_etf = l2 / Rational(4);
    if (n == 6) row.extra = derive_gram(build_orbit(6), ParamRecord::make(l1, l2)).mu.at(3);
    row.label = class_label(n, row.ef, row.e_etf);
    if (std::find(out.rows.begin(), out.rows.end(), row) == out.rows.end()) out.rows.push_back(std::move(row));
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const ClassRow& a, const ClassRow& b) { return a.ef > b.ef; });
  return out;
}

std::vector<ClassRow> solve_parameters(int n) { return solve_parameters_detailed(n).rows; }

std::vector<ClassRow> classify_all() {
  std::vector<ClassRow> out;
  for (int n = 1; n <= 6; ++n) {
    auto rows = solve_parameters(n);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace isingpair
