#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isingpair/classify/constraints.hpp"
#include "isingpair/linalg/rational.hpp"

namespace isingpair {

/// One admissible parameter set, on the ⟨·,·⟩ scale.
struct ClassRow {
  int n = 0;
  Rational ef;     // ⟨e, f⟩
  Rational e_etf;  // ⟨e, e^{τ_f}⟩
  std::optional<Rational> extra;  // ⟨e^{τ_f}, f^{τ_e}⟩, reported for n = 6
  std::string label;

  friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

struct Rejection {
  Rational lambda1;
  Rational lambda2;
  std::string reason;
};

struct ParameterSolution {
  int n = 0;
  std::vector<ClassRow> rows;
  std::vector<Rejection> rejected;
  /// Some branch had real but irrational roots; those are not parameters.
  bool irrational_roots = false;
};

/// Solves the constraint system exactly: univariate equations through the
/// quadratic formula, then linear elimination. Throws std::runtime_error if
/// a positive-dimensional family survives.
ParameterSolution solve_parameters_detailed(int n);
std::vector<ClassRow> solve_parameters(int n);

/// Rows for n = 1…6, ordered by n, then by ⟨e,f⟩ descending.
std::vector<ClassRow> classify_all();

/// Monster class for (n, ⟨e,f⟩, ⟨e,e^{τ_f}⟩), or "unknown".
std::string class_label(int n, const Rational& ef, const Rational& e_etf);

/// The nine columns of the class/inner-product table, in its printed order.
struct ClassColumn {
  std::string label;
  Rational ef;
};
const std::vector<ClassColumn>& class_columns();

}  // namespace isingpair
