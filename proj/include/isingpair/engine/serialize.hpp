#pragma once

#include <string>

#include <json.hpp>

#include "isingpair/engine/algebra.hpp"
#include "isingpair/engine/verify.hpp"

namespace isingpair {

/// Scalars are "p/q" strings throughout. Involutions are stored row-wise:
/// tau_e[i] is the coordinate vector of τ_e(label_i).
nlohmann::json to_json(const DihedralAlgebra& alg);
nlohmann::json to_json(const AxiomReport& report);
nlohmann::json to_json(const Element& x, const SpanningBasis& basis);

/// Header "x,y,label,coefficient"; one row per nonzero structure constant,
/// over all ordered label pairs.
std::string to_csv(const DihedralAlgebra& alg);

}  // namespace isingpair
