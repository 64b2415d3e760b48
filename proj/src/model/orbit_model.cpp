#include "isingpair/model/orbit_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace isingpair {

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation out(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) out[j] = p[static_cast<std::size_t>(q[j])];
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = static_cast<int>(j);
  return p;
}

bool is_involution(const Permutation& p) { return compose(p, p) == identity_permutation(p.size()); }

std::size_t order(const Permutation& p) {
  const Permutation id = identity_permutation(p.size());
  Permutation q = p;
  std::size_t k = 1;
  while (q != id) {
    q = compose(p, q);
    ++k;
  }
  return k;
}

int OrbitModel::mod(int j) const {
  const int r = j % period;
  return r < 0 ? r + period : r;
}

int OrbitModel::distance(int i, int j) const {
  const int d = mod(i - j);
  return std::min(d, period - d);
}

std::vector<int> OrbitModel::e_orbit() const {
  std::vector<int> out;
  for (int j = 0; j < period; ++j)
    if (fused() || j % 2 == 1) out.push_back(j);
  return out;
}

std::vector<int> OrbitModel::f_orbit() const {
  std::vector<int> out;
  for (int j = 0; j < period; ++j)
    if (fused() || j % 2 == 0) out.push_back(j);
  return out;
}

Permutation OrbitModel::reflection_about(int j) const {
  Permutation p(static_cast<std::size_t>(period));
  for (int k = 0; k < period; ++k) p[static_cast<std::size_t>(k)] = mod(2 * j - k);
  return p;
}

std::vector<Permutation> OrbitModel::group() const {
  std::vector<Permutation> out;
  for (int sign : {1, -1}) {
    for (int i = 0; i < period; ++i) {
      Permutation p(static_cast<std::size_t>(period));
      for (int k = 0; k < period; ++k) p[static_cast<std::size_t>(k)] = mod(sign * k + 2 * i);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

OrbitModel build_orbit(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("build_orbit: n must lie in [1, 16]");
  OrbitModel m;
  m.n = n;
  m.period = n;
  m.tau_e.resize(static_cast<std::size_t>(n));
  m.tau_f.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    m.tau_e[static_cast<std::size_t>(j)] = m.mod(-j - 2);
    m.tau_f[static_cast<std::size_t>(j)] = m.mod(-j);
  }
  return m;
}

const Permutation& involution_action(const OrbitModel& model, Involution which) {
  return which == Involution::e ? model.tau_e : model.tau_f;
}

nlohmann::json to_json(const OrbitModel& model) {
  return nlohmann::json{{"n", model.n}, {"period", model.period}, {"tau_e", model.tau_e}, {"tau_f", model.tau_f}};
}

}  // namespace isingpair
