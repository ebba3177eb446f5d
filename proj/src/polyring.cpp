#include "syzcurve/polyring.hpp"

namespace syzcurve {

std::vector<Monomial> monomial_basis(int m) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  out.reserve(dim_S(m));
  for (int i = m; i >= 0; --i) {
    for (int j = m - i; j >= 0; --j) out.push_back({i, j, m - i - j});
  }
  return out;
}

std::string to_string(const Monomial& u) {
  std::string s;
  auto put = [&s](char var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (e > 1) s += '^' + std::to_string(e);
  };
  put('x', u.x);
  put('y', u.y);
  put('z', u.z);
  return s;
}

}  // namespace syzcurve
