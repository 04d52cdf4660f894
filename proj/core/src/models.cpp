#include "hrep/models.hpp"

#include <vector>

namespace hrep::models {

namespace {

using Constants = std::vector<std::vector<std::vector<Rational>>>;

Constants zero_constants(std::size_t n) { return Constants(n, std::vector(n, std::vector<Rational>(n, Rational(0)))); }

void set(Constants& c, std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  c[i][j][k] = v;
  c[j][i][k] = -v;
}

std::vector<std::vector<std::vector<Polynomial>>> lift(const Constants& c) {
  std::vector<std::vector<std::vector<Polynomial>>> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i].resize(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
      for (const auto& v : c[i][j]) out[i][j].emplace_back(v);
  }
  return out;
}

Constants sl2_constants() {
  Constants c = zero_constants(3);
  set(c, 0, 1, 2, 1);
  set(c, 2, 0, 0, 2);
  set(c, 2, 1, 1, -2);
  return c;
}

}  // namespace

AlgebroidModel sl2() { return AlgebroidModel::point(3, sl2_constants()); }

AlgebroidModel so3() {
  Constants c = zero_constants(3);
  set(c, 0, 1, 2, 1);
  set(c, 1, 2, 0, 1);
  set(c, 2, 0, 1, 1);
  return AlgebroidModel::point(3, c);
}

AlgebroidModel heisenberg() {
  Constants c = zero_constants(3);
  set(c, 0, 1, 2, 1);
  return AlgebroidModel::point(3, c);
}

AlgebroidModel abelian(std::size_t n) { return AlgebroidModel::point(n, zero_constants(n)); }

AlgebroidModel sl2_on_plane() {
  const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  // e v = (y, 0), f v = (0, x), h v = (x, -y)
  std::vector<std::vector<Polynomial>> anchor = {{-y, Polynomial(0)}, {Polynomial(0), -x}, {-x, y}};
  return AlgebroidModel::coord(2, 3, std::move(anchor), lift(sl2_constants()));
}

AlgebroidModel affine_line() {
  Constants c = zero_constants(2);
  set(c, 0, 1, 1, -1);
  std::vector<std::vector<Polynomial>> anchor = {{Polynomial::variable(0)}, {Polynomial(1)}};
  return AlgebroidModel::coord(1, 2, std::move(anchor), lift(c));
}

}  // namespace hrep::models
