#include "hrep/groupoid.hpp"

#include <stdexcept>

namespace hrep {

namespace {

std::string str(int v) { return std::to_string(v); }

}  // namespace

std::optional<std::string> check_groupoid_axioms(std::size_t objects, const std::vector<int>& source,
                                                 const std::vector<int>& target,
                                                 const std::vector<std::vector<int>>& comp,
                                                 const std::vector<int>& units, const std::vector<int>& inverses) {
  const int m = static_cast<int>(source.size());
  const int n = static_cast<int>(objects);
  if (target.size() != source.size() || inverses.size() != source.size() || comp.size() != source.size())
    return "table sizes disagree with the arrow count";
  if (units.size() != objects) return "units table size disagrees with the object count";
  for (int g = 0; g < m; ++g) {
    if (source[g] < 0 || source[g] >= n || target[g] < 0 || target[g] >= n) return "arrow " + str(g) + " has a bad endpoint";
    if (comp[g].size() != source.size()) return "composition row " + str(g) + " has the wrong length";
  }
  for (int x = 0; x < n; ++x) {
    const int u = units[x];
    if (u < 0 || u >= m || source[u] != x || target[u] != x) return "unit of object " + str(x) + " is not a loop at it";
  }
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      const int gh = comp[g][h];
      if (source[g] != target[h]) {
        if (gh != -1) return "comp[" + str(g) + "][" + str(h) + "] defined for non-composable arrows";
        continue;
      }
      if (gh < 0 || gh >= m) return "comp[" + str(g) + "][" + str(h) + "] missing";
      if (source[gh] != source[h] || target[gh] != target[g]) return "comp[" + str(g) + "][" + str(h) + "] has wrong endpoints";
    }
  }
  for (int g = 0; g < m; ++g) {
    if (comp[units[target[g]]][g] != g || comp[g][units[source[g]]] != g) return "units are not neutral for arrow " + str(g);
    const int gi = inverses[g];
    if (gi < 0 || gi >= m || source[gi] != target[g] || target[gi] != source[g]) return "inverse of " + str(g) + " has wrong endpoints";
    if (comp[g][gi] != units[target[g]] || comp[gi][g] != units[source[g]]) return "inverse of " + str(g) + " is not two-sided";
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (source[f] != target[g]) continue;
      for (int h = 0; h < m; ++h) {
        if (source[g] != target[h]) continue;
        if (comp[comp[f][g]][h] != comp[f][comp[g][h]])
          return "associativity fails at (" + str(f) + ", " + str(g) + ", " + str(h) + ")";
      }
    }
  return std::nullopt;
}

FiniteGroupoid::FiniteGroupoid(std::size_t objects, std::vector<int> source, std::vector<int> target,
                               std::vector<std::vector<int>> comp, std::vector<int> units, std::vector<int> inverses)
    : objects_(objects),
      source_(std::move(source)),
      target_(std::move(target)),
      comp_(std::move(comp)),
      units_(std::move(units)),
      inverses_(std::move(inverses)) {
  if (auto err = check_groupoid_axioms(objects_, source_, target_, comp_, units_, inverses_))
    throw std::invalid_argument("not a groupoid: " + *err);
}

FiniteGroupoid FiniteGroupoid::pair(std::size_t n) {
  const int k = static_cast<int>(n);
  const int m = k * k;
  std::vector<int> s(m), t(m), inv(m), u(n);
  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      const int g = p * k + q;
      t[g] = p;
      s[g] = q;
      inv[g] = q * k + p;
      for (int r = 0; r < k; ++r) comp[g][q * k + r] = p * k + r;
    }
  for (int x = 0; x < k; ++x) u[x] = x * k + x;
  return FiniteGroupoid(n, s, t, comp, u, inv);
}

FiniteGroupoid FiniteGroupoid::units_only(std::size_t n) {
  std::vector<int> ids(n);
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (std::size_t x = 0; x < n; ++x) {
    ids[x] = static_cast<int>(x);
    comp[x][x] = static_cast<int>(x);
  }
  return FiniteGroupoid(n, ids, ids, comp, ids, ids);
}

FiniteGroupoid FiniteGroupoid::cyclic(std::size_t n) {
  const int k = static_cast<int>(n);
  std::vector<int> zero(n, 0), inv(n);
  std::vector<std::vector<int>> comp(n, std::vector<int>(n));
  for (int a = 0; a < k; ++a) {
    inv[a] = (k - a) % k;
    for (int b = 0; b < k; ++b) comp[a][b] = (a + b) % k;
  }
  return FiniteGroupoid(1, zero, zero, comp, {0}, inv);
}

int FiniteGroupoid::compose(int g, int h) const {
  const int gh = comp_[g][h];
  if (gh < 0) throw std::invalid_argument("arrows " + str(g) + " and " + str(h) + " are not composable");
  return gh;
}

std::size_t TupleHash::operator()(const Tuple& t) const noexcept {
  std::size_t h = t.size();
  for (int v : t) h = h * 1000003u ^ static_cast<std::size_t>(v + 1);
  return h;
}

Nerve::Nerve(FiniteGroupoid g, int max_arity) : g_(std::move(g)) {
  if (max_arity < 0) throw std::invalid_argument("Nerve: negative arity");
  levels_.resize(max_arity + 1);
  for (std::size_t x = 0; x < g_.num_objects(); ++x) levels_[0].push_back({static_cast<int>(x)});
  if (max_arity >= 1)
    for (std::size_t a = 0; a < g_.num_arrows(); ++a) levels_[1].push_back({static_cast<int>(a)});
  for (int k = 2; k <= max_arity; ++k) {
    for (const auto& t : levels_[k - 1]) {
      const int x = g_.source(t.back());
      for (std::size_t a = 0; a < g_.num_arrows(); ++a) {
        if (g_.target(static_cast<int>(a)) != x) continue;
        Tuple u = t;
        u.push_back(static_cast<int>(a));
        levels_[k].push_back(std::move(u));
      }
    }
  }
  index_.resize(levels_.size());
  degenerate_.resize(levels_.size());
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    index_[k].reserve(levels_[k].size());
    degenerate_[k].resize(levels_[k].size(), 0);
    for (std::size_t i = 0; i < levels_[k].size(); ++i) {
      index_[k].emplace(levels_[k][i], i);
      if (k == 0) continue;
      for (int a : levels_[k][i])
        if (g_.is_unit(a)) degenerate_[k][i] = 1;
    }
  }
}

int Nerve::check(int k) const {
  if (k < 0 || k > max_arity())
    throw std::out_of_range("nerve level " + str(k) + " not available (max " + str(max_arity()) + ")");
  return k;
}

const std::vector<Tuple>& Nerve::level(int k) const { return levels_[check(k)]; }

std::size_t Nerve::index(int k, const Tuple& t) const {
  const auto& m = index_[check(k)];
  auto it = m.find(t);
  if (it == m.end()) throw std::out_of_range("tuple is not a simplex of level " + str(k));
  return it->second;
}

int Nerve::vertex(int k, const Tuple& t, int a) const {
  if (k == 0) return t[0];
  if (a < 0 || a > k) throw std::out_of_range("vertex index out of range");
  return a == 0 ? g_.target(t[0]) : g_.source(t[a - 1]);
}

Tuple Nerve::face(int k, const Tuple& t, int i) const {
  if (k < 1 || i < 0 || i > k) throw std::out_of_range("face d_" + str(i) + " undefined on level " + str(k));
  if (k == 1) return {i == 0 ? g_.source(t[0]) : g_.target(t[0])};
  Tuple out;
  out.reserve(k - 1);
  for (int j = 0; j < k; ++j) {
    if (i == 0 && j == 0) continue;
    if (i == k && j == k - 1) continue;
    if (0 < i && i < k && j == i) continue;
    if (0 < i && i < k && j == i - 1) {
      out.push_back(g_.compose(t[j], t[j + 1]));
      continue;
    }
    out.push_back(t[j]);
  }
  return out;
}

Tuple Nerve::sub(int k, const Tuple& t, int a, int b) const {
  if (a < 0 || b > k || a > b) throw std::out_of_range("sub-simplex range out of bounds");
  if (a == b) return {vertex(k, t, a)};
  return Tuple(t.begin() + a, t.begin() + b);
}

Tuple Nerve::insert_unit(int k, const Tuple& t, int m) const {
  const int u = g_.unit(vertex(k, t, m));
  if (k == 0) return {u};
  Tuple out(t.begin(), t.begin() + m);
  out.push_back(u);
  out.insert(out.end(), t.begin() + m, t.end());
  return out;
}

FiniteCochain zero_cochain(const Nerve& n, int arity, std::size_t width) {
  return FiniteCochain{arity, width, std::vector<Rational>(n.size(arity) * width, Rational(0))};
}

bool is_normalized(const Nerve& n, const FiniteCochain& f) {
  if (f.arity == 0) return true;
  for (std::size_t i = 0; i < n.size(f.arity); ++i) {
    if (!n.degenerate(f.arity, i)) continue;
    for (std::size_t j = 0; j < f.width; ++j)
      if (f.at(i, j) != 0) return false;
  }
  return true;
}

namespace {

void check_compatible(const FiniteCochain& a, const FiniteCochain& b) {
  if (a.arity != b.arity || a.width != b.width || a.values.size() != b.values.size())
    throw std::invalid_argument("cochain shapes differ");
}

}  // namespace

FiniteCochain operator+(const FiniteCochain& a, const FiniteCochain& b) {
  check_compatible(a, b);
  FiniteCochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

FiniteCochain operator-(const FiniteCochain& a, const FiniteCochain& b) {
  check_compatible(a, b);
  FiniteCochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

FiniteCochain scaled(const FiniteCochain& a, const Rational& s) {
  FiniteCochain out = a;
  for (auto& v : out.values) v *= s;
  return out;
}

bool is_zero(const FiniteCochain& f) {
  for (const auto& v : f.values)
    if (v != 0) return false;
  return true;
}

FiniteCochain face_pullback(const Nerve& n, const FiniteCochain& f, int i) {
  const int k = f.arity + 1;
  FiniteCochain out = zero_cochain(n, k, f.width);
  const auto& lv = n.level(k);
  for (std::size_t t = 0; t < lv.size(); ++t) {
    const std::size_t src = n.index(f.arity, n.face(k, lv[t], i));
    for (std::size_t j = 0; j < f.width; ++j) out.at(t, j) = f.at(src, j);
  }
  return out;
}

FiniteCochain delta(const Nerve& n, const FiniteCochain& f) {
  const int k = f.arity;
  FiniteCochain out = zero_cochain(n, k + 1, f.width);
  const auto& lv = n.level(k + 1);
  for (std::size_t t = 0; t < lv.size(); ++t) {
    for (int i = 0; i <= k + 1; ++i) {
      const int sign = ((k + i) % 2 == 0) ? 1 : -1;
      const std::size_t src = n.index(k, n.face(k + 1, lv[t], i));
      for (std::size_t j = 0; j < f.width; ++j) {
        const Rational& v = f.at(src, j);
        if (sgn(v) == 0) continue;
        if (sign > 0)
          out.at(t, j) += v;
        else
          out.at(t, j) -= v;
      }
    }
  }
  return out;
}

FiniteCochain star(const Nerve& n, const FiniteCochain& eta, const FiniteCochain& f) {
  if (f.width != 1) throw std::invalid_argument("star: right factor must be scalar");
  const int p = eta.arity, k = f.arity, q = p + k;
  FiniteCochain out = zero_cochain(n, q, eta.width);
  const Rational sign((k * p) % 2 == 0 ? 1 : -1);
  const auto& lv = n.level(q);
  for (std::size_t t = 0; t < lv.size(); ++t) {
    const std::size_t a = n.index(p, n.sub(q, lv[t], 0, p));
    const std::size_t b = n.index(k, n.sub(q, lv[t], p, q));
    const Rational fb = sign * f.at(b);
    if (fb == 0) continue;
    for (std::size_t j = 0; j < eta.width; ++j)
      if (sgn(eta.at(a, j)) != 0) out.at(t, j) = eta.at(a, j) * fb;
  }
  return out;
}

std::optional<std::string> check_groupoid_morphism(const FiniteGroupoid& from, const FiniteGroupoid& to,
                                                   const GroupoidMorphism& f) {
  if (f.on_objects.size() != from.num_objects() || f.on_arrows.size() != from.num_arrows())
    return "morphism tables have the wrong size";
  for (int x : f.on_objects)
    if (x < 0 || x >= static_cast<int>(to.num_objects())) return "object image out of range";
  for (int a : f.on_arrows)
    if (a < 0 || a >= static_cast<int>(to.num_arrows())) return "arrow image out of range";
  for (int g = 0; g < static_cast<int>(from.num_arrows()); ++g) {
    const int fg = f.on_arrows[g];
    if (to.source(fg) != f.on_objects[from.source(g)] || to.target(fg) != f.on_objects[from.target(g)])
      return "arrow " + str(g) + " is not mapped compatibly with source/target";
  }
  for (int x = 0; x < static_cast<int>(from.num_objects()); ++x)
    if (f.on_arrows[from.unit(x)] != to.unit(f.on_objects[x])) return "unit of object " + str(x) + " not preserved";
  for (int g = 0; g < static_cast<int>(from.num_arrows()); ++g)
    for (int h = 0; h < static_cast<int>(from.num_arrows()); ++h) {
      if (!from.composable(g, h)) continue;
      if (f.on_arrows[from.compose(g, h)] != to.compose(f.on_arrows[g], f.on_arrows[h]))
        return "composition of " + str(g) + " and " + str(h) + " not preserved";
    }
  return std::nullopt;
}

GroupoidMorphism compose(const GroupoidMorphism& after, const GroupoidMorphism& before) {
  GroupoidMorphism out;
  for (int x : before.on_objects) out.on_objects.push_back(after.on_objects[x]);
  for (int a : before.on_arrows) out.on_arrows.push_back(after.on_arrows[a]);
  return out;
}

GroupoidMorphism identity_morphism(const FiniteGroupoid& g) {
  GroupoidMorphism out;
  for (std::size_t x = 0; x < g.num_objects(); ++x) out.on_objects.push_back(static_cast<int>(x));
  for (std::size_t a = 0; a < g.num_arrows(); ++a) out.on_arrows.push_back(static_cast<int>(a));
  return out;
}

Tuple apply(const GroupoidMorphism& f, int k, const Tuple& t) {
  Tuple out;
  out.reserve(t.size());
  for (int v : t) out.push_back(k == 0 ? f.on_objects[v] : f.on_arrows[v]);
  return out;
}

ActionNerve action_nerve_groupoid(const FiniteGroupoid& g, int k) {
  if (k < -1) throw std::invalid_argument("action_nerve_groupoid: k must be >= -1");
  ActionNerve out;
  out.k = k;
  if (k == -1) {
    out.groupoid = g;
    for (std::size_t x = 0; x < g.num_objects(); ++x) out.objects.push_back({static_cast<int>(x)});
    for (std::size_t a = 0; a < g.num_arrows(); ++a) out.arrows.push_back({static_cast<int>(a)});
    return out;
  }
  const Nerve n(g, k + 2);
  out.objects = n.level(k + 1);
  out.arrows = n.level(k + 2);
  const int m = static_cast<int>(out.arrows.size());
  std::vector<int> src(m), tgt(m), inv(m), units(out.objects.size());
  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a) {
    const Tuple& t = out.arrows[a];
    src[a] = static_cast<int>(n.index(k + 1, n.face(k + 2, t, 0)));
    tgt[a] = static_cast<int>(n.index(k + 1, n.face(k + 2, t, 1)));
  }
  for (std::size_t o = 0; o < out.objects.size(); ++o) {
    Tuple u = out.objects[o];
    u.insert(u.begin(), g.unit(g.target(u[0])));
    units[o] = static_cast<int>(n.index(k + 2, u));
  }
  for (int a = 0; a < m; ++a) {
    // (g, p) with p = source; inverse is (g^-1, g p)
    const Tuple& t = out.arrows[a];
    Tuple v(t.begin() + 1, t.end());
    v[0] = g.compose(t[0], v[0]);
    v.insert(v.begin(), g.inverse(t[0]));
    inv[a] = static_cast<int>(n.index(k + 2, v));
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (src[a] != tgt[b]) continue;
      Tuple v = out.arrows[b];
      v[0] = g.compose(out.arrows[a][0], v[0]);
      comp[a][b] = static_cast<int>(n.index(k + 2, v));
    }
  out.groupoid = FiniteGroupoid(out.objects.size(), src, tgt, comp, units, inv);
  return out;
}

GroupoidMorphism flat_map(const FiniteGroupoid& g, int k, int i) {
  if (k < 0 || i < 0 || i > k) throw std::out_of_range("flat_map: need 0 <= i <= k");
  const Nerve n(g, k + 2);
  GroupoidMorphism out;
  for (const auto& t : n.level(k + 1)) out.on_objects.push_back(static_cast<int>(n.index(k, n.face(k + 1, t, i + 1))));
  for (const auto& t : n.level(k + 2))
    out.on_arrows.push_back(static_cast<int>(n.index(k + 1, n.face(k + 2, t, i + 2))));
  if (k == 0) {
    // G^(-1) = G: level-1 simplices are arrows, level-0 simplices objects
    for (auto& a : out.on_arrows) a = n.level(1)[a][0];
    for (auto& x : out.on_objects) x = n.level(0)[x][0];
  }
  return out;
}

GroupoidMorphism nerve_projection(const FiniteGroupoid& g, int k) {
  if (k < 0) return identity_morphism(g);
  const Nerve n(g, k + 2);
  GroupoidMorphism out;
  for (const auto& t : n.level(k + 1)) out.on_objects.push_back(g.target(t[0]));
  for (const auto& t : n.level(k + 2)) out.on_arrows.push_back(t[0]);
  return out;
}

std::optional<std::string> check_elementary(const FiniteGroupoid& g, const ElementaryStructure& e) {
  const std::size_t n = g.num_objects();
  if (e.base_of.size() != n) return "base_of has the wrong size";
  for (std::size_t b = 0; b < e.section.size(); ++b) {
    const int x = e.section[b];
    if (x < 0 || x >= static_cast<int>(n) || e.base_of[x] != static_cast<int>(b))
      return "section is not a section over base point " + str(static_cast<int>(b));
  }
  for (int b : e.base_of)
    if (b < 0 || b >= static_cast<int>(e.section.size())) return "base point out of range";
  std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < g.num_arrows(); ++a) count[g.target(static_cast<int>(a))][g.source(static_cast<int>(a))]++;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int want = e.base_of[x] == e.base_of[y] ? 1 : 0;
      if (count[x][y] != want)
        return "objects " + str(static_cast<int>(y)) + " -> " + str(static_cast<int>(x)) + " have " +
               str(count[x][y]) + " arrows, expected " + str(want);
    }
  return std::nullopt;
}

ElementaryStructure elementary_structure(const FiniteGroupoid& g, const ActionNerve& an) {
  if (an.k < 0) throw std::invalid_argument("elementary_structure: G itself carries no canonical fibration");
  const int k = an.k;
  const Nerve n(g, k + 1);
  ElementaryStructure e;
  std::unordered_map<Tuple, std::size_t, TupleHash> obj_index;
  for (std::size_t o = 0; o < an.objects.size(); ++o) obj_index.emplace(an.objects[o], o);
  for (const auto& t : an.objects) e.base_of.push_back(static_cast<int>(n.index(k, n.face(k + 1, t, 0))));
  for (const auto& b : n.level(k)) {
    Tuple u = k == 0 ? Tuple{} : b;
    u.insert(u.begin(), g.unit(k == 0 ? b[0] : g.target(b[0])));
    e.section.push_back(static_cast<int>(obj_index.at(u)));
  }
  return e;
}

std::vector<int> elementary_nu(const FiniteGroupoid& g, const ElementaryStructure& e) {
  if (auto err = check_elementary(g, e)) throw std::invalid_argument("not elementary: " + *err);
  std::vector<int> nu(g.num_objects(), -1);
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const int s = g.source(static_cast<int>(a)), t = g.target(static_cast<int>(a));
    if (t == e.section[e.base_of[s]]) nu[s] = static_cast<int>(a);
  }
  return nu;
}

}  // namespace hrep
