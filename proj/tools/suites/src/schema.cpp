#include "hrep/suites/schema.hpp"

#include <fstream>
#include <sstream>

#include "hrep/models.hpp"
#include "hrep/suites/fixtures.hpp"

namespace hrep::suites {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

long integer(const Json& j, const std::string& path, long lo, long hi) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const long v = j.get<long>();
  if (v < lo || v > hi) fail(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
  return v;
}

const Json& array(const Json& j, const std::string& path, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) fail(path, "expected an array");
  if (size && j.size() != *size)
    fail(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return parse_rational(text(j, path));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Polynomial polynomial(const Json& j, const std::string& path, const std::vector<std::string>& names) {
  if (j.is_number_integer()) return Polynomial(Rational(j.get<long>()));
  try {
    return parse_polynomial(text(j, path), names);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& path, std::size_t d) {
  array(j, path, d);
  RationalMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    array(j[r], sub(path, r), d);
    for (std::size_t c = 0; c < d; ++c) m(r, c) = rational(j[r][c], sub(sub(path, r), c));
  }
  return m;
}

std::size_t size_suffix(const std::string& kind, const std::string& prefix, std::size_t hi) {
  const std::string digits = kind.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 2)
    throw InputError("example kind \"" + kind + "\": expected " + prefix + "<n>");
  const std::size_t n = std::stoul(digits);
  if (n < 1 || n > hi)
    throw InputError("example kind \"" + kind + "\": n must lie in [1, " + std::to_string(hi) + "]");
  return n;
}

}  // namespace

Json parse_json_text(std::string_view input, const std::string& source) {
  try {
    return Json::parse(input);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, input.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (input[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

AlgebroidModel algebra_from_json(const Json& j) {
  const std::string base = text(field(j, "base", ""), "/base");
  if (base != "point" && base != "coord") fail("/base", "expected \"point\" or \"coord\"");
  const auto r = static_cast<std::size_t>(integer(field(j, "rank", ""), "/rank", 1, 12));
  const auto n = static_cast<std::size_t>(
      j.contains("chart_dim") ? integer(j["chart_dim"], "/chart_dim", 0, 6) : 0);
  if (base == "point" && n != 0) fail("/chart_dim", "a point base has chart_dim 0");
  if (base == "coord" && n == 0) fail("/chart_dim", "a coordinate base needs chart_dim >= 1");
  const std::vector<std::string> names = default_variable_names(n);

  std::vector<std::vector<Polynomial>> anchor(r, std::vector<Polynomial>(n));
  if (j.contains("anchor")) {
    const Json& aj = array(j["anchor"], "/anchor", r);
    for (std::size_t a = 0; a < r; ++a) {
      array(aj[a], sub("/anchor", a), n);
      for (std::size_t i = 0; i < n; ++i) anchor[a][i] = polynomial(aj[a][i], sub(sub("/anchor", a), i), names);
    }
  }
  std::vector<std::vector<std::vector<Polynomial>>> c(
      r, std::vector<std::vector<Polynomial>>(r, std::vector<Polynomial>(r)));
  if (j.contains("brackets")) {
    const Json& bj = j["brackets"];
    if (!bj.is_object()) fail("/brackets", "expected an object");
    for (const auto& [key, inner] : bj.items()) {
      const std::string path = sub("/brackets", key);
      std::size_t a = 0, b = 0;
      char comma = 0;
      std::istringstream ks(key);
      if (!(ks >> a >> comma >> b) || comma != ',' || !ks.eof() || a >= r || b >= r || a >= b)
        fail(path, "expected a key \"i,j\" with i < j < rank");
      if (!inner.is_object()) fail(path, "expected an object");
      for (const auto& [kk, value] : inner.items()) {
        const std::string vpath = sub(path, kk);
        if (kk.empty() || kk.find_first_not_of("0123456789") != std::string::npos || std::stoul(kk) >= r)
          fail(vpath, "expected a frame index below the rank");
        const std::size_t k = std::stoul(kk);
        const Polynomial p = polynomial(value, vpath, names);
        c[a][b][k] = p;
        c[b][a][k] = -p;
      }
    }
  }
  AlgebroidModel model = [&] {
    if (base == "coord") return AlgebroidModel::coord(n, r, anchor, c);
    std::vector<std::vector<std::vector<Rational>>> q(r, std::vector<std::vector<Rational>>(r, std::vector<Rational>(r)));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t k = 0; k < r; ++k) {
          if (!c[a][b][k].is_constant()) fail("/brackets", "brackets over a point must be constants");
          q[a][b][k] = c[a][b][k].constant_term();
        }
    return AlgebroidModel::point(r, std::move(q));
  }();
  const AlgebroidCheck check = check_algebroid(model);
  if (!check.ok) fail("", "not a Lie algebroid: " + check.failure);
  return model;
}

Json algebra_to_json(const AlgebroidModel& a) {
  const std::vector<std::string> names = default_variable_names(a.chart_dim());
  Json anchor = Json::array();
  for (std::size_t e = 0; e < a.rank(); ++e) {
    Json row = Json::array();
    for (std::size_t i = 0; i < a.chart_dim(); ++i) row.push_back(a.anchor(e, i).to_string(names));
    anchor.push_back(row);
  }
  Json brackets = Json::object();
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j) {
      Json inner = Json::object();
      for (std::size_t k = 0; k < a.rank(); ++k)
        if (!a.structure(i, j, k).is_zero()) inner[std::to_string(k)] = a.structure(i, j, k).to_string(names);
      if (!inner.empty()) brackets[std::to_string(i) + "," + std::to_string(j)] = inner;
    }
  return Json{{"base", a.is_point() ? "point" : "coord"},
              {"rank", a.rank()},
              {"chart_dim", a.chart_dim()},
              {"anchor", anchor},
              {"brackets", brackets}};
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  const auto objects = static_cast<std::size_t>(integer(field(j, "objects", ""), "/objects", 1, 64));
  const Json& arrows = array(field(j, "arrows", ""), "/arrows");
  if (arrows.empty() || arrows.size() > 4096) fail("/arrows", "between 1 and 4096 arrows expected");
  const std::size_t m = arrows.size();
  const long last_object = static_cast<long>(objects) - 1, last_arrow = static_cast<long>(m) - 1;
  std::vector<int> source, target;
  for (std::size_t g = 0; g < m; ++g) {
    const std::string path = sub("/arrows", g);
    source.push_back(static_cast<int>(integer(field(arrows[g], "src", path), sub(path, "src"), 0, last_object)));
    target.push_back(static_cast<int>(integer(field(arrows[g], "tgt", path), sub(path, "tgt"), 0, last_object)));
  }
  const Json& comp = array(field(j, "comp", ""), "/comp", m);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t g = 0; g < m; ++g) {
    array(comp[g], sub("/comp", g), m);
    for (std::size_t h = 0; h < m; ++h)
      table[g][h] = static_cast<int>(integer(comp[g][h], sub(sub("/comp", g), h), -1, last_arrow));
  }
  const auto ints = [&](const char* key, std::size_t size) {
    const std::string path = std::string("/") + key;
    const Json& arr = array(field(j, key, ""), path, size);
    std::vector<int> out;
    for (std::size_t i = 0; i < size; ++i) out.push_back(static_cast<int>(integer(arr[i], sub(path, i), 0, last_arrow)));
    return out;
  };
  const std::vector<int> units = ints("units", objects), inverses = ints("inverses", m);
  if (auto bad = check_groupoid_axioms(objects, source, target, table, units, inverses)) fail("", *bad);
  return FiniteGroupoid(objects, source, target, table, units, inverses);
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  Json arrows = Json::array(), units = Json::array(), inverses = Json::array();
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    arrows.push_back({{"src", g.source(static_cast<int>(a))}, {"tgt", g.target(static_cast<int>(a))}});
    inverses.push_back(g.inverse(static_cast<int>(a)));
  }
  for (std::size_t x = 0; x < g.num_objects(); ++x) units.push_back(g.unit(static_cast<int>(x)));
  return Json{{"objects", g.num_objects()},
              {"arrows", arrows},
              {"comp", g.composition_table()},
              {"units", units},
              {"inverses", inverses}};
}

RepG rep_from_json(const Json& j, const Nerve& n) {
  RepG r;
  const Json& degrees = array(field(j, "degrees", ""), "/degrees");
  if (degrees.empty() || degrees.size() > 16) fail("/degrees", "between 1 and 16 fiber degrees expected");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    r.degrees.push_back(static_cast<int>(integer(degrees[i], sub("/degrees", i), -8, 8)));
    if (i > 0 && r.degrees[i] < r.degrees[i - 1]) fail("/degrees", "degrees must be non-decreasing");
  }
  if (j.contains("unital")) {
    if (!j["unital"].is_boolean()) fail("/unital", "expected true or false");
    r.unital = j["unital"].get<bool>();
  }
  const Json& f = field(j, "F", "");
  if (!f.is_object()) fail("/F", "expected an object keyed by arity");
  const std::size_t d = r.dim();
  for (const auto& [key, entries] : f.items()) {
    const std::string path = sub("/F", key);
    if (key.empty() || key.size() > 2 || key.find_first_not_of("0123456789") != std::string::npos)
      fail(path, "expected an arity");
    const int k = std::stoi(key);
    if (k > n.max_arity())
      fail(path, "arity " + key + " exceeds the nerve bound " + std::to_string(n.max_arity()));
    auto& table = r.F[k];
    table.assign(n.size(k), RationalMatrix(d, d));
    array(entries, path);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string epath = sub(path, e);
      const Json& simplex = array(field(entries[e], "simplex", epath), sub(epath, "simplex"));
      Tuple t;
      for (std::size_t i = 0; i < simplex.size(); ++i)
        t.push_back(static_cast<int>(integer(simplex[i], sub(sub(epath, "simplex"), i), 0, 1 << 20)));
      std::size_t idx = 0;
      try {
        idx = n.index(k, t);
      } catch (const std::out_of_range&) {
        fail(sub(epath, "simplex"), "not a simplex of arity " + key);
      }
      table[idx] = matrix_from_json(field(entries[e], "matrix", epath), sub(epath, "matrix"), d);
      for (std::size_t row = 0; row < d; ++row)
        for (std::size_t col = 0; col < d; ++col)
          if (table[idx](row, col) != 0 && r.degrees[row] - r.degrees[col] != 1 - k)
            fail(sub(sub(sub(epath, "matrix"), row), col), "F_" + key + " has degree " + std::to_string(1 - k) +
                                                                 "; this entry would have degree " +
                                                                 std::to_string(r.degrees[row] - r.degrees[col]));
    }
  }
  return r;
}

Json rep_to_json(const RepG& r, const Nerve& n) {
  Json f = Json::object();
  for (const auto& [k, table] : r.F) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < table.size(); ++i)
      if (!table[i].is_zero()) entries.push_back({{"simplex", n.level(k)[i]}, {"matrix", matrix_to_json(table[i])}});
    f[std::to_string(k)] = entries;
  }
  return Json{{"degrees", r.degrees}, {"unital", r.unital}, {"F", f}};
}

SmoothGroupoid smooth_model_from_json(const Json& j) {
  const std::string kind = text(field(j, "kind", ""), "/kind");
  if (kind == "pair_chart")
    return SmoothGroupoid::pair_chart(static_cast<std::size_t>(integer(field(j, "chart_dim", ""), "/chart_dim", 1, 4)));
  if (kind != "matrix_group") fail("/kind", "expected \"pair_chart\" or \"matrix_group\"");
  const auto size = integer(field(j, "size", ""), "/size", 2, 5);
  const Json& free = array(field(j, "free", ""), "/free");
  std::vector<std::pair<int, int>> positions;
  for (std::size_t i = 0; i < free.size(); ++i) {
    const std::string path = sub("/free", i);
    array(free[i], path, 2);
    positions.emplace_back(static_cast<int>(integer(free[i][0], sub(path, 0), 0, size - 1)),
                           static_cast<int>(integer(free[i][1], sub(path, 1), 0, size - 1)));
  }
  try {
    return SmoothGroupoid::matrix_group(static_cast<std::size_t>(size), positions);
  } catch (const std::invalid_argument& e) {
    fail("/free", e.what());
  }
}

Json smooth_model_to_json(const SmoothGroupoid& g) {
  if (!g.is_matrix_group()) return Json{{"kind", "pair_chart"}, {"chart_dim", g.base_dim()}};
  Json free = Json::array();
  for (const auto& [r, c] : g.positions()) free.push_back({r, c});
  return Json{{"kind", "matrix_group"}, {"size", g.matrix_size()}, {"free", free}};
}

EhresmannConn connection_from_json(const Json& j, const SmoothGroupoid& g) {
  const bool given = j.is_object() && j.contains("lambda") && !j["lambda"].is_null();
  if (g.is_matrix_group()) {
    if (given) fail("/lambda", "a matrix group takes no splitting");
    return trivial_connection(g);
  }
  if (!given) fail("/lambda", "missing splitting");
  const std::size_t n = g.base_dim();
  const std::vector<std::string> names = default_variable_names(2 * n);
  const Json& lj = array(j["lambda"], "/lambda", n);
  PolyMatrix lambda(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    array(lj[r], sub("/lambda", r), n);
    for (std::size_t c = 0; c < n; ++c) lambda(r, c) = polynomial(lj[r][c], sub(sub("/lambda", r), c), names);
  }
  if (!(pullback(lambda, g.degeneracy(0, 0)) == PolyMatrix::identity(n)))
    fail("/lambda", "the splitting must be the identity on the diagonal");
  return EhresmannConn{lambda};
}

Json connection_to_json(const EhresmannConn& c, const SmoothGroupoid& g) {
  if (g.is_matrix_group()) return Json{{"lambda", nullptr}};
  const std::vector<std::string> names = default_variable_names(2 * g.base_dim());
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.lambda.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t k = 0; k < c.lambda.cols(); ++k) row.push_back(c.lambda(r, k).to_string(names));
    rows.push_back(row);
  }
  return Json{{"lambda", rows}};
}

std::vector<std::pair<std::string, Json>> generate_example(const std::string& kind, std::uint64_t seed) {
  const auto starts = [&](const std::string& p) { return kind.rfind(p, 0) == 0; };
  if (kind == "sl2") return {{"sl2.json", algebra_to_json(models::sl2())}};
  if (kind == "heisenberg") return {{"heisenberg.json", algebra_to_json(models::heisenberg())}};
  if (kind == "matrix-heisenberg") return {{"matrix_heisenberg.json", smooth_model_to_json(SmoothGroupoid::heisenberg())}};
  if (kind == "lambda-quadratic")
    return {{"lambda_quadratic.json", connection_to_json(quadratic_conn(), SmoothGroupoid::pair_chart(1))}};
  if (starts("abelian-")) {
    const std::size_t n = size_suffix(kind, "abelian-", 12);
    return {{"abelian_" + std::to_string(n) + ".json", algebra_to_json(models::abelian(n))}};
  }
  if (starts("pair-finite-")) {
    const std::size_t n = size_suffix(kind, "pair-finite-", 8);
    return {{"pair" + std::to_string(n) + ".json", groupoid_to_json(FiniteGroupoid::pair(n))}};
  }
  if (starts("pair-chart-")) {
    const std::size_t n = size_suffix(kind, "pair-chart-", 4);
    const auto g = SmoothGroupoid::pair_chart(n);
    return {{"pair_r" + std::to_string(n) + ".json", smooth_model_to_json(g)},
            {"lambda_flat_r" + std::to_string(n) + ".json", connection_to_json(trivial_connection(g), g)}};
  }
  if (starts("gauge-demo-")) {
    const std::size_t n = size_suffix(kind, "gauge-demo-", 6);
    const Nerve nerve(FiniteGroupoid::pair(n), 4);
    Sampler s(seed);
    const RepG base = pair_rep(s, nerve);
    const RepG rep = gauge_transform(nerve, base, random_gauge(s, nerve), 4);
    return {{"pair" + std::to_string(n) + ".json", groupoid_to_json(FiniteGroupoid::pair(n))},
            {"gauge_demo" + std::to_string(n) + ".json", rep_to_json(rep, nerve)}};
  }
  throw InputError("unknown example kind \"" + kind +
                   "\" (sl2, abelian-<n>, heisenberg, pair-finite-<n>, pair-chart-<n>, matrix-heisenberg, "
                   "lambda-quadratic, gauge-demo-<n>)");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hrep::suites
