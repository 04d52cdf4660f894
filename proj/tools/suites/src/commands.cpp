#include "hrep/suites/commands.hpp"

#include <algorithm>

#include "hrep/rep_algebroid.hpp"
#include "hrep/van_est.hpp"
#include "hrep/suites/fixtures.hpp"

namespace hrep::suites {

namespace {

constexpr std::size_t kMaxSimplices = 200000;

std::size_t top_level_size(const FiniteGroupoid& g, int arity) {
  std::vector<std::size_t> count(g.num_objects(), 1);  // chains ending at each vertex
  std::size_t total = g.num_objects();
  for (int k = 1; k <= arity; ++k) {
    std::vector<std::size_t> next(g.num_objects(), 0);
    for (std::size_t a = 0; a < g.num_arrows(); ++a) {
      const int arrow = static_cast<int>(a);
      next[static_cast<std::size_t>(g.source(arrow))] += count[static_cast<std::size_t>(g.target(arrow))];
    }
    count = std::move(next);
    total = 0;
    for (std::size_t c : count) total += c;
    if (total > kMaxSimplices) break;
  }
  return total;
}

}  // namespace

SuiteResult cohomology_command(const AlgebroidModel& a, Coefficients coeff, int max_degree) {
  if (!a.is_point()) throw InputError("cohomology needs a Lie algebra (base \"point\")");
  SuiteResult r;
  r.key = "cohomology";
  r.title = coeff == Coefficients::kAdjoint ? "deformation cohomology (adjoint coefficients)"
                                            : "Chevalley-Eilenberg cohomology (trivial coefficients)";
  r.checks.push_back(guarded("d^2 = 0", [&](Tally& t) {
    RepA e;
    if (coeff == Coefficients::kAdjoint) {
      e = build_adjoint(a, TMConnection::flat(a));
    } else {
      e.degrees = {0};
      e.del = PolyMatrix(1, 1);
      e.conn.assign(a.rank(), PolyMatrix(1, 1));
    }
    const CochainComplex c = point_complex(a, e);
    const SquareZeroReport sq = check_square_zero(c);
    t.expect(sq.ok(), "d^2 is not zero");
    const CohomologyReport h = cohomology(c, 0, max_degree);
    r.data["rank"] = a.rank();
    r.data["cohomology"] = cohomology_table(h);
    Json dims = Json::array();
    for (int d = 0; d <= max_degree; ++d) dims.push_back(h.dim(d));
    r.data["dims"] = dims;
  }));
  return r;
}

SuiteResult van_est_verify_command(const SmoothGroupoid& g, const EhresmannConn& sigma, int points,
                                   std::uint64_t seed) {
  SuiteResult r;
  r.key = "van-est-verify";
  r.title = "Psi(Ad_sigma) is a representation equal to ad_nabla";
  Sampler s(seed);
  const auto pts = s.points(g.base_dim(), points);
  r.checks.push_back(guarded("Ad_sigma satisfies the structure equations", [&](Tally& t) {
    const SmoothCheck c = check_rep_G(g, build_Ad_sigma(g, sigma), 4);
    t.expect(c.ok(), c.ok() ? "" : c.failures.front());
  }));
  r.checks.push_back(guarded("Psi(Ad_sigma) satisfies D^2 = 0", [&](Tally& t) {
    const RepCheck c = check_rep(g.algebroid(), differentiate_rep(g, build_Ad_sigma(g, sigma)), pts);
    t.expect(c.ok(), c.ok() ? "" : "D^2 fails in arity " + std::to_string(c.failures.front().equation));
  }));
  const AdEqualsAdReport rep = [&] {
    try {
      return check_Ad_equals_ad(g, sigma, pts);
    } catch (const std::exception& e) {
      r.checks.push_back(Check{"Psi(Ad_sigma) = ad_nabla", false, 0, std::string("exception: ") + e.what()});
      return AdEqualsAdReport{};
    }
  }();
  for (const auto& c : rep.components) {
    Tally t(c.name);
    t.expect(c.symbolic_ok, "symbolic: " + c.witness);
    t.expect(c.samples_ok, "at sample points: " + c.witness);
    r.checks.push_back(std::move(t).done());
  }
  r.data["points"] = pts.size();
  return r;
}

SuiteResult check_groupoid_rep_command(const FiniteGroupoid& g, const Json& rep_json, int bound) {
  int arity = bound;
  if (rep_json.is_object() && rep_json.contains("F") && rep_json["F"].is_object())
    for (const auto& [key, value] : rep_json["F"].items())
      if (!key.empty() && key.size() <= 2 && key.find_first_not_of("0123456789") == std::string::npos)
        arity = std::max(arity, std::stoi(key));
  if (top_level_size(g, arity) > kMaxSimplices)
    throw InputError("the nerve through arity " + std::to_string(arity) + " exceeds " +
                     std::to_string(kMaxSimplices) + " simplices");
  const Nerve n(g, arity);
  const RepG rep = rep_from_json(rep_json, n);
  SuiteResult r;
  r.key = "check-groupoid-rep";
  r.title = "structure equations of a representation up to homotopy";
  r.checks.push_back(guarded("structure equations through arity " + std::to_string(bound), [&](Tally& t) {
    const RepGCheck c = check_rep_G(n, rep, bound);
    t.expect(c.ok(), c.ok() ? "" : "equation " + std::to_string(c.failures.front().equation) + ": " +
                                       c.failures.front().detail);
    Json curvature = Json::array();
    for (const auto& [k, table] : rep.F)
      if (k >= 2 && std::any_of(table.begin(), table.end(), [](const RationalMatrix& m) { return !m.is_zero(); }))
        curvature.push_back(k);
    r.data["nonzero_higher_arities"] = curvature;
  }));
  const int lo = *std::min_element(rep.degrees.begin(), rep.degrees.end());
  const int hi = bound - 1 + lo;
  if (r.checks.front().pass) {
    r.checks.push_back(guarded("total complex", [&](Tally& t) {
      const CochainComplex c = build_D_G(n, rep, lo - 1, hi);
      t.expect(check_square_zero(c).ok(), "D^2 is not zero on the normalized total complex");
      r.data["cohomology"] = cohomology_table(cohomology(c, lo, hi));
    }));
  }
  return r;
}

}  // namespace hrep::suites
