#include "hrep/suites/acceptance.hpp"

#include <chrono>

#include "hrep/models.hpp"
#include "hrep/suites/ce_oracle.hpp"
#include "hrep/suites/fixtures.hpp"
#include "hrep/suites/lemmas.hpp"

namespace hrep::suites {

namespace {

std::string rep_failure(const RepCheck& c) {
  if (c.ok()) return "";
  return "D^2 fails in arity " + std::to_string(c.failures.front().equation);
}

std::string rep_failure(const RepGCheck& c) {
  if (c.ok()) return "";
  return "equation " + std::to_string(c.failures.front().equation) + ": " + c.failures.front().detail;
}

// 1 -------------------------------------------------------------------------

SuiteResult rigidity(std::uint64_t) {
  SuiteResult r;
  struct Case {
    std::string name;
    AlgebroidModel model;
    oracle::LieData lie;
  };
  const std::vector<Case> cases = {{"sl2", models::sl2(), oracle::sl2()},
                                   {"so3", models::so3(), oracle::so3()},
                                   {"abelian-2", models::abelian(2), oracle::make_lie(2)}};
  for (const auto& c : cases) {
    r.checks.push_back(guarded(c.name + " vanishing and dense oracle", [&](Tally& t) {
      for (std::size_t i = 0; i < c.lie.dim; ++i)
        for (std::size_t j = 0; j < c.lie.dim; ++j)
          for (std::size_t k = 0; k < c.lie.dim; ++k)
            t.expect(Polynomial(c.lie.bracket[i][j][k]) == c.model.structure(i, j, k), "oracle brackets differ");
      const CohomologyReport rep = deformation_cohomology(c.model, 0, 3);
      const auto dense = oracle::dense_cohomology_dims(c.lie, oracle::adjoint_rep(c.lie), 3);
      for (int d = 0; d <= 3; ++d)
        t.expect(rep.dim(d) == dense[static_cast<std::size_t>(d)],
                 "H^" + std::to_string(d) + " = " + std::to_string(rep.dim(d)) + ", dense oracle " +
                     std::to_string(dense[static_cast<std::size_t>(d)]));
      if (c.name == "abelian-2") {
        t.expect(rep.dim(2) == 2, "H^2 = " + std::to_string(rep.dim(2)) + ", expected 2");
      } else {
        for (int d = 0; d <= 2; ++d) t.expect(rep.dim(d) == 0, "H^" + std::to_string(d) + " is not zero");
      }
      r.data[c.name] = cohomology_table(rep);
    }));
  }
  return r;
}

// 2 -------------------------------------------------------------------------

SuiteResult algebroid_closure(std::uint64_t seed) {
  SuiteResult r;
  Sampler s(seed);
  const auto line = AlgebroidModel::tangent(1), plane = AlgebroidModel::tangent(2);
  TMConnection linear = TMConnection::flat(line);
  linear.gamma[0](0, 0) = Polynomial::variable(0);
  struct Case {
    std::string name;
    AlgebroidModel a;
    TMConnection conn;
  };
  const std::vector<Case> cases = {
      {"sl2", models::sl2(), TMConnection::flat(models::sl2())},
      {"heisenberg", models::heisenberg(), TMConnection::flat(models::heisenberg())},
      {"TR1 Gamma=0", line, TMConnection::flat(line)},
      {"TR1 Gamma=x", line, linear},
      {"TR2 random degree 2", plane, random_connection(s, plane, 2)},
  };
  for (const auto& c : cases) {
    r.checks.push_back(guarded(c.name, [&](Tally& t) {
      const RepA e = build_adjoint(c.a, c.conn);
      const RepCheck rc = check_rep(c.a, e, s.points(c.a.chart_dim(), 5));
      t.expect(rc.ok(), rep_failure(rc));
      // D^2 = 0 on random forms of every arity, applied as an operator
      for (int k = 0; k <= static_cast<int>(c.a.rank()); ++k) {
        const AForm eta = random_form(s, c.a, k, e.dim(), 1);
        MixedForm dd;
        for (const auto& [arity, f] : apply_D(c.a, e, eta)) accumulate(dd, apply_D(c.a, e, f));
        t.expect(is_zero(dd), "D^2 of a random " + std::to_string(k) + "-form is not zero");
      }
    }));
  }
  return r;
}

// 3 -------------------------------------------------------------------------

FiniteCochain basis_cochain(const Nerve& n, int arity, std::size_t idx) {
  FiniteCochain f = zero_cochain(n, arity);
  f.at(idx) = 1;
  return f;
}

SuiteResult cochain_dga(std::uint64_t seed) {
  SuiteResult r;
  const Nerve n(FiniteGroupoid::pair(4), 4);
  r.checks.push_back(guarded("pair groupoid of 4 points: delta^2 = 0 on every basis cochain", [&](Tally& t) {
    for (int k = 0; k + 2 <= 4; ++k)
      for (std::size_t i = 0; i < n.size(k); ++i)
        t.expect(is_zero(delta(n, delta(n, basis_cochain(n, k, i)))), "arity " + std::to_string(k));
  }));
  r.checks.push_back(guarded("pair groupoid of 4 points: Leibniz on every pair of basis cochains", [&](Tally& t) {
    for (int p = 0; p <= 3; ++p) {
      // every basis cochain of arity p at once, as the components of one cochain
      FiniteCochain eta = zero_cochain(n, p, n.size(p));
      for (std::size_t i = 0; i < n.size(p); ++i) eta.at(i, i) = 1;
      const FiniteCochain d_eta = delta(n, eta);
      for (int k = 0; p + k + 1 <= 4; ++k)
        for (std::size_t j = 0; j < n.size(k); ++j) {
          const FiniteCochain f = basis_cochain(n, k, j);
          const FiniteCochain second = star(n, eta, delta(n, f));
          const FiniteCochain rhs = p % 2 == 0 ? star(n, d_eta, f) + second : star(n, d_eta, f) - second;
          t.expect(delta(n, star(n, eta, f)) == rhs, "p=" + std::to_string(p) + " k=" + std::to_string(k));
        }
    }
  }));
  Sampler s(seed);
  const auto g = SmoothGroupoid::heisenberg();
  r.checks.push_back(guarded("Heisenberg group: delta^2 = 0, degree 3 cochains", [&](Tally& t) {
    for (int k = 0; k <= 2; ++k) {
      const SmoothCochain f = random_cochain(s, g, k, 2, 3);
      const SmoothCochain dd = delta(g, delta(g, f));
      t.expect(is_zero(dd), "symbolic, arity " + std::to_string(k));
      for (int sample = 0; sample < 20; ++sample) {
        const auto pt = s.point(g.vars(k + 2));
        bool zero = true;
        for (const auto& v : evaluate(dd, pt)) zero = zero && v == 0;
        t.expect(zero, "sampled, arity " + std::to_string(k));
      }
    }
  }));
  r.checks.push_back(guarded("Heisenberg group: Leibniz, 20 sampled tuples", [&](Tally& t) {
    for (int p = 0; p <= 2; ++p)
      for (int k = 0; p + k <= 3; ++k) {
        const SmoothCochain eta = random_cochain(s, g, p, 2, 3), f = random_cochain(s, g, k, 1, 3);
        const SmoothCochain lhs = delta(g, star(g, eta, f));
        const SmoothCochain second = star(g, eta, delta(g, f));
        const SmoothCochain rhs = p % 2 == 0 ? star(g, delta(g, eta), f) + second : star(g, delta(g, eta), f) - second;
        const std::string at = "p=" + std::to_string(p) + " k=" + std::to_string(k);
        t.expect(lhs == rhs, "symbolic, " + at);
        for (int sample = 0; sample < 20; ++sample) {
          const auto pt = s.point(g.vars(p + k + 1));
          t.expect(evaluate(lhs, pt) == evaluate(rhs, pt), "sampled, " + at);
        }
      }
  }));
  return r;
}

// 4, 5 ------------------------------------------------------------------------

struct GaugeDemo {
  Nerve nerve;
  RepG base;
  MorphismG phi;
  RepG rep;
};

GaugeDemo gauge_demo(std::uint64_t seed, int max_arity) {
  Sampler s(seed);
  Nerve n(FiniteGroupoid::pair(4), max_arity);
  RepG base = pair_rep(s, n);
  MorphismG phi = random_gauge(s, n);
  RepG rep = gauge_transform(n, base, phi, std::min(max_arity, 5));
  return {std::move(n), std::move(base), std::move(phi), std::move(rep)};
}

bool has_curvature(const RepG& r) {
  auto it = r.F.find(2);
  if (it == r.F.end()) return false;
  for (const auto& m : it->second)
    if (!m.is_zero()) return true;
  return false;
}

SuiteResult structure_equations(std::uint64_t seed) {
  SuiteResult r;
  const GaugeDemo demo = gauge_demo(seed, 6);
  r.checks.push_back(guarded("gauge transform has F_2 != 0", [&](Tally& t) {
    t.expect(has_curvature(demo.rep), "F_2 vanishes");
    t.expect(check_morphism_G(demo.nerve, demo.phi, demo.base, demo.rep, 5).ok(), "phi is not a morphism");
  }));
  r.checks.push_back(guarded("structure equations through k = 5", [&](Tally& t) {
    const RepGCheck c = check_rep_G(demo.nerve, demo.rep, 5);
    t.expect(c.ok(), rep_failure(c));
  }));
  r.checks.push_back(guarded("D^2 = 0 on normalized cochains of total degree <= 4", [&](Tally& t) {
    const CochainComplex c = build_D_G(demo.nerve, demo.rep, -1, 5);
    const SquareZeroReport sq = check_square_zero(c, std::make_pair(-1, 4));
    t.expect(sq.ok(), sq.ok() ? "" : "degree " + std::to_string(sq.failures.front().degree));
    std::size_t basis = 0;
    for (int d = 0; d <= 4; ++d) basis += c.dim(d);
    t.note(std::to_string(basis) + " basis cochains");
  }));
  return r;
}

SuiteResult elementary(std::uint64_t seed) {
  SuiteResult r;
  const GaugeDemo demo = gauge_demo(seed, 5);
  const auto& g = demo.nerve.groupoid();
  // the pair groupoid is M x_N M over a point
  const ElementaryStructure e{std::vector<int>(g.num_objects(), 0), {0}};
  r.checks.push_back(guarded("pair groupoid is elementary over a point", [&](Tally& t) {
    const auto bad = check_elementary(g, e);
    t.expect(!bad, bad.value_or(""));
  }));
  ElementaryQuasiIso q;
  r.checks.push_back(guarded("target is a representation", [&](Tally& t) {
    q = elementary_quasi_iso(demo.nerve, e, demo.rep, 4);
    const RepGCheck c = check_rep_G(demo.nerve, q.target, 4);
    t.expect(c.ok(), rep_failure(c));
  }));
  r.checks.push_back(guarded("equations for a map through k = 4", [&](Tally& t) {
    const MorphismGCheck c = check_morphism_G(demo.nerve, q.phi, demo.rep, q.target, 4);
    t.expect(c.ok(), c.failures.empty() ? "not a chain map" : c.failures.front().detail);
  }));
  r.checks.push_back(guarded("phi_0 is a pointwise quasi-isomorphism", [&](Tally& t) {
    t.expect(quasi_iso_G(demo.nerve, q.phi, demo.rep, q.target), "phi_0 is not a quasi-isomorphism");
  }));
  return r;
}

// 6 -------------------------------------------------------------------------

SuiteResult contracting_homotopy(std::uint64_t) {
  SuiteResult r;
  for (std::size_t points : {3u, 4u}) {
    const Nerve n(FiniteGroupoid::pair(points), 5);
    r.checks.push_back(guarded("pair groupoid of " + std::to_string(points) + " points", [&](Tally& t) {
      std::size_t checked = 0;
      for (int m = 0; m <= 2; ++m)
        for (int k = 0; k <= 2; ++k) {
          const HomotopyCheck h = flat_star_homotopy(n, 1, m, k);
          checked += h.checked;
          t.expect(h.ok && h.checked > 0, "m=" + std::to_string(m) + " k=" + std::to_string(k) + " " + h.witness);
        }
      t.note("b*s* + s*b* = id on " + std::to_string(checked) + " basis cochains; rows exact");
    }));
  }
  return r;
}

// 7 -------------------------------------------------------------------------

SuiteResult van_est_chain_map(std::uint64_t seed) {
  SuiteResult r;
  Sampler s(seed);
  for (const auto& [name, g] : {std::pair{std::string("abelian plane"), SmoothGroupoid::abelian_plane()},
                                std::pair{std::string("unipotent 3x3"), SmoothGroupoid::heisenberg()}}) {
    r.checks.push_back(guarded(name, [&](Tally& t) {
      std::vector<SmoothCochain> fs;
      for (int k = 0; k <= 2; ++k) {
        fs.push_back(random_cochain(s, g, k, 1, 3));
        fs.push_back(random_normalized(s, g, k, 1, 3, 6));
      }
      const ChainMapReport rep = check_chain_map(g, fs, 10, static_cast<unsigned>(s.uniform(0, 1 << 30)));
      int samples = 0;
      for (const auto& e : rep.entries) {
        samples += e.samples;
        t.expect(e.symbolic_ok, "arity " + std::to_string(e.arity) + " symbolic: " + e.witness);
        t.expect(e.samples_ok == e.samples, "arity " + std::to_string(e.arity) + " sampled: " + e.witness);
      }
      t.note(std::to_string(fs.size()) + " cochains, " + std::to_string(samples) + " sampled evaluations");
    }));
  }
  return r;
}

// 8 -------------------------------------------------------------------------

SuiteResult differentiation_functor(std::uint64_t seed) {
  SuiteResult r;
  Sampler s(seed);
  for (const auto& [name, g, sigma] :
       {std::tuple{std::string("pair chart R^1, lambda = 1 + (p-q)^2"), SmoothGroupoid::pair_chart(1), quadratic_conn()},
        std::tuple{std::string("pair chart R^1, lambda = 1 + p(p-q)"), SmoothGroupoid::pair_chart(1), skew_conn()},
        std::tuple{std::string("pair chart R^2, planar splitting"), SmoothGroupoid::pair_chart(2), planar_conn()}}) {
    r.checks.push_back(guarded("Psi(Ad) is a representation: " + name, [&](Tally& t) {
      const RepA rep = differentiate_rep(g, build_Ad_sigma(g, sigma));
      const RepCheck c = check_rep(g.algebroid(), rep, s.points(g.base_dim(), 5));
      t.expect(c.ok(), rep_failure(c));
    }));
  }
  const auto g = SmoothGroupoid::pair_chart(2);
  const AlgebroidModel a = g.algebroid();
  r.checks.push_back(guarded("Psi(identity) is a morphism", [&](Tally& t) {
    const SmoothRepG ad = build_Ad_sigma(g, planar_conn());
    const RepA rep = differentiate_rep(g, ad);
    SmoothMorphismG id;
    id.phi[0] = PolyMatrix::identity(ad.dim());
    const MorphismCheck c = check_morphism_A(a, differentiate_morphism(g, id), rep, rep);
    t.expect(c.ok(), c.witness);
  }));
  r.checks.push_back(guarded("Psi(gauge morphism) is a morphism", [&](Tally& t) {
    const SmoothRepG ad = build_Ad_sigma(g, planar_conn());
    const SmoothMorphismG phi = planar_gauge();
    const SmoothRepG gauged = gauge_transform(g, ad, phi, 4);
    t.expect(check_rep_G(g, gauged, 4).ok(), "gauge transform is not a representation");
    const RepA source = differentiate_rep(g, ad), target = differentiate_rep(g, gauged);
    const MorphismCheck c = check_morphism_A(a, differentiate_morphism(g, phi), source, target);
    t.expect(c.ok(), c.witness);
  }));
  return r;
}

// 9 -------------------------------------------------------------------------

SuiteResult ad_equals_ad(std::uint64_t seed) {
  SuiteResult r;
  Sampler s(seed);
  const auto g = SmoothGroupoid::pair_chart(1);
  for (const auto& [name, sigma] : {std::pair{std::string("lambda = 1"), trivial_connection(g)},
                                    std::pair{std::string("lambda = 1 + (p-q)^2"), quadratic_conn()}}) {
    const auto pts = s.points(1, 5);
    r.checks.push_back(guarded(name, [&](Tally& t) {
      const AdEqualsAdReport rep = check_Ad_equals_ad(g, sigma, pts);
      for (const auto& c : rep.components) {
        t.expect(c.symbolic_ok, c.name + " (symbolic): " + c.witness);
        t.expect(c.samples_ok, c.name + " (5 points): " + c.witness);
      }
    }));
  }
  return r;
}

// 10 ------------------------------------------------------------------------

SuiteResult lemma_suites(std::uint64_t seed) {
  SuiteResult r;
  std::uint64_t offset = 0;
  for (const auto& item : lemma_items()) r.checks.push_back(item.run(seed + offset++));
  return r;
}

// 11 ------------------------------------------------------------------------

SuiteResult normalized_vs_full(std::uint64_t seed) {
  SuiteResult r;
  Sampler s(seed);
  const Nerve pair(FiniteGroupoid::pair(3), 5);
  const RepG gauged = gauge_transform(pair, pair_rep(s, pair), random_gauge(s, pair), 5);
  const Nerve cyclic(FiniteGroupoid::cyclic(2), 5);
  struct Case {
    std::string name;
    const Nerve* nerve;
    RepG rep;
  };
  const std::vector<Case> cases = {{"gauge transform on the pair groupoid of 3 points", &pair, gauged},
                                   {"sign representation of Z/2", &cyclic, sign_rep(cyclic)}};
  for (const auto& c : cases) {
    r.checks.push_back(guarded(c.name, [&](Tally& t) {
      const CohomologyReport a = cohomology_G(*c.nerve, c.rep, 3, true), b = cohomology_G(*c.nerve, c.rep, 3, false);
      for (int d = 0; d <= 3; ++d)
        t.expect(a.dim(d) == b.dim(d), "H^" + std::to_string(d) + ": normalized " + std::to_string(a.dim(d)) +
                                           ", full " + std::to_string(b.dim(d)));
      r.data[c.name] = {{"normalized", cohomology_table(a)}, {"full", cohomology_table(b)}};
    }));
  }
  return r;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "rigidity", "deformation cohomology of sl2, so3 vanishes; abelian control", 1, rigidity},
      {2, "algebroid-closure", "adjoint representations satisfy D^2 = 0", 5, algebroid_closure},
      {3, "cochain-dga", "groupoid cochains form a DGA", 5, cochain_dga},
      {4, "structure-equations", "gauge-transformed representation with curvature", 10, structure_equations},
      {5, "elementary-quasi-iso", "elementary quasi-isomorphism", 10, elementary},
      {6, "contracting-homotopy", "b*s* + s*b* = id on the pair groupoids", 5, contracting_homotopy},
      {7, "van-est-chain-map", "Psi(delta f) = d Psi(f)", 10, van_est_chain_map},
      {8, "differentiation-functor", "Psi of representations and morphisms", 10, differentiation_functor},
      {9, "ad-equals-ad", "Psi(Ad_sigma) = ad_nabla componentwise", 10, ad_equals_ad},
      {10, "lemma-suites", "itemized identities for R, R^, Psi^", 15, lemma_suites},
      {11, "normalized-vs-full", "normalized and full cochains have the same cohomology", 5, normalized_vs_full},
  };
  return all;
}

std::optional<Criterion> find_criterion(const std::string& key) {
  for (const auto& c : criteria())
    if (c.key == key || std::to_string(c.id) == key) return c;
  return std::nullopt;
}

SuiteResult run_criterion(const Criterion& c, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    r = c.run(seed);
  } catch (const std::exception& e) {
    r.checks.push_back(Check{"setup", false, 0, std::string("exception: ") + e.what()});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.id = c.id;
  r.key = c.key;
  r.title = c.title;
  r.limit_seconds = c.limit_seconds;
  r.within_limit = r.seconds < c.limit_seconds;
  r.pass = r.within_limit && !r.checks.empty();
  for (const auto& ch : r.checks) r.pass = r.pass && ch.pass;
  return r;
}

}  // namespace hrep::suites
