#include "hrep/suites/lemmas.hpp"

#include "hrep/graded.hpp"
#include "hrep/suites/fixtures.hpp"

namespace hrep::suites {

namespace {

std::vector<SmoothGroupoid> models() {
  return {SmoothGroupoid::pair_chart(1), SmoothGroupoid::pair_chart(2), SmoothGroupoid::heisenberg()};
}

std::string where(const SmoothGroupoid& g) {
  if (g.is_matrix_group()) return "heisenberg";
  return "pair chart R^" + std::to_string(g.base_dim());
}

PolyMatrix times(const PolyMatrix& m, const Polynomial& h) {
  return m.map([&h](const Polynomial& p) { return p * h; });
}

SmoothSection scaled_section(const SmoothSection& a, const Polynomial& h) {
  SmoothSection out = a;
  for (auto& c : out) c *= h;
  return out;
}

SmoothSection bracket(const SmoothGroupoid& g, const SmoothSection& a, const SmoothSection& b) {
  return g.is_matrix_group() ? g.algebroid().bracket(a, b) : lie_bracket(a, b);
}

SmoothMap random_square(Sampler& s, const SmoothGroupoid& g, int arity, std::size_t d) {
  return random_map(s, g, arity, std::vector<int>(d, 0), 0);
}

AForm signed_form(const AForm& f, int sign) { return sign > 0 ? f : scaled(f, Rational(-1)); }

SmoothCochain signed_cochain(const SmoothCochain& f, int sign) { return sign > 0 ? f : scaled(f, Rational(-1)); }

template <typename Body>
Check run_item(const std::string& name, Body&& body) {
  Tally t(name);
  try {
    body(t);
  } catch (const std::exception& e) {
    t.fail(std::string("exception: ") + e.what());
  }
  return std::move(t).done();
}

// --- R --------------------------------------------------------------------

Check r_a(std::uint64_t seed) {
  return run_item("R.a", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 1; k <= 3; ++k) {
        const SmoothCochain eta = random_normalized(s, g, k, 2);
        const SmoothSection alpha = random_section(s, g);
        const Polynomial h = random_function(s, g);
        t.expect(R_alpha(g, eta, scaled_section(alpha, h)) == star(g, R_alpha(g, eta, alpha), SmoothCochain{0, {h}}),
                 where(g) + " k=" + std::to_string(k));
      }
  });
}

Check r_b(std::uint64_t seed) {
  return run_item("R.b", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 0; k <= 2; ++k)
        for (int l = 1; k + l <= 3; ++l) {
          const SmoothCochain eta = random_normalized(s, g, k, 2), f = random_normalized(s, g, l);
          const SmoothSection alpha = random_section(s, g);
          const SmoothCochain rhs = signed_cochain(star(g, eta, R_alpha(g, f, alpha)), parity_sign(k));
          t.expect(R_alpha(g, star(g, eta, f), alpha) == rhs,
                   where(g) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
  });
}

Check r_c(std::uint64_t seed) {
  return run_item("R.c", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 1; k <= 3; ++k) {
        const SmoothCochain eta = random_normalized(s, g, k, 2);
        const SmoothCochain f{0, {random_function(s, g)}};
        const SmoothSection alpha = random_section(s, g);
        t.expect(R_alpha(g, star(g, eta, f), alpha) == star(g, R_alpha(g, eta, alpha), f),
                 where(g) + " k=" + std::to_string(k));
      }
  });
}

// --- R and faces ------------------------------------------------------------

Check r2_a(std::uint64_t seed) {
  return run_item("R2.a", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 1; k <= 3; ++k) {
        const SmoothCochain f = random_normalized(s, g, k);
        const SmoothSection alpha = random_section(s, g);
        t.expect(R_alpha(g, face_pullback(g, f, 0), alpha) == face_pullback(g, R_alpha(g, f, alpha), 0),
                 where(g) + " k=" + std::to_string(k));
      }
  });
}

Check r2_b(std::uint64_t seed) {
  return run_item("R2.b", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int rep = 0; rep < 3; ++rep) {
        const Polynomial f = random_function(s, g);
        const SmoothSection alpha = random_section(s, g);
        const Polynomial expected = g.is_matrix_group() ? Polynomial() : directional(alpha, f);
        t.expect(R_alpha(g, face_pullback(g, SmoothCochain{0, {f}}, 0), alpha).values[0] == expected, where(g));
      }
  });
}

Check r2_c(std::uint64_t seed) {
  return run_item("R2.c", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 0; k <= 2; ++k) {
        const SmoothCochain f = k == 0 ? SmoothCochain{0, {random_function(s, g)}} : random_normalized(s, g, k);
        std::vector<SmoothSection> alphas;
        for (int i = 0; i <= k; ++i) alphas.push_back(random_section(s, g));
        const SmoothCochain lhs = R_iterated(g, face_pullback(g, f, 0), alphas);
        const Polynomial inner = R_iterated(g, f, {alphas.begin(), alphas.end() - 1}).values[0];
        const Polynomial rhs = g.is_matrix_group() ? Polynomial() : directional(alphas.back(), inner);
        t.expect(lhs.values[0] == rhs, where(g) + " k=" + std::to_string(k));
      }
  });
}

Check r2_d(std::uint64_t seed) {
  return run_item("R2.d", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 0; k <= 3; ++k) {
        const SmoothCochain f = k == 0 ? SmoothCochain{0, {random_function(s, g)}} : random_normalized(s, g, k);
        t.expect(is_zero(R_alpha(g, face_pullback(g, f, k + 1), random_section(s, g))),
                 where(g) + " k=" + std::to_string(k));
      }
  });
}

Check r2_e(std::uint64_t seed) {
  return run_item("R2.e", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 2; k <= 3; ++k)
        for (int i = 1; i < k; ++i) {
          const SmoothCochain f = random_normalized(s, g, k);
          const SmoothSection alpha = random_section(s, g);
          t.expect(R_alpha(g, face_pullback(g, f, i), alpha) == face_pullback(g, R_alpha(g, f, alpha), i),
                   where(g) + " k=" + std::to_string(k) + " i=" + std::to_string(i));
        }
  });
}

Check r2_f(std::uint64_t seed) {
  return run_item("R2.f", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 1; k <= 3; ++k) {
        const SmoothCochain f = random_normalized(s, g, k, 1, 3);
        const SmoothSection a = random_section(s, g), b = random_section(s, g);
        const SmoothCochain last = face_pullback(g, f, k);
        const SmoothCochain rhs = R_iterated(g, last, {b, a}) - R_iterated(g, last, {a, b});
        t.expect(R_alpha(g, f, bracket(g, a, b)) == rhs, where(g) + " k=" + std::to_string(k));
      }
  });
}

// --- R^ ---------------------------------------------------------------------

Check hr_a(std::uint64_t seed) {
  return run_item("hR.a", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 1; k <= 3; ++k) {
        const SmoothMap f = random_square(s, g, k, 2);
        const SmoothSection alpha = random_section(s, g);
        const Polynomial h = random_function(s, g);
        const Polynomial sh = source_pullback(g, h, k - 1).values[0];
        t.expect(hat_R_alpha(g, f, scaled_section(alpha, h)).value == times(hat_R_alpha(g, f, alpha).value, sh),
                 where(g) + " k=" + std::to_string(k));
      }
  });
}

Check hr_b(std::uint64_t seed) {
  return run_item("hR.b", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 1; k <= 3; ++k) {
        const SmoothMap f = random_square(s, g, k, 2);
        const SmoothSection alpha = random_section(s, g);
        const Polynomial h = random_function(s, g);
        const SmoothMap lhs =
            hat_R_alpha(g, SmoothMap{k, times(f.value, source_pullback(g, h, k).values[0])}, alpha);
        t.expect(lhs.value == times(hat_R_alpha(g, f, alpha).value, source_pullback(g, h, k - 1).values[0]),
                 where(g) + " k=" + std::to_string(k));
      }
  });
}

// --- R^ and composition, faces, brackets --------------------------------------

Check hr2_a(std::uint64_t seed) {
  return run_item("hR2.a", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 0; k <= 2; ++k)
        for (int kp = 1; k + kp <= 3; ++kp) {
          const SmoothMap f = random_square(s, g, k, 2), fp = random_square(s, g, kp, 2);
          const SmoothSection alpha = random_section(s, g);
          t.expect(hat_R_alpha(g, compose(g, f, fp), alpha).value == compose(g, f, hat_R_alpha(g, fp, alpha)).value,
                   where(g) + " k=" + std::to_string(k) + " k'=" + std::to_string(kp));
        }
  });
}

Check hr2_b(std::uint64_t seed) {
  return run_item("hR2.b", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 1; k <= 3; ++k) {
        const SmoothMap f = random_square(s, g, k, 2);
        const SmoothMap fp{0, PolyMatrix(2, 2, {random_function(s, g), random_function(s, g), random_function(s, g),
                                               random_function(s, g)})};
        const SmoothSection alpha = random_section(s, g);
        t.expect(hat_R_alpha(g, compose(g, f, fp), alpha).value == compose(g, hat_R_alpha(g, f, alpha), fp).value,
                 where(g) + " k=" + std::to_string(k));
      }
  });
}

Check hr2_c(std::uint64_t seed) {
  return run_item("hR2.c", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 2; k <= 3; ++k)
        for (int j = 1; j < k; ++j) {
          const SmoothMap f = random_square(s, g, k, 2);
          const SmoothSection alpha = random_section(s, g);
          t.expect(hat_R_alpha(g, face_pullback(g, f, j), alpha).value ==
                       face_pullback(g, hat_R_alpha(g, f, alpha), j).value,
                   where(g) + " k=" + std::to_string(k) + " j=" + std::to_string(j));
        }
  });
}

Check hr2_d(std::uint64_t seed) {
  return run_item("hR2.d", [&](Tally& t) {
    Sampler s(seed);
    for (const auto& g : models())
      for (int k = 1; k <= 3; ++k) {
        const SmoothMap f = random_square(s, g, k, 2);
        const SmoothSection a = random_section(s, g), b = random_section(s, g);
        // d_k^* F is not normalized in its last slot; R^ is taken on the frame
        const SmoothMap last = face_pullback(g, f, k);
        const SmoothMap ab = hat_R_alpha(g, hat_R_alpha(g, last, b, false), a, false);
        const SmoothMap ba = hat_R_alpha(g, hat_R_alpha(g, last, a, false), b, false);
        t.expect(hat_R_alpha(g, f, bracket(g, a, b)).value == ab.value - ba.value,
                 where(g) + " k=" + std::to_string(k));
      }
  });
}

// --- Psi^ -------------------------------------------------------------------

Check hphi_a(std::uint64_t seed) {
  return run_item("hPhi.a", [&](Tally& t) {
    Sampler s(seed);
    const std::vector<int> degrees{0, 1, 1, 2};
    struct Case {
      int k, m, kp, mp;
    };
    int nonzero = 0;
    for (const auto& g : models())
      for (const Case& c :
           {Case{1, 0, 1, 1}, Case{1, -1, 1, 1}, Case{0, 1, 2, -1}, Case{2, 1, 1, -1}, Case{1, 1, 0, 1}}) {
        if (static_cast<std::size_t>(c.k + c.kp) > g.block()) continue;
        const SmoothMap f = random_map(s, g, c.k, degrees, c.m, 2, 12);
        const SmoothMap fp = random_map(s, g, c.kp, degrees, c.mp, 2, 12);
        const AForm lhs = hat_Psi(g, compose(g, f, fp), c.m + c.mp);
        // graded wedge: the End-degree m of the left factor passes the k' arguments
        const AForm wedge = operator_wedge(hat_Psi(g, f, c.m), c.k + c.m, hat_Psi(g, fp, c.mp), degrees);
        nonzero += lhs.is_zero() ? 0 : 1;
        t.expect(lhs == signed_form(wedge, parity_sign(static_cast<long>(c.k) * (c.kp + c.mp))),
                 where(g) + " k=" + std::to_string(c.k) + " m=" + std::to_string(c.m) + " k'=" +
                     std::to_string(c.kp) + " m'=" + std::to_string(c.mp));
      }
    t.expect(nonzero >= 8, "too few nonzero compositions to be meaningful");
  });
}

Check hphi_b(std::uint64_t seed) {
  return run_item("hPhi.b", [&](Tally& t) {
    Sampler s(seed);
    const std::vector<int> degrees{0, 0, 1};
    for (const auto& g : models()) {
      const AlgebroidModel a = g.algebroid();
      SmoothMap f1 = random_map(s, g, 1, degrees, 0);
      f1.value += PolyMatrix::identity(3);
      const std::vector<PolyMatrix> conn = bar_Psi(g, f1.value);
      for (int k = 1; k <= 2; ++k)
        for (int m : {0, 1, -1}) {
          if (static_cast<std::size_t>(k + 1) > g.block()) continue;
          const SmoothMap f = random_map(s, g, k, degrees, m);
          // delta_F1 F = -F1 o F + sum_j (-1)^(j+1) d_j^* F + (-1)^k F o F1
          PolyMatrix sum = -compose(g, f1, f).value;
          for (int j = 1; j <= k; ++j) {
            const PolyMatrix fj = face_pullback(g, f, j).value;
            sum = j % 2 == 1 ? sum + fj : sum - fj;
          }
          const PolyMatrix last = compose(g, f, f1).value;
          sum = k % 2 == 0 ? sum + last : sum - last;
          const AForm lhs = hat_Psi(g, SmoothMap{k + 1, sum}, m);
          const AForm rhs = covariant_d_end(a, conn, hat_Psi(g, f, m));
          t.expect(lhs == signed_form(rhs, parity_sign(k + m + 1)),
                   where(g) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
    }
  });
}

// --- R and R^ together --------------------------------------------------------

SmoothCochain concentrated(Sampler& s, const SmoothGroupoid& g, int p, const std::vector<int>& degrees, int q) {
  SmoothCochain eta = random_normalized(s, g, p, degrees.size());
  for (std::size_t c = 0; c < degrees.size(); ++c)
    if (degrees[c] != q) eta.values[c] = Polynomial();
  return eta;
}

Check rhr_a(std::uint64_t seed) {
  return run_item("R_and_hR.a", [&](Tally& t) {
    Sampler s(seed);
    const std::vector<int> degrees{0, 1, 1, 2};
    for (const auto& g : models())
      for (const auto& [k, m] : {std::pair{0, 1}, std::pair{2, -1}, std::pair{1, 1}, std::pair{3, -2}})
        for (int p = 1; p + k <= 3; ++p) {
          const SmoothMap f = random_map(s, g, k, degrees, m);
          const SmoothCochain eta = random_normalized(s, g, p, degrees.size());
          const SmoothSection alpha = random_section(s, g);
          const SmoothCochain lhs = R_alpha(g, tilde_F(g, k, m, f.value, degrees, eta), alpha);
          const SmoothCochain rhs = tilde_F(g, k, m, f.value, degrees, R_alpha(g, eta, alpha));
          t.expect(lhs == signed_cochain(rhs, parity_sign(k)),
                   where(g) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + " p=" + std::to_string(p));
        }
  });
}

Check rhr_b(std::uint64_t seed) {
  return run_item("R_and_hR.b", [&](Tally& t) {
    Sampler s(seed);
    const std::vector<int> degrees{0, 1, 1, 2};
    for (const auto& g : models())
      for (const auto& [k, m] : {std::pair{2, -1}, std::pair{1, 1}, std::pair{3, -2}})
        for (int q : {0, 1}) {
          const SmoothMap f = random_map(s, g, k, degrees, m);
          const SmoothCochain eta = concentrated(s, g, 0, degrees, q);
          const SmoothSection alpha = random_section(s, g);
          const SmoothCochain lhs = R_alpha(g, tilde_F(g, k, m, f.value, degrees, eta), alpha);
          const SmoothCochain rhs = tilde_F(g, k - 1, m, hat_R_alpha(g, f, alpha).value, degrees, eta);
          t.expect(lhs == signed_cochain(rhs, parity_sign(q)),
                   where(g) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + " q=" + std::to_string(q));
        }
  });
}

Check rhr_c(std::uint64_t seed) {
  return run_item("R_and_hR.c", [&](Tally& t) {
    Sampler s(seed);
    const std::vector<int> degrees{0, 1, 1, 2};
    for (const auto& g : models())
      for (const auto& [k, m] : {std::pair{0, 1}, std::pair{2, -1}, std::pair{1, 1}, std::pair{0, -1}})
        for (int p = 0; p + k <= static_cast<int>(g.block()); ++p) {
          const SmoothMap f = random_map(s, g, k, degrees, m);
          const SmoothCochain eta = random_normalized(s, g, p, degrees.size());
          const AForm lhs = Psi(g, tilde_F(g, k, m, f.value, degrees, eta), degrees);
          const AForm rhs = operator_wedge(hat_Psi(g, f, m), k + m, Psi(g, eta, degrees), degrees);
          t.expect(lhs == rhs,
                   where(g) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + " p=" + std::to_string(p));
        }
  });
}

}  // namespace

const std::vector<LemmaItem>& lemma_items() {
  static const std::vector<LemmaItem> items = {
      {"R.a", "R_{h alpha} eta = R_alpha eta * h", r_a},
      {"R.b", "R_alpha(eta * f) = (-1)^k eta * R_alpha f for f of positive arity", r_b},
      {"R.c", "R_alpha(eta * f) = R_alpha(eta) * f for a function f", r_c},
      {"R2.a", "R_alpha d_0^* = d_0^* R_alpha", r2_a},
      {"R2.b", "R_alpha d_0^* f = L_rho(alpha) f on functions", r2_b},
      {"R2.c", "R_{alpha_0..alpha_k} d_0^* f = L_rho(alpha_k) R_{alpha_0..alpha_{k-1}} f", r2_c},
      {"R2.d", "R_alpha d_{k+1}^* = 0", r2_d},
      {"R2.e", "R_alpha d_i^* = d_i^* R_alpha for 0 < i < k", r2_e},
      {"R2.f", "R_[a,b] f = (R_a R_b - R_b R_a) d_k^* f", r2_f},
      {"hR.a", "R^_{h alpha} F = R^_alpha F * s^*h", hr_a},
      {"hR.b", "R^_alpha(F * s^*h) = R^_alpha(F) * s^*h", hr_b},
      {"hR2.a", "R^_alpha(F o F') = F o R^_alpha F' for F' of positive arity", hr2_a},
      {"hR2.b", "R^_alpha(F o F') = R^_alpha(F) o F' for F' of arity zero", hr2_b},
      {"hR2.c", "R^_alpha d_j^* = d_j^* R^_alpha for 0 < j < k", hr2_c},
      {"hR2.d", "R^_[a,b] F = (R^_a R^_b - R^_b R^_a) d_k^* F", hr2_d},
      {"hPhi.a", "Psi^(F o F') = (-1)^(k(k'+m')) Psi^(F) ^ Psi^(F')", hphi_a},
      {"hPhi.b", "Psi^(delta_F1 F) = (-1)^(k+m+1) d_nabla Psi^(F)", hphi_b},
      {"R_and_hR.a", "R_alpha F~(eta) = (-1)^k F~(R_alpha eta) for eta of positive arity", rhr_a},
      {"R_and_hR.b", "R_alpha F~(eta) = (-1)^q (R^_alpha F)~(eta) for eta of arity zero", rhr_b},
      {"R_and_hR.c", "Psi(F~(eta)) = Psi^(F) ^ Psi(eta)", rhr_c},
  };
  return items;
}

}  // namespace hrep::suites
