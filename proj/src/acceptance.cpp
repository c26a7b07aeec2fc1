#include "copcalc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "copcalc/blaschke.hpp"
#include "copcalc/membership.hpp"
#include "copcalc/numerics.hpp"
#include "copcalc/symbols.hpp"

namespace copcalc {

namespace {

using Rng = std::mt19937_64;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

cplx random_unimodular(Rng& rng) { return std::polar(1.0, uniform(rng, -kPi, kPi)); }

int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

cplx random_disk(Rng& rng, double r = 1.0) { return std::polar(r * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, -kPi, kPi)); }

const PhiContext& running_context() {
  static const PhiContext ctx = make_context(Mobius(-7.0, -3.0, 2.0, 8.0));
  return ctx;
}

void semigroup(Check& c, Rng& rng) {
  for (int i = 0; i < 100; ++i) {
    const cplx gamma = random_unimodular(rng);
    const cplx a(uniform(rng, 0.01, 3.0), uniform(rng, -3.0, 3.0));
    const cplx b(uniform(rng, 0.01, 3.0), uniform(rng, -3.0, 3.0));
    c.require(projective_eq(compose(parabolic(gamma, a), parabolic(gamma, b)), parabolic(gamma, a + b)),
              "rho_a o rho_b != rho_{a+b}");
    c.require(projective_eq(krein_adjoint(parabolic(gamma, a)), parabolic(gamma, std::conj(a))),
              "Krein adjoint of rho_a != rho_conj(a)");
  }
  c.detail << "100 triples";
}

void running(Check& c, Rng&) {
  const PhiContext& ctx = running_context();
  c.require(near(ctx.zeta, 1.0, 1e-10) && near(ctx.eta, -1.0, 1e-10), "zeta, eta");
  c.require(std::abs(ctx.s - 2.0) < 1e-10 && std::abs(ctx.b - 0.2) < 1e-10 && std::abs(ctx.c - 0.1) < 1e-10, "s, b, c");
  const Mobius ps = compose(ctx.phi, ctx.sigma), sp = compose(ctx.sigma, ctx.phi);
  c.require(projective_eq(ps, Mobius(4.0, -1.0, 1.0, 6.0), 1e-10), "phi o sigma");
  c.require(projective_eq(ps, parabolic(-1.0, 0.4), 1e-10), "phi o sigma vs rho_{-1,0.4}");
  c.require(projective_eq(sp, Mobius(9.0, 1.0, -1.0, 11.0), 1e-10), "sigma o phi");
  c.require(projective_eq(sp, parabolic(1.0, 0.2), 1e-10), "sigma o phi vs rho_{1,0.2}");
  c.detail << "s=" << ctx.s << " b=" << ctx.b << " c=" << ctx.c;
}

void symbol_calculus(Check& c, Rng&) {
  const SymbolMatrix F = psi_of_word(parse_word("x"), 2.0);
  const double en = essential_norm(F);
  c.require(std::abs(en - std::sqrt(2.0)) <= 1e-10, "essential norm of C_phi");
  const SpectrumSample sp = essential_spectrum(F, 4097);
  double worst = 0.0;
  for (cplx z : sp.eigenvalues) worst = std::max(worst, std::abs(z));
  c.require(worst <= 1e-12, "spectrum of C_phi is not {0}");

  const SymbolMatrix D = table2_symbol(Table2Row::D, 1.0, 2.0, 0.2, 0.1);
  const SpectrumSample sd = essential_spectrum(D, 4097);
  std::vector<double> xs;
  double off = 0.0;
  for (cplx z : sd.eigenvalues) {
    off = std::max(off, std::abs(z.imag()) + std::max({0.0, -z.real(), z.real() - 1.0}));
    xs.push_back(std::clamp(z.real(), 0.0, 1.0));
  }
  std::sort(xs.begin(), xs.end());
  double gap = std::max(xs.front(), 1.0 - xs.back());
  for (std::size_t i = 1; i < xs.size(); ++i) gap = std::max(gap, (xs[i] - xs[i - 1]) / 2.0);
  const double hausdorff = std::max(gap, off);
  c.require(hausdorff <= 2e-3, "row (d) spectrum misses [0,1]");
  char buf[128];
  std::snprintf(buf, sizeof buf, "norm %.12f, Hausdorff gap %.2e", en, hausdorff);
  c.detail << buf;
}

Word random_word(Rng& rng) {
  Word w(static_cast<std::size_t>(random_int(rng, 1, 6)));
  for (auto& l : w) l = random_int(rng, 0, 1) ? Letter::X : Letter::XStar;
  return w;
}

void multiplicativity(Check& c, Rng& rng) {
  const double s = 2.0;
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng), v = random_word(rng);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    const SymbolMatrix lhs = mul(psi_of_word(u, s), psi_of_word(v, s));
    c.require(approx_equal(lhs, psi_of_word(uv, s), 1e-10), "Psi(u)Psi(v) != Psi(uv) for " + to_string(uv));
    c.require(approx_equal(lhs, psi_of_element(canonical_element(uv), s), 1e-10),
              "canonical form disagrees for " + to_string(uv));
  }
  c.detail << "200 word pairs";
}

// Symbol of head unit^m; the empty word is the identity.
SymbolMatrix repeat(std::string_view head, std::string_view unit, int m, double s) {
  std::string text(head);
  for (int i = 0; i < m; ++i) text += unit;
  return text.empty() ? SymbolMatrix::scalar(1.0, s) : psi_of_word(parse_word(text), s);
}

void lambda_diagram(Check& c, Rng&) {
  const double s = 2.0;
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const int k = (2 * n + 1) * m + n;
      const double odd = real_pow(s, -(2.0 * m + 1.0) * n).real();
      const double even = real_pow(s, -2.0 * n * m).real();
      struct Case {
        SymbolMatrix source, target;
        double scale;
        const char* label;
      };
      const Case cases[] = {
          {repeat("x", "x*x", m, s), repeat("x", "x*x", k, s), odd, "y(y*y)^m"},
          {repeat("x*", "xx*", m, s), repeat("x*", "xx*", k, s), odd, "y*(yy*)^m"},
          {repeat("", "x*x", m, s), repeat("", "x*x", (2 * n + 1) * m, s), even, "(y*y)^m"},
          {repeat("", "xx*", m, s), repeat("", "xx*", (2 * n + 1) * m, s), even, "(yy*)^m"},
      };
      for (const auto& cs : cases) {
        const SymbolMatrix lhs = lambda_auto(cs.source, n);
        const SymbolMatrix rhs = scale(cs.target, cs.scale);
        std::ostringstream what;
        what << cs.label << " n=" << n << " m=" << m;
        c.require(exactly_equal(lhs, rhs), what.str());
        ++checked;
      }
    }
  }
  c.detail << checked << " generator images";
}

void membership(Check& c, Rng&) {
  const PhiContext& ctx = running_context();
  for (double a : {0.3, -0.1}) {
    const auto v = linfrac_membership(ctx, compose(parabolic(ctx.eta, a, true), ctx.phi));
    c.require(v.member && v.condition == Condition::A, "rho_{eta," + std::to_string(a) + "} o phi not a member via (a)");
  }
  const auto out = linfrac_membership(ctx, compose(parabolic(ctx.eta, -0.25, true), ctx.phi));
  c.require(!out.member && out.reason == "outside admissible translation range", "rho_{eta,-0.25} o phi accepted");
  c.require(!linfrac_membership(ctx, parabolic(ctx.zeta, cplx(0.0, 1.0), true)).member, "rho_{zeta,i} accepted");
  BoundaryProfile id;
  id.whole_circle = true;
  id.identity = true;
  c.require(necessity_check(ctx, id) == Condition::Identity, "identity profile");
  const Mobius elsewhere = parabolic(cplx(0.0, 1.0), 0.5);
  c.require(necessity_check(ctx, tangency_set(elsewhere)) == Condition::None, "tangency at i not rejected");
  const auto ve = linfrac_membership(ctx, elsewhere);
  c.require(!ve.member && ve.condition == Condition::None, "map tangent at i accepted");
  c.detail << "7 decisions";
}

AlgebraElement random_element(Rng& rng) {
  AlgebraElement e;
  auto poly = [&](bool zero_constant) {
    std::vector<cplx> p(static_cast<std::size_t>(random_int(rng, 0, 3)));
    for (auto& x : p) x = random_disk(rng);
    if (zero_constant && !p.empty()) p[0] = 0.0;
    return p;
  };
  e.c = random_disk(rng);
  e.f = poly(true);
  e.g = poly(true);
  e.p = poly(false);
  e.q = poly(false);
  return e;
}

void lower_bounds(Check& c, Rng& rng) {
  const PhiContext& ctx = running_context();
  double margin = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const AlgebraElement e = random_element(rng);
    const Combination combo = coset_decompose(ctx, e);
    const double en2 = std::pow(essential_norm(psi_of_element(e, ctx.s)), 2);
    std::vector<double> bounds = {lb1(combo, ctx.zeta).value, lb1(combo, ctx.eta).value, lbext(combo)};
    for (double D : {0.1, 1.0, 10.0}) bounds.push_back(lb3_rhs(combo, ctx.zeta, D));
    for (double lb : bounds) {
      margin = std::min(margin, en2 - lb);
      c.require(lb <= en2 + 1e-9, "lower bound exceeds essential norm squared");
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "50 combinations, min slack %.3e", margin);
  c.detail << buf;
}

void kernel_limit(Check& c, Rng&) {
  const PhiContext& ctx = running_context();
  auto run = [&](const Combination& combo, cplx alpha, double expected, const char* label) {
    const LimitReport r = lb3_limit_check(combo, alpha, 1.0);
    c.require(std::abs(r.rhs - expected) <= 1e-12, std::string(label) + ": rhs");
    for (std::size_t i = 1; i < r.samples.size(); ++i) {
      c.require(r.samples[i].error < r.samples[i - 1].error, std::string(label) + ": error not decreasing");
    }
    c.require(r.converged && r.samples.back().error < 1e-4, std::string(label) + ": no convergence");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s rhs %.6f err %.2e", label, r.rhs, r.samples.back().error);
    if (c.detail.tellp() > 0) c.detail << "; ";
    c.detail << buf;
  };
  run({{1.0, parabolic(1.0, 1.0)}}, 1.0, 0.2, "rho_{1,1}");
  const auto u = conjugate_to_halfplane(ctx.phi, ctx.zeta, ctx.eta);
  const cplx w = u.jet[1] / 2.0 - cplx(0.0, 1.0) * u.jet[2];
  run({{1.0, ctx.phi}}, ctx.zeta, 1.0 / (2.0 * w.real()), "phi");
}

void julia(Check& c, Rng&) {
  const double v = kernel_gram({{1.0, running_context().phi}}, 1.0 - 1e-6);
  c.require(std::abs(v - 2.0) <= 1e-3, "ratio away from 2");
  c.detail << "ratio " << v;
}

void blaschke(Check& c, Rng& rng) {
  auto monomial = [&](double t, std::size_t deg) {
    const ExpandedRational e = expand(construct_two_point(-1.0, 1.0, t, t).product);
    bool ok = e.numerator.size() == deg + 1 && e.denominator == std::vector<cplx>{1.0};
    for (std::size_t k = 0; ok && k < e.numerator.size(); ++k) ok = e.numerator[k] == cplx(k == deg ? 1.0 : 0.0);
    return ok;
  };
  c.require(monomial(2.0, 2), "(2,2) is not z^2");
  c.require(monomial(4.0, 4), "(4,4) is not z^4");
  const ExpandedRational e = expand(construct_two_point(-1.0, 1.0, 1.0, 1.0).product);
  const std::vector<cplx> num = {1.0 / 3.0, 0.0, 1.0}, den = {1.0, 0.0, 1.0 / 3.0};
  bool close = e.numerator.size() == 3 && e.denominator.size() == 3;
  for (std::size_t k = 0; close && k < 3; ++k) close = near(e.numerator[k], num[k], 1e-12) && near(e.denominator[k], den[k], 1e-12);
  c.require(close, "(1,1) is not (3z^2+1)/(z^2+3)");
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const cplx zeta = random_unimodular(rng);
    cplx eta = random_unimodular(rng);
    while (std::abs(eta - zeta) < 1e-2) eta = random_unimodular(rng);
    const double t1 = std::exp(uniform(rng, std::log(0.2), std::log(20.0)));
    const double t2 = std::exp(uniform(rng, std::log(0.2), std::log(20.0)));
    const BlaschkeProduct& B = construct_two_point(zeta, eta, t1, t2).product;
    const auto [be, de] = evaluate_with_derivative(B, eta);
    const auto [bz, dz] = evaluate_with_derivative(B, zeta);
    const double err = std::max({std::abs(be - eta), std::abs(de - t1) / std::max(1.0, t1), std::abs(bz - eta),
                                 std::abs(dz - eta * std::conj(zeta) * t2) / std::max(1.0, t2)});
    worst = std::max(worst, err);
  }
  c.require(worst <= 1e-9, "endpoint conditions");
  c.detail << "worst endpoint error " << worst;
}

void compactness(Check& c, Rng&) {
  const Mobius phi2 = compose(running_context().phi, running_context().phi);
  std::vector<double> tails;
  for (int N : {64, 128, 256}) tails.push_back(tail_norm(composition_matrix(phi2, N), N / 2));
  c.require(tails[0] > tails[1] && tails[1] > tails[2], "tail norms not decreasing");
  c.require(tails[2] < 1e-6, "tail norm at N = 256");
  char buf[96];
  std::snprintf(buf, sizeof buf, "tails %.2e %.2e %.2e", tails[0], tails[1], tails[2]);
  c.detail << buf;
}

void joint(Check& c, Rng& rng) {
  const JointSpectrum J = joint_essential_spectrum({1.0, 2.0}, default_grid());
  for (const auto& p : J.points) c.require(std::abs(p[1] - p[0] * p[0]) == 0.0, "point off y = x^2");
  const PowerSum g1 = gelfand({1.0, 0.0, {{1.0, 1.0}}});
  const PowerSum g2 = gelfand({1.0, 0.0, {{2.0, 1.0}}});
  for (int i = 0; i < 20; ++i) {
    const auto k = static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(J.t.size()) - 1));
    const double t = J.t[k];
    c.require(near(g1(t), J.points[k][0], 1e-12) && near(g2(t), J.points[k][1], 1e-12), "Gelfand transform off the curve");
  }
  c.detail << J.t.size() << " samples";
}

void independence(Check& c, Rng& rng) {
  const PhiContext& ctx = running_context();
  double smallest = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const int k = random_int(rng, 2, 4);
    std::vector<std::pair<Table2Row, cplx>> picked;
    while (static_cast<int>(picked.size()) < k) {
      const auto row = static_cast<Table2Row>(random_int(rng, 0, 3));
      const double floor = row == Table2Row::A ? -ctx.b : row == Table2Row::C ? -ctx.c : 0.0;
      const cplx a(floor + uniform(rng, 0.05, 2.0), uniform(rng, -2.0, 2.0));
      const bool dup = std::any_of(picked.begin(), picked.end(),
                                   [&](const auto& p) { return p.first == row && std::abs(p.second - a) < 1e-3; });
      if (!dup) picked.push_back({row, a});
    }
    SymbolMatrix sum = SymbolMatrix::zero(ctx.s);
    for (const auto& [row, a] : picked) {
      cplx coeff = random_disk(rng);
      if (std::abs(coeff) < 0.1) coeff = 0.5;
      sum = add(sum, scale(table2_symbol(row, a, ctx.s, ctx.b, ctx.c), coeff));
    }
    const double en = essential_norm(sum);
    smallest = std::min(smallest, en);
    c.require(en > 1e-8, "combination with vanishing essential norm");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "smallest norm %.3e", smallest);
  c.detail << buf;
}

struct Entry {
  const char* key;
  const char* name;
  double budget;
  void (*fn)(Check&, Rng&);
};

const Entry kEntries[kCriterionCount] = {
    {"semigroup", "parabolic semigroup and Krein involution", 1.0, semigroup},
    {"context", "running context", 1.0, running},
    {"symbols", "symbol calculus", 1.0, symbol_calculus},
    {"words", "Psi multiplicativity on words", 2.0, multiplicativity},
    {"lambda", "Lambda diagram", 1.0, lambda_diagram},
    {"membership", "membership decisions", 1.0, membership},
    {"lowerbounds", "lower bounds below essential norm", 5.0, lower_bounds},
    {"kernel", "kernel limit along tangent circles", 1.0, kernel_limit},
    {"julia", "Julia-Caratheodory ratio", 0.1, julia},
    {"blaschke", "two-point Blaschke constructor", 2.0, blaschke},
    {"compactness", "compactness oracle", 30.0, compactness},
    {"joint", "joint essential spectrum", 0.1, joint},
    {"independence", "independence of the row-family symbols", 1.0, independence},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw ValidationError("criterion id out of range");
  const Entry& e = kEntries[id - 1];
  CriterionResult r{id, e.key, e.name, false, 0.0, e.budget, {}};
  Rng rng(seed + static_cast<std::uint64_t>(id));
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    e.fn(c, rng);
  } catch (const Error& err) {
    c.require(false, std::string("threw: ") + err.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.ok = c.ok;
  r.detail = c.detail.str();
  return r;
}

std::optional<int> find_criterion(std::string_view key) {
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (key == kEntries[id - 1].key || key == std::to_string(id)) return id;
  }
  return std::nullopt;
}

std::vector<std::string> criterion_keys() {
  std::vector<std::string> out;
  for (const auto& e : kEntries) out.emplace_back(e.key);
  return out;
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s %2d %s (%.3f s / %g s)", r.pass() ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.budget);
  std::string line = head;
  if (r.ok && !r.pass()) line += ": over budget";
  if (!r.detail.empty()) line += ": " + r.detail;
  return line;
}

}  // namespace copcalc
