// Essential-norm lower bounds from boundary data and the kernel limit along
// internally tangent circles.

#include <algorithm>
#include <climits>
#include <cmath>

#include "copcalc/numerics.hpp"

namespace copcalc {

namespace {

constexpr double kGroupTol = tol::kBoundary;
constexpr cplx kI{0.0, 1.0};

struct Hit {
  cplx coeff;
  Mobius map;
  std::vector<cplx> jet;
};

// Maps of the combination whose angular-derivative set contains alpha.
std::vector<Hit> hits_at(const Combination& combo, cplx alpha, int order) {
  std::vector<Hit> out;
  for (const auto& [c, psi] : combo) {
    try {
      auto j = jet(psi, alpha, order);
      if (is_unimodular(j[0])) out.push_back({c, psi, std::move(j)});
    } catch (const DomainError&) {
    }
  }
  return out;
}

bool same_prefix(const std::vector<cplx>& x, const std::vector<cplx>& y, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (std::abs(x[i] - y[i]) > kGroupTol * std::max(1.0, std::abs(x[i]))) return false;
  }
  return true;
}

// Indices grouped by equal leading jet entries.
template <class GetJet>
std::vector<std::vector<std::size_t>> group_by(std::size_t n, std::size_t len, GetJet&& get) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& g : groups) {
      if (same_prefix(get(g.front()), get(i), len)) {
        g.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }
  return groups;
}

}  // namespace

LowerBound lb1(const Combination& combo, cplx alpha) {
  if (!is_unimodular(alpha)) throw ValidationError("alpha must be unimodular");
  const auto hits = hits_at(combo, alpha, 1);
  LowerBound out;
  if (hits.empty()) {
    out.warning = "alpha lies in none of the angular-derivative sets";
    return out;
  }
  for (const auto& g : group_by(hits.size(), 2, [&](std::size_t i) -> const std::vector<cplx>& { return hits[i].jet; })) {
    cplx sum = 0.0;
    for (std::size_t i : g) sum += hits[i].coeff;
    out.value += std::norm(sum) / std::abs(hits[g.front()].jet[1]);
  }
  return out;
}

std::vector<JetTerm> jet_terms(const Combination& combo, cplx alpha, int order) {
  if (!is_unimodular(alpha)) throw ValidationError("alpha must be unimodular");
  std::vector<JetTerm> out;
  for (auto& h : hits_at(combo, alpha, order)) {
    const int contact = classify(h.map).is_disk_automorphism ? INT_MAX : 2;
    out.push_back({h.coeff, DataVector{alpha, std::move(h.jet)}, contact});
  }
  return out;
}

double lb2(const std::vector<JetTerm>& terms, int k) {
  if (k != 2 && k != 3) throw ValidationError("lb2 is implemented for k = 2 and k = 3");
  std::vector<const JetTerm*> active;
  for (const auto& t : terms) {
    if (!terms.empty() && std::abs(t.jet.alpha - terms.front().jet.alpha) > kGroupTol) {
      throw ValidationError("lb2 terms must share the boundary point");
    }
    if (t.jet.order() < k - 1) throw ValidationError("lb2 needs jets of order k - 1");
    if (t.contact_order >= k) active.push_back(&t);
  }
  const auto len = static_cast<std::size_t>(k);
  double value = 0.0;
  for (const auto& g :
       group_by(active.size(), len, [&](std::size_t i) -> const std::vector<cplx>& { return active[i]->jet.values; })) {
    cplx sum = 0.0;
    for (std::size_t i : g) sum += active[i]->coeff;
    value += std::norm(sum) / std::abs(active[g.front()]->jet.values[1]);
  }
  return value;
}

double lbext(const Combination& combo) {
  Combination merged;
  for (const auto& [c, psi] : combo) {
    bool found = false;
    for (auto& m : merged) {
      if (projective_eq(m.second, psi)) {
        m.first += c;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back({c, psi});
  }
  // |J(psi)| / 2pi is 1 for automorphisms and 0 otherwise.
  double value = 0.0;
  for (const auto& [c, psi] : merged) {
    if (classify(psi).is_disk_automorphism) value += std::norm(c);
  }
  return value;
}

double lb3_rhs(const Combination& combo, cplx alpha, double D) {
  if (!(D > 0.0)) throw ValidationError("D must be positive");
  if (!is_unimodular(alpha)) throw ValidationError("alpha must be unimodular");
  const auto hits = hits_at(combo, alpha, 1);
  std::vector<cplx> w(hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto u = conjugate_to_halfplane(hits[i].map, alpha, hits[i].jet[0] / std::abs(hits[i].jet[0]));
    w[i] = u.jet[1] / 2.0 - kI * D * u.jet[2];
    if (!(w[i].real() > 0.0)) throw DomainError("half-plane parameter with non-positive real part");
  }
  double value = 0.0;
  for (const auto& g : group_by(hits.size(), 2, [&](std::size_t i) -> const std::vector<cplx>& { return hits[i].jet; })) {
    cplx sum = 0.0;
    for (std::size_t i : g) {
      for (std::size_t j : g) sum += std::conj(hits[i].coeff) * hits[j].coeff / (std::conj(w[i]) + w[j]);
    }
    value += sum.real();
  }
  return value;
}

LimitReport lb3_limit_check(const Combination& combo, cplx alpha, double D, const std::vector<double>& distances) {
  LimitReport out;
  out.rhs = lb3_rhs(combo, alpha, D);
  // w = u'/2 - i D u'' is the limit on the locus of value 1/(4D), which is
  // gamma_circle with parameter 1/(16D).
  const double Dc = 1.0 / (16.0 * D);
  for (double delta : distances) {
    const cplx z = gamma_circle(alpha, Dc, gamma_angle_for_distance(Dc, delta));
    const double lhs = kernel_gram(combo, z);
    out.samples.push_back({delta, lhs, std::abs(lhs - out.rhs)});
  }
  if (!out.samples.empty()) {
    const double last = out.samples.back().error;
    const bool halved = out.samples.size() < 2 || out.samples[out.samples.size() - 2].error >= 2.0 * last;
    out.converged = last < 1e-4 && (halved || last <= 1e-9);
  }
  return out;
}

}  // namespace copcalc
