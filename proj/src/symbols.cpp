#include "copcalc/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "copcalc/kernels.hpp"

namespace copcalc {

namespace {

constexpr int kNormGrid = 4097;
constexpr double kGolden = 0.6180339887498949;

void require_zero_constant(const std::vector<cplx>& poly) {
  if (!poly.empty() && std::abs(poly[0]) > 0.0) throw ValidationError("not in canonical form: f(0), g(0) must vanish");
}

PowerSum poly_to_sum(const std::vector<cplx>& poly, double shift) {
  std::vector<PowerTerm> terms;
  for (std::size_t k = 0; k < poly.size(); ++k) terms.push_back({poly[k], static_cast<double>(k) + shift});
  return PowerSum(std::move(terms));
}

double sigma_max_sq(const Mat2& m) {
  double out = 0.0;
  const double ar = m[0].real(), ai = m[0].imag(), br = m[1].real(), bi = m[1].imag();
  const double cr = m[2].real(), ci = m[2].imag(), dr = m[3].real(), di = m[3].imag();
  kernels::scalar_table().sigma_max_sq(1, &ar, &ai, &br, &bi, &cr, &ci, &dr, &di, &out);
  return out;
}

// Maximizes a function known on a uniform grid: pick the best sample, then
// golden-section search on the two adjacent cells.
template <class Fn>
double refine_max(Fn&& fn, const std::vector<double>& grid, const std::vector<double>& values) {
  const auto best = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  double lo = grid[best == 0 ? 0 : best - 1];
  double hi = grid[std::min(best + 1, grid.size() - 1)];
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = fn(x1);
  double f2 = fn(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = fn(x1);
    }
  }
  return std::max({values[best], f1, f2});
}

std::vector<double> uniform_grid(double end, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = end * i / (n - 1);
  t.back() = end;
  return t;
}

std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(12);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  }
  return os.str();
}

}  // namespace

SymbolMatrix psi_of_element(const AlgebraElement& elem, double s) {
  if (!(s > 0.0)) throw ValidationError("s must be positive");
  require_zero_constant(elem.f);
  require_zero_constant(elem.g);
  const PowerSum c = PowerSum::constant(elem.c);
  return {c + poly_to_sum(elem.g, 0.0), poly_to_sum(elem.p, 0.5), poly_to_sum(elem.q, 0.5), c + poly_to_sum(elem.f, 0.0),
          s};
}

Word parse_word(std::string_view text) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch != 'x') throw ValidationError("word letters must be x or x*");
    if (i + 1 < text.size() && text[i + 1] == '*') {
      w.push_back(Letter::XStar);
      ++i;
    } else {
      w.push_back(Letter::X);
    }
  }
  if (w.empty()) throw ValidationError("empty word");
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (Letter l : w) out += (l == Letter::X) ? "x" : "x*";
  return out;
}

SymbolMatrix psi_of_word(const Word& w, double s) {
  if (w.empty()) throw ValidationError("empty word");
  const SymbolMatrix x{{}, PowerSum::monomial(1.0, 0.5), {}, {}, s};
  const SymbolMatrix xs{{}, {}, PowerSum::monomial(1.0, 0.5), {}, s};
  SymbolMatrix out = (w.front() == Letter::X) ? x : xs;
  for (std::size_t i = 1; i < w.size(); ++i) out = mul(out, w[i] == Letter::X ? x : xs);
  return out;
}

AlgebraElement canonical_element(const Word& w) {
  if (w.empty()) throw ValidationError("empty word");
  AlgebraElement e;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) return e;  // contains x x or x* x*
  }
  const std::size_t m = w.size() / 2;
  std::vector<cplx> mono(m + 1, 0.0);
  mono[m] = 1.0;
  if (w.size() % 2 == 1) {
    // x (x* x)^m or x* (x x*)^m
    (w.front() == Letter::X ? e.p : e.q) = mono;
  } else {
    // (x* x)^m or (x x*)^m
    (w.front() == Letter::XStar ? e.f : e.g) = mono;
  }
  return e;
}

double essential_norm(const SymbolMatrix& F) {
  const std::vector<double> grid = uniform_grid(F.s_end, kNormGrid);
  const std::size_t n = grid.size();
  std::vector<double> re[4], im[4];
  for (int k = 0; k < 4; ++k) {
    re[k].resize(n);
    im[k].resize(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Mat2 m = F(grid[i]);
    for (int k = 0; k < 4; ++k) {
      re[k][i] = m[static_cast<std::size_t>(k)].real();
      im[k][i] = m[static_cast<std::size_t>(k)].imag();
    }
  }
  std::vector<double> values(n);
  kernels::active().sigma_max_sq(n, re[0].data(), im[0].data(), re[1].data(), im[1].data(), re[2].data(),
                                 im[2].data(), re[3].data(), im[3].data(), values.data());
  const double best = refine_max([&](double t) { return sigma_max_sq(F(t)); }, grid, values);
  return std::sqrt(std::max(0.0, best));
}

SpectrumSample essential_spectrum(const SymbolMatrix& F, int grid_n) {
  if (grid_n < 2) throw ValidationError("grid_n must be at least 2");
  SpectrumSample out;
  out.t = uniform_grid(F.s_end, grid_n);
  out.eigenvalues.reserve(2 * out.t.size());
  for (double t : out.t) {
    const Mat2 m = F(t);
    const cplx half_tr = 0.5 * (m[0] + m[3]);
    const cplx det = m[0] * m[3] - m[1] * m[2];
    const cplx root = std::sqrt(half_tr * half_tr - det);
    out.eigenvalues.push_back(half_tr + root);
    out.eigenvalues.push_back(half_tr - root);
  }
  return out;
}

double distance_to_spectrum(const SpectrumSample& sample, cplx z) {
  double best = std::numeric_limits<double>::infinity();
  for (cplx lam : sample.eigenvalues) best = std::min(best, std::abs(lam - z));
  return best;
}

const char* to_string(Table2Row row) {
  switch (row) {
    case Table2Row::A: return "a";
    case Table2Row::B: return "b";
    case Table2Row::C: return "c";
    case Table2Row::D: return "d";
  }
  return "?";
}

std::optional<Table2Row> parse_table2_row(std::string_view text) {
  if (text == "a") return Table2Row::A;
  if (text == "b") return Table2Row::B;
  if (text == "c") return Table2Row::C;
  if (text == "d") return Table2Row::D;
  return std::nullopt;
}

SymbolMatrix table2_symbol(Table2Row row, cplx a, double s, double b, double c) {
  if (!(s > 0.0 && b > 0.0 && c > 0.0)) throw ValidationError("table2_symbol: s, b, c must be positive");
  SymbolMatrix out = SymbolMatrix::zero(s);
  switch (row) {
    case Table2Row::D: {
      if (!(a.real() > 0.0)) throw DomainError("outside admissible translation range");
      const cplx x = a / (2.0 * b);
      out.e22 = PowerSum::monomial(real_pow(s, -x), x);
      break;
    }
    case Table2Row::B: {
      if (!(a.real() > 0.0)) throw DomainError("outside admissible translation range");
      const cplx x = a / (2.0 * c);
      out.e11 = PowerSum::monomial(real_pow(s, -x), x);
      break;
    }
    case Table2Row::A: {
      if (!(a.real() > -b)) throw DomainError("outside admissible translation range");
      const cplx x = a / (2.0 * b);
      out.e12 = PowerSum::monomial(real_pow(s, -x), 0.5 + x);
      break;
    }
    case Table2Row::C: {
      if (!(a.real() > -c)) throw DomainError("outside admissible translation range");
      const cplx x = a / (2.0 * c);
      out.e21 = PowerSum::monomial(real_pow(s, -x) / s, 0.5 + x);
      break;
    }
  }
  return out;
}

std::string table2_representative(Table2Row row, cplx a, double s, double b, double c) {
  const bool eta_side = row == Table2Row::A || row == Table2Row::D;
  const cplx x = a / (2.0 * (eta_side ? b : c));
  const std::string tail = "; s=" + fmt(s) + ", x=" + fmt(x);
  switch (row) {
    case Table2Row::D: return "s^(-x) (C*C)^x" + tail;
    case Table2Row::B: return "s^(-x) (CC*)^x" + tail;
    case Table2Row::A: return "s^(-x) U (C*C)^(1/2+x)" + tail;
    case Table2Row::C: return "s^(-x-1) U* (CC*)^(1/2+x)" + tail;
  }
  return tail;
}

SymbolMatrix lambda_auto(const SymbolMatrix& F, int n) {
  if (n < 1) throw ValidationError("lambda_auto: n must be at least 1");
  const double s = F.s_end;
  auto map = [&](const PowerSum& p) {
    std::vector<PowerTerm> terms;
    for (const auto& term : p.terms()) {
      const cplx beta = term.beta;
      terms.push_back({term.coeff * real_pow(s, -2.0 * n * beta), static_cast<double>(2 * n + 1) * beta});
    }
    return PowerSum(std::move(terms));
  };
  return {map(F.e11), map(F.e12), map(F.e21), map(F.e22), s};
}

PowerSum gelfand(const ParabolicCombination& P) {
  std::vector<PowerTerm> terms;
  terms.push_back({P.unit, 0.0});
  for (const auto& [a, c] : P.terms) {
    if (!(a.real() > 0.0)) throw DomainError("gelfand: translation numbers need Re a > 0");
    terms.push_back({c, a});
  }
  return PowerSum(std::move(terms));
}

ParabolicCombination multiply(const ParabolicCombination& x, const ParabolicCombination& y) {
  ParabolicCombination out;
  out.gamma = x.gamma;
  out.unit = x.unit * y.unit;
  for (const auto& [a, c] : x.terms) {
    if (y.unit != cplx(0.0)) out.terms.push_back({a, c * y.unit});
    for (const auto& [b, d] : y.terms) out.terms.push_back({a + b, c * d});
  }
  if (x.unit != cplx(0.0)) {
    for (const auto& [b, d] : y.terms) out.terms.push_back({b, x.unit * d});
  }
  return out;
}

double parabolic_ess_norm(const PowerSum& P) {
  const std::vector<double> grid = uniform_grid(1.0, kNormGrid);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = std::abs(P(grid[i]));
  return refine_max([&](double t) { return std::abs(P(t)); }, grid, values);
}

std::vector<cplx> parabolic_ess_spectrum(const PowerSum& P, int grid_n) {
  if (grid_n < 2) throw ValidationError("grid_n must be at least 2");
  std::vector<cplx> out;
  for (double t : uniform_grid(1.0, grid_n)) out.push_back(P(t));
  return out;
}

JointSpectrum joint_essential_spectrum(const std::vector<cplx>& a_list, int grid_n) {
  if (grid_n < 2) throw ValidationError("grid_n must be at least 2");
  if (a_list.empty()) throw ValidationError("empty translation list");
  for (cplx a : a_list) {
    if (!(a.real() > 0.0)) throw DomainError("joint spectrum needs Re a > 0");
  }
  JointSpectrum out;
  out.t = uniform_grid(1.0, grid_n);
  for (double t : out.t) {
    std::vector<cplx> pt;
    for (cplx a : a_list) pt.push_back(tpow(t, a));
    out.points.push_back(std::move(pt));
  }
  return out;
}

int default_grid() {
  if (const char* env = std::getenv("COPCALC_GRID")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2 && v <= 10'000'000) return static_cast<int>(v);
  }
  return kNormGrid;
}

}  // namespace copcalc
