#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copcalc/power_sum.hpp"

namespace copcalc {

/// B = cI + f(C*C) + g(CC*) + C p(C*C) + C* q(CC*) (+ compact).
/// Polynomials are coefficient lists, index k holding the t^k coefficient;
/// f and g must vanish at 0.
struct AlgebraElement {
  cplx c = 0.0;
  std::vector<cplx> f, g, p, q;
};

/// [[c + g, sqrt(t) p], [sqrt(t) q, c + f]] on [0, s].
SymbolMatrix psi_of_element(const AlgebraElement& elem, double s);

enum class Letter { X, XStar };
using Word = std::vector<Letter>;

/// Parses "x", "x*" sequences such as "x*xx*"; whitespace ignored.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Product of Psi(C) = [[0, sqrt t], [0, 0]] and Psi(C*) = [[0, 0], [sqrt t, 0]].
SymbolMatrix psi_of_word(const Word& w, double s);

/// The element of the canonical form equal to a word modulo compacts.
/// Words with two equal adjacent letters are compact (zero element).
AlgebraElement canonical_element(const Word& w);

/// sup over [0, s_end] of the largest singular value.
double essential_norm(const SymbolMatrix& F);

struct SpectrumSample {
  std::vector<double> t;
  std::vector<cplx> eigenvalues;  // two per grid point
};

SpectrumSample essential_spectrum(const SymbolMatrix& F, int grid_n);

/// Distance from z to the nearest sampled eigenvalue.
double distance_to_spectrum(const SpectrumSample& sample, cplx z);

enum class Table2Row { A, B, C, D };

const char* to_string(Table2Row row);
std::optional<Table2Row> parse_table2_row(std::string_view text);

/// Column-4 symbol for the linear-fractional family of a row:
///   (d) rho_{eta,a}          -> e22 = (t/s)^{a/2b},              Re a > 0
///   (b) rho_{zeta,a}         -> e11 = (t/s)^{a/2c},              Re a > 0
///   (a) rho_{eta,a} o phi    -> e12 = sqrt(t) (t/s)^{a/2b},      Re a > -b
///   (c) rho_{zeta,a} o sigma -> e21 = (sqrt(t)/s) (t/s)^{a/2c},  Re a > -c
/// The diagonal rows sit where Psi(C*C) = diag(0, t) puts them.
SymbolMatrix table2_symbol(Table2Row row, cplx a, double s, double b, double c);

/// Descriptor of the distinguished representative, e.g. "s^(-a/2b) U (C*C)^(1/2+a/2b)"
/// with the numbers filled in.
std::string table2_representative(Table2Row row, cplx a, double s, double b, double c);

/// (Lambda F)(t) = F(t^(2n+1) / s^(2n)), applied termwise.
SymbolMatrix lambda_auto(const SymbolMatrix& F, int n);

/// unit * I + sum c_i C_{rho_{gamma, a_i}}, Re a_i > 0.
struct ParabolicCombination {
  cplx gamma = 1.0;
  cplx unit = 0.0;
  std::vector<std::pair<cplx, cplx>> terms;  // (a_i, c_i)
};

/// unit + sum c_i t^{a_i} on [0, 1].
PowerSum gelfand(const ParabolicCombination& P);

/// Product in the algebra: translation numbers add, coefficients multiply.
ParabolicCombination multiply(const ParabolicCombination& x, const ParabolicCombination& y);

/// sup over [0, 1] of |P(t)|.
double parabolic_ess_norm(const PowerSum& P);

/// Image of a grid on [0, 1] under P.
std::vector<cplx> parabolic_ess_spectrum(const PowerSum& P, int grid_n);

struct JointSpectrum {
  std::vector<double> t;
  std::vector<std::vector<cplx>> points;  // points[i][j] = t_i^{a_j}
};

JointSpectrum joint_essential_spectrum(const std::vector<cplx>& a_list, int grid_n);

/// Default grid for sup and spectrum sampling; COPCALC_GRID overrides.
int default_grid();

}  // namespace copcalc
