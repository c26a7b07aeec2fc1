// copcalc: JSON-in/JSON-out front end to the library.
// Exit codes: 0 success, 2 validation error, 3 mathematical precondition.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "copcalc/acceptance.hpp"
#include "copcalc/json_io.hpp"
#include "copcalc/kernels.hpp"

using namespace copcalc;

namespace {

struct Options {
  std::string output = "json";
  std::uint64_t seed = 0;
  int grid = 0;
};

Options g_opts;

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string cell(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit_table(const json& j) {
  if (!j.is_object()) {
    std::cout << cell(j) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    std::cout << k << std::string(width - k.size() + 2, ' ') << cell(v) << '\n';
  }
}

void output(const json& j) {
  if (g_opts.output == "table") {
    emit_table(j);
  } else {
    emit(j);
  }
}

int grid_n() { return g_opts.grid > 0 ? g_opts.grid : default_grid(); }

// A map given by coefficients (--map) or by the phi family constructor.
struct MapInput {
  std::string prefix;
  std::string map;
  std::string family;
  std::string zeta = "[1,0]", eta, d;
  double sprime = 0.0;

  void add(CLI::App* app, const std::string& name, bool with_family) {
    prefix = name;
    app->add_option("--" + name, map, "Moebius map as {\"a\":[re,im],\"b\":...,\"c\":...,\"d\":...}");
    if (!with_family) return;
    app->add_option("--family", family, "family constructor (phi)");
    app->add_option("--eta", eta, "family: image point eta");
    app->add_option("--zeta", zeta, "family: tangency point (default 1)");
    app->add_option("--sprime", sprime, "family: |phi'(zeta)|");
    app->add_option("--d", d, "family: parameter d");
  }

  bool given() const { return !map.empty() || !family.empty(); }

  Mobius get() const {
    if (!map.empty()) return mobius_from_json(parse_json(map, prefix.c_str()));
    if (family.empty()) throw ValidationError("--" + prefix + " or --family is required");
    if (family != "phi") throw ValidationError("unknown family \"" + family + "\" (available: phi)");
    if (eta.empty() || d.empty()) throw ValidationError("--family phi needs --eta, --sprime and --d");
    return phi_family_at(complex_from_json(parse_json(zeta, "zeta")), complex_from_json(parse_json(eta, "eta")), sprime,
                         complex_from_json(parse_json(d, "d")));
  }
};

json fixed_point_json(const SpherePoint& p) { return p.infinite ? json("inf") : complex_to_json(p.value); }

json classification_json(const MapClassification& c) {
  json fps = json::array();
  for (const auto& p : c.fixed_points) fps.push_back(fixed_point_json(p));
  return {{"kind", to_string(c.kind)},
          {"fixed_points", fps},
          {"is_disk_automorphism", c.is_disk_automorphism},
          {"is_disk_self_map", c.is_disk_self_map},
          {"sup_norm_one", c.sup_norm_one}};
}

// Symbol from --symbol, --element or --word (the last two need --s).
struct SymbolInput {
  std::string symbol, element, word;
  double s = 0.0;

  void add(CLI::App* app) {
    app->add_option("--symbol", symbol, "SymbolMatrix JSON");
    app->add_option("--element", element, "algebra element {\"c\",\"f\",\"g\",\"p\",\"q\"}");
    app->add_option("--word", word, "word in x and x*, e.g. \"x*xx\"");
    app->add_option("--s", s, "right end of the symbol interval, s = 1/|phi'(zeta)|");
  }

  bool given() const { return !symbol.empty() || !element.empty() || !word.empty(); }

  SymbolMatrix get() const {
    if (!symbol.empty()) return symbol_from_json(parse_json(symbol, "symbol"));
    if (!(s > 0.0)) throw ValidationError("--s must be positive");
    if (!element.empty()) return psi_of_element(element_from_json(parse_json(element, "element")), s);
    if (!word.empty()) return psi_of_word(parse_word(word), s);
    throw ValidationError("one of --symbol, --element, --word is required");
  }
};

std::optional<ParabolicCombination> parabolic_input(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const json j = parse_json(text, "parabolic");
  ParabolicCombination P;
  P.gamma = j.contains("gamma") ? complex_from_json(j.at("gamma")) : cplx(1.0);
  P.unit = j.contains("unit") ? complex_from_json(j.at("unit")) : cplx(0.0);
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) P.terms.push_back({complex_from_json(t.at("a")), complex_from_json(t.at("c"))});
  }
  return P;
}

PhiContext context_input(const MapInput& phi, const std::string& ctx_text) {
  if (!ctx_text.empty()) return context_from_json(parse_json(ctx_text, "context"));
  return make_context(phi.get());
}

void membership_table(const MembershipVerdict& v) {
  std::cout << "member     condition  row          parameter              representative\n";
  char buf[256];
  const std::string param =
      v.family_parameter ? "(" + std::to_string(v.family_parameter->real()) + ", " + std::to_string(v.family_parameter->imag()) + ")"
                         : "-";
  std::snprintf(buf, sizeof buf, "%-10s %-10s %-13s %-22s %s\n", v.member ? "yes" : "no", to_string(v.condition),
                v.table2_row ? to_string(*v.table2_row) : "-", param.c_str(), v.representative ? v.representative->c_str() : "-");
  std::cout << buf;
  if (!v.reason.empty()) std::cout << "reason: " << v.reason << '\n';
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"copcalc: linear-fractional composition operators and their symbol calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", g_opts.output, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", g_opts.seed, "seed for randomized suites");
  app.add_option("--grid", g_opts.grid, "grid size for sampled suprema and spectra (default COPCALC_GRID or 4097)");
  std::string simd;
  app.add_option("--simd", simd, "kernel backend: scalar or avx2");

  std::function<void()> action;

  MapInput classify_map;
  auto* classify_cmd = app.add_subcommand("classify", "fixed points, kind and disk behaviour of a map");
  classify_map.add(classify_cmd, "map", true);
  classify_cmd->callback([&] {
    action = [&] {
      const Mobius f = classify_map.get();
      json out = classification_json(classify(f));
      out["image_circle"] = {{"center", complex_to_json(image_circle(f).center)}, {"radius", image_circle(f).radius}};
      output(out);
    };
  });

  std::string compose_maps;
  int iterate_n = 0;
  MapInput iterate_map;
  auto* compose_cmd = app.add_subcommand("compose", "compose maps (outermost first) or iterate one");
  compose_cmd->add_option("--maps", compose_maps, "JSON array of maps, outermost first");
  iterate_map.add(compose_cmd, "map", true);
  compose_cmd->add_option("--iterate", iterate_n, "n-fold iterate of --map");
  compose_cmd->callback([&] {
    action = [&] {
      if (!compose_maps.empty()) {
        const json arr = parse_json(compose_maps, "maps");
        if (!arr.is_array() || arr.empty()) throw ValidationError("--maps must be a nonempty array");
        Mobius out = mobius_from_json(arr.back());
        for (auto it = arr.rbegin() + 1; it != arr.rend(); ++it) out = compose(mobius_from_json(*it), out);
        output(to_json(out));
      } else {
        output(to_json(iterate(iterate_map.get(), iterate_n)));
      }
    };
  });

  MapInput adjoint_map;
  auto* adjoint_cmd = app.add_subcommand("adjoint", "Krein adjoint of a map");
  adjoint_map.add(adjoint_cmd, "map", true);
  adjoint_cmd->callback([&] { action = [&] { output(to_json(krein_adjoint(adjoint_map.get()))); }; });

  std::string par_gamma = "[1,0]", par_a;
  bool par_negative = false;
  auto* parabolic_cmd = app.add_subcommand("parabolic", "parabolic map rho_{gamma,a}");
  parabolic_cmd->add_option("--gamma", par_gamma, "fixed point");
  parabolic_cmd->add_option("--a", par_a, "translation number")->required();
  parabolic_cmd->add_flag("--allow-negative", par_negative, "accept Re a < 0 (not a self-map)");
  parabolic_cmd->callback([&] {
    action = [&] {
      output(to_json(parabolic(complex_from_json(parse_json(par_gamma, "gamma")), complex_from_json(parse_json(par_a, "a")),
                               par_negative)));
    };
  });

  MapInput translation_map;
  auto* translation_cmd = app.add_subcommand("translation", "recover (gamma, a) of a parabolic map");
  translation_map.add(translation_cmd, "map", true);
  translation_cmd->callback([&] {
    action = [&] {
      const TranslationData t = translation_number(translation_map.get());
      output({{"gamma", complex_to_json(t.gamma)}, {"a", complex_to_json(t.a)}});
    };
  });

  MapInput curvature_map;
  std::string curvature_alpha;
  auto* curvature_cmd = app.add_subcommand("curvature", "curvature of the image of the circle at a boundary point");
  curvature_map.add(curvature_cmd, "map", true);
  curvature_cmd->add_option("--alpha", curvature_alpha, "boundary point (default: the tangency point)");
  curvature_cmd->callback([&] {
    action = [&] {
      const Mobius f = curvature_map.get();
      const cplx alpha = curvature_alpha.empty() ? boundary_maximizer(f) : complex_from_json(parse_json(curvature_alpha, "alpha"));
      output({{"alpha", complex_to_json(alpha)}, {"curvature", curvature_at(f, alpha)}});
    };
  });

  MapInput context_map;
  auto* context_cmd = app.add_subcommand("context", "tangency data, Krein adjoint and translation numbers of phi");
  context_map.add(context_cmd, "phi", true);
  context_cmd->callback([&] { action = [&] { output(to_json(make_context(context_map.get()))); }; });

  MapInput mem_phi, mem_psi;
  std::string mem_ctx, mem_profile, mem_two_point;
  bool mem_necessity = false;
  auto* membership_cmd = app.add_subcommand("membership", "is C_psi in the algebra generated by C_phi and the compacts?");
  mem_phi.add(membership_cmd, "phi", true);
  mem_psi.add(membership_cmd, "psi", false);
  membership_cmd->add_option("--context", mem_ctx, "context JSON as printed by `context`");
  membership_cmd->add_option("--profile", mem_profile, "boundary profile JSON instead of --psi");
  membership_cmd->add_option("--two-point", mem_two_point, "build the two-point profile of case e or f")
      ->check(CLI::IsMember({"e", "f"}));
  membership_cmd->add_flag("--necessity", mem_necessity, "only run the first-order necessity check on the profile");
  membership_cmd->callback([&] {
    action = [&] {
      const PhiContext ctx = context_input(mem_phi, mem_ctx);
      std::optional<BoundaryProfile> profile;
      if (!mem_profile.empty()) profile = profile_from_json(parse_json(mem_profile, "profile"));
      if (!mem_two_point.empty()) profile = two_point_profile(ctx, mem_two_point == "e" ? Condition::E : Condition::F);
      if (mem_necessity) {
        if (!profile) profile = tangency_set(mem_psi.get());
        output({{"condition", to_string(necessity_check(ctx, *profile))}});
        return;
      }
      const MembershipVerdict v = profile ? general_membership(ctx, *profile) : linfrac_membership(ctx, mem_psi.get());
      if (g_opts.output == "table") {
        membership_table(v);
        return;
      }
      json out = to_json(v);
      if (profile) out["profile"] = to_json(*profile);
      emit(out);
    };
  });

  MapInput sym_phi;
  std::string sym_ctx, sym_row, sym_a, sym_combination;
  bool sym_decompose = false;
  SymbolInput sym_in;
  auto* symbol_cmd = app.add_subcommand("symbol", "Calkin symbol of an element, word, row family or combination");
  sym_in.add(symbol_cmd);
  sym_phi.add(symbol_cmd, "phi", true);
  symbol_cmd->add_option("--context", sym_ctx, "context JSON");
  symbol_cmd->add_option("--row", sym_row, "row family a, b, c or d")->check(CLI::IsMember({"a", "b", "c", "d"}));
  symbol_cmd->add_option("--a", sym_a, "family parameter for --row");
  symbol_cmd->add_option("--combination", sym_combination, "JSON array of {coeff, map}");
  symbol_cmd->add_flag("--decompose", sym_decompose, "with --element: also print the combination of composition operators");
  symbol_cmd->callback([&] {
    action = [&] {
      const bool needs_ctx = !sym_row.empty() || !sym_combination.empty() || sym_decompose;
      std::optional<PhiContext> ctx;
      if (needs_ctx) ctx = context_input(sym_phi, sym_ctx);
      if (!sym_row.empty()) {
        if (sym_a.empty()) throw ValidationError("--row needs --a");
        const Table2Row row = *parse_table2_row(sym_row);
        const cplx a = complex_from_json(parse_json(sym_a, "a"));
        output({{"row", to_string(row)},
                {"symbol", to_json(table2_symbol(row, a, ctx->s, ctx->b, ctx->c))},
                {"representative", table2_representative(row, a, ctx->s, ctx->b, ctx->c)}});
        return;
      }
      if (!sym_combination.empty()) {
        output(to_json(combination_symbol(*ctx, combination_from_json(parse_json(sym_combination, "combination")))));
        return;
      }
      if (ctx && !sym_in.element.empty() && !(sym_in.s > 0.0)) sym_in.s = ctx->s;
      json out = {{"symbol", to_json(sym_in.get())}};
      if (sym_decompose) {
        if (sym_in.element.empty()) throw ValidationError("--decompose needs --element");
        out["decomposition"] = to_json(coset_decompose(*ctx, element_from_json(parse_json(sym_in.element, "element"))));
      }
      output(out);
    };
  });

  SymbolInput norm_in;
  std::string norm_parabolic;
  auto* essnorm_cmd = app.add_subcommand("essnorm", "essential norm from the symbol");
  norm_in.add(essnorm_cmd);
  essnorm_cmd->add_option("--parabolic", norm_parabolic, "{\"gamma\",\"unit\",\"terms\":[{\"a\",\"c\"}]}");
  essnorm_cmd->callback([&] {
    action = [&] {
      if (auto P = parabolic_input(norm_parabolic)) {
        output({{"value", parabolic_ess_norm(gelfand(*P))}});
      } else {
        output({{"value", essential_norm(norm_in.get())}});
      }
    };
  });

  SymbolInput spec_in;
  std::string spec_parabolic;
  auto* essspec_cmd = app.add_subcommand("essspec", "sampled essential spectrum (eigenvalues of the symbol)");
  spec_in.add(essspec_cmd);
  essspec_cmd->add_option("--parabolic", spec_parabolic, "parabolic combination JSON");
  essspec_cmd->callback([&] {
    action = [&] {
      json pts = json::array();
      if (auto P = parabolic_input(spec_parabolic)) {
        for (cplx z : parabolic_ess_spectrum(gelfand(*P), grid_n())) pts.push_back(complex_to_json(z));
        output({{"points", pts}});
        return;
      }
      const SpectrumSample sp = essential_spectrum(spec_in.get(), grid_n());
      for (std::size_t i = 0; i < sp.t.size(); ++i) {
        pts.push_back({sp.t[i], complex_to_json(sp.eigenvalues[2 * i]), complex_to_json(sp.eigenvalues[2 * i + 1])});
      }
      output({{"samples", pts}});
    };
  });

  std::string joint_a;
  auto* joint_cmd = app.add_subcommand("jointspec", "joint essential spectrum of C_{rho_{a_1}}, ..., C_{rho_{a_k}}");
  joint_cmd->add_option("--a", joint_a, "JSON array of translation numbers")->required();
  joint_cmd->callback([&] {
    action = [&] {
      const json arr = parse_json(joint_a, "a");
      if (!arr.is_array() || arr.empty()) throw ValidationError("--a must be a nonempty array");
      std::vector<cplx> as;
      for (const auto& x : arr) as.push_back(complex_from_json(x));
      const JointSpectrum J = joint_essential_spectrum(as, grid_n());
      json pts = json::array();
      for (const auto& row : J.points) {
        json p = json::array();
        for (cplx z : row) p.push_back(complex_to_json(z));
        pts.push_back(p);
      }
      output({{"t", J.t}, {"points", pts}});
    };
  });

  std::string bl_zeta, bl_eta;
  double bl_t1 = 0.0, bl_t2 = 0.0;
  auto* blaschke_cmd = app.add_subcommand("blaschke", "two-point Blaschke product B(eta)=B(zeta)=eta, B'(eta)=t1, |B'(zeta)|=t2");
  blaschke_cmd->add_option("--zeta", bl_zeta)->required();
  blaschke_cmd->add_option("--eta", bl_eta)->required();
  blaschke_cmd->add_option("--t1", bl_t1)->required();
  blaschke_cmd->add_option("--t2", bl_t2)->required();
  blaschke_cmd->callback([&] {
    action = [&] {
      const TwoPointBlaschke B = construct_two_point(complex_from_json(parse_json(bl_zeta, "zeta")),
                                                     complex_from_json(parse_json(bl_eta, "eta")), bl_t1, bl_t2);
      json out = to_json(B.product);
      out["m"] = B.m;
      if (B.product.degree() <= 4096) {
        const ExpandedRational e = expand(B.product);
        json num = json::array(), den = json::array();
        for (cplx z : e.numerator) num.push_back(complex_to_json(z));
        for (cplx z : e.denominator) den.push_back(complex_to_json(z));
        out["numerator"] = num;
        out["denominator"] = den;
      }
      output(out);
    };
  });

  MapInput mat_map;
  std::string mat_blaschke, mat_format = "json", mat_out;
  int mat_n = 256;
  auto* matrix_cmd = app.add_subcommand("matrix", "finite section of C_psi in the monomial basis");
  mat_map.add(matrix_cmd, "map", true);
  matrix_cmd->add_option("--blaschke", mat_blaschke, "Blaschke product JSON instead of --map");
  matrix_cmd->add_option("--N", mat_n, "section size")->check(CLI::Range(1, 4096));
  matrix_cmd->add_option("--format", mat_format, "json or binary")->check(CLI::IsMember({"json", "binary"}));
  matrix_cmd->add_option("--out", mat_out, "output path (binary: data file, header goes to <out>.json)");
  matrix_cmd->callback([&] {
    action = [&] {
      const TruncatedOperator T = mat_blaschke.empty()
                                      ? composition_matrix(mat_map.get(), mat_n)
                                      : composition_matrix(Chain{blaschke_from_json(parse_json(mat_blaschke, "blaschke"))},
                                                           mat_n, "blaschke");
      if (mat_format == "json") {
        const std::string text = to_json(T).dump() + "\n";
        if (mat_out.empty()) {
          std::cout << text;
        } else {
          write_file(mat_out, text);
        }
        return;
      }
      if (mat_out.empty()) throw ValidationError("--format binary needs --out");
      std::string bytes;
      bytes.reserve(static_cast<std::size_t>(T.n) * static_cast<std::size_t>(T.n) * 16);
      for (int i = 0; i < T.n; ++i) {
        for (int k = 0; k < T.n; ++k) {
          const cplx v = T.at(i, k);
          const double pair[2] = {v.real(), v.imag()};
          bytes.append(reinterpret_cast<const char*>(pair), sizeof pair);
        }
      }
      write_file(mat_out, bytes);
      write_file(mat_out + ".json", matrix_header(T).dump() + "\n");
      emit({{"data", mat_out}, {"header", mat_out + ".json"}, {"n", T.n}});
    };
  });

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run acceptance suites");
  verify_cmd->add_option("suite", suite, "all, a number 1-13 or a suite key");
  int verify_status = 0;
  verify_cmd->callback([&] {
    action = [&] {
      std::vector<CriterionResult> results;
      if (suite == "all") {
        results = run_all_criteria(g_opts.seed);
      } else {
        const auto id = find_criterion(suite);
        if (!id) {
          std::string keys;
          for (const auto& k : criterion_keys()) keys += " " + k;
          throw ValidationError("unknown suite \"" + suite + "\"; available: all" + keys);
        }
        results.push_back(run_criterion(*id, g_opts.seed));
      }
      json arr = json::array();
      for (const auto& r : results) {
        if (!r.pass()) verify_status = 1;
        if (g_opts.output == "table") {
          std::cout << format_line(r) << '\n';
        } else {
          arr.push_back({{"id", r.id}, {"key", r.key}, {"name", r.name}, {"pass", r.pass()}, {"ok", r.ok},
                         {"seconds", r.seconds}, {"budget", r.budget}, {"detail", r.detail}});
        }
      }
      if (g_opts.output == "table") {
        std::cout << (verify_status == 0 ? "all criteria pass" : "some criteria failed") << '\n';
      } else {
        emit({{"results", arr}, {"pass", verify_status == 0}});
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string names;
    for (const auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) names += " " + sub->get_name();
    if (argc > 1 && argv[1][0] != '-' && names.find(" " + std::string(argv[1]) + " ") == std::string::npos &&
        !names.ends_with(" " + std::string(argv[1]))) {
      std::cerr << "error: unknown subcommand \"" << argv[1] << "\"\n";
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    std::cerr << "subcommands:" << names << "\nrun `copcalc <subcommand> --help` for its options\n";
    return 2;
  }

  try {
    if (!simd.empty() && !kernels::select(simd)) throw ValidationError("kernel backend \"" + simd + "\" unavailable");
    if (action) action();
    return verify_status;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
