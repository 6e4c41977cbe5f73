#include "vfkit_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vfkit/analysis.hpp"
#include "vfkit/linalg.hpp"
#include "vfkit/verification.hpp"

namespace vfkit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string file;
  bool json = false;
  bool scheme_theoretic = false;
  std::uint64_t max_steps = GroebnerLimits{}.max_reduction_steps;
  long long genus_r = 0;
  long long genus_h3 = 0;
  bool color = false;
};

struct Output {
  std::ostream& out;
  const Settings& settings;

  std::string paint(const std::string& text, bool good) const {
    if (!settings.color) return text;
    return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
  }
};

GroebnerLimits limits_of(const Settings& s) {
  GroebnerLimits limits;
  limits.max_reduction_steps = s.max_steps;
  return limits;
}

const Polynomial& need_h(const Problem& p) {
  if (!p.h) throw InputError("/h: missing field");
  return *p.h;
}

const Derivation& need_d(const Problem& p) {
  if (!p.d) throw InputError("/D: missing field");
  return *p.d;
}

const Ideal& need_ideal(const Problem& p) {
  if (!p.ideal) throw InputError("/ideal: missing field");
  return *p.ideal;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json strings(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::string vector_text(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

void emit(const Output& o, const Json& doc) { o.out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------- subcommands

int cmd_gb(const Output& o, const Problem& p) {
  const GroebnerBasis gb = buchberger(need_ideal(p), limits_of(o.settings));
  if (o.settings.json) {
    emit(o, Json{{"order", gb.order}, {"unit", gb.is_unit()}, {"basis", strings(gb.basis)}});
  } else {
    o.out << "reduced Groebner basis (" << gb.order << "), " << gb.basis.size() << " element"
          << (gb.basis.size() == 1 ? "" : "s") << (gb.is_unit() ? ", unit ideal" : "") << ":\n";
    for (const auto& g : gb.basis) o.out << "  " << g.to_string() << '\n';
  }
  return kAffirmative;
}

int cmd_member(const Output& o, const Problem& p, bool radical) {
  const Polynomial& f = need_h(p);
  const Ideal& ideal = need_ideal(p);
  const GroebnerLimits limits = limits_of(o.settings);
  bool member = false;
  std::optional<Polynomial> remainder;
  if (radical) {
    member = radical_member(f, ideal, limits);
  } else {
    remainder = normal_form(f, buchberger(ideal, limits), limits);
    member = remainder->is_zero();
  }
  if (o.settings.json) {
    Json doc{{radical ? "radical_member" : "member", member}};
    if (remainder) doc["normal_form"] = remainder->to_string();
    emit(o, doc);
  } else {
    const std::string verdict = radical ? (member ? "in the radical" : "not in the radical")
                                        : (member ? "member" : "not a member");
    o.out << o.paint(verdict, member) << '\n';
    if (remainder && !member) o.out << "normal form: " << remainder->to_string() << '\n';
  }
  return member ? kAffirmative : kNegative;
}

int cmd_smooth(const Output& o, const Problem& p) {
  const Polynomial& h = need_h(p);
  const SmoothnessReport r = check_smooth_projective(h, limits_of(o.settings));
  if (o.settings.json) {
    Json doc{{"smooth", r.smooth}};
    if (r.singular_witness) doc["witness"] = h.context().name(*r.singular_witness);
    emit(o, doc);
  } else if (r.smooth) {
    o.out << o.paint("smooth", true) << '\n';
  } else {
    o.out << o.paint("singular", false) << ": " << h.context().name(*r.singular_witness)
          << " is not in the radical of the Jacobian ideal\n";
  }
  return r.smooth ? kAffirmative : kNegative;
}

int cmd_stabilizer(const Output& o, const Problem& p) {
  const Polynomial& h = need_h(p);
  const StabilizerSolution s = stabilizer_algebra(h);
  const Homogeneity hom = is_homogeneous(h);
  const bool euler = contains_euler_pair(s, hom.degree);
  if (o.settings.json) {
    Json basis = Json::array();
    for (const auto& pair : s.basis) {
      Json rows = Json::array();
      for (const auto& row : pair.matrix.to_rows()) rows.push_back(vector_json(row));
      basis.push_back(Json{{"lambda", pair.lambda.to_string()}, {"matrix", rows}});
    }
    emit(o, Json{{"dimension", s.dimension}, {"contains_euler", euler}, {"basis", basis}});
  } else {
    o.out << "stabilizer dimension: " << s.dimension << '\n';
    o.out << "contains the Euler pair: " << yes_no(euler) << '\n';
    for (std::size_t k = 0; k < s.basis.size(); ++k) {
      o.out << "[" << k << "] lambda = " << s.basis[k].lambda.to_string() << '\n';
      for (const auto& row : s.basis[k].matrix.to_rows()) o.out << "    " << vector_text(row) << '\n';
    }
  }
  return kAffirmative;
}

int cmd_zeros(const Output& o, const Problem& p) {
  const Derivation& d = need_d(p);
  const Ideal zeros = zero_locus_ideal(d);
  const EigenDecomposition eig = rational_eigen(RatMatrix::from_rows(d.numeric_entries()).transposed());
  if (o.settings.json) {
    Json pairs = Json::array();
    for (const auto& pair : eig.pairs) {
      Json space = Json::array();
      for (const auto& v : pair.eigenspace) space.push_back(vector_json(v));
      pairs.push_back(Json{{"value", pair.value.to_string()},
                           {"algebraic_multiplicity", pair.algebraic_multiplicity},
                           {"eigenspace", space}});
    }
    emit(o, Json{{"minors", strings(zeros.generators())},
                 {"eigen", pairs},
                 {"residual", eig.residual.to_string("t")},
                 {"euler_multiple", d.euler_multiple().has_value()}});
  } else {
    if (zeros.is_zero_ideal()) {
      o.out << "D is a multiple of the Euler field; its zero locus is all of projective space\n";
    } else {
      o.out << "zero-locus ideal, " << zeros.generators().size() << " minors:\n";
      for (const auto& g : zeros.generators()) o.out << "  " << g.to_string() << '\n';
    }
    o.out << "rational eigenvalues of A^T:\n";
    for (const auto& pair : eig.pairs) {
      o.out << "  " << pair.value.to_string() << " (multiplicity " << pair.algebraic_multiplicity
            << ", eigenspace dimension " << pair.eigenspace.size() << "):";
      for (const auto& v : pair.eigenspace) o.out << ' ' << vector_text(v);
      o.out << '\n';
    }
    if (eig.residual.degree() > 0) {
      o.out << "characteristic factor without rational roots: " << eig.residual.to_string("t") << '\n';
    }
  }
  return kAffirmative;
}

int cmd_vanishes(const Output& o, const Problem& p) {
  const Derivation& d = need_d(p);
  const Ideal& ideal = need_ideal(p);
  const Containment mode = o.settings.scheme_theoretic ? Containment::SchemeTheoretic : Containment::SetTheoretic;
  const GroebnerLimits limits = limits_of(o.settings);
  const char* mode_name = o.settings.scheme_theoretic ? "scheme-theoretic" : "set-theoretic";

  if (!p.h) {
    const VanishingReport r = check_vanishes_on(d, ideal, mode, limits);
    if (o.settings.json) {
      Json doc{{"mode", mode_name}, {"vanishes_on", r.vanishes}};
      if (r.witness) doc["witness"] = r.witness->to_string();
      emit(o, doc);
    } else {
      o.out << "vanishes on V(I) (" << mode_name << "): " << o.paint(yes_no(r.vanishes), r.vanishes) << '\n';
      if (r.witness) o.out << "witness minor: " << r.witness->to_string() << '\n';
    }
    return r.vanishes ? kAffirmative : kNegative;
  }

  const VanishingVerdict v = check_vanishing_on_curve(*p.h, d, ideal, mode, limits);
  if (o.settings.json) {
    Json doc{{"mode", mode_name},
             {"stabilizes", v.stabilizes},
             {"lambda", v.lambda ? Json(v.lambda->to_string()) : Json(nullptr)},
             {"is_euler", v.is_euler},
             {"smooth", v.smooth},
             {"vanishes_on", v.vanishes_on},
             {"reasons", v.reasons}};
    emit(o, doc);
  } else {
    o.out << "stabilizes: " << o.paint(yes_no(v.stabilizes), v.stabilizes);
    if (v.lambda) o.out << " (lambda = " << v.lambda->to_string() << ")";
    o.out << '\n';
    o.out << "Euler multiple: " << yes_no(v.is_euler) << '\n';
    o.out << "smooth: " << o.paint(yes_no(v.smooth), v.smooth) << '\n';
    o.out << "vanishes on V(I) (" << mode_name << "): " << o.paint(yes_no(v.vanishes_on), v.vanishes_on) << '\n';
    for (const auto& reason : v.reasons) o.out << "  - " << reason << '\n';
  }
  return v.all() ? kAffirmative : kNegative;
}

int cmd_cone_shape(const Output& o, const Problem& p) {
  const Polynomial& h = need_h(p);
  try {
    const ConeShape c = cone_shape(h);
    if (o.settings.json) {
      Json top = Json::array();
      for (const auto& x : c.coeff_xi_x4_top) top.push_back(x.to_string());
      emit(o, Json{{"cone_shape", true},
                   {"f", c.f.to_string()},
                   {"g", c.g.to_string()},
                   {"coeff_x3_top", c.coeff_x3_top.to_string()},
                   {"coeff_xi_x4_top", top},
                   {"x3_top_nonzero", c.x3_top_nonzero()},
                   {"some_xi_x4_top_nonzero", c.some_xi_x4_top_nonzero()}});
    } else {
      const auto names = h.context().projective_names();
      o.out << "h = f + " << names[4] << " * g\n";
      o.out << "f = " << c.f.to_string() << '\n';
      o.out << "g = " << c.g.to_string() << '\n';
      o.out << "top coefficient of " << names[3] << " in g: " << c.coeff_x3_top.to_string() << '\n';
      o.out << "top coefficients along " << names[4] << ":";
      for (const auto& x : c.coeff_xi_x4_top) o.out << ' ' << x.to_string();
      o.out << '\n';
    }
    return kAffirmative;
  } catch (const ConeShapeError& e) {
    const std::string monomial = monomial_to_string(h.context(), e.offending());
    if (o.settings.json) {
      emit(o, Json{{"cone_shape", false}, {"offending_monomial", monomial}});
    } else {
      o.out << o.paint("not cone-shaped", false) << ": monomial " << monomial << '\n';
    }
    return kNegative;
  }
}

int cmd_cases(const Output& o) {
  const auto table = degree_case_table();
  if (o.settings.json) {
    Json rows = Json::array();
    for (const auto& r : table) {
      rows.push_back(Json{{"h3", r.h3}, {"d", r.d}, {"r_d", r.r_d}, {"r_x", r.r_x}, {"verdict", r.verdict}});
    }
    emit(o, rows);
  } else {
    o.out << "H^3  d  r_D  r_X  verdict\n";
    for (const auto& r : table) {
      char line[64];
      std::snprintf(line, sizeof line, "%3d %2d %4d %4d  %s\n", r.h3, r.d, r.r_d, r.r_x, r.verdict.c_str());
      o.out << line;
    }
  }
  return kAffirmative;
}

int cmd_genus(const Output& o) {
  const long long g = fano_genus(o.settings.genus_r, o.settings.genus_h3);
  if (o.settings.json) {
    emit(o, Json{{"r", o.settings.genus_r}, {"h3", o.settings.genus_h3}, {"genus", g}});
  } else {
    o.out << g << '\n';
  }
  return kAffirmative;
}

int cmd_verify(const Output& o) {
  const auto results = verification::run_acceptance_suite();
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (o.settings.json) {
    Json checks = Json::array();
    for (const auto& r : results) {
      checks.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    emit(o, Json{{"passed", static_cast<std::size_t>(passed)}, {"total", results.size()}, {"checks", checks}});
  } else {
    for (const auto& r : results) {
      char timing[48];
      std::snprintf(timing, sizeof timing, " (%.3f s)", r.seconds);
      o.out << o.paint(r.passed ? "PASS" : "FAIL", r.passed) << ' ' << r.id << ". " << r.name << timing << '\n'
            << "     " << r.detail << '\n';
    }
    o.out << passed << '/' << results.size() << " checks passed\n";
  }
  return static_cast<std::size_t>(passed) == results.size() ? kAffirmative : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal) {
  Settings settings;
  const char* no_color = std::getenv("NO_COLOR");
  settings.color = terminal && (no_color == nullptr || *no_color == '\0');

  CLI::App app{"Exact polynomial, derivation and ideal computations on projective hypersurfaces", "vfkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", settings.json, "Machine-readable JSON output");
  app.add_flag("--scheme-theoretic", settings.scheme_theoretic, "Use ideal membership instead of radical membership");
  app.add_option("--max-steps", settings.max_steps, "Reduction step cap for Groebner computations")
      ->check(CLI::PositiveNumber);

  struct Entry {
    const char* name;
    const char* help;
    std::function<int(const Output&, const Problem&)> run;
  };
  const std::vector<Entry> file_commands{
      {"gb", "Reduced Groebner basis of `ideal`", cmd_gb},
      {"member", "Is `h` in `ideal`?", [](const Output& o, const Problem& p) { return cmd_member(o, p, false); }},
      {"radical-member", "Is `h` in the radical of `ideal`?",
       [](const Output& o, const Problem& p) { return cmd_member(o, p, true); }},
      {"smooth", "Jacobian smoothness test for {h = 0}", cmd_smooth},
      {"stabilizer", "Solution space of D_A h = lambda h", cmd_stabilizer},
      {"zeros", "Zero locus of the field induced by `D`", cmd_zeros},
      {"vanishes", "Does `D` vanish on V(ideal)? With `h`, the full verdict", cmd_vanishes},
      {"cone-shape", "Decompose h = f(x0, x1, x2) + x4 * g", cmd_cone_shape},
  };

  std::vector<std::pair<CLI::App*, const Entry*>> file_apps;
  for (const auto& entry : file_commands) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    sub->add_option("file", settings.file, "Problem file (JSON)")->required();
    file_apps.emplace_back(sub, &entry);
  }
  CLI::App* cases = app.add_subcommand("cases", "Index arithmetic case table");
  CLI::App* genus = app.add_subcommand("genus", "Genus of a Fano threefold of index r and degree H^3");
  genus->add_option("r", settings.genus_r, "Fano index")->required();
  genus->add_option("h3", settings.genus_h3, "Degree H^3")->required();
  CLI::App* verify = app.add_subcommand("verify-paper", "Run the built-in acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const Output output{out, settings};
  try {
    for (const auto& [sub, entry] : file_apps) {
      if (sub->parsed()) return entry->run(output, read_problem_file(settings.file));
    }
    if (cases->parsed()) return cmd_cases(output);
    if (genus->parsed()) return cmd_genus(output);
    if (verify->parsed()) return cmd_verify(output);
  } catch (const ResourceLimitExceeded& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace vfkit::cli
