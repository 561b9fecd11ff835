#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specz/report.hpp"

namespace specz {

namespace detail {

struct UsageError {
  std::string message;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read input file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Point parse_point(const std::string& text) {
  Point p;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char ch) { return std::isspace(ch); }),
               part.end());
    if (!part.empty() && part[0] == '(') part.erase(0, 1);
    if (!part.empty() && part.back() == ')') part.pop_back();
    if (part.empty()) throw UsageError{"empty coordinate in point '" + text + "'"};
    try {
      p.push_back(Rational::parse(part));
    } catch (const Error&) {
      throw UsageError{"bad coordinate '" + part + "' in point '" + text + "'"};
    }
  }
  return p;
}

inline std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

inline std::string basis_lines(const std::vector<std::string>& gens) {
  std::string s;
  for (const auto& g : gens) s += "  " + g + "\n";
  return s.empty() ? "  0\n" : s;
}

template <class K>
std::vector<std::string> basis_strings(const Ideal<K>& i) {
  std::vector<std::string> out;
  for (const auto& g : i.basis()) out.push_back(g.str());
  return out;
}

template <class K>
std::string ideal_invariant(const std::string& what, const Ideal<K>& i) {
  if (what == "dim") return std::to_string(krull_dim(i));
  if (what == "height") return std::to_string(height(i));
  if (what == "length") return std::to_string(finite_colength(i));
  if (what == "grade") {
    Grade g = grade_on_ring(i);
    return std::to_string(g.value) + (g.zero_ideal ? " (zero ideal)" : "");
  }
  auto l = PresentedModule<K>::cyclic(i);
  if (what == "depth") return std::to_string(projdim_and_depth(l).second);
  if (what == "projdim") return std::to_string(projdim_and_depth(l).first);
  std::string s;
  for (const auto& g : basis_strings(annihilator(l))) s += (s.empty() ? "" : ", ") + g;
  return "(" + s + ")";
}

template <class K>
std::string module_invariant(const std::string& what, const PresentedModule<K>& l) {
  if (what == "dim") return std::to_string(module_dimension(l));
  if (what == "length") {
    auto len = module_colength(l);
    if (!len) fail(ErrorCode::NotZeroDimensional, "the module does not have finite length");
    return std::to_string(*len);
  }
  if (what == "depth") return std::to_string(projdim_and_depth(l).second);
  if (what == "projdim") return std::to_string(projdim_and_depth(l).first);
  Ideal<K> ann = annihilator(l);
  if (what == "height") return std::to_string(height(ann));
  if (what == "grade") {
    Grade g = grade_on_ring(ann);
    return std::to_string(g.value) + (g.zero_ideal ? " (zero ideal)" : "");
  }
  std::string s;
  for (const auto& g : basis_strings(ann)) s += (s.empty() ? "" : ", ") + g;
  return "(" + s + ")";
}

template <class K>
std::string locus_text(const std::string& kind, const Ideal<K>& i) {
  std::ostringstream out;
  if (kind == "sing") {
    auto rep = jacobian_singular_locus(i);
    out << "Sing locus:\n" << basis_lines(basis_strings(rep.ideal));
    for (std::size_t k = 0; k < rep.layers.size(); ++k) {
      const auto& layer = rep.layers[k];
      out << "layer " << k << ": height " << layer.r << "\n";
      out << " minors part:\n" << basis_lines(basis_strings(layer.j1));
      out << " top part:\n" << basis_lines(basis_strings(layer.top));
      out << " residual:\n" << basis_lines(basis_strings(layer.residual));
    }
  } else {
    auto rep = ncm_locus(i);
    out << "NCM locus:\n" << basis_lines(basis_strings(rep.ideal));
    for (std::size_t k = 0; k < rep.ext_annihilators.size(); ++k)
      out << "a_" << k << ":\n" << basis_lines(basis_strings(rep.ext_annihilators[k]));
  }
  return out.str();
}

inline int report_exit_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CheckStatus::Fail || r.status == CheckStatus::Anomaly) return 1;
  return 0;
}

inline bool is_input_error(ErrorCode c) {
  return c == ErrorCode::SyntaxError || c == ErrorCode::UnknownName || c == ErrorCode::ArityMismatch;
}

}  // namespace detail

/// Command-line entry point; `args` excludes the program name. Returns 0
/// when every check passes (or is skipped), 1 on a failed check or a
/// computation error, 2 on a usage error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Specialization of ideals and modules over Q(u)[X]", "specz"};
  app.require_subcommand(1);

  std::string input, format = "text", alpha_text;
  bool no_timings = false;

  auto* spec = app.add_subcommand("specialize", "Substitute a parameter point into an ideal, module or matrix");
  std::string ideal_name, module_name, matrix_name;
  spec->add_option("--input", input, "Session file")->required();
  auto* o_ideal = spec->add_option("--ideal", ideal_name, "Ideal name");
  auto* o_module = spec->add_option("--module", module_name, "Module name");
  auto* o_matrix = spec->add_option("--matrix", matrix_name, "Matrix name");
  o_ideal->excludes(o_module)->excludes(o_matrix);
  o_module->excludes(o_matrix);
  spec->add_option("--alpha", alpha_text, "Point, comma separated")->required();
  spec->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* inv = app.add_subcommand("invariant", "Compute an invariant of a named object");
  std::string what, object;
  inv->add_option("--input", input, "Session file")->required();
  inv->add_option("--what", what, "Invariant")
      ->required()
      ->check(CLI::IsMember({"dim", "height", "depth", "projdim", "length", "grade", "ann"}));
  inv->add_option("--object", object, "Ideal or module name")->required();
  inv->add_option("--alpha", alpha_text, "Compute at this point instead of over Q(u)");

  auto* loc = app.add_subcommand("locus", "Singular or non-Cohen-Macaulay locus of an ideal");
  std::string kind;
  loc->add_option("--input", input, "Session file")->required();
  loc->add_option("--kind", kind, "sing or ncm")->required()->check(CLI::IsMember({"sing", "ncm"}));
  loc->add_option("--object", object, "Ideal name")->required();
  loc->add_option("--alpha", alpha_text, "Compute at this point instead of over Q(u)");

  auto* chk = app.add_subcommand("check", "Run theorem checks");
  std::string theorem, subjects_text;
  int trials = 0;
  std::uint64_t seed = 0;
  long bound = 0;
  std::vector<std::string> alpha_list;
  chk->add_option("--input", input, "Session file")->required();
  auto* o_theorem = chk->add_option("--theorem", theorem, "Theorem tag");
  auto* o_subjects = chk->add_option("--subjects", subjects_text, "Comma separated subject names");
  o_subjects->needs(o_theorem);
  auto* o_trials = chk->add_option("--trials", trials, "Sampled points per check")->check(CLI::PositiveNumber);
  auto* o_seed = chk->add_option("--seed", seed, "Sampling seed");
  auto* o_bound = chk->add_option("--bound", bound, "Coordinate bound")->check(CLI::PositiveNumber);
  chk->add_option("--alpha", alpha_list, "Extra point to test (repeatable)");
  chk->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  chk->add_flag("--no-timings", no_timings, "Report elapsed_ms as 0");

  auto* rep = app.add_subcommand("report", "Run every check in a session and print the report");
  rep->add_option("--input", input, "Session file")->required();
  rep->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  rep->add_flag("--no-timings", no_timings, "Report elapsed_ms as 0");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  auto emit = [&](std::vector<CheckReport> reports) {
    if (no_timings)
      for (auto& r : reports) r.elapsed_ms = 0;
    out << emit_report(reports, parse_report_format(format));
    if (format == "json") out << "\n";
    return detail::report_exit_code(reports);
  };

  try {
    Session s;
    try {
      s = parse_session(detail::read_file(input));
    } catch (const Error& e) {
      if (!detail::is_input_error(e.code())) throw;
      throw detail::UsageError{input + ": " + e.what()};
    }
    std::optional<Point> alpha;
    if (!alpha_text.empty()) {
      alpha = detail::parse_point(alpha_text);
      if (alpha->size() != s.ring->nparams())
        throw detail::UsageError{"--alpha has " + std::to_string(alpha->size()) + " coordinates, the ring has " +
                                 std::to_string(s.ring->nparams()) + " parameters"};
    }
    auto require_kind = [&](const std::string& name, std::initializer_list<ObjKind> kinds) {
      auto k = s.kind_of(name);
      if (!k) throw detail::UsageError{"unknown object '" + name + "'"};
      if (std::find(kinds.begin(), kinds.end(), *k) == kinds.end())
        throw detail::UsageError{"'" + name + "' is a " + std::string(to_string(*k))};
      return *k;
    };
    const auto& params = s.ring->params();

    if (spec->parsed()) {
      nlohmann::ordered_json j;
      std::vector<std::string> gens;
      std::string cert;
      if (!ideal_name.empty()) {
        require_kind(ideal_name, {ObjKind::Ideal});
        auto si = specialize_ideal(s.ideal(ideal_name), *alpha);
        for (const auto& g : si.ideal.gens()) gens.push_back(g.str());
        cert = si.cert.str(params);
        j["ideal"] = ideal_name;
      } else if (!module_name.empty()) {
        require_kind(module_name, {ObjKind::Module, ObjKind::Ideal});
        FModule m = s.kind_of(module_name) == ObjKind::Ideal
                        ? FModule::cyclic(FIdeal(s.ring, certify_ideal(s.ideal(module_name)).cleared))
                        : s.module(module_name);
        auto sm = specialize_module(m, *alpha);
        gens.push_back(sm.module.presentation().str());
        cert = sm.cert.str(params);
        j["module"] = module_name;
      } else if (!matrix_name.empty()) {
        require_kind(matrix_name, {ObjKind::Matrix});
        auto [m, c] = specialize_matrix(s.matrix(matrix_name), *alpha);
        gens.push_back(m.str());
        cert = c.str(params);
        j["matrix"] = matrix_name;
      } else {
        throw detail::UsageError{"specialize needs --ideal, --module or --matrix"};
      }
      if (format == "json") {
        j["alpha"] = detail::point_json(*alpha);
        j["generators"] = gens;
        j["certificate"] = cert;
        out << j.dump(2) << "\n";
      } else {
        out << "at " << point_str(*alpha) << ":\n" << detail::basis_lines(gens) << "certificate: " << cert << "\n";
      }
      return 0;
    }

    if (inv->parsed() || loc->parsed()) {
      ObjKind k = loc->parsed() ? require_kind(object, {ObjKind::Ideal})
                                : require_kind(object, {ObjKind::Ideal, ObjKind::Module});
      std::string text;
      if (k == ObjKind::Ideal && !alpha) {
        const FIdeal& i = s.ideal(object);
        text = loc->parsed() ? detail::locus_text(kind, i) : detail::ideal_invariant(what, i);
      } else if (k == ObjKind::Ideal) {
        auto si = specialize_ideal(s.ideal(object), *alpha);
        text = loc->parsed() ? detail::locus_text(kind, si.ideal) : detail::ideal_invariant(what, si.ideal);
      } else if (!alpha) {
        text = detail::module_invariant(what, s.module(object));
      } else {
        text = detail::module_invariant(what, specialize_module(s.module(object), *alpha).module);
      }
      out << text << (text.empty() || text.back() != '\n' ? "\n" : "");
      return 0;
    }

    std::vector<CheckSpec> checks;
    if (chk->parsed() && !theorem.empty() && !subjects_text.empty()) {
      if (!find_tag(theorem)) throw detail::UsageError{"unknown theorem tag '" + theorem + "'"};
      if (!*o_seed) throw detail::UsageError{"--seed is required with --subjects"};
      CheckSpec c;
      c.tag = theorem;
      c.subjects = detail::split_names(subjects_text);
      const TagInfo* info = find_tag(theorem);
      if (c.subjects.size() != info->slots.size())
        throw detail::UsageError{theorem + " takes " + std::to_string(info->slots.size()) + " subject(s)"};
      for (const auto& n : c.subjects) require_kind(n, {ObjKind::Ideal, ObjKind::Module, ObjKind::Complex});
      checks.push_back(c);
    } else {
      for (const auto& c : s.checks)
        if (theorem.empty() || c.tag == theorem) checks.push_back(c);
      if (!theorem.empty() && checks.empty()) {
        if (!find_tag(theorem)) throw detail::UsageError{"unknown theorem tag '" + theorem + "'"};
        throw detail::UsageError{"the session has no " + theorem + " check; pass --subjects"};
      }
    }
    if (chk->parsed()) {
      for (auto& c : checks) {
        if (*o_seed) c.seed = seed;
        if (*o_trials) {
          c.trials = trials;
          c.trials_given = true;
        }
        if (*o_bound) c.bound = bound;
        for (const auto& a : alpha_list) {
          Point p = detail::parse_point(a);
          if (p.size() != s.ring->nparams()) throw detail::UsageError{"--alpha '" + a + "' has the wrong arity"};
          c.alphas.push_back(p);
        }
      }
    }
    std::vector<CheckReport> reports;
    for (const auto& c : checks) reports.push_back(run_check(s, c));
    return emit(std::move(reports));
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace specz
