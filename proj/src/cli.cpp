#include "modrep/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modrep/error.hpp"
#include "modrep/exact.hpp"
#include "modrep/fairness.hpp"
#include "modrep/suites.hpp"

namespace modrep {

namespace {

struct Emitter {
  std::ostream& out;
  std::string path;
  void operator()(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

/// Splits at commas outside braces and parentheses, so "perm{0,5},triv"
/// yields two names.
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> parts(1);
  int depth = 0;
  for (char c : s) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == ',' && depth == 0) parts.emplace_back();
    else parts.back() += c;
  }
  return parts;
}

unsigned parse_uint(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError("bad " + what + " '" + s + "'");
  return static_cast<unsigned>(v);
}

GroupPtr resolve_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return group_from_file(spec);
  try {
    return builtin_group(spec);
  } catch (const InputError&) {
    throw InputError("unknown group '" + spec + "' (neither a file nor a builtin name)");
  }
}

/// "4", "F4", "F_4" or "2^2".
FieldPtr resolve_field(std::string spec) {
  if (spec.rfind("F_", 0) == 0) spec = spec.substr(2);
  else if (spec.rfind("F", 0) == 0) spec = spec.substr(1);
  unsigned q = 0;
  if (auto caret = spec.find('^'); caret != std::string::npos) {
    unsigned p = parse_uint(spec.substr(0, caret), "field");
    unsigned k = parse_uint(spec.substr(caret + 1), "field");
    return FiniteField::create(p, k);
  }
  q = parse_uint(spec, "field");
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned k = 0;
    for (unsigned r = q; r > 1; r /= p) {
      if (r % p != 0) throw InputError("field order " + std::to_string(q) + " is not a prime power");
      ++k;
    }
    return FiniteField::create(p, k);
  }
  throw InputError("bad field '" + spec + "'");
}

Subgroup resolve_subgroup(const GroupPtr& g, const std::string& spec) {
  if (spec == "G" || spec == "all") return Subgroup::whole(g);
  if (spec == "e" || spec.empty()) return Subgroup::trivial(g);
  std::vector<GroupElement> gens;
  for (const std::string& part : split(spec, ',')) {
    if (part.empty()) continue;
    if (auto x = g->find(part)) {
      gens.push_back(*x);
      continue;
    }
    const unsigned i = parse_uint(part, "element index");
    if (i >= g->order()) throw InputError("element index " + part + " out of range");
    gens.push_back(i);
  }
  return subgroup_generate(g, gens);
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, const std::string& catalog_path, std::uint64_t seed,
               const std::string& format, const Emitter& emit) {
  if (!is_suite(suite)) throw InputError("unknown suite '" + suite + "'");
  const Catalog catalog = catalog_path.empty() ? default_catalog() : load_catalog(catalog_path);
  const Report report = run_suite(suite, catalog, seed);
  emit(format == "text" ? report.to_text() : dump(report.to_json()));
  return report.all_pass() ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- fairness

int cmd_fairness_sl2(unsigned p, unsigned m, unsigned n, std::optional<unsigned> level, std::optional<unsigned> a,
                     const std::string& format, const Emitter& emit) {
  if (m < 1 || n < 1) throw PreconditionError("m >= 1 and n >= 1 required");
  if (level) {
    if (a) {
      if (auto v = sl2_precision_violation(*level, m, n, *a)) throw PreconditionError("precision: " + *v);
    } else if (auto v = sl2_precision_violation(*level, m, n, 0)) {
      throw PreconditionError("precision: " + *v);
    }
  }
  const FairnessCertificate cert = [&] {
    FairnessCertificate c = sl2_fair_refine(m, n);
    c.p = p;
    return c;
  }();
  json j;
  j["schema"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["mode"] = "sl2";
  j["certificate"] = to_json(cert);
  j["certificate_valid"] = cert.valid();
  bool ok = cert.valid();
  std::string text = "sl2 p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                     " n'=" + std::to_string(cert.n_prime) + " strict=" + cert.strict_component +
                     (cert.valid() ? " certificate=valid\n" : " certificate=INVALID\n");
  for (const auto& c : cert.components) {
    text += "  " + c.name + ": " + c.lhs.str() + " vs " + c.rhs.str() +
            (c.strict_for_all_a ? "  strict for all a" : (c.weak_for_all_a ? "  weak" : "  FAILS")) + "\n";
  }
  if (level) {
    json runs = json::array();
    std::vector<unsigned> as;
    if (a) as.push_back(*a);
    else
      for (unsigned t = 0; !sl2_precision_violation(*level, m, n, t); ++t) as.push_back(t);
    for (unsigned t : as) {
      const DepthTriple formula = sl2_depth_intersect(m, n, t);
      const DepthTriple brute = sl2_depth_bruteforce(p, *level, m, n, t);
      const bool agree = formula == brute;
      ok = ok && agree;
      runs.push_back(json{{"a", t}, {"formula", to_json(formula)}, {"bruteforce", to_json(brute)}, {"agree", agree}});
      text += "  oracle N=" + std::to_string(*level) + " a=" + std::to_string(t) + ": " + (agree ? "pass" : "FAIL") +
              "\n";
    }
    j["oracle"] = json{{"N", *level}, {"runs", std::move(runs)}, {"agreement", ok ? "pass" : "fail"}};
  }
  emit(format == "text" ? text : dump(j));
  return ok ? kExitOk : kExitFailed;
}

int cmd_fairness_finite(const std::string& group, const std::string& ks, const std::string& hs,
                        const std::string& hps, const std::string& format, const Emitter& emit) {
  if (group.empty()) throw InputError("finite mode needs --group");
  const GroupPtr g = resolve_group(group);
  const Subgroup k = ks.empty() ? Subgroup::whole(g) : resolve_subgroup(g, ks);
  const Subgroup h = resolve_subgroup(g, hs);
  const Subgroup hp = resolve_subgroup(g, hps);
  if (!hp.is_subgroup_of(h) || !h.is_subgroup_of(k)) throw InputError("need H' <= H <= K");
  const WitnessReport r = fairness_witness_search(Subgroup::whole(g), k, h, hp);
  json j;
  j["schema"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["mode"] = "finite";
  j["report"] = to_json(r);
  std::string text = "finite K=" + subgroup_tag(k) + " H=" + subgroup_tag(h) + " H'=" + subgroup_tag(hp) + ": ";
  text += r.found() ? "witness g=" + g->label(*r.g) + " intersection=" + subgroup_tag(*r.intersection) + "\n"
                    : "exhausted (strict inclusion for every g)\n";
  emit(format == "text" ? text : dump(j));
  return kExitOk;
}

// ------------------------------------------------------------------ stable

int cmd_stable(const std::string& group, const std::string& field, const std::string& us,
               const std::vector<std::string>& pairs, const std::vector<std::string>& rep_files, std::uint64_t seed,
               const std::string& format, const Emitter& emit) {
  if (group.empty()) throw InputError("stable needs --group");
  const GroupPtr g = resolve_group(group);
  const FieldPtr f = resolve_field(field);
  const Subgroup whole = Subgroup::whole(g);
  const Subgroup u = resolve_subgroup(g, us);
  std::vector<NamedRep> objects = rep_catalog(whole, f, 4, seed);
  for (const std::string& spec : rep_files) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw InputError("--rep expects NAME=FILE");
    std::ifstream in(spec.substr(eq + 1));
    if (!in) throw InputError("cannot read '" + spec.substr(eq + 1) + "'");
    json rj;
    try {
      rj = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed rep file: ") + e.what());
    }
    const Rep r = rep_from_json(g, rj);
    if (!same_field(r.field(), f)) throw InputError("rep field differs from --field");
    objects.push_back({spec.substr(0, eq), r});
  }
  auto find = [&](const std::string& name) -> const Rep& {
    for (const auto& o : objects)
      if (o.name == name) return o.rep;
    throw InputError("unknown object '" + name + "'");
  };

  bool ok = true;
  json jo = json::array();
  std::string text = "objects (U=" + subgroup_tag(u) + ", " + f->name() + ")\n";
  text += "name\tdim\tT\tOmega\tproj\tinj\tcross-check\n";
  for (const auto& o : objects) {
    const bool pr = relative_projectivity_test(o.rep, u, RelativeSide::projective).holds;
    const bool in = relative_projectivity_test(o.rep, u, RelativeSide::injective).holds;
    const std::size_t t = suspension_T(o.rep, u).rep.dim();
    const std::size_t om = loop_Omega(o.rep, u).rep.dim();
    ok = ok && pr == in;
    jo.push_back(json{{"name", o.name}, {"dim", o.rep.dim()}, {"T_dim", t}, {"Omega_dim", om},
                      {"relatively_projective", pr}, {"relatively_injective", in},
                      {"frobenius_cross_check", pr == in ? "pass" : "fail"}});
    text += o.name + "\t" + std::to_string(o.rep.dim()) + "\t" + std::to_string(t) + "\t" + std::to_string(om) +
            "\t" + (pr ? "yes" : "no") + "\t" + (in ? "yes" : "no") + "\t" + (pr == in ? "pass" : "FAIL") + "\n";
  }
  json jp = json::array();
  if (!pairs.empty()) text += "pairs\nsource\ttarget\thom\tstable(inj)\tstable(proj)\n";
  for (const std::string& spec : pairs) {
    const auto names = split_top(spec);
    if (names.size() != 2) throw InputError("--pair expects SOURCE,TARGET");
    const Rep& a = find(names[0]);
    const Rep& b = find(names[1]);
    const auto inj = stable_hom(a, b, u, StableFlavor::injective);
    const auto proj = stable_hom(a, b, u, StableFlavor::projective);
    ok = ok && inj.stable_dim == proj.stable_dim;
    jp.push_back(json{{"source", names[0]}, {"target", names[1]}, {"injective", to_json(inj)},
                      {"projective", to_json(proj)}});
    text += names[0] + "\t" + names[1] + "\t" + std::to_string(inj.total_dim) + "\t" +
            std::to_string(inj.stable_dim) + "\t" + std::to_string(proj.stable_dim) + "\n";
  }
  json j;
  j["schema"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["mode"] = "stable";
  j["group"] = to_json(*g);
  j["field"] = to_json(*f);
  j["U"] = to_json(u);
  j["seed"] = seed;
  j["objects"] = std::move(jo);
  j["pairs"] = std::move(jp);
  emit(format == "text" ? text : dump(j));
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular representation verification tool"};
  app.require_subcommand(1);
  std::string format = "json", out_path;
  std::uint64_t seed = 0;

  auto* verify = app.add_subcommand("verify", "Run an invariant suite over a group/field catalog");
  std::string suite, catalog;
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--catalog", catalog, "Catalog JSON (default: built-in catalog)");
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* fair = app.add_subcommand("fairness", "Fairness witnesses and SL2 certificates");
  std::string mode = "sl2", group, ks, hs, hps;
  unsigned p = 2, m = 1, n = 1;
  std::optional<unsigned> level, a;
  fair->add_option("--mode", mode)->check(CLI::IsMember({"finite", "sl2"}));
  fair->add_option("--p", p);
  fair->add_option("--m", m);
  fair->add_option("--n", n);
  fair->add_option("--oracle-N", level, "Brute-force precision p^N");
  fair->add_option("--a", a, "Single torus exponent for the oracle");
  fair->add_option("--group", group, "Group JSON file or builtin name");
  fair->add_option("--K", ks, "Generators of K (indices or labels, comma separated)");
  fair->add_option("--H", hs);
  fair->add_option("--Hprime", hps);
  fair->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  fair->add_option("--out", out_path);

  auto* stable = app.add_subcommand("stable", "Stable Hom and T/Omega tables");
  std::string field = "2", us = "e";
  std::vector<std::string> pairs, reps;
  stable->add_option("--group", group)->required();
  stable->add_option("--field", field, "Field order q (e.g. 4 or 3^2)");
  stable->add_option("--U", us, "Generators of U, 'e' or 'G'");
  stable->add_option("--pair", pairs, "SOURCE,TARGET object names");
  stable->add_option("--rep", reps, "Extra object NAME=FILE");
  stable->add_option("--seed", seed);
  stable->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  stable->add_option("--out", out_path);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const Emitter emit{out, out_path};
  try {
    if (*verify) return cmd_verify(suite, catalog, seed, format, emit);
    if (*fair) {
      if (mode == "sl2") return cmd_fairness_sl2(p, m, n, level, a, format, emit);
      return cmd_fairness_finite(group, ks, hs, hps, format, emit);
    }
    return cmd_stable(group, field, us, pairs, reps, seed, format, emit);
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace modrep
