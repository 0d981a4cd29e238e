#include "modrep/suites.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "modrep/error.hpp"
#include "modrep/jordan.hpp"

namespace modrep {

namespace {

using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

Rng case_rng(std::uint64_t seed, const std::string& id) { return Rng(seed ^ fnv1a(id)); }

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f->element(static_cast<std::uint32_t>(below(rng, f->order())));
  return m;
}

Matrix random_invertible(const FieldPtr& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

Vector random_vector(const FieldPtr& f, std::size_t n, Rng& rng) {
  Vector v(n);
  for (auto& x : v) x = f->element(static_cast<std::uint32_t>(below(rng, f->order())));
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s.code == 0; });
}

// Counts checks and keeps the first few failure descriptions.
class Checks {
 public:
  void expect(bool cond, const std::string& what) {
    ++total_;
    if (!cond) {
      ++failed_;
      if (failures_.size() < 8) failures_.push_back(what);
    }
  }
  bool ok() const { return failed_ == 0; }
  std::size_t total() const { return total_; }
  void write(json& d) const {
    d["checks"] = total_;
    d["failed"] = failed_;
    if (!failures_.empty()) d["failures"] = failures_;
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

template <class Body>
CaseResult run_case(std::string id, const json& inputs, Body&& body) {
  CaseResult c;
  c.id = std::move(id);
  c.inputs_digest = fnv1a_hex(inputs.dump());
  c.details = json::object();
  try {
    Checks checks;
    body(checks, c.details);
    checks.write(c.details);
    c.outcome = checks.ok() ? Outcome::pass : Outcome::fail;
  } catch (const std::exception& e) {
    c.outcome = Outcome::error;
    c.details["error"] = e.what();
  }
  return c;
}

std::string case_id(const NamedGroup& g, const FieldPtr& f) { return g.name + "/" + f->name(); }

json base_inputs(const NamedGroup& g, const FieldPtr& f) {
  return json{{"group", g.name}, {"table_digest", fnv1a_hex(json(g.group->table()).dump())}, {"field", to_json(*f)}};
}

// a and b conjugate by an element of `within`.
bool conjugate_in(const Subgroup& a, const Subgroup& b, const Subgroup& within) {
  if (a.order() != b.order()) return false;
  for (GroupElement x : within.members()) {
    if (conjugate(a, x) == b) return true;
  }
  return false;
}

}  // namespace

// ------------------------------------------------------------------ catalog

Catalog default_catalog() {
  Catalog c;
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "C9", "S3", "D4", "Q8", "A4"}) {
    c.groups.push_back(NamedGroup{name, builtin_group(name)});
  }
  c.fields = {FiniteField::create(2), FiniteField::create(3), FiniteField::create(2, 2), FiniteField::create(3, 2)};
  return c;
}

Catalog catalog_from_json(const json& j, const std::string& base_dir) {
  Catalog c;
  try {
    for (const auto& g : j.at("groups")) {
      if (g.is_string()) {
        c.groups.push_back(NamedGroup{g.get<std::string>(), builtin_group(g.get<std::string>())});
      } else if (g.contains("builtin")) {
        const auto name = g.at("builtin").get<std::string>();
        c.groups.push_back(NamedGroup{g.value("name", name), builtin_group(name)});
      } else {
        const auto file = g.at("file").get<std::string>();
        const auto path = (std::filesystem::path(base_dir) / file).string();
        c.groups.push_back(NamedGroup{g.value("name", std::filesystem::path(file).stem().string()), group_from_file(path)});
      }
    }
    for (const auto& f : j.at("fields")) c.fields.push_back(field_from_json(f));
  } catch (const json::exception& e) {
    throw InputError(std::string("catalog: ") + e.what());
  }
  if (c.groups.empty() || c.fields.empty()) throw InputError("catalog: needs at least one group and one field");
  return c;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("catalog " + path + ": " + e.what());
  }
  return catalog_from_json(j, std::filesystem::path(path).parent_path().string());
}

std::string subgroup_tag(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

std::vector<NamedRep> rep_catalog(const Subgroup& g, const FieldPtr& f, std::size_t max_dim, std::uint64_t seed,
                                  std::size_t cap) {
  std::vector<NamedRep> base{{"triv", Rep::trivial(g, f)}};
  const auto& gens = g.generators();
  const std::size_t base_cap = cap > 3 ? cap - 3 : 1;

  // Nontrivial 1-dimensional representations, by generator values.
  if (!gens.empty()) {
    std::vector<std::uint32_t> codes(gens.size(), 1);
    std::size_t tries = 0;
    while (base.size() < base_cap && tries++ < 4096) {
      const bool trivial = std::all_of(codes.begin(), codes.end(), [](std::uint32_t c) { return c == 1; });
      if (!trivial) {
        std::map<GroupElement, Matrix> images;
        std::string name = "chi(";
        for (std::size_t i = 0; i < gens.size(); ++i) {
          Matrix m(f, 1, 1);
          m(0, 0) = f->element(codes[i]);
          images.emplace(gens[i], m);
          name += (i ? "," : "") + std::to_string(codes[i]);
        }
        try {
          base.push_back({name + ")", rep_build(g, f, images)});
        } catch (const InputError&) {
        }
      }
      std::size_t i = 0;
      while (i < codes.size() && ++codes[i] == f->order()) codes[i++] = 1;
      if (i == codes.size()) break;
    }
  }

  // Permutation representations on cosets, smallest index first.
  std::vector<Subgroup> chosen;
  auto subs = all_subgroups(g);
  std::reverse(subs.begin(), subs.end());
  for (const Subgroup& u : subs) {
    const std::size_t idx = g.order() / u.order();
    if (idx < 2 || idx > max_dim || base.size() >= base_cap) continue;
    if (std::any_of(chosen.begin(), chosen.end(), [&](const Subgroup& s) { return conjugate_in(s, u, g); })) continue;
    chosen.push_back(u);
    base.push_back({u.order() == 1 ? "reg" : "perm" + subgroup_tag(u), rep_induce(Rep::trivial(u, f), g).rep});
  }

  // Unipotent Jordan blocks on a cyclic group whose order p divides.
  if (gens.size() == 1 && g.order() % f->characteristic() == 0) {
    for (std::size_t size = 2; size <= max_dim && base.size() < base_cap; ++size) {
      Matrix j = Matrix::identity(f, size);
      for (std::size_t i = 0; i + 1 < size; ++i) j(i, i + 1) = f->one();
      try {
        base.push_back({"J" + std::to_string(size), rep_build(g, f, {{gens[0], j}})});
      } catch (const InputError&) {
        break;
      }
    }
  }

  std::vector<NamedRep> out = base;
  std::size_t sums = 0;
  for (std::size_t i = 0; i < base.size() && sums < 2; ++i) {
    for (std::size_t j = base.size(); j-- > i && sums < 2;) {
      if (base[i].rep.dim() + base[j].rep.dim() > max_dim) continue;
      out.push_back({base[i].name + "+" + base[j].name, direct_sum(std::vector<Rep>{base[i].rep, base[j].rep})});
      ++sums;
    }
  }
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i].rep.dim() >= 2) {
      Rng rng(seed ^ fnv1a(out[i].name + "/" + f->name() + "/" + std::to_string(g.order())));
      NamedRep r{"rand(" + out[i].name + ")", conjugate_basis(out[i].rep, random_invertible(f, out[i].rep.dim(), rng))};
      out.push_back(std::move(r));
      break;
    }
  }
  if (out.size() > cap) out.resize(cap);
  return out;
}

// ---------------------------------------------------------------- frobenius

Report suite_frobenius(const Catalog& catalog, std::uint64_t seed) {
  Report report{"frobenius", seed, {}};
  for (const auto& ng : catalog.groups) {
    const Subgroup g = Subgroup::whole(ng.group);
    for (const auto& f : catalog.fields) {
      const auto vs = rep_catalog(g, f, 4, seed);
      for (const Subgroup& u : all_subgroups(g)) {
        json inputs = base_inputs(ng, f);
        inputs["U"] = to_json(u);
        inputs["seed"] = seed;
        report.cases.push_back(run_case(case_id(ng, f) + "/U" + subgroup_tag(u), inputs, [&](Checks& checks, json& d) {
          const auto ws = rep_catalog(u, f, 4, seed);
          std::size_t pairs = 0, transports = 0;
          for (const auto& w : ws) {
            const InducedRep ind = rep_induce(w.rep, g);
            checks.expect(ind.rep.dim() == u.index_in(g) * w.rep.dim(), "dim ind " + w.name);
            for (const auto& v : vs) {
              const Rep vu = rep_restrict(v.rep, u);
              const std::string tag = w.name + "|" + v.name;
              ++pairs;
              const HomSpace low_u = hom_space(w.rep, vu);
              const HomSpace low_g = hom_space(ind.rep, v.rep);
              const HomSpace up_u = hom_space(vu, w.rep);
              const HomSpace up_g = hom_space(v.rep, ind.rep);
              checks.expect(low_u.dim() == low_g.dim(), "lower dims " + tag);
              checks.expect(up_u.dim() == up_g.dim(), "upper dims " + tag);
              for (std::size_t i = 0; i < low_u.dim(); ++i) {
                const GMap t = frobenius_transport(w.rep, v.rep, Adjunction::lower, low_u.element(i));
                checks.expect(low_g.contains(t.matrix()), "lower image " + tag);
                checks.expect(frobenius_transport_back(w.rep, v.rep, Adjunction::lower, t) == low_u.element(i),
                              "lower round trip " + tag);
                ++transports;
              }
              for (std::size_t i = 0; i < low_g.dim(); ++i) {
                const GMap phi(ind.rep, v.rep, low_g.element(i), GMap::Unchecked{});
                const Matrix back = frobenius_transport_back(w.rep, v.rep, Adjunction::lower, phi);
                checks.expect(frobenius_transport(w.rep, v.rep, Adjunction::lower, back).matrix() == phi.matrix(),
                              "lower reverse round trip " + tag);
                ++transports;
              }
              for (std::size_t i = 0; i < up_u.dim(); ++i) {
                const GMap t = frobenius_transport(w.rep, v.rep, Adjunction::upper, up_u.element(i));
                checks.expect(up_g.contains(t.matrix()), "upper image " + tag);
                checks.expect(frobenius_transport_back(w.rep, v.rep, Adjunction::upper, t) == up_u.element(i),
                              "upper round trip " + tag);
                ++transports;
              }
              for (std::size_t i = 0; i < up_g.dim(); ++i) {
                const GMap phi(v.rep, ind.rep, up_g.element(i), GMap::Unchecked{});
                const Matrix back = frobenius_transport_back(w.rep, v.rep, Adjunction::upper, phi);
                checks.expect(frobenius_transport(w.rep, v.rep, Adjunction::upper, back).matrix() == phi.matrix(),
                              "upper reverse round trip " + tag);
                ++transports;
              }
            }
          }
          d["W_count"] = ws.size();
          d["V_count"] = vs.size();
          d["pairs"] = pairs;
          d["transports"] = transports;
        }));
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ phi-machinery

Report suite_phi_machinery(const Catalog& catalog, std::uint64_t seed) {
  Report report{"phi-machinery", seed, {}};
  for (const auto& ng : catalog.groups) {
    const Subgroup k = Subgroup::whole(ng.group);
    for (const auto& f : catalog.fields) {
      if (!is_p_group(k, f->characteristic())) continue;
      const json inputs = base_inputs(ng, f);
      const auto subs = all_subgroups(k);
      report.cases.push_back(run_case(case_id(ng, f) + "/constants", inputs, [&](Checks& checks, json& d) {
        for (const Subgroup& u : subs) {
          const Rep ind = rep_induce(Rep::trivial(u, f), k).rep;
          const Subspace fixed = fixed_points(ind, k);
          checks.expect(fixed.dim() == 1 && fixed.basis_vector(0) == Vector(ind.dim(), f->one()),
                        "ind fixed points U" + subgroup_tag(u));
        }
        d["subgroups"] = subs.size();
      }));
      for (const auto& v : rep_catalog(k, f, 3, seed)) {
        json vin = inputs;
        vin["V"] = to_json(v.rep, ng.name);
        report.cases.push_back(run_case(case_id(ng, f) + "/V=" + v.name, vin, [&](Checks& checks, json& d) {
          const Rep& rep = v.rep;
          const std::size_t fixed = fixed_points(rep, k).dim();
          checks.expect(rep.dim() == 0 || fixed > 0, "V nonzero but V^K = 0");
          const auto vectors = default_phi_vectors(rep);
          std::size_t pairs = 0;
          for (const Vector& x : vectors) {
            const std::size_t cd = cyclic_dim(rep, x);
            for (const Subgroup& u : omega_v(rep, x)) {
              ++pairs;
              checks.expect(u.index_in(k) > cd, "index bound");
              const GMap phi = phi_Uv(rep, u, x);
              checks.expect(phi.kernel().dim() > 0, "ker phi_Uv = 0 for U" + subgroup_tag(u));
              const CosetTable cosets(u, k);
              checks.expect(phi.matrix().col_vector(cosets.identity_coset()) == x, "phi_Uv(char_U) != v");
              // The block's K-fixed points are the constants.
              checks.expect(is_zero(phi.matrix().apply(Vector(phi.source().dim(), f->one()))),
                            "phi nonzero on S^K, U" + subgroup_tag(u));
            }
          }
          d["dim"] = rep.dim();
          d["fixed_dim"] = fixed;
          d["vectors"] = vectors.size();
          d["omega_pairs"] = pairs;
          try {
            const PhiAssembly a = assemble_phi(rep);
            checks.expect(a.is_surjective(), "assembled phi not surjective");
            d["assembly"] = "surjective";
            d["S_dim"] = a.source_dim();
            d["summands"] = a.summands.size();
            d["dropped"] = a.dropped.size();
          } catch (const PreconditionError&) {
            // Allowed only for vectors spanning a free cyclic submodule.
            std::size_t dropped = 0;
            for (const Vector& x : vectors) {
              if (!omega_v(rep, x).empty()) continue;
              ++dropped;
              checks.expect(cyclic_dim(rep, x) == k.order(), "empty Omega without a free cyclic submodule");
            }
            checks.expect(dropped > 0, "assembly failed with no dropped vector");
            d["assembly"] = "not-surjective";
            d["dropped"] = dropped;
            d["free_summand"] = true;
          }
        }));
      }
    }
  }
  return report;
}

// ------------------------------------------------------------------- higman

Report suite_higman(const Catalog& catalog, std::uint64_t seed) {
  Report report{"higman", seed, {}};
  for (const auto& ng : catalog.groups) {
    const Subgroup g = Subgroup::whole(ng.group);
    const Subgroup e = Subgroup::trivial(ng.group);
    for (const auto& f : catalog.fields) {
      const unsigned p = f->characteristic();
      for (const Subgroup& u : all_subgroups(g)) {
        json inputs = base_inputs(ng, f);
        inputs["U"] = to_json(u);
        inputs["W"] = "triv";
        report.cases.push_back(run_case(case_id(ng, f) + "/U" + subgroup_tag(u) + "/W=triv", inputs, [&](Checks& checks, json& d) {
          const Rep pr = rep_induce(Rep::trivial(u, f), g).rep;
          const bool expected = u.order() % p != 0;
          const auto abs = relative_projectivity_test(pr, e, RelativeSide::projective);
          checks.expect(abs.holds == expected, "absolute projectivity");
          if (abs.holds) {
            const AdjunctionMap b = adjunction_counit_B(pr, e);
            checks.expect((b.map.matrix() * abs.witness->map).is_identity(), "witness is not a section");
            checks.expect(hom_space(pr, b.induced.rep).contains(abs.witness->map), "witness not G-equivariant");
          }
          const bool rel_p = relative_projectivity_test(pr, u, RelativeSide::projective).holds;
          const bool rel_i = relative_projectivity_test(pr, u, RelativeSide::injective).holds;
          checks.expect(rel_p && rel_i, "induced module not relatively U-projective");
          d["U_order"] = u.order();
          d["index"] = u.index_in(g);
          d["p_divides_U"] = !expected;
          d["projective"] = abs.holds;
          d["relative_U_projective"] = rel_p;
        }));
      }
    }
  }
  return report;
}

// ------------------------------------------------------------- exact-axioms

namespace {

struct NamedSES {
  std::string name;
  GMap left, right;
};

GMap pullback_projection(const GMap& beta, const GMap& gamma) {
  const FieldPtr& f = beta.matrix().field();
  const std::size_t dv = beta.source().dim(), dw = gamma.source().dim();
  const Rep sum = direct_sum(std::vector<Rep>{beta.source(), gamma.source()});
  Matrix m(f, beta.target().dim(), dv + dw);
  m.set_block(0, 0, beta.matrix());
  m.set_block(0, dv, gamma.matrix().scaled(f->neg(f->one())));
  const SubRep p = subrep(sum, kernel(m));
  Matrix proj(f, dw, dv + dw);
  proj.set_block(0, dv, Matrix::identity(f, dw));
  return GMap(p.rep, gamma.source(), proj * p.inclusion.matrix());
}

bool is_section(const SplitWitness& w, const GMap& f, const Subgroup& u) {
  return (f.matrix() * w.map).is_identity() && hom_space_over(f.target(), f.source(), u).contains(w.map);
}

bool is_retraction(const SplitWitness& w, const GMap& f, const Subgroup& u) {
  return (w.map * f.matrix()).is_identity() && hom_space_over(f.target(), f.source(), u).contains(w.map);
}

}  // namespace

Report suite_exact_axioms(const Catalog& catalog, std::uint64_t seed) {
  Report report{"exact-axioms", seed, {}};
  constexpr std::size_t kMiddleCap = 12;
  for (const auto& ng : catalog.groups) {
    const Subgroup g = Subgroup::whole(ng.group);
    const auto subs = all_subgroups(g);
    for (const auto& f : catalog.fields) {
      const std::string id = case_id(ng, f);
      json inputs = base_inputs(ng, f);
      inputs["seed"] = seed;
      report.cases.push_back(run_case(id, inputs, [&](Checks& checks, json& d) {
        Rng rng = case_rng(seed, id);
        const auto reps = rep_catalog(g, f, 3, seed);
        std::vector<NamedSES> seqs;
        for (const auto& v : reps) {
          for (const Subgroup& u : subs) {
            if (u.index_in(g) * v.rep.dim() > kMiddleCap) continue;
            const Loop lo = loop_Omega(v.rep, u);
            seqs.push_back({"Omega(" + v.name + ")U" + subgroup_tag(u), lo.inclusion, lo.counit});
            const Suspension su = suspension_T(v.rep, u);
            seqs.push_back({"T(" + v.name + ")U" + subgroup_tag(u), su.unit, su.quotient});
          }
        }
        for (std::size_t i = 0; i < reps.size(); ++i) {
          for (std::size_t j = i; j < reps.size(); ++j) {
            const Rep& a = reps[i].rep;
            const Rep& b = reps[j].rep;
            if (a.dim() + b.dim() > 4) continue;
            const Rep s = direct_sum(std::vector<Rep>{a, b});
            Matrix inc(f, s.dim(), a.dim()), proj(f, b.dim(), s.dim());
            inc.set_block(0, 0, Matrix::identity(f, a.dim()));
            proj.set_block(0, a.dim(), Matrix::identity(f, b.dim()));
            seqs.push_back({"split(" + reps[i].name + "," + reps[j].name + ")", GMap(a, s, inc), GMap(s, b, proj)});
          }
        }
        for (const auto& v : reps) {
          std::vector<Subspace> invariant{fixed_points(v.rep, g)};
          for (int t = 0; t < 3; ++t) invariant.push_back(cyclic_submodule(v.rep, random_vector(f, v.rep.dim(), rng)));
          for (const Subspace& w : invariant) {
            if (w.dim() == 0 || w.dim() == v.rep.dim()) continue;
            const SubRep sr = subrep(v.rep, w);
            const QuotientRep qr = quotient(v.rep, w);
            seqs.push_back({"sub(" + v.name + ")", sr.inclusion, qr.projection});
          }
        }
        // Pad with rebased copies up to 50.
        const std::size_t built = seqs.size();
        for (std::size_t i = 0; built > 0 && seqs.size() < 50; ++i) {
          const NamedSES& s = seqs[i % built];
          const Rep& mid = s.right.source();
          const Matrix pm = random_invertible(f, mid.dim(), rng);
          const Rep rebased = conjugate_basis(mid, pm);
          seqs.push_back({"rebased(" + s.name + ")", GMap(s.left.source(), rebased, pm * s.left.matrix()),
                          GMap(rebased, s.right.target(), s.right.matrix() * *inverse(pm))});
        }
        d["ses"] = seqs.size();
        d["ses_rebased"] = seqs.size() - built;
        checks.expect(seqs.size() >= 50, "fewer than 50 sequences");

        std::size_t in_e_u = 0, compositions = 0, pullbacks = 0;
        for (const auto& s : seqs) {
          const SES ses(s.left, s.right);
          for (const Subgroup& u : subs) {
            const auto sec = u_split_search(ses.right(), u, SplitKind::section);
            const auto ret = u_split_search(ses.left(), u, SplitKind::retraction);
            checks.expect(sec.has_value() == ret.has_value(), "section/retraction disagree: " + s.name);
            if (sec) checks.expect(is_section(*sec, ses.right(), u), "bad section: " + s.name);
            if (ret) checks.expect(is_retraction(*ret, ses.left(), u), "bad retraction: " + s.name);
            if (!sec) continue;
            ++in_e_u;
            // Closure under composition with the counit, an admissible epic.
            if (u.index_in(g) * ses.right().source().dim() <= 2 * kMiddleCap) {
              const AdjunctionMap b = adjunction_counit_B(ses.right().source(), u);
              checks.expect(is_admissible_epic(compose(ses.right(), b.map), u), "composite not admissible: " + s.name);
              ++compositions;
            }
            // Closure under pullback along a map from a small object.
            const auto& w = reps[below(rng, reps.size())];
            const HomSpace h = hom_space(w.rep, ses.right().target());
            Matrix gm(f, h.rows, h.cols);
            for (std::size_t i = 0; i < h.dim(); ++i) {
              gm = gm + h.element(i).scaled(f->element(static_cast<std::uint32_t>(below(rng, f->order()))));
            }
            const GMap pb = pullback_projection(ses.right(), GMap(w.rep, ses.right().target(), gm));
            checks.expect(pb.is_surjective() && is_admissible_epic(pb, u), "pullback not admissible: " + s.name);
            ++pullbacks;
          }
        }
        d["in_E_U"] = in_e_u;
        d["compositions"] = compositions;
        d["pullbacks"] = pullbacks;

        for (const auto& v : reps) {
          for (const Subgroup& u : subs) {
            checks.expect(is_admissible_epic(identity_map(v.rep), u) && is_admissible_monic(identity_map(v.rep), u),
                          "identity not admissible");
            const AdjunctionMap a = adjunction_unit_A(v.rep, u);
            checks.expect(is_retraction(a.witness, a.map, u), "A witness " + v.name);
            checks.expect(is_admissible_monic(a.map, u), "A not admissible " + v.name);
            const AdjunctionMap b = adjunction_counit_B(v.rep, u);
            checks.expect(is_section(b.witness, b.map, u), "B witness " + v.name);
            checks.expect(is_admissible_epic(b.map, u), "B not admissible " + v.name);
          }
        }

        // E_{U'} = E_U when p does not divide [U : U'].
        std::size_t rem_checks = 0, averaged = 0;
        std::vector<std::size_t> surjections;
        for (std::size_t i = 0; i < seqs.size(); ++i) surjections.push_back(i);
        for (const Subgroup& u : subs) {
          for (const Subgroup& up : subs) {
            if (!up.is_subgroup_of(u) || up.index_in(u) % f->characteristic() == 0) continue;
            for (std::size_t i : surjections) {
              const GMap& fm = seqs[i].right;
              const auto small = u_split_search(fm, up, SplitKind::section);
              const bool big = is_admissible_epic(fm, u);
              checks.expect(small.has_value() == big, "E_U' != E_U on " + seqs[i].name);
              ++rem_checks;
              if (small) {
                const SplitWitness avg = averaging_section(small->map, fm, up, u);
                checks.expect(is_section(avg, fm, u), "averaged section " + seqs[i].name);
                ++averaged;
              }
            }
          }
        }
        d["rem_pairs_checked"] = rem_checks;
        d["averaged_sections"] = averaged;
      }));
    }
  }
  return report;
}

// --------------------------------------------------------- stable-frobenius

Report suite_stable_frobenius(const Catalog& catalog, std::uint64_t seed) {
  Report report{"stable-frobenius", seed, {}};
  for (const auto& ng : catalog.groups) {
    const Subgroup g = Subgroup::whole(ng.group);
    for (const auto& f : catalog.fields) {
      const auto objects = rep_catalog(g, f, 4, seed);
      for (const Subgroup& u : all_subgroups(g)) {
        json inputs = base_inputs(ng, f);
        inputs["U"] = to_json(u);
        inputs["seed"] = seed;
        report.cases.push_back(run_case(case_id(ng, f) + "/U" + subgroup_tag(u), inputs, [&](Checks& checks, json& d) {
          std::size_t projective = 0;
          json dims = json::array();
          for (const auto& x : objects) {
            const auto pr = relative_projectivity_test(x.rep, u, RelativeSide::projective);
            const auto in = relative_projectivity_test(x.rep, u, RelativeSide::injective);
            checks.expect(pr.holds == in.holds, "projective != injective: " + x.name);
            const auto st = stable_hom(x.rep, x.rep, u, StableFlavor::injective);
            checks.expect((st.stable_dim == 0) == in.holds, "stable End vs injectivity: " + x.name);
            projective += pr.holds;
            const std::size_t t = suspension_T(x.rep, u).rep.dim();
            const std::size_t o = loop_Omega(x.rep, u).rep.dim();
            checks.expect(t == o && t == (u.index_in(g) - 1) * x.rep.dim(), "T/Omega dimension: " + x.name);
            dims.push_back(json{{"object", x.name}, {"dim", x.rep.dim()}, {"T", t}, {"Omega", o},
                                {"relatively_projective", pr.holds}, {"stable_end", st.stable_dim}});
          }
          d["objects"] = objects.size();
          d["relatively_projective"] = projective;
          d["table"] = std::move(dims);
        }));
      }
    }
  }
  for (unsigned p : {2u, 3u, 5u}) {
    const GroupPtr cg = make_cyclic(p);
    const Subgroup c = Subgroup::whole(cg);
    const Subgroup e = Subgroup::trivial(cg);
    const FieldPtr f = FiniteField::create(p);
    const std::string id = "cyclic-oracle/C" + std::to_string(p) + "/" + f->name();
    const json inputs{{"group", "C" + std::to_string(p)}, {"field", to_json(*f)}, {"U", to_json(e)}};
    report.cases.push_back(run_case(id, inputs, [&](Checks& checks, json& d) {
      const GroupElement gen = c.generators().at(0);
      json rows = json::array();
      for (std::size_t i = 1; i < p; ++i) {
        const Rep j = jordan_block_rep(c, gen, f, i);
        const Rep om = loop_Omega(j, e).rep;
        const Rep t = suspension_T(j, e).rep;
        const auto om_type = stable_jordan_type(jordan_type(om, gen), p);
        const auto t_type = stable_jordan_type(jordan_type(t, gen), p);
        const auto back = stable_jordan_type(jordan_type(loop_Omega(t, e).rep, gen), p);
        const auto fwd = stable_jordan_type(jordan_type(suspension_T(om, e).rep, gen), p);
        const std::vector<std::size_t> want{p - i}, self{i};
        checks.expect(om_type.core == want && om_type.free_blocks == i - 1, "Omega(J" + std::to_string(i) + ")");
        checks.expect(t_type.core == want && t_type.free_blocks == i - 1, "T(J" + std::to_string(i) + ")");
        checks.expect(back.core == self, "Omega(T(J" + std::to_string(i) + "))");
        checks.expect(fwd.core == self, "T(Omega(J" + std::to_string(i) + "))");
        rows.push_back(json{{"i", i},
                            {"Omega_dim", om.dim()},
                            {"Omega_core", om_type.core},
                            {"Omega_free", om_type.free_blocks},
                            {"T_dim", t.dim()},
                            {"T_core", t_type.core},
                            {"T_free", t_type.free_blocks}});
      }
      const Rep triv = Rep::trivial(c, f);
      const auto inj = stable_hom(triv, triv, e, StableFlavor::injective);
      const auto proj = stable_hom(triv, triv, e, StableFlavor::projective);
      checks.expect(inj.stable_dim == 1 && proj.stable_dim == 1, "stable End(F) != 1");
      d["jordan"] = std::move(rows);
      d["stable_end_trivial"] = to_json(inj);
    }));
  }
  return report;
}

// -------------------------------------------------------------- chi-functor

namespace {

std::vector<GMap> sample_surjections(const std::vector<NamedRep>& reps, const Subgroup& g, std::size_t want, Rng& rng) {
  const auto subs = all_subgroups(g);
  std::vector<GMap> out;
  for (std::size_t round = 0; out.size() < want && round < 8; ++round) {
    for (const auto& v : reps) {
      if (out.size() >= want) break;
      const FieldPtr& f = v.rep.field();
      switch (round % 3) {
        case 0: {
          const Subspace w = cyclic_submodule(v.rep, random_vector(f, v.rep.dim(), rng));
          if (w.dim() < v.rep.dim()) out.push_back(quotient(v.rep, w).projection);
          break;
        }
        case 1: {
          const Subgroup& u = subs[below(rng, subs.size())];
          if (u.index_in(g) * v.rep.dim() <= 12) out.push_back(adjunction_counit_B(v.rep, u).map);
          break;
        }
        default: {
          const auto& w = reps[below(rng, reps.size())];
          const Rep s = direct_sum(std::vector<Rep>{w.rep, v.rep});
          Matrix proj(f, v.rep.dim(), s.dim());
          proj.set_block(0, w.rep.dim(), Matrix::identity(f, v.rep.dim()));
          out.push_back(GMap(s, v.rep, proj));
        }
      }
    }
  }
  return out;
}

std::string chi_tag(const Character& chi) {
  std::string out = "chi(";
  for (std::size_t i = 0; i < chi.values().size(); ++i) out += (i ? "," : "") + std::to_string(chi.values()[i].code);
  return out + ")";
}

}  // namespace

Report suite_chi_functor(const Catalog& catalog, std::uint64_t seed) {
  Report report{"chi-functor", seed, {}};
  std::vector<std::pair<NamedGroup, FieldPtr>> cases;
  const FieldPtr f4 = FiniteField::create(2, 2);
  cases.push_back({NamedGroup{"C2xC3", builtin_group("C2xC3")}, f4});
  for (const auto& ng : catalog.groups) {
    if (!ng.group->is_abelian()) continue;
    for (const auto& f : catalog.fields) {
      if (ng.name == "C2xC3" && same_field(f, f4)) continue;
      cases.push_back({ng, f});
    }
  }
  for (const auto& [ng, f] : cases) {
    const Subgroup g = Subgroup::whole(ng.group);
    const FinGroup& grp = *ng.group;
    const auto subs = all_subgroups(g);
    const auto reps = rep_catalog(g, f, 3, seed);
    for (const Subgroup& c : subs) {
      if (c.order() == 1 || c.order() % f->characteristic() == 0) continue;
      for (const Character& chi : all_characters(c, f)) {
        const std::string id = case_id(ng, f) + "/C" + subgroup_tag(c) + "/" + chi_tag(chi);
        json inputs = base_inputs(ng, f);
        inputs["C"] = to_json(c);
        inputs["chi"] = json::array();
        for (Scalar s : chi.values()) inputs["chi"].push_back(scalar_to_json(*f, s));
        inputs["seed"] = seed;
        report.cases.push_back(run_case(id, inputs, [&](Checks& checks, json& d) {
          Rng rng = case_rng(seed, id);
          std::size_t eigen_total = 0;
          for (const auto& v : reps) {
            const ChiEigenspace ev = chi_eigenspace(v.rep, chi);
            checks.expect(ev.projector.has_value(), "no projector: " + v.name);
            if (!ev.projector) continue;
            const Matrix& pm = *ev.projector;
            checks.expect(pm * pm == pm, "projector not idempotent: " + v.name);
            checks.expect(mat_reduce(pm).image == ev.space, "image(P) != V^chi: " + v.name);
            checks.expect(hom_space(v.rep, v.rep).contains(pm), "projector not equivariant: " + v.name);
            eigen_total += ev.space.dim();
          }
          d["eigenspace_dims"] = eigen_total;

          const auto surj = sample_surjections(reps, g, 20, rng);
          checks.expect(surj.size() >= 20, "fewer than 20 surjections");
          for (const GMap& gam : surj) {
            checks.expect(gam.is_surjective(), "sample is not surjective");
            const ChiEigenspace src = chi_eigenspace(gam.source(), chi);
            const ChiEigenspace dst = chi_eigenspace(gam.target(), chi);
            std::vector<Vector> images;
            for (std::size_t i = 0; i < src.space.dim(); ++i) images.push_back(gam.matrix().apply(src.space.basis_vector(i)));
            checks.expect(Subspace::span(f, gam.target().dim(), images) == dst.space, "gamma^chi not surjective");
          }
          d["surjections"] = surj.size();

          std::size_t extensions = 0;
          for (const Subgroup& k : subs) {
            const Subgroup kc = product(k, c);
            const Subgroup meet = intersect(k, c);
            for (const auto& w : rep_catalog(k, f, 3, seed)) {
              bool compatible = true;
              for (GroupElement x : meet.members()) {
                compatible = compatible && w.rep.action(x) == Matrix::identity(f, w.rep.dim()).scaled(chi(x));
              }
              if (!compatible) {
                bool threw = false;
                try {
                  extend_by_chi(w.rep, chi, kc);
                } catch (const PreconditionError&) {
                  threw = true;
                }
                checks.expect(threw, "incompatible extension accepted");
                continue;
              }
              const Rep ext = extend_by_chi(w.rep, chi, kc);
              checks.expect(rep_restrict(ext, k).same_action(w.rep), "restriction of extension");
              for (GroupElement z : c.members()) {
                checks.expect(ext.action(z) == Matrix::identity(f, w.rep.dim()).scaled(chi(z)), "C acts by chi");
              }
              ++extensions;
            }
          }
          checks.expect(extensions > 0, "no extension built");
          d["extensions"] = extensions;

          std::size_t omega_checked = 0;
          for (const auto& v : reps) {
            const Subspace fixed_c = fixed_points(v.rep, c);
            std::vector<Vector> xs;
            for (std::size_t i = 0; i < fixed_c.dim(); ++i) xs.push_back(fixed_c.basis_vector(i));
            if (fixed_c.dim() > 1) {
              Vector mix(v.rep.dim(), f->zero());
              for (std::size_t i = 0; i < fixed_c.dim(); ++i) {
                const Scalar s = f->element(static_cast<std::uint32_t>(1 + below(rng, f->order() - 1)));
                for (std::size_t r = 0; r < mix.size(); ++r) mix[r] = f->add(mix[r], f->mul(s, xs[i][r]));
              }
              xs.push_back(mix);
            }
            for (const Vector& x : xs) {
              // Independent recomputation from the definition.
              std::vector<Vector> orbit;
              for (GroupElement y : g.members()) orbit.push_back(v.rep.action(y).apply(x));
              const std::size_t cd = Subspace::span(f, v.rep.dim(), orbit).dim();
              std::vector<std::vector<GroupElement>> expected;
              for (const Subgroup& u : subs) {
                bool fixes = true;
                for (GroupElement y : u.members()) fixes = fixes && v.rep.action(y).apply(x) == x;
                std::vector<GroupElement> uc;
                for (GroupElement a : u.members())
                  for (GroupElement b : c.members()) uc.push_back(grp.mul(a, b));
                std::sort(uc.begin(), uc.end());
                uc.erase(std::unique(uc.begin(), uc.end()), uc.end());
                if (fixes && g.order() / uc.size() > cd) expected.push_back(u.members());
              }
              std::vector<std::vector<GroupElement>> got;
              for (const Subgroup& u : omega_v(v.rep, x, &c)) got.push_back(u.members());
              checks.expect(got == expected, "Omega_{C,v} mismatch: " + v.name);
              ++omega_checked;
            }
          }
          d["omega_vectors"] = omega_checked;
        }));
      }
    }
  }
  return report;
}

// ------------------------------------------------------------------ driver

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"frobenius",    "phi-machinery",    "higman",
                                              "exact-axioms", "stable-frobenius", "chi-functor"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report run_suite(const std::string& name, const Catalog& catalog, std::uint64_t seed) {
  if (name == "frobenius") return suite_frobenius(catalog, seed);
  if (name == "phi-machinery") return suite_phi_machinery(catalog, seed);
  if (name == "higman") return suite_higman(catalog, seed);
  if (name == "exact-axioms") return suite_exact_axioms(catalog, seed);
  if (name == "stable-frobenius") return suite_stable_frobenius(catalog, seed);
  if (name == "chi-functor") return suite_chi_functor(catalog, seed);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace modrep
