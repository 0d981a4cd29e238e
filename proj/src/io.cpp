#include "modrep/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "modrep/error.hpp"

namespace modrep {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

// ------------------------------------------------------------ field/matrix

json to_json(const FiniteField& f) {
  return json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j) {
  try {
    const unsigned p = j.at("p").get<unsigned>();
    const unsigned k = j.value("k", 1u);
    std::optional<Poly> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = j.at("modulus").get<Poly>();
    if (modulus && k == 1 && modulus->size() == 2 && (*modulus)[1] == 1) modulus.reset();
    return FiniteField::create(p, k, modulus);
  } catch (const json::exception& e) {
    throw InputError(std::string("field descriptor: ") + e.what());
  }
}

json scalar_to_json(const FiniteField& f, Scalar s) { return f.coeffs(s); }

Scalar scalar_from_json(const FiniteField& f, const json& j) {
  const Poly c = j.get<Poly>();
  if (c.size() > f.degree()) throw InputError("scalar has too many residues");
  for (unsigned r : c) {
    if (r >= f.characteristic()) throw InputError("scalar residue out of range");
  }
  return f.from_coeffs(c);
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).code);
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const FieldPtr& f, const json& j) {
  if (!j.is_array()) throw InputError("matrix must be a nested array");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix rows have unequal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto code = j[r][c].get<long long>();
      if (code < 0 || code >= static_cast<long long>(f->order())) throw InputError("matrix entry out of range");
      m(r, c) = f->element(static_cast<std::uint32_t>(code));
    }
  }
  return m;
}

// ------------------------------------------------------------------ groups

json to_json(const FinGroup& g) {
  return json{{"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}};
}

GroupPtr group_from_json(const json& j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<GroupElement>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
      throw InputError("group: order does not match the table");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return group_from_table(table, std::move(labels));
  } catch (const json::exception& e) {
    throw InputError(std::string("group: ") + e.what());
  }
}

GroupPtr group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file " + path);
  try {
    return group_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw InputError("group file " + path + ": " + e.what());
  }
}

json to_json(const Subgroup& s) { return s.members(); }

Subgroup subgroup_from_json(const GroupPtr& g, const json& j) {
  try {
    auto members = j.get<std::vector<GroupElement>>();
    for (GroupElement x : members) {
      if (x >= g->order()) throw InputError("subgroup member out of range");
    }
    return Subgroup(g, std::move(members));
  } catch (const json::exception& e) {
    throw InputError(std::string("subgroup: ") + e.what());
  }
}

// -------------------------------------------------------------------- reps

json to_json(const Rep& v, const std::string& group_ref) {
  json action = json::array();
  for (const Matrix& m : v.actions()) action.push_back(to_json(m));
  return json{{"group_ref", group_ref},
              {"field", to_json(*v.field())},
              {"dim", v.dim()},
              {"domain", to_json(v.domain())},
              {"action", std::move(action)}};
}

Rep rep_from_json(const GroupPtr& g, const json& j) {
  try {
    FieldPtr f = field_from_json(j.at("field"));
    Subgroup domain = j.contains("domain") ? subgroup_from_json(g, j.at("domain")) : Subgroup::whole(g);
    const std::size_t dim = j.at("dim").get<std::size_t>();
    if (j.contains("action")) {
      std::vector<Matrix> action;
      for (const auto& m : j.at("action")) action.push_back(matrix_from_json(f, m));
      if (action.size() != domain.order()) throw InputError("rep: one action matrix per domain element required");
      return Rep(domain, f, dim, std::move(action));
    }
    std::map<GroupElement, Matrix> images;
    for (const auto& [key, m] : j.at("generators").items()) {
      images.emplace(static_cast<GroupElement>(std::stoul(key)), matrix_from_json(f, m));
    }
    Rep v = rep_build(domain, f, images);
    if (v.dim() != dim) throw InputError("rep: dim does not match the generator images");
    return v;
  } catch (const json::exception& e) {
    throw InputError(std::string("rep: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("rep: generator keys must be element indices");
  }
}

json to_json(const GMap& f, const std::string& source_ref, const std::string& target_ref) {
  return json{{"source_ref", source_ref}, {"target_ref", target_ref}, {"matrix", to_json(f.matrix())}};
}

// --------------------------------------------------------- exact/fairness

const char* to_string(StableFlavor f) { return f == StableFlavor::injective ? "injective" : "projective"; }

json to_json(const StableHomResult& r) {
  return json{{"flavor", to_string(r.flavor)},
              {"total_dim", r.total_dim},
              {"factoring_dim", r.factoring_dim},
              {"stable_dim", r.stable_dim}};
}

json to_json(const DepthTriple& d) { return json{{"upper", d.upper}, {"torus", d.torus}, {"lower", d.lower}}; }

json to_json(const FairnessCertificate& c) {
  json out = json::object();
  if (c.p) out["p"] = *c.p;
  out["m"] = c.m;
  out["n"] = c.n;
  out["n_prime"] = c.n_prime;
  json comps = json::array();
  for (const auto& comp : c.components) {
    comps.push_back(json{{"name", comp.name},
                         {"lhs_expr", comp.lhs.str()},
                         {"rhs_expr", comp.rhs.str()},
                         {"strict_for_all_a", comp.strict_for_all_a}});
  }
  out["components"] = std::move(comps);
  out["strict_component"] = c.strict_component;
  out["reduction_note"] = c.reduction_note;
  return out;
}

json to_json(const WitnessReport& r) {
  const FinGroup& g = *r.ambient.parent();
  json out{{"outcome", r.found() ? "witness-found" : "exhausted"}};
  if (r.g) {
    out["g"] = *r.g;
    out["g_label"] = g.label(*r.g);
  } else {
    out["g"] = nullptr;
  }
  out["context"] = json{{"G_order", g.order()},
                        {"K", to_json(r.k)},
                        {"H", to_json(r.h)},
                        {"H_prime", to_json(r.h_prime)}};
  if (r.intersection) out["intersection"] = to_json(*r.intersection);
  return out;
}

// ----------------------------------------------------------------- reports

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::error:
      return "error";
  }
  return "error";
}

std::size_t Report::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [o](const CaseResult& c) { return c.outcome == o; }));
}

namespace {

std::vector<const CaseResult*> sorted_cases(const std::vector<CaseResult>& cases) {
  std::vector<const CaseResult*> out;
  for (const auto& c : cases) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(), [](const CaseResult* a, const CaseResult* b) { return a->id < b->id; });
  return out;
}

}  // namespace

json Report::to_json() const {
  json list = json::array();
  for (const CaseResult* c : sorted_cases(cases)) {
    list.push_back(json{{"id", c->id},
                        {"inputs_digest", c->inputs_digest},
                        {"outcome", modrep::to_string(c->outcome)},
                        {"details", c->details}});
  }
  return json{{"schema", kSchemaVersion},
              {"suite", suite},
              {"tool_version", kToolVersion},
              {"seed", seed},
              {"cases", std::move(list)},
              {"summary",
               json{{"total", cases.size()},
                    {"pass", count(Outcome::pass)},
                    {"fail", count(Outcome::fail)},
                    {"error", count(Outcome::error)}}}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << "  seed " << seed << "  tool " << kToolVersion << "\n";
  std::size_t width = 2;
  for (const auto& c : cases) width = std::max(width, c.id.size());
  for (const CaseResult* c : sorted_cases(cases)) {
    std::string id = c->id;
    id.resize(width, ' ');
    os << id << "  " << modrep::to_string(c->outcome) << "  ";
    for (const auto& [k, v] : c->details.items()) {
      if (v.is_primitive()) os << " " << k << "=" << v.dump();
    }
    os << "\n";
  }
  os << "total " << cases.size() << "  pass " << count(Outcome::pass) << "  fail " << count(Outcome::fail)
     << "  error " << count(Outcome::error) << "\n";
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace modrep
