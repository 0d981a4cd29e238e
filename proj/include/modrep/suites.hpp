#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/io.hpp"

namespace modrep {

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

/// Groups x fields the verification suites range over.
struct Catalog {
  std::vector<NamedGroup> groups;
  std::vector<FieldPtr> fields;
};

/// C2, C3, C4, C2xC2, C9, S3, D4, Q8, A4 over F_2, F_3, F_4, F_9.
Catalog default_catalog();

/// {"groups": ["S3", {"builtin": "D4"}, {"file": "g.json", "name": "V4"}],
///  "fields": [{"p": 2}, {"p": 3, "k": 2, "modulus": [1, 0, 1]}]}
/// File paths are relative to the catalog file. Throws InputError.
Catalog load_catalog(const std::string& path);
Catalog catalog_from_json(const json& j, const std::string& base_dir = ".");

struct NamedRep {
  std::string name;
  Rep rep;
};

/// Sample objects of dimension <= max_dim for a group: the trivial rep,
/// nontrivial 1-dimensional reps, permutation reps on cosets (one subgroup
/// per conjugacy class, "reg" for the regular one), unipotent Jordan
/// blocks for cyclic groups, a few direct sums, and one seeded random
/// change of basis. At most `cap` entries.
std::vector<NamedRep> rep_catalog(const Subgroup& g, const FieldPtr& f, std::size_t max_dim, std::uint64_t seed,
                                  std::size_t cap = 8);

/// "{0,3,5}"
std::string subgroup_tag(const Subgroup& s);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws InputError for an unknown suite.
Report run_suite(const std::string& name, const Catalog& catalog, std::uint64_t seed);

Report suite_frobenius(const Catalog& catalog, std::uint64_t seed);
Report suite_phi_machinery(const Catalog& catalog, std::uint64_t seed);
Report suite_higman(const Catalog& catalog, std::uint64_t seed);
Report suite_exact_axioms(const Catalog& catalog, std::uint64_t seed);
Report suite_stable_frobenius(const Catalog& catalog, std::uint64_t seed);
Report suite_chi_functor(const Catalog& catalog, std::uint64_t seed);

}  // namespace modrep
