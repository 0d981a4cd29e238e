#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "modrep/exact.hpp"
#include "modrep/fairness.hpp"
#include "modrep/rep.hpp"

namespace modrep {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

/// FNV-1a 64-bit hash as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::uint64_t fnv1a(const std::string& bytes);

// Fields: {p, k, modulus}. Scalars: residue list (constant term first).
// Matrix entries: integer codes sum_i c_i p^i (plain residues over F_p).
json to_json(const FiniteField& f);
FieldPtr field_from_json(const json& j);
json scalar_to_json(const FiniteField& f, Scalar s);
Scalar scalar_from_json(const FiniteField& f, const json& j);
json to_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& f, const json& j);

// Groups: {order, table, labels?}. Subgroups: sorted member lists.
json to_json(const FinGroup& g);
GroupPtr group_from_json(const json& j);
GroupPtr group_from_file(const std::string& path);
json to_json(const Subgroup& s);
Subgroup subgroup_from_json(const GroupPtr& g, const json& j);

/// {group_ref, field, dim, domain, action} with one matrix per domain
/// member, in member order.
json to_json(const Rep& v, const std::string& group_ref);
/// Accepts "action" (per member) or "generators" ({"index": matrix}).
Rep rep_from_json(const GroupPtr& g, const json& j);
json to_json(const GMap& f, const std::string& source_ref, const std::string& target_ref);

const char* to_string(StableFlavor f);
json to_json(const StableHomResult& r);
json to_json(const DepthTriple& d);
json to_json(const FairnessCertificate& c);
json to_json(const WitnessReport& r);

// --------------------------------------------------------------- reports

enum class Outcome { pass, fail, error };
const char* to_string(Outcome o);

struct CaseResult {
  std::string id;
  std::string inputs_digest;
  Outcome outcome = Outcome::pass;
  json details = json::object();
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  std::size_t count(Outcome o) const;
  bool all_pass() const { return count(Outcome::pass) == cases.size(); }
  /// Cases sorted by id; summary counts recomputed.
  json to_json() const;
  /// One row per case plus a summary line.
  std::string to_text() const;
};

/// Dumps with two-space indent and a trailing newline.
std::string dump(const json& j);

}  // namespace modrep
