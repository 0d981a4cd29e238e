#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modrep {

/// Index of an element in its group's multiplication table.
using GroupElement = std::uint32_t;

/// A finite group given by its multiplication table. Elements are the
/// indices 0..n-1 in input order; the identity need not be index 0.
class FinGroup {
 public:
  /// Largest order for which associativity is checked exhaustively.
  static constexpr std::size_t kAssociativityCap = 512;

  /// Validates the table (square, Latin square, identity, associativity up
  /// to kAssociativityCap). Throws InputError on failure.
  static std::shared_ptr<const FinGroup> from_table(
      const std::vector<std::vector<GroupElement>>& table,
      std::vector<std::string> labels = {});

  /// For tables produced by this library from an associative operation.
  static std::shared_ptr<const FinGroup> from_trusted_table(
      std::size_t order, std::vector<GroupElement> flat_table,
      std::vector<std::string> labels);

  std::size_t order() const { return n_; }
  GroupElement identity() const { return identity_; }
  GroupElement mul(GroupElement a, GroupElement b) const { return table_[a * n_ + b]; }
  GroupElement inv(GroupElement a) const { return inverse_[a]; }
  /// g x g^{-1}
  GroupElement conj(GroupElement g, GroupElement x) const { return mul(mul(g, x), inv(g)); }
  GroupElement pow(GroupElement a, std::uint64_t e) const;
  std::uint32_t element_order(GroupElement a) const;
  std::uint32_t exponent() const;
  bool is_abelian() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(GroupElement a) const { return labels_[a]; }
  /// Element carrying the given label, if any.
  std::optional<GroupElement> find(const std::string& label) const;

  /// Greedy generating set: ascending scan, keeping elements outside the
  /// span of those already kept.
  const std::vector<GroupElement>& generators() const { return generators_; }

  /// Row-major table copy, e.g. for serialization.
  std::vector<std::vector<GroupElement>> table() const;

 private:
  FinGroup() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<GroupElement> table_;
  std::vector<GroupElement> inverse_;
  GroupElement identity_ = 0;
  std::vector<std::string> labels_;
  std::vector<GroupElement> generators_;
};

using GroupPtr = std::shared_ptr<const FinGroup>;

/// Subgroup of a FinGroup as a sorted member list.
class Subgroup {
 public:
  Subgroup() = default;
  /// Validates closure; throws InputError otherwise.
  Subgroup(GroupPtr parent, std::vector<GroupElement> members);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<GroupElement>& members() const { return members_; }
  bool contains(GroupElement g) const { return g < position_.size() && position_[g] >= 0; }
  /// Position of g in members(); g must be a member.
  std::size_t position(GroupElement g) const { return static_cast<std::size_t>(position_[g]); }
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_normal_in(const Subgroup& other) const;
  bool is_abelian() const;
  /// [other : this]; requires this <= other.
  std::size_t index_in(const Subgroup& other) const;
  /// Greedy generating set inside the subgroup.
  const std::vector<GroupElement>& generators() const { return generators_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  struct Trusted {};
  Subgroup(GroupPtr parent, std::vector<GroupElement> members, Trusted);
  void index_members();

  GroupPtr parent_;
  std::vector<GroupElement> members_;
  std::vector<std::int32_t> position_;
  std::vector<GroupElement> generators_;

  friend Subgroup subgroup_generate(const GroupPtr&, std::span<const GroupElement>);
};

/// GroupPtr from a square index grid (validated).
GroupPtr group_from_table(const std::vector<std::vector<GroupElement>>& table,
                          std::vector<std::string> labels = {});

/// Smallest subgroup containing gens (orbit closure).
Subgroup subgroup_generate(const GroupPtr& g, std::span<const GroupElement> gens);
Subgroup subgroup_generate(const GroupPtr& g, std::initializer_list<GroupElement> gens);

/// Representatives of the right cosets U\H = {U h}, each the minimal index
/// of its coset, in increasing order. Requires U <= H.
std::vector<GroupElement> coset_reps(const Subgroup& u, const Subgroup& h);
/// Representatives of U\G/H, minimal index per double coset, increasing.
std::vector<GroupElement> double_coset_reps(const Subgroup& u, const Subgroup& h, const Subgroup& g);
/// The double coset U g H as a sorted element list.
std::vector<GroupElement> double_coset(const Subgroup& u, GroupElement g, const Subgroup& h);

/// Lookup for right cosets U\H: for x in H, which representative's coset
/// contains x.
class CosetTable {
 public:
  CosetTable(const Subgroup& u, const Subgroup& h);
  const std::vector<GroupElement>& reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }
  /// Index i with x in U reps()[i].
  std::size_t coset_of(GroupElement x) const { return static_cast<std::size_t>(coset_[x]); }
  /// Index of the coset U itself.
  std::size_t identity_coset() const { return identity_coset_; }

 private:
  std::vector<GroupElement> reps_;
  std::vector<std::int32_t> coset_;
  std::size_t identity_coset_ = 0;
};

/// K ∩ g H g^{-1}.
Subgroup conjugate_intersect(const Subgroup& k, const Subgroup& h, GroupElement g);
/// g H g^{-1}.
Subgroup conjugate(const Subgroup& h, GroupElement g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// A B for subgroups with A B = B A (e.g. B central); throws otherwise.
Subgroup product(const Subgroup& a, const Subgroup& b);

Subgroup center(const GroupPtr& g);
bool is_p_group(const Subgroup& s, unsigned p);
/// One Sylow p-subgroup, grown from {e} by adjoining p-elements in index
/// order while the result stays a p-group.
Subgroup sylow_subgroup(const Subgroup& within, unsigned p);

inline constexpr std::size_t kSubgroupEnumerationCap = 192;

/// Every subgroup of `within`, by bottom-up cyclic extension, sorted by
/// (order, members). Throws CapExceeded if |within| > cap.
std::vector<Subgroup> all_subgroups(const Subgroup& within,
                                    std::size_t cap = kSubgroupEnumerationCap);

struct GroupInvariants {
  Subgroup center;
  Subgroup sylow;
  bool is_p_group = false;
  std::vector<Subgroup> all_subgroups;
};

GroupInvariants group_invariants(const GroupPtr& g, unsigned p,
                                 std::size_t cap = kSubgroupEnumerationCap);

// ------------------------------------------------------------ constructions

GroupPtr make_cyclic(std::size_t n);
/// Dihedral group of order 2n: elements r^i (i < n) then s r^i.
GroupPtr make_dihedral(std::size_t n);
/// S_3 ordered e, (1 2 3), (1 3 2), (1 2), (1 3), (2 3).
GroupPtr make_symmetric3();
GroupPtr make_quaternion8();
GroupPtr make_alternating4();
/// Pairs (a, b) with index a * |H| + b.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
/// Closure of permutation generators (0-based images), elements in BFS
/// order with cycle-notation labels.
GroupPtr group_from_permutations(const std::vector<std::vector<unsigned>>& gens);

/// Catalog names: C<n>, C<a>xC<b>, S3, D4, Q8, A4.
GroupPtr builtin_group(const std::string& name);

// ------------------------------------------------------------------- SL_2

inline constexpr std::size_t kSl2Cap = 5000;

/// SL_2(Z/p^N) with its principal congruence subgroups.
struct Sl2Quotient {
  unsigned p = 0;
  unsigned level = 0;
  std::uint64_t modulus = 0;  ///< p^N
  GroupPtr group;
  /// congruence[m-1] = K_m = {X = 1 mod p^m}, for 1 <= m < N.
  std::vector<Subgroup> congruence;
  /// Entries (a, b, c, d) of each element.
  std::vector<std::array<std::uint64_t, 4>> entries;
};

Sl2Quotient sl2_quotient_group(unsigned p, unsigned level, std::size_t cap = kSl2Cap);

}  // namespace modrep
