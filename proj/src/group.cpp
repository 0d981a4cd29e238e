#include "modrep/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "modrep/error.hpp"
#include "modrep/field.hpp"

namespace modrep {

namespace {

// Closure of gens under right multiplication, inside the parent table.
std::vector<GroupElement> closure(const FinGroup& g, std::span<const GroupElement> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<GroupElement> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (GroupElement s : gens) {
      const GroupElement y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> greedy_generators(const FinGroup& g, const std::vector<GroupElement>& members) {
  std::vector<GroupElement> gens;
  std::vector<char> in_span(g.order(), 0);
  in_span[g.identity()] = 1;
  for (GroupElement x : members) {
    if (in_span[x]) continue;
    gens.push_back(x);
    for (GroupElement y : closure(g, gens)) in_span[y] = 1;
  }
  return gens;
}

std::string cycle_label(const std::vector<unsigned>& perm) {
  std::vector<char> done(perm.size(), 0);
  std::ostringstream os;
  for (unsigned start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start) continue;
    os << '(';
    unsigned x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) os << ' ';
      os << x + 1;
      first = false;
      x = perm[x];
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "e" : s;
}

std::vector<unsigned> compose(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  // (a ∘ b)(x) = a(b(x))
  std::vector<unsigned> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

GroupPtr table_from_elements(const std::vector<std::vector<unsigned>>& elems) {
  std::map<std::vector<unsigned>, GroupElement> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<GroupElement>(i));
  const std::size_t n = elems.size();
  std::vector<GroupElement> flat(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(cycle_label(elems[i]));
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(compose(elems[i], elems[j]));
      if (it == index.end()) throw InputError("permutation list is not closed");
      flat[i * n + j] = it->second;
    }
  }
  return FinGroup::from_trusted_table(n, std::move(flat), std::move(labels));
}

}  // namespace

// ----------------------------------------------------------------- FinGroup

GroupPtr FinGroup::from_table(const std::vector<std::vector<GroupElement>>& table,
                              std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  std::vector<GroupElement> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (GroupElement x : row) {
      if (x >= n) throw InputError("group table entry out of range");
      flat.push_back(x);
    }
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[i * n + j]]++) throw InputError("group table is not a Latin square (row " + std::to_string(i) + ")");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[j * n + i]]++) throw InputError("group table is not a Latin square (column " + std::to_string(i) + ")");
    }
  }
  std::optional<GroupElement> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = flat[e * n + x] == x && flat[x * n + e] == x;
    if (ok) identity = static_cast<GroupElement>(e);
  }
  if (!identity) throw InputError("group table has no identity");
  if (n <= kAssociativityCap) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = flat[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
            throw InputError("group table is not associative");
          }
        }
      }
    }
  }
  if (!labels.empty() && labels.size() != n) throw InputError("label count differs from group order");
  return from_trusted_table(n, std::move(flat), std::move(labels));
}

GroupPtr FinGroup::from_trusted_table(std::size_t order, std::vector<GroupElement> flat_table,
                                      std::vector<std::string> labels) {
  std::shared_ptr<FinGroup> g(new FinGroup());
  g->n_ = order;
  g->table_ = std::move(flat_table);
  g->labels_ = std::move(labels);
  g->finish();
  return g;
}

void FinGroup::finish() {
  identity_ = n_;
  for (std::size_t e = 0; e < n_ && identity_ == n_; ++e) {
    if (table_[e * n_ + e] == e) identity_ = static_cast<GroupElement>(e);
  }
  if (identity_ == n_) throw InputError("group table has no identity");
  inverse_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n_ && !found; ++b) {
      if (table_[a * n_ + b] == identity_) {
        if (table_[b * n_ + a] != identity_) throw InputError("inverse is not two-sided");
        inverse_[a] = static_cast<GroupElement>(b);
        found = true;
      }
    }
    if (!found) throw InputError("element without inverse");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  std::vector<GroupElement> all(n_);
  for (std::size_t i = 0; i < n_; ++i) all[i] = static_cast<GroupElement>(i);
  generators_ = greedy_generators(*this, all);
}

GroupElement FinGroup::pow(GroupElement a, std::uint64_t e) const {
  GroupElement r = identity_, b = a;
  while (e > 0) {
    if (e & 1u) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t FinGroup::element_order(GroupElement a) const {
  std::uint32_t k = 1;
  GroupElement x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::uint32_t FinGroup::exponent() const {
  std::uint64_t l = 1;
  for (std::size_t a = 0; a < n_; ++a) l = std::lcm(l, static_cast<std::uint64_t>(element_order(static_cast<GroupElement>(a))));
  return static_cast<std::uint32_t>(l);
}

bool FinGroup::is_abelian() const {
  for (GroupElement a : generators_) {
    for (GroupElement b : generators_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::optional<GroupElement> FinGroup::find(const std::string& label) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (labels_[i] == label) return static_cast<GroupElement>(i);
  }
  return std::nullopt;
}

std::vector<std::vector<GroupElement>> FinGroup::table() const {
  std::vector<std::vector<GroupElement>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

// ----------------------------------------------------------------- Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<GroupElement> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw InputError("subgroup without parent group");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (GroupElement x : members_) {
    if (x >= parent_->order()) throw InputError("subgroup member out of range");
  }
  index_members();
  if (!contains(parent_->identity())) throw InputError("subgroup lacks the identity");
  for (GroupElement a : members_) {
    for (GroupElement b : members_) {
      if (!contains(parent_->mul(a, b))) throw InputError("member set is not closed under multiplication");
    }
  }
  generators_ = greedy_generators(*parent_, members_);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<GroupElement> members, Trusted)
    : parent_(std::move(parent)), members_(std::move(members)) {
  index_members();
  generators_ = greedy_generators(*parent_, members_);
}

void Subgroup::index_members() {
  position_.assign(parent_->order(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) position_[members_[i]] = static_cast<std::int32_t>(i);
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<GroupElement> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<GroupElement>(i);
  return Subgroup(std::move(parent), std::move(all), Trusted{});
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  const GroupElement e = parent->identity();
  return Subgroup(std::move(parent), {e}, Trusted{});
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(members_.begin(), members_.end(), [&](GroupElement x) { return other.contains(x); });
}

bool Subgroup::is_normal_in(const Subgroup& other) const {
  for (GroupElement g : other.generators()) {
    for (GroupElement x : members_) {
      if (!contains(parent_->conj(g, x))) return false;
    }
  }
  return true;
}

bool Subgroup::is_abelian() const {
  for (GroupElement a : generators_) {
    for (GroupElement b : generators_) {
      if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t Subgroup::index_in(const Subgroup& other) const {
  if (!is_subgroup_of(other)) throw PreconditionError("index_in: not a subgroup");
  return other.order() / order();
}

// -------------------------------------------------------------- operations

GroupPtr group_from_table(const std::vector<std::vector<GroupElement>>& table, std::vector<std::string> labels) {
  return FinGroup::from_table(table, std::move(labels));
}

Subgroup subgroup_generate(const GroupPtr& g, std::span<const GroupElement> gens) {
  for (GroupElement x : gens) {
    if (x >= g->order()) throw InputError("generator index out of range");
  }
  return Subgroup(g, closure(*g, gens), Subgroup::Trusted{});
}

Subgroup subgroup_generate(const GroupPtr& g, std::initializer_list<GroupElement> gens) {
  return subgroup_generate(g, std::span<const GroupElement>(gens.begin(), gens.size()));
}

CosetTable::CosetTable(const Subgroup& u, const Subgroup& h) {
  if (!u.is_subgroup_of(h)) throw PreconditionError("coset table: U is not contained in H");
  const FinGroup& g = *h.parent();
  coset_.assign(g.order(), -1);
  for (GroupElement x : h.members()) {
    if (coset_[x] >= 0) continue;
    const auto idx = static_cast<std::int32_t>(reps_.size());
    reps_.push_back(x);
    for (GroupElement y : u.members()) coset_[g.mul(y, x)] = idx;
  }
  identity_coset_ = static_cast<std::size_t>(coset_[g.identity()]);
}

std::vector<GroupElement> coset_reps(const Subgroup& u, const Subgroup& h) { return CosetTable(u, h).reps(); }

std::vector<GroupElement> double_coset(const Subgroup& u, GroupElement x, const Subgroup& h) {
  const FinGroup& g = *u.parent();
  std::vector<GroupElement> out;
  std::vector<char> seen(g.order(), 0);
  for (GroupElement a : u.members()) {
    const GroupElement ax = g.mul(a, x);
    for (GroupElement b : h.members()) {
      const GroupElement y = g.mul(ax, b);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> double_coset_reps(const Subgroup& u, const Subgroup& h, const Subgroup& g) {
  if (u.parent() != g.parent() || h.parent() != g.parent()) throw PreconditionError("double cosets: parent mismatch");
  std::vector<char> seen(g.parent()->order(), 0);
  std::vector<GroupElement> reps;
  for (GroupElement x : g.members()) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (GroupElement y : double_coset(u, x, h)) seen[y] = 1;
  }
  return reps;
}

Subgroup conjugate_intersect(const Subgroup& k, const Subgroup& h, GroupElement x) {
  if (k.parent() != h.parent()) throw PreconditionError("conjugate_intersect: parent mismatch");
  const FinGroup& g = *k.parent();
  const GroupElement xi = g.inv(x);
  std::vector<GroupElement> members;
  for (GroupElement y : k.members()) {
    if (h.contains(g.conj(xi, y))) members.push_back(y);
  }
  return Subgroup(k.parent(), std::move(members));
}

Subgroup conjugate(const Subgroup& h, GroupElement x) {
  const FinGroup& g = *h.parent();
  std::vector<GroupElement> members;
  for (GroupElement y : h.members()) members.push_back(g.conj(x, y));
  return Subgroup(h.parent(), std::move(members));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw PreconditionError("intersect: parent mismatch");
  std::vector<GroupElement> members;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(members));
  return Subgroup(a.parent(), std::move(members));
}

Subgroup product(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw PreconditionError("product: parent mismatch");
  const FinGroup& g = *a.parent();
  std::vector<GroupElement> members;
  for (GroupElement x : a.members()) {
    for (GroupElement y : b.members()) members.push_back(g.mul(x, y));
  }
  try {
    return Subgroup(a.parent(), std::move(members));
  } catch (const InputError&) {
    throw PreconditionError("product of subgroups is not a subgroup");
  }
}

Subgroup center(const GroupPtr& g) {
  std::vector<GroupElement> members;
  for (GroupElement x = 0; x < g->order(); ++x) {
    bool central = true;
    for (GroupElement s : g->generators()) central = central && g->mul(x, s) == g->mul(s, x);
    if (central) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

bool is_p_group(const Subgroup& s, unsigned p) {
  std::size_t n = s.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

Subgroup sylow_subgroup(const Subgroup& within, unsigned p) {
  const GroupPtr& g = within.parent();
  std::vector<GroupElement> gens;
  Subgroup current = Subgroup::trivial(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (GroupElement x : within.members()) {
      if (current.contains(x)) continue;
      std::size_t ord = g->element_order(x);
      while (ord % p == 0) ord /= p;
      if (ord != 1) continue;
      gens.push_back(x);
      Subgroup candidate = subgroup_generate(g, gens);
      if (is_p_group(candidate, p)) {
        current = std::move(candidate);
        grew = true;
      } else {
        gens.pop_back();
      }
    }
  }
  return current;
}

std::vector<Subgroup> all_subgroups(const Subgroup& within, std::size_t cap) {
  if (within.order() > cap) {
    throw CapExceeded("subgroup enumeration: order " + std::to_string(within.order()) + " exceeds cap " +
                      std::to_string(cap));
  }
  const GroupPtr& g = within.parent();
  std::set<std::vector<GroupElement>> seen;
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  seen.insert(found[0].members());
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup s = found[i];
    for (GroupElement x : within.members()) {
      if (s.contains(x)) continue;
      std::vector<GroupElement> gens = s.generators();
      gens.push_back(x);
      Subgroup t = subgroup_generate(g, gens);
      if (seen.insert(t.members()).second) found.push_back(std::move(t));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return found;
}

GroupInvariants group_invariants(const GroupPtr& g, unsigned p, std::size_t cap) {
  GroupInvariants inv;
  const Subgroup whole = Subgroup::whole(g);
  inv.center = center(g);
  inv.sylow = sylow_subgroup(whole, p);
  inv.is_p_group = is_p_group(whole, p);
  inv.all_subgroups = all_subgroups(whole, cap);
  return inv;
}

// ------------------------------------------------------------ constructions

GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<GroupElement> flat(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = static_cast<GroupElement>((i + j) % n);
  }
  return FinGroup::from_trusted_table(n, std::move(flat), std::move(labels));
}

GroupPtr make_dihedral(std::size_t n) {
  if (n < 1) throw InputError("dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  std::vector<GroupElement> flat(order * order);
  std::vector<std::string> labels;
  auto rlabel = [](std::size_t i) { return i == 0 ? std::string() : i == 1 ? std::string("r") : "r^" + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : rlabel(i));
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + rlabel(i));
  // r^a s^x * r^b s^y with elements written s^x r^a.
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t y = 0; y < 2; ++y) {
        for (std::size_t b = 0; b < n; ++b) {
          // s^x r^a s^y r^b = s^{x+y} r^{(y ? -a : a) + b}
          const std::size_t sx = (x + y) % 2;
          const std::size_t ra = ((y ? n - a : a) + b) % n;
          flat[(x * n + a) * order + (y * n + b)] = static_cast<GroupElement>(sx * n + ra);
        }
      }
    }
  }
  return FinGroup::from_trusted_table(order, std::move(flat), std::move(labels));
}

GroupPtr make_symmetric3() {
  return table_from_elements({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}});
}

GroupPtr make_quaternion8() {
  using Q = std::array<int, 4>;
  const std::vector<Q> elems = {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0},  {0, -1, 0, 0},
                                {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1},  {0, 0, 0, -1}};
  const std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto mul = [](const Q& x, const Q& y) {
    return Q{x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
             x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
             x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
             x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
  };
  std::vector<GroupElement> flat(64);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Q z = mul(elems[i], elems[j]);
      flat[i * 8 + j] = static_cast<GroupElement>(std::find(elems.begin(), elems.end(), z) - elems.begin());
    }
  }
  return FinGroup::from_trusted_table(8, std::move(flat), labels);
}

GroupPtr make_alternating4() { return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

GroupPtr group_from_permutations(const std::vector<std::vector<unsigned>>& gens) {
  if (gens.empty()) throw InputError("no permutation generators");
  const std::size_t deg = gens[0].size();
  std::vector<unsigned> id(deg);
  for (unsigned i = 0; i < deg; ++i) id[i] = i;
  std::vector<std::vector<unsigned>> elems{id};
  std::set<std::vector<unsigned>> seen{id};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      if (s.size() != deg) throw InputError("permutation degree mismatch");
      auto y = compose(elems[i], s);
      if (seen.insert(y).second) elems.push_back(std::move(y));
    }
  }
  return table_from_elements(elems);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  std::vector<GroupElement> flat(n * n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("(" + a->label(static_cast<GroupElement>(x / nb)) + "," + b->label(static_cast<GroupElement>(x % nb)) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const GroupElement pa = a->mul(static_cast<GroupElement>(x / nb), static_cast<GroupElement>(y / nb));
      const GroupElement pb = b->mul(static_cast<GroupElement>(x % nb), static_cast<GroupElement>(y % nb));
      flat[x * n + y] = static_cast<GroupElement>(pa * nb + pb);
    }
  }
  return FinGroup::from_trusted_table(n, std::move(flat), std::move(labels));
}

GroupPtr builtin_group(const std::string& name) {
  if (name == "S3") return make_symmetric3();
  if (name == "D4") return make_dihedral(4);
  if (name == "Q8") return make_quaternion8();
  if (name == "A4") return make_alternating4();
  auto parse_cyclic = [](const std::string& s) -> std::size_t {
    if (s.size() < 2 || s[0] != 'C') return 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return 0;
    }
    return static_cast<std::size_t>(std::stoul(s.substr(1)));
  };
  const auto x = name.find('x');
  if (x == std::string::npos) {
    if (const auto n = parse_cyclic(name); n > 0) return make_cyclic(n);
  } else {
    const auto a = parse_cyclic(name.substr(0, x)), b = parse_cyclic(name.substr(x + 1));
    if (a > 0 && b > 0) return direct_product(make_cyclic(a), make_cyclic(b));
  }
  throw InputError("unknown builtin group '" + name + "'");
}

// -------------------------------------------------------------------- SL_2

Sl2Quotient sl2_quotient_group(unsigned p, unsigned level, std::size_t cap) {
  if (!is_prime(p)) throw InputError("sl2_quotient_group: p must be prime");
  if (level < 1) throw InputError("sl2_quotient_group: level must be at least 1");
  std::uint64_t m = 1;
  for (unsigned i = 0; i < level; ++i) m *= p;
  const std::uint64_t expected = m * m * m / (static_cast<std::uint64_t>(p) * p) * (static_cast<std::uint64_t>(p) * p - 1);
  if (expected > cap) {
    throw CapExceeded("|SL2(Z/" + std::to_string(m) + ")| = " + std::to_string(expected) + " exceeds cap " +
                      std::to_string(cap));
  }
  Sl2Quotient out;
  out.p = p;
  out.level = level;
  out.modulus = m;
  std::unordered_map<std::uint64_t, GroupElement> index;
  std::vector<std::string> labels;
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint64_t b = 0; b < m; ++b) {
      for (std::uint64_t c = 0; c < m; ++c) {
        for (std::uint64_t d = 0; d < m; ++d) {
          if ((a * d + m * m - (b * c) % m) % m != 1 % m) continue;
          index.emplace(((a * m + b) * m + c) * m + d, static_cast<GroupElement>(out.entries.size()));
          out.entries.push_back({a, b, c, d});
          labels.push_back(std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
                           std::to_string(d));
        }
      }
    }
  }
  const std::size_t n = out.entries.size();
  std::vector<GroupElement> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = out.entries[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto& y = out.entries[j];
      const std::uint64_t a = (x[0] * y[0] + x[1] * y[2]) % m, b = (x[0] * y[1] + x[1] * y[3]) % m;
      const std::uint64_t c = (x[2] * y[0] + x[3] * y[2]) % m, d = (x[2] * y[1] + x[3] * y[3]) % m;
      flat[i * n + j] = index.at(((a * m + b) * m + c) * m + d);
    }
  }
  out.group = FinGroup::from_trusted_table(n, std::move(flat), std::move(labels));
  std::uint64_t pm = 1;
  for (unsigned lvl = 1; lvl < level; ++lvl) {
    pm *= p;
    std::vector<GroupElement> members;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = out.entries[i];
      if ((x[0] + m - 1) % pm == 0 && x[1] % pm == 0 && x[2] % pm == 0 && (x[3] + m - 1) % pm == 0) {
        members.push_back(static_cast<GroupElement>(i));
      }
    }
    out.congruence.emplace_back(out.group, std::move(members));
  }
  return out;
}

}  // namespace modrep
