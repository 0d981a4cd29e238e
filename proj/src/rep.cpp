#include "modrep/rep.hpp"

#include <algorithm>
#include <set>

#include "modrep/error.hpp"

namespace modrep {

namespace {

void require_same_domain(const Rep& a, const Rep& b, const char* what) {
  if (!(a.domain() == b.domain())) throw PreconditionError(std::string(what) + ": representations on different groups");
  if (!same_field(a.field(), b.field())) throw PreconditionError(std::string(what) + ": representations over different fields");
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s.code == 0; });
}

}  // namespace

Matrix equivariance_system(const Rep& v1, const Rep& v2, std::span<const GroupElement> gens) {
  const FieldPtr& field = v1.field();
  const FiniteField& f = *field;
  const std::size_t d1 = v1.dim(), d2 = v2.dim();
  Matrix sys(field, gens.size() * d2 * d1, d2 * d1);
  std::size_t row = 0;
  for (GroupElement s : gens) {
    const Matrix& a = v1.action(s);
    const Matrix& b = v2.action(s);
    for (std::size_t i = 0; i < d2; ++i) {
      for (std::size_t c = 0; c < d1; ++c, ++row) {
        for (std::size_t k = 0; k < d1; ++k) {
          const Scalar x = a(k, c);
          if (x.code != 0) sys(row, i * d1 + k) = f.add(sys(row, i * d1 + k), x);
        }
        for (std::size_t e = 0; e < d2; ++e) {
          const Scalar x = b(i, e);
          if (x.code != 0) sys(row, e * d1 + c) = f.sub(sys(row, e * d1 + c), x);
        }
      }
    }
  }
  return sys;
}

// ---------------------------------------------------------------------- Rep

Rep::Rep(Subgroup domain, FieldPtr field, std::size_t dim, std::vector<Matrix> action)
    : Rep(std::move(domain), std::move(field), dim, std::move(action), Unchecked{}) {
  const Data& d = *data_;
  if (!d.domain.parent()) throw InputError("representation without a group");
  if (!d.field) throw InputError("representation without a field");
  if (d.action.size() != d.domain.order()) throw InputError("one action matrix per group element is required");
  for (const Matrix& m : d.action) {
    if (m.rows() != dim || m.cols() != dim) throw InputError("action matrix has the wrong shape");
    if (dim > 0 && !same_field(m.field(), d.field)) throw InputError("action matrix over a different field");
  }
  const FinGroup& g = *d.domain.parent();
  if (!this->action(g.identity()).is_identity()) throw InputError("identity does not act as the identity matrix");
  for (GroupElement s : d.domain.generators()) {
    for (GroupElement x : d.domain.members()) {
      if (!(this->action(g.mul(x, s)) == this->action(x) * this->action(s))) {
        throw InputError("action is not a homomorphism at (" + g.label(x) + ", " + g.label(s) + ")");
      }
    }
  }
}

Rep::Rep(Subgroup domain, FieldPtr field, std::size_t dim, std::vector<Matrix> action, Unchecked)
    : data_(std::make_shared<Data>(Data{std::move(domain), std::move(field), dim, std::move(action)})) {}

Rep Rep::trivial(const Subgroup& domain, const FieldPtr& field, std::size_t dim) {
  return Rep(domain, field, dim, std::vector<Matrix>(domain.order(), Matrix::identity(field, dim)), Unchecked{});
}

Rep Rep::zero(const Subgroup& domain, const FieldPtr& field) { return trivial(domain, field, 0); }

Rep Rep::regular(const Subgroup& domain, const FieldPtr& field) {
  const FinGroup& g = *domain.parent();
  const std::size_t n = domain.order();
  std::vector<Matrix> action;
  action.reserve(n);
  for (GroupElement x : domain.members()) {
    Matrix m(field, n, n);
    for (GroupElement h : domain.members()) m(domain.position(g.mul(x, h)), domain.position(h)) = field->one();
    action.push_back(std::move(m));
  }
  return Rep(domain, field, n, std::move(action), Unchecked{});
}

bool Rep::same_action(const Rep& other) const {
  return domain() == other.domain() && same_field(field(), other.field()) && dim() == other.dim() &&
         actions() == other.actions();
}

// --------------------------------------------------------------------- GMap

GMap::GMap(Rep source, Rep target, Matrix matrix)
    : GMap(std::move(source), std::move(target), std::move(matrix), Unchecked{}) {
  require_same_domain(source_, target_, "GMap");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) throw InputError("GMap matrix has the wrong shape");
  for (GroupElement s : source_.domain().generators()) {
    if (!(matrix_ * source_.action(s) == target_.action(s) * matrix_)) {
      throw InputError("map is not equivariant at " + source_.group()->label(s));
    }
  }
}

GMap::GMap(Rep source, Rep target, Matrix matrix, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 && matrix_.cols() == 0 && (target_.dim() > 0 || source_.dim() > 0)) {
    matrix_ = Matrix(source_.field(), target_.dim(), source_.dim());
  }
}

bool GMap::is_injective() const { return rank(matrix_) == source_.dim(); }
bool GMap::is_surjective() const { return rank(matrix_) == target_.dim(); }
Subspace GMap::kernel() const { return modrep::kernel(matrix_); }
Subspace GMap::image() const { return mat_reduce(matrix_).image; }

GMap compose(const GMap& after, const GMap& before) {
  if (!after.source().same_action(before.target())) throw PreconditionError("compose: maps do not chain");
  return GMap(before.source(), after.target(), after.matrix() * before.matrix(), GMap::Unchecked{});
}

GMap identity_map(const Rep& v) {
  return GMap(v, v, Matrix::identity(v.field(), v.dim()), GMap::Unchecked{});
}

SES::SES(GMap left, GMap right) : left_(std::move(left)), right_(std::move(right)) {
  if (!left_.target().same_action(right_.source())) throw InputError("SES: middle terms differ");
  if (!left_.is_injective()) throw InputError("SES: left map is not injective");
  if (!right_.is_surjective()) throw InputError("SES: right map is not surjective");
  if (!(left_.image() == right_.kernel())) throw InputError("SES: image of left map differs from kernel of right map");
}

// ---------------------------------------------------------------- Character

Character::Character(Subgroup domain, FieldPtr field, std::vector<Scalar> values)
    : domain_(std::move(domain)), field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != domain_.order()) throw InputError("character needs one value per element");
  if (!domain_.is_abelian()) throw InputError("character domain must be abelian");
  const FinGroup& g = *domain_.parent();
  const FiniteField& f = *field_;
  for (Scalar v : values_) {
    if (v.code == 0) throw InputError("character value is zero");
  }
  if ((*this)(g.identity()) != f.one()) throw InputError("character is not 1 at the identity");
  for (GroupElement a : domain_.members()) {
    for (GroupElement b : domain_.members()) {
      if ((*this)(g.mul(a, b)) != f.mul((*this)(a), (*this)(b))) throw InputError("character is not multiplicative");
    }
    std::uint32_t ord = g.element_order(a);
    while (ord % f.characteristic() == 0) ord /= f.characteristic();
    if (ord == 1 && (*this)(a) != f.one()) throw InputError("character is nontrivial on a p-element");
  }
}

Character Character::trivial(const Subgroup& domain, const FieldPtr& field) {
  return Character(domain, field, std::vector<Scalar>(domain.order(), field->one()));
}

bool Character::is_trivial_on(const Subgroup& s) const {
  for (GroupElement x : s.members()) {
    if (!domain_.contains(x) || (*this)(x) != field_->one()) return false;
  }
  return true;
}

std::vector<Character> all_characters(const Subgroup& c, const FieldPtr& field) {
  if (!c.is_abelian()) throw PreconditionError("all_characters: subgroup is not abelian");
  const auto& gens = c.generators();
  const std::uint32_t units = field->order() - 1;
  std::vector<Character> out;
  std::vector<std::uint32_t> choice(gens.size(), 1);
  while (true) {
    std::map<GroupElement, Matrix> images;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      images.emplace(gens[i], Matrix::row(field, {field->element(choice[i])}));
    }
    try {
      Rep r = rep_build(c, field, images);
      std::vector<Scalar> values;
      for (const Matrix& m : r.actions()) values.push_back(m(0, 0));
      out.emplace_back(c, field, std::move(values));
    } catch (const InputError&) {
    }
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == units) choice[i++] = 1;
    if (i == choice.size()) break;
    ++choice[i];
  }
  return out;
}

// --------------------------------------------------------------- operations

Rep rep_build(const Subgroup& domain, const FieldPtr& field, const std::map<GroupElement, Matrix>& generator_images) {
  const FinGroup& g = *domain.parent();
  std::size_t dim = 0;
  bool have_dim = false;
  for (const auto& [s, m] : generator_images) {
    if (!domain.contains(s)) throw InputError("generator " + std::to_string(s) + " is outside the domain");
    if (m.rows() != m.cols()) throw InputError("generator image is not square");
    if (have_dim && m.rows() != dim) throw InputError("generator images have different sizes");
    dim = m.rows();
    have_dim = true;
    if (!inverse(m)) throw InputError("generator image of " + g.label(s) + " is not invertible");
  }
  std::vector<std::optional<Matrix>> action(domain.order());
  action[domain.position(g.identity())] = Matrix::identity(field, dim);
  std::vector<GroupElement> queue{g.identity()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const GroupElement x = queue[qi];
    const Matrix mx = *action[domain.position(x)];
    for (const auto& [s, ms] : generator_images) {
      const GroupElement y = g.mul(x, s);
      Matrix my = mx * ms;
      auto& slot = action[domain.position(y)];
      if (!slot) {
        slot = std::move(my);
        queue.push_back(y);
      } else if (!(*slot == my)) {
        throw InputError("generator images violate a relation at " + g.label(y));
      }
    }
  }
  std::vector<Matrix> out;
  out.reserve(action.size());
  for (auto& m : action) {
    if (!m) throw InputError("generator images do not generate the domain");
    out.push_back(std::move(*m));
  }
  return Rep(domain, field, dim, std::move(out));
}

Rep rep_restrict(const Rep& v, const Subgroup& u) {
  if (!u.is_subgroup_of(v.domain())) throw PreconditionError("rep_restrict: U is not a subgroup of the domain");
  std::vector<Matrix> action;
  action.reserve(u.order());
  for (GroupElement x : u.members()) action.push_back(v.action(x));
  return Rep(u, v.field(), v.dim(), std::move(action), Rep::Unchecked{});
}

Rep direct_sum(std::span<const Rep> parts) {
  if (parts.empty()) throw PreconditionError("direct_sum of nothing");
  std::size_t dim = 0;
  for (const Rep& r : parts) {
    require_same_domain(parts[0], r, "direct_sum");
    dim += r.dim();
  }
  const Subgroup& dom = parts[0].domain();
  std::vector<Matrix> action;
  action.reserve(dom.order());
  std::vector<Matrix> blocks(parts.size());
  for (std::size_t i = 0; i < dom.order(); ++i) {
    for (std::size_t k = 0; k < parts.size(); ++k) blocks[k] = parts[k].actions()[i];
    Matrix m(parts[0].field(), dim, dim);
    std::size_t off = 0;
    for (const Matrix& b : blocks) {
      m.set_block(off, off, b);
      off += b.rows();
    }
    action.push_back(std::move(m));
  }
  return Rep(dom, parts[0].field(), dim, std::move(action), Rep::Unchecked{});
}

Rep conjugate_basis(const Rep& v, const Matrix& p) {
  const auto pinv = inverse(p);
  if (!pinv || p.rows() != v.dim()) throw PreconditionError("conjugate_basis: change of basis must be invertible");
  std::vector<Matrix> action;
  for (const Matrix& m : v.actions()) action.push_back(p * m * *pinv);
  return Rep(v.domain(), v.field(), v.dim(), std::move(action), Rep::Unchecked{});
}

Matrix InducedRep::section_at_identity() const {
  const std::size_t d = inducing.dim();
  Matrix m(rep.field(), rep.dim(), d);
  m.set_block(identity_coset * d, 0, inducing.action(cosets[identity_coset]));
  return m;
}

Matrix InducedRep::evaluation_at_identity() const {
  const std::size_t d = inducing.dim();
  const FinGroup& g = *rep.group();
  Matrix m(rep.field(), d, rep.dim());
  m.set_block(0, identity_coset * d, inducing.action(g.inv(cosets[identity_coset])));
  return m;
}

InducedRep rep_induce(const Rep& w, const Subgroup& h) {
  const Subgroup& u = w.domain();
  if (!u.is_subgroup_of(h)) throw PreconditionError("rep_induce: inducing group is not a subgroup of the target");
  const FinGroup& g = *h.parent();
  const CosetTable table(u, h);
  const auto& reps = table.reps();
  const std::size_t m = reps.size(), d = w.dim();
  std::vector<Matrix> action;
  action.reserve(h.order());
  for (GroupElement x : h.members()) {
    Matrix mat(w.field(), m * d, m * d);
    for (std::size_t l = 0; l < m; ++l) {
      const GroupElement y = g.mul(reps[l], x);
      const std::size_t i = table.coset_of(y);
      const GroupElement uu = g.mul(y, g.inv(reps[i]));
      mat.set_block(l * d, i * d, w.action(uu));
    }
    action.push_back(std::move(mat));
  }
  InducedRep out;
  out.rep = Rep(h, w.field(), m * d, std::move(action), Rep::Unchecked{});
  out.inducing = w;
  out.cosets = reps;
  out.identity_coset = table.identity_coset();
  return out;
}

Matrix HomSpace::element(std::size_t i) const {
  return unflatten(flat.field(), flat.basis_vector(i), rows, cols);
}

HomSpace hom_space_over(const Rep& v1, const Rep& v2, const Subgroup& u) {
  if (!same_field(v1.field(), v2.field())) throw PreconditionError("hom_space: different fields");
  if (!u.is_subgroup_of(v1.domain()) || !u.is_subgroup_of(v2.domain())) {
    throw PreconditionError("hom_space: subgroup outside the domains");
  }
  HomSpace out;
  out.rows = v2.dim();
  out.cols = v1.dim();
  out.flat = kernel(equivariance_system(v1, v2, u.generators()));
  return out;
}

HomSpace hom_space(const Rep& v1, const Rep& v2) {
  require_same_domain(v1, v2, "hom_space");
  return hom_space_over(v1, v2, v1.domain());
}

Subspace fixed_points(const Rep& v, const Subgroup& u) {
  if (!u.is_subgroup_of(v.domain())) throw PreconditionError("fixed_points: U is not a subgroup of the domain");
  const Matrix id = Matrix::identity(v.field(), v.dim());
  std::vector<Matrix> rows;
  for (GroupElement s : u.generators()) rows.push_back(v.action(s) - id);
  if (rows.empty()) return Subspace::full(v.field(), v.dim());
  return kernel(vstack(rows));
}

Subspace cyclic_submodule(const Rep& v, const Vector& x) {
  std::vector<Vector> orbit;
  for (const Matrix& m : v.actions()) orbit.push_back(m.apply(x));
  return Subspace::span(v.field(), v.dim(), orbit);
}

std::size_t cyclic_dim(const Rep& v, const Vector& x) { return cyclic_submodule(v, x).dim(); }

SubRep subrep(const Rep& v, const Subspace& w) {
  if (w.ambient_dim() != v.dim()) throw PreconditionError("subrep: ambient dimension mismatch");
  const Matrix incl = w.inclusion();
  std::vector<Matrix> action;
  for (const Matrix& m : v.actions()) {
    Matrix img = m * incl;
    Matrix a(v.field(), w.dim(), w.dim());
    for (std::size_t j = 0; j < w.dim(); ++j) {
      const auto coords = w.coordinates(img.col_vector(j));
      if (!coords) throw PreconditionError("subrep: subspace is not invariant");
      for (std::size_t i = 0; i < w.dim(); ++i) a(i, j) = (*coords)[i];
    }
    action.push_back(std::move(a));
  }
  Rep sub(v.domain(), v.field(), w.dim(), std::move(action), Rep::Unchecked{});
  GMap inclusion(sub, v, incl, GMap::Unchecked{});
  return SubRep{std::move(sub), std::move(inclusion)};
}

QuotientRep quotient(const Rep& v, const Subspace& w) {
  if (w.ambient_dim() != v.dim()) throw PreconditionError("quotient: ambient dimension mismatch");
  const FiniteField& f = *v.field();
  std::vector<char> is_pivot(v.dim(), 0);
  for (auto c : w.pivots()) is_pivot[c] = 1;
  std::vector<std::size_t> complement;
  std::vector<std::size_t> slot(v.dim(), 0);
  for (std::size_t j = 0; j < v.dim(); ++j) {
    if (!is_pivot[j]) {
      slot[j] = complement.size();
      complement.push_back(j);
    }
  }
  const std::size_t c = complement.size();
  Matrix q(v.field(), c, v.dim());
  for (std::size_t t = 0; t < c; ++t) q(t, complement[t]) = f.one();
  for (std::size_t r = 0; r < w.pivots().size(); ++r) {
    const auto row = w.basis().row_span(r);
    for (std::size_t t = 0; t < c; ++t) q(t, w.pivots()[r]) = f.neg(row[complement[t]]);
  }
  Matrix iota(v.field(), v.dim(), c);
  for (std::size_t t = 0; t < c; ++t) iota(complement[t], t) = f.one();
  std::vector<Matrix> action;
  for (const Matrix& m : v.actions()) {
    for (std::size_t r = 0; r < w.dim(); ++r) {
      if (!w.contains(m.apply(w.basis_vector(r)))) throw PreconditionError("quotient: subspace is not invariant");
    }
    action.push_back(q * m * iota);
  }
  Rep quo(v.domain(), v.field(), c, std::move(action), Rep::Unchecked{});
  GMap proj(v, quo, q, GMap::Unchecked{});
  return QuotientRep{std::move(quo), std::move(proj), std::move(complement)};
}

std::vector<Subgroup> omega_v(const Rep& v, const Vector& x, const Subgroup* c) {
  if (x.size() != v.dim()) throw PreconditionError("omega_v: vector length mismatch");
  if (is_zero_vector(x)) throw PreconditionError("omega_v: the zero vector is excluded");
  const Subgroup& k = v.domain();
  const FinGroup& g = *k.parent();
  std::optional<Subgroup> ck;
  if (c) {
    for (GroupElement z : c->members()) {
      for (GroupElement s : k.generators()) {
        if (g.mul(z, s) != g.mul(s, z)) throw PreconditionError("omega_v: C is not central");
      }
    }
    ck = intersect(*c, k);
    for (GroupElement z : ck->members()) {
      if (!(v.action(z).apply(x) == x)) throw PreconditionError("omega_v: C ∩ K does not fix the vector");
    }
  }
  const std::size_t cd = cyclic_dim(v, x);
  std::vector<Subgroup> out;
  for (Subgroup& u : all_subgroups(k)) {
    bool fixes = true;
    for (GroupElement s : u.generators()) fixes = fixes && v.action(s).apply(x) == x;
    if (!fixes) continue;
    const std::size_t sat = ck ? product(u, *ck).order() : u.order();
    if (k.order() / sat > cd) out.push_back(std::move(u));
  }
  return out;
}

GMap phi_Uv(const Rep& v, const Subgroup& u, const Vector& x) {
  const Subgroup& k = v.domain();
  if (!u.is_subgroup_of(k)) throw PreconditionError("phi_Uv: U is not a subgroup of K");
  if (x.size() != v.dim()) throw PreconditionError("phi_Uv: vector length mismatch");
  for (GroupElement s : u.generators()) {
    if (!(v.action(s).apply(x) == x)) throw PreconditionError("phi_Uv: vector is not fixed by U");
  }
  const FinGroup& g = *k.parent();
  InducedRep ind = rep_induce(Rep::trivial(u, v.field()), k);
  Matrix m(v.field(), v.dim(), ind.cosets.size());
  for (std::size_t i = 0; i < ind.cosets.size(); ++i) {
    const Vector col = v.action(g.inv(ind.cosets[i])).apply(x);
    for (std::size_t r = 0; r < v.dim(); ++r) m(r, i) = col[r];
  }
  return GMap(ind.rep, v, std::move(m));
}

std::vector<Vector> default_phi_vectors(const Rep& v) {
  const FiniteField& f = *v.field();
  const std::size_t dim = v.dim();
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < dim && small; ++i) {
    total *= f.order();
    small = total <= 256;
  }
  std::vector<Vector> out;
  if (small) {
    for (std::uint64_t code = 1; code < total; ++code) {
      Vector x(dim);
      std::uint64_t c = code;
      for (std::size_t i = dim; i-- > 0;) {
        x[i] = f.element(static_cast<std::uint32_t>(c % f.order()));
        c /= f.order();
      }
      out.push_back(std::move(x));
    }
    return out;
  }
  std::set<Vector> seen;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e(dim, f.zero());
    e[i] = f.one();
    for (const Matrix& m : v.actions()) {
      Vector y = m.apply(e);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

Rep PhiAssembly::source() const {
  if (blocks.empty()) throw PreconditionError("PhiAssembly::source: S is zero");
  std::vector<Rep> parts;
  for (const GMap& b : blocks) parts.push_back(b.source());
  return direct_sum(parts);
}

GMap PhiAssembly::map() const { return GMap(source(), blocks.front().target(), phi); }

bool PhiAssembly::is_surjective() const { return rank(phi) == phi.rows(); }

PhiAssembly assemble_phi(const Rep& v, const Subgroup* c, std::optional<std::vector<Vector>> vectors) {
  PhiAssembly out;
  out.phi = Matrix(v.field(), v.dim(), 0);
  if (v.dim() == 0) return out;
  const std::vector<Vector> chosen = vectors ? std::move(*vectors) : default_phi_vectors(v);
  std::optional<Subgroup> ck;
  if (c) ck = intersect(*c, v.domain());
  std::vector<Matrix> parts;
  std::size_t offset = 0;
  for (const Vector& x : chosen) {
    if (x.size() != v.dim()) throw PreconditionError("assemble_phi: vector length mismatch");
    if (is_zero_vector(x)) continue;
    auto omega = omega_v(v, x, c);
    if (omega.empty()) {
      out.dropped.push_back(x);
      continue;
    }
    for (Subgroup& u : omega) {
      Subgroup sat = ck ? product(u, *ck) : std::move(u);
      GMap block = phi_Uv(v, sat, x);
      const std::size_t d = block.source().dim();
      parts.push_back(block.matrix());
      out.summands.push_back(SummandIndex{x, std::move(sat), offset, d});
      out.blocks.push_back(std::move(block));
      offset += d;
    }
  }
  if (!parts.empty()) out.phi = hstack(parts);
  if (!out.is_surjective()) {
    throw PreconditionError("assemble_phi: " + std::to_string(out.dropped.size()) +
                            " vector(s) have empty Omega and the remaining summands do not cover V");
  }
  return out;
}

GMap frobenius_transport(const Rep& w, const Rep& v, Adjunction side, const Matrix& input) {
  const Subgroup& u = w.domain();
  const Rep vu = rep_restrict(v, u);
  const InducedRep ind = rep_induce(w, v.domain());
  const FinGroup& g = *v.group();
  const std::size_t d = w.dim(), m = ind.cosets.size();
  if (side == Adjunction::lower) {
    GMap psi(w, vu, input);
    Matrix out(v.field(), v.dim(), m * d);
    for (std::size_t i = 0; i < m; ++i) out.set_block(0, i * d, v.action(g.inv(ind.cosets[i])) * psi.matrix());
    return GMap(ind.rep, v, std::move(out), GMap::Unchecked{});
  }
  GMap psi(vu, w, input);
  Matrix out(v.field(), m * d, v.dim());
  for (std::size_t i = 0; i < m; ++i) out.set_block(i * d, 0, psi.matrix() * v.action(ind.cosets[i]));
  return GMap(v, ind.rep, std::move(out), GMap::Unchecked{});
}

Matrix frobenius_transport_back(const Rep& w, const Rep& v, Adjunction side, const GMap& input) {
  const InducedRep ind = rep_induce(w, v.domain());
  if (side == Adjunction::lower) {
    GMap checked(ind.rep, v, input.matrix());
    return checked.matrix() * ind.section_at_identity();
  }
  GMap checked(v, ind.rep, input.matrix());
  return ind.evaluation_at_identity() * checked.matrix();
}

ChiEigenspace chi_eigenspace(const Rep& v, const Character& chi) {
  const Subgroup& c = chi.domain();
  if (!c.is_subgroup_of(v.domain())) throw PreconditionError("chi_eigenspace: C is not a subgroup of the domain");
  if (!same_field(chi.field(), v.field())) throw PreconditionError("chi_eigenspace: different fields");
  const FiniteField& f = *v.field();
  const FinGroup& g = *v.group();
  const Matrix id = Matrix::identity(v.field(), v.dim());
  ChiEigenspace out;
  std::vector<Matrix> rows;
  for (GroupElement s : c.generators()) rows.push_back(v.action(s) - id.scaled(chi(s)));
  out.space = rows.empty() ? Subspace::full(v.field(), v.dim()) : kernel(vstack(rows));

  std::vector<GroupElement> acting_trivially;
  for (GroupElement x : c.members()) {
    if (v.action(x).is_identity() && chi(x) == f.one()) acting_trivially.push_back(x);
  }
  const Subgroup n(c.parent(), std::move(acting_trivially));
  const std::size_t index = c.order() / n.order();
  if (index % f.characteristic() != 0) {
    Matrix p(v.field(), v.dim(), v.dim());
    for (GroupElement r : coset_reps(n, c)) p = p + v.action(r).scaled(chi(g.inv(r)));
    out.projector = p.scaled(f.inv(f.from_int(static_cast<long long>(index))));
  }
  return out;
}

Rep extend_by_chi(const Rep& v, const Character& chi, const Subgroup& kc) {
  const Subgroup& k = v.domain();
  const Subgroup& c = chi.domain();
  const FinGroup& g = *k.parent();
  if (!k.is_subgroup_of(kc) || !c.is_subgroup_of(kc)) throw PreconditionError("extend_by_chi: K and C must lie in KC");
  for (GroupElement z : c.generators()) {
    for (GroupElement s : kc.generators()) {
      if (g.mul(z, s) != g.mul(s, z)) throw PreconditionError("extend_by_chi: C is not central");
    }
  }
  if (!(product(k, c) == kc)) throw PreconditionError("extend_by_chi: KC is not the product of K and C");
  const Subgroup kc_meet = intersect(k, c);
  for (GroupElement x : kc_meet.members()) {
    if (!(v.action(x) == Matrix::identity(v.field(), v.dim()).scaled(chi(x)))) {
      throw PreconditionError("extend_by_chi: V and chi disagree on C ∩ K at " + g.label(x));
    }
  }
  std::vector<Matrix> action;
  for (GroupElement x : kc.members()) {
    bool found = false;
    for (GroupElement y : k.members()) {
      const GroupElement z = g.mul(g.inv(y), x);
      if (c.contains(z)) {
        action.push_back(v.action(y).scaled(chi(z)));
        found = true;
        break;
      }
    }
    if (!found) throw PreconditionError("extend_by_chi: element outside KC");
  }
  return Rep(kc, v.field(), v.dim(), std::move(action));
}

}  // namespace modrep
