#include "starblock/builders.hpp"

#include <functional>
#include <numeric>

#include "starblock/field.hpp"

namespace starblock::perm {
namespace {

using catalog::GroupId;
using Elem = Field::Elem;
using Matrix = std::vector<Elem>;  // row-major n x n

constexpr std::uint64_t kMaxDegree = 200'000;
// build_for stays below this module size; transversals store full permutations.
constexpr std::uint64_t kMaxAutoModule = 4096;

std::uint32_t checked_prime_power(std::uint32_t q) {
  if (!arith::prime_power_split(q)) throw BuildError(std::to_string(q) + " is not a prime power");
  return q;
}

Built finish(PermGroup group, std::optional<catalog::GroupId> id, std::string name,
             const Natural& expected) {
  if (group.order().value() != expected) {
    throw BuildError("builder bug: " + name + " has chain order " +
                     arith::to_decimal(group.order().value()) + ", expected " +
                     arith::to_decimal(expected));
  }
  return Built{std::move(group), std::move(id), std::move(name)};
}

Natural catalog_order(const catalog::GroupId& g) {
  return catalog::order(catalog::normalize(g).canonical).value();
}

// Adds candidates that enlarge the group until the target order is reached.
PermGroup generate_until(std::size_t degree, const std::vector<Perm>& candidates,
                         const Natural& target) {
  std::vector<Perm> chosen;
  std::optional<PermGroup> current;
  for (const auto& c : candidates) {
    if (c.is_identity() || (current && current->contains(c))) continue;
    chosen.push_back(c);
    current.emplace(degree, chosen);
    if (current->order().value() >= target) break;
  }
  if (!current) throw BuildError("no nontrivial generator candidates");
  return *current;
}

// Vectors of length n over GF(q) encoded as sum v_i q^i.
struct VectorSpace {
  const Field& F;
  unsigned n;
  std::uint64_t count;

  VectorSpace(const Field& f, unsigned dim) : F(f), n(dim), count(1) {
    for (unsigned i = 0; i < n; ++i) count *= F.size();
  }

  std::vector<Elem> decode(std::uint64_t code) const {
    std::vector<Elem> v(n);
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<Elem>(code % F.size());
      code /= F.size();
    }
    return v;
  }

  std::uint64_t encode(const std::vector<Elem>& v) const {
    std::uint64_t code = 0;
    for (unsigned i = n; i-- > 0;) code = code * F.size() + v[i];
    return code;
  }

  std::vector<Elem> times(const std::vector<Elem>& v, const Matrix& A) const {
    std::vector<Elem> w(n, 0);
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned i = 0; i < n; ++i) w[j] = F.add(w[j], F.mul(v[i], A[i * n + j]));
    }
    return w;
  }

  std::vector<Elem> normalized(std::vector<Elem> v) const {
    for (Elem c : v) {
      if (c == 0) continue;
      const Elem inv = F.inv(c);
      for (auto& x : v) x = F.mul(x, inv);
      break;
    }
    return v;
  }
};

Matrix identity_matrix(unsigned n) {
  Matrix m(n * n, 0);
  for (unsigned i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

// Point sets and the induced permutation of a matrix.
class MatrixAction {
 public:
  MatrixAction(const Field& F, unsigned n, bool projective,
               const std::function<bool(const std::vector<Elem>&)>& keep = {})
      : V_(F, n), projective_(projective) {
    if (V_.count - 1 > kMaxDegree) throw BuildError("natural module too large for a permutation action");
    index_.assign(V_.count, -1);
    for (std::uint64_t code = 1; code < V_.count; ++code) {
      const auto v = V_.decode(code);
      if (projective_ && V_.normalized(v) != v) continue;
      if (keep && !keep(v)) continue;
      index_[code] = static_cast<std::int64_t>(points_.size());
      points_.push_back(code);
    }
  }

  std::size_t degree() const { return points_.size(); }

  Perm perm(const Matrix& A) const {
    std::vector<Point> img(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto w = V_.times(V_.decode(points_[i]), A);
      if (projective_) w = V_.normalized(std::move(w));
      const auto idx = index_[V_.encode(w)];
      if (idx < 0) throw BuildError("matrix is singular");
      img[i] = static_cast<Point>(idx);
    }
    return Perm(std::move(img));
  }

 private:
  VectorSpace V_;
  bool projective_;
  std::vector<std::uint64_t> points_;
  std::vector<std::int64_t> index_;
};

// Elementary transvections I + t E_ij with t running over an additive basis.
std::vector<Matrix> elementary_generators(const Field& F, unsigned n) {
  std::vector<Matrix> out;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      Elem t = 1;
      for (unsigned b = 0; b < F.degree(); ++b) {
        Matrix m = identity_matrix(n);
        m[i * n + j] = t;
        out.push_back(std::move(m));
        t = F.mul(t, F.primitive());
      }
    }
  }
  return out;
}

// Unitriangular matrices preserving the antidiagonal hermitian form.
std::vector<Matrix> unitary_unipotents(const Field& F, std::uint32_t q, bool upper) {
  const unsigned n = 3;
  auto conj = [&](Elem x) { return F.pow(x, q); };
  auto preserves = [&](const Matrix& A) {
    // A W conj(A)^T = W with W antidiagonal ones.
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        Elem s = 0;
        for (unsigned k = 0; k < n; ++k) s = F.add(s, F.mul(A[i * n + k], conj(A[j * n + (n - 1 - k)])));
        if (s != (i + j == n - 1 ? 1u : 0u)) return false;
      }
    }
    return true;
  };
  std::vector<Matrix> out;
  const std::uint32_t Q = F.size();
  for (Elem a = 0; a < Q; ++a) {
    for (Elem b = 0; b < Q; ++b) {
      for (Elem c = 0; c < Q; ++c) {
        Matrix m = identity_matrix(n);
        if (upper) {
          m[1] = a, m[2] = b, m[5] = c;
        } else {
          m[3] = a, m[6] = b, m[7] = c;
        }
        if (preserves(m) && m != identity_matrix(n)) out.push_back(std::move(m));
      }
    }
  }
  return out;
}

// Symplectic transvections x -> x + a f(x, v) v for the form [[0, I], [-I, 0]].
std::vector<Matrix> symplectic_transvections(const Field& F, unsigned n) {
  const unsigned h = n / 2;
  VectorSpace V(F, n);
  std::vector<Elem> scalars{1};
  if (F.size() > 2) scalars.push_back(F.primitive());
  std::vector<Matrix> out;
  for (std::uint64_t code = 1; code < V.count; ++code) {
    const auto v = V.decode(code);
    std::vector<Elem> Jv(n);  // J v^T
    for (unsigned i = 0; i < h; ++i) {
      Jv[i] = v[i + h];
      Jv[i + h] = F.neg(v[i]);
    }
    for (Elem a : scalars) {
      Matrix m = identity_matrix(n);
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) m[i * n + j] = F.add(m[i * n + j], F.mul(a, F.mul(Jv[i], v[j])));
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

// Q(x) = x_0 x_{n-1} + x_1 x_{n-2} + ... + x_h^2 on odd n = 2h + 1.
struct QuadraticForm {
  const Field& F;
  unsigned n;

  Elem value(const std::vector<Elem>& x) const {
    Elem s = F.mul(x[n / 2], x[n / 2]);
    for (unsigned i = 0; i < n / 2; ++i) s = F.add(s, F.mul(x[i], x[n - 1 - i]));
    return s;
  }

  Elem polar(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    std::vector<Elem> xy(n);
    for (unsigned i = 0; i < n; ++i) xy[i] = F.add(x[i], y[i]);
    return F.sub(F.sub(value(xy), value(x)), value(y));
  }

  // x -> x - (B(x, v) / Q(v)) v
  Matrix reflection(const std::vector<Elem>& v) const {
    const Elem qv = value(v);
    Matrix m = identity_matrix(n);
    std::vector<Elem> e(n, 0);
    for (unsigned i = 0; i < n; ++i) {
      e[i] = 1;
      const Elem c = F.div(polar(e, v), qv);
      e[i] = 0;
      for (unsigned j = 0; j < n; ++j) m[i * n + j] = F.sub(m[i * n + j], F.mul(c, v[j]));
    }
    return m;
  }
};

Matrix mat_product(const Field& F, unsigned n, const Matrix& a, const Matrix& b) {
  Matrix out(n * n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k < n; ++k) {
      if (a[i * n + k] == 0) continue;
      for (unsigned j = 0; j < n; ++j) out[i * n + j] = F.add(out[i * n + j], F.mul(a[i * n + k], b[k * n + j]));
    }
  }
  return out;
}

}  // namespace

Built alternating(unsigned n) {
  if (n < 3) throw BuildError("alternating builder needs n >= 3");
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Point> c;
    for (Point i = (n % 2 == 0) ? 1 : 0; i < n; ++i) c.push_back(i);
    gens.push_back(Perm::from_cycles(n, {c}));
  }
  const auto id = catalog::alternating(n);
  return finish(PermGroup(n, std::move(gens)), id, catalog::to_string(id), catalog_order(id));
}

Built symmetric(unsigned n) {
  if (n < 2) throw BuildError("symmetric builder needs n >= 2");
  std::vector<Point> c;
  for (Point i = 0; i < n; ++i) c.push_back(i);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {c})};
  const auto id = catalog::symmetric(n);
  return finish(PermGroup(n, std::move(gens)), id, catalog::to_string(id), catalog_order(id));
}

Built cyclic_regular(unsigned n) {
  if (n < 2) throw BuildError("cyclic builder needs n >= 2");
  std::vector<Point> c;
  for (Point i = 0; i < n; ++i) c.push_back(i);
  const auto id = catalog::cyclic(n);
  return finish(PermGroup(n, {Perm::from_cycles(n, {c})}), id, catalog::to_string(id), catalog_order(id));
}

namespace {

Perm moebius(const Field& F, Elem a, Elem b, Elem c, Elem d) {
  const Point inf = F.size();
  std::vector<Point> img(F.size() + 1);
  img[inf] = (c == 0) ? inf : F.div(a, c);
  for (Elem x = 0; x < F.size(); ++x) {
    const Elem den = F.add(F.mul(c, x), d);
    img[x] = (den == 0) ? inf : F.div(F.add(F.mul(a, x), b), den);
  }
  return Perm(std::move(img));
}

std::vector<Perm> projective_line_candidates(const Field& F, bool full) {
  const Elem w = F.primitive();
  std::vector<Perm> out{moebius(F, 1, 1, 0, 1), moebius(F, 1, w, 0, 1), moebius(F, F.mul(w, w), 0, 0, 1),
                        moebius(F, 0, F.neg(1), 1, 0)};
  if (full) out.push_back(moebius(F, w, 0, 0, 1));
  return out;
}

}  // namespace

Built psl2_action(std::uint32_t q) {
  const Field F(checked_prime_power(q));
  const auto id = catalog::linear(catalog::Family::PSL, 2, q);
  const Natural target = catalog_order(id);
  return finish(generate_until(q + 1, projective_line_candidates(F, false), target), id,
                catalog::to_string(id), target);
}

Built pgl2_action(std::uint32_t q) {
  const Field F(checked_prime_power(q));
  const Natural target = Natural(q) * (Natural(q) * q - 1);
  return finish(generate_until(q + 1, projective_line_candidates(F, true), target), std::nullopt,
                "PGL(2," + std::to_string(q) + ")", target);
}

Built matrix_action(MatrixFamily family, unsigned n, std::uint32_t q) {
  checked_prime_power(q);
  using catalog::Family;
  switch (family) {
    case MatrixFamily::GL:
    case MatrixFamily::SL: {
      if (n < 2) throw BuildError("matrix builder needs n >= 2");
      const Field F(q);
      const MatrixAction act(F, n, false);
      const bool gl = family == MatrixFamily::GL;
      const auto id = catalog::linear(gl ? Family::GL : Family::SL, n, q);
      std::vector<Perm> cands;
      for (const auto& m : elementary_generators(F, n)) cands.push_back(act.perm(m));
      if (gl && q > 2) {
        Matrix d = identity_matrix(n);
        d[0] = F.primitive();
        cands.push_back(act.perm(d));
      }
      const Natural target = catalog_order(id);
      return finish(generate_until(act.degree(), cands, target), id, catalog::to_string(id), target);
    }
    case MatrixFamily::SU: {
      if (n != 3) throw BuildError("unitary builder supports n = 3 only");
      if (Natural(q) * q > 1024) throw BuildError("unitary builder field too large");
      const Field F(q * q);
      const MatrixAction act(F, 3, true);
      const auto id = catalog::linear(Family::PSU, 3, q);
      std::vector<Perm> cands;
      for (bool upper : {true, false}) {
        for (const auto& m : unitary_unipotents(F, q, upper)) cands.push_back(act.perm(m));
      }
      const Natural target = catalog_order(id);
      return finish(generate_until(act.degree(), cands, target), id, catalog::to_string(id), target);
    }
    case MatrixFamily::Sp: {
      if (n < 2 || n % 2) throw BuildError("symplectic builder needs even n >= 2");
      const Field F(q);
      const MatrixAction act(F, n, true);
      const auto id = catalog::linear(Family::PSp, n / 2, q);
      std::vector<Perm> cands;
      for (const auto& m : symplectic_transvections(F, n)) cands.push_back(act.perm(m));
      const Natural target = catalog_order(id);
      return finish(generate_until(act.degree(), cands, target), id, catalog::to_string(id), target);
    }
    case MatrixFamily::SO: {
      if (n < 3 || n % 2 == 0 || q % 2 == 0) throw BuildError("orthogonal builder needs odd n >= 3 and odd q");
      const Field F(q);
      const QuadraticForm Q{F, n};
      const MatrixAction act(F, n, true, [&](const std::vector<Elem>& v) { return Q.value(v) == 0; });
      GroupId id;
      id.family = Family::SO_odd;
      id.n = n / 2;
      id.q = q;
      catalog::validate(id);
      // Products of two reflections generate SO.
      const VectorSpace V(F, n);
      std::vector<Matrix> reflections;
      for (std::uint64_t code = 1; code < V.count; ++code) {
        const auto v = V.decode(code);
        if (V.normalized(v) == v && Q.value(v) != 0) reflections.push_back(Q.reflection(v));
      }
      std::vector<Perm> cands;
      for (std::size_t i = 1; i < reflections.size(); ++i) {
        cands.push_back(act.perm(mat_product(F, n, reflections[0], reflections[i])));
      }
      const Natural target = catalog_order(id);
      return finish(generate_until(act.degree(), cands, target), id, catalog::to_string(id), target);
    }
  }
  throw BuildError("unknown matrix family");
}

namespace {

std::optional<Built> direct(const catalog::GroupId& g) {
  using catalog::Family;
  // Prime fields up to 1024 or the tabulated prime-power fields.
  const bool small_q = g.q > 1 && g.q <= 1024 && (g.q <= 32 || arith::is_prime(g.q));
  const auto q = small_q ? static_cast<std::uint32_t>(g.q) : 0u;
  auto module_fits = [&](unsigned dim, std::uint32_t field) {
    Natural size = 1;
    for (unsigned i = 0; i < dim; ++i) size *= field;
    return size <= kMaxAutoModule;
  };
  switch (g.family) {
    case Family::Cyclic:
      if (g.n >= 2) return cyclic_regular(g.n);
      break;
    case Family::Alternating:
      if (g.n >= 3 && g.n <= 64) return alternating(g.n);
      break;
    case Family::Symmetric:
      if (g.n >= 2 && g.n <= 64) return symmetric(g.n);
      break;
    case Family::PSL:
      if (g.n == 2 && small_q) return psl2_action(q);
      // Trivial centre: PSL = SL.
      if (g.n >= 3 && small_q && std::gcd(g.n, q - 1) == 1 && module_fits(g.n, q)) {
        auto b = matrix_action(MatrixFamily::SL, g.n, q);
        b.id = g;
        return b;
      }
      break;
    case Family::GL:
    case Family::SL:
      if (g.n >= 2 && small_q && module_fits(g.n, q)) {
        return matrix_action(g.family == Family::GL ? MatrixFamily::GL : MatrixFamily::SL, g.n, q);
      }
      break;
    case Family::PSU:
      if (g.n == 3 && q >= 3 && q * q <= 32) return matrix_action(MatrixFamily::SU, 3, q);
      break;
    case Family::PSp:
      if (g.n >= 1 && small_q && module_fits(2 * g.n, q)) return matrix_action(MatrixFamily::Sp, 2 * g.n, q);
      break;
    case Family::SO_odd:
      if (g.n >= 1 && small_q && q % 2 == 1 && module_fits(2 * g.n + 1, q)) {
        return matrix_action(MatrixFamily::SO, 2 * g.n + 1, q);
      }
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Built> build_for(const catalog::GroupId& g) {
  catalog::validate(g);
  if (auto b = direct(g)) return b;
  const auto canon = catalog::normalize(g).canonical;
  if (!(canon == g)) {
    if (auto b = direct(canon)) {
      b->id = g;
      return b;
    }
  }
  return std::nullopt;
}

}  // namespace starblock::perm
