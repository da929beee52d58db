#include "fewcos/mono.hpp"

#include <algorithm>
#include <deque>

#include "fewcos/rm.hpp"

namespace fewcos::mono {

bool CoordPerm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

CoordPerm CoordPerm::identity(int n) {
  CoordPerm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<std::uint8_t>(i);
  return p;
}

CoordPerm CoordPerm::then(const CoordPerm& q) const {
  CoordPerm out;
  out.img.resize(size());
  for (int i = 0; i < size(); ++i) out.img[i] = q.img[img[i]];
  return out;
}

CoordPerm CoordPerm::inverse() const {
  CoordPerm out;
  out.img.resize(size());
  for (int i = 0; i < size(); ++i) out.img[img[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Word CoordPerm::image_of_set(Word a) const {
  Word out = 0;
  for (int i = 0; i < size(); ++i)
    if (a & (Word{1} << i)) out |= Word{1} << img[i];
  return out;
}

Word CoordPerm::preimage_of_set(Word a) const {
  Word out = 0;
  for (int i = 0; i < size(); ++i)
    if (a & (Word{1} << img[i])) out |= Word{1} << i;
  return out;
}

int CoordPerm::order() const {
  CoordPerm p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p.then(*this);
    ++n;
  }
  return n;
}

MonoElt MonoElt::identity(int n) { return {0, CoordPerm::identity(n)}; }

MonoElt compose(const MonoElt& g, const MonoElt& h) {
  if (g.size() != h.size()) throw std::invalid_argument("compose: dimension mismatch");
  return {g.signs ^ g.perm.preimage_of_set(h.signs), g.perm.then(h.perm)};
}

MonoElt inverse(const MonoElt& g) {
  return {g.perm.image_of_set(g.signs), g.perm.inverse()};
}

EltKey key_of(const MonoElt& g) {
  EltKey k;
  for (int i = 0; i < g.size(); ++i) {
    std::uint64_t code = (std::uint64_t{g.perm.img[i]} << 1) |
                         ((g.signs >> i) & 1);
    k.v[i / 8] |= code << (8 * (i % 8));
  }
  return k;
}

std::size_t EltKeyHash::operator()(const EltKey& k) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t x : k.v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool MonoGroup::contains(const MonoElt& g) const {
  return std::find(elements.begin(), elements.end(), g) != elements.end();
}

MonoGroup closure(const std::vector<MonoElt>& gens, std::uint64_t cap) {
  MonoGroup g;
  g.generators = gens;
  if (gens.empty()) return g;
  int n = gens[0].size();
  std::unordered_set<EltKey, EltKeyHash> seen;
  g.elements.push_back(MonoElt::identity(n));
  seen.insert(key_of(g.elements[0]));
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const MonoElt& s : gens) {
      MonoElt next = compose(g.elements[head], s);
      if (seen.insert(key_of(next)).second) {
        if (g.elements.size() + 1 > cap) throw ClosureCap("closure: cap exceeded");
        g.elements.push_back(std::move(next));
      }
    }
  }
  g.order = g.elements.size();
  return g;
}

std::vector<int> act_vector(const std::vector<int>& x, const MonoElt& g) {
  std::vector<int> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    int v = (g.signs & (Word{1} << i)) ? -x[i] : x[i];
    y[g.perm.img[i]] = v;
  }
  return y;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::vector<std::vector<int>> orbit_vectors(const std::vector<int>& start,
                                            const std::vector<MonoElt>& gens,
                                            std::uint64_t cap) {
  std::vector<std::vector<int>> orbit{start};
  std::unordered_set<std::vector<int>, VecHash> seen{start};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const MonoElt& s : gens) {
      std::vector<int> next = act_vector(orbit[head], s);
      if (seen.insert(next).second) {
        if (orbit.size() + 1 > cap) throw ClosureCap("orbit_vectors: cap exceeded");
        orbit.push_back(std::move(next));
      }
    }
  }
  return orbit;
}

namespace {

bool is_power_of_two(std::uint64_t n) { return n && !(n & (n - 1)); }

int elt_order(const MonoElt& g) {
  MonoElt p = g;
  int n = 1;
  const MonoElt id = MonoElt::identity(g.size());
  while (!(p == id)) {
    p = compose(p, g);
    ++n;
  }
  return n;
}

}  // namespace

MonoGroup o2_subgroup(const MonoGroup& g) {
  if (g.elements.empty()) throw std::invalid_argument("o2_subgroup: group not materialized");
  // O2 is generated by the conjugacy classes of 2-power-order elements whose
  // normal closure is a 2-group.
  std::unordered_set<EltKey, EltKeyHash> done;
  std::vector<MonoElt> o2_members;
  for (const MonoElt& x : g.elements) {
    if (!done.insert(key_of(x)).second) continue;
    int ord = elt_order(x);
    if (!is_power_of_two(static_cast<std::uint64_t>(ord))) continue;
    // Conjugacy class of x.
    std::vector<MonoElt> cls;
    std::unordered_set<EltKey, EltKeyHash> cls_seen;
    for (const MonoElt& y : g.elements) {
      MonoElt c = compose(compose(inverse(y), x), y);
      if (cls_seen.insert(key_of(c)).second) cls.push_back(std::move(c));
    }
    for (const MonoElt& c : cls) done.insert(key_of(c));
    MonoGroup ncl = closure(cls, g.order + 1);
    if (!is_power_of_two(ncl.order)) continue;
    bool all_two = true;
    for (const MonoElt& z : ncl.elements) {
      if (!is_power_of_two(static_cast<std::uint64_t>(elt_order(z)))) {
        all_two = false;
        break;
      }
    }
    if (all_two) {
      for (const MonoElt& c : cls) o2_members.push_back(c);
    }
  }
  if (o2_members.empty()) {
    MonoGroup triv;
    triv.elements.push_back(MonoElt::identity(g.elements[0].size()));
    triv.order = 1;
    return triv;
  }
  return closure(o2_members, g.order + 1);
}

CoordPerm perm_of_linear(const std::vector<Word>& mat, int d) {
  CoordPerm p;
  int n = 1 << d;
  p.img.resize(n);
  for (int i = 0; i < n; ++i)
    p.img[i] = static_cast<std::uint8_t>(gf2::mat_apply(mat, static_cast<Word>(i)));
  return p;
}

CoordPerm perm_of_translation(int t, int d) {
  CoordPerm p;
  int n = 1 << d;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<std::uint8_t>(i ^ t);
  return p;
}

std::vector<CoordPerm> gl_generators(int d) {
  if (d < 2 || d > 6) throw std::invalid_argument("gl_generators: need 2 <= d <= 6");
  // Cycle matrix and one transvection generate GL(d,2).
  std::vector<Word> cyc(d), trans = gf2::mat_identity(d);
  for (int i = 0; i < d; ++i) cyc[i] = Word{1} << ((i + 1) % d);
  trans[0] ^= Word{1} << 1;
  return {perm_of_linear(cyc, d), perm_of_linear(trans, d)};
}

std::vector<CoordPerm> agl_generators(int d) {
  std::vector<CoordPerm> gens = gl_generators(d);
  gens.push_back(perm_of_translation(1, d));
  return gens;
}

std::uint64_t gl_order(int d) {
  std::uint64_t ord = 1, q = std::uint64_t{1} << d;
  for (int i = 0; i < d; ++i) ord *= q - (std::uint64_t{1} << i);
  return ord;
}

std::uint64_t agl_order(int d) { return (std::uint64_t{1} << d) * gl_order(d); }

CoordPerm singer_like_element(int m, int d) {
  if (m < 3 || m > d) throw std::invalid_argument("singer_like_element: need 3 <= m <= d");
  std::uint64_t p = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t f = 2; f * f <= p; ++f) {
    if (p % f == 0) throw std::invalid_argument("singer_like_element: 2^m - 1 not prime");
  }
  // Primitive polynomials for the Mersenne-exponent degrees in range.
  Word poly;
  switch (m) {
    case 3: poly = 0b011; break;       // x^3 + x + 1
    case 5: poly = 0b00101; break;     // x^5 + x^2 + 1
    default: throw std::invalid_argument("singer_like_element: unsupported degree");
  }
  std::vector<Word> mat = gf2::mat_identity(d);
  for (int i = 0; i + 1 < m; ++i) mat[i] = Word{1} << (i + 1);
  mat[m - 1] = poly;
  return perm_of_linear(mat, d);
}

std::vector<int> point_orbit(int start, const std::vector<CoordPerm>& gens) {
  std::vector<int> orbit{start};
  std::vector<bool> seen(gens.empty() ? 1 : gens[0].size(), false);
  seen[start] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const CoordPerm& s : gens) {
      int next = s(orbit[head]);
      if (!seen[next]) {
        seen[next] = true;
        orbit.push_back(next);
      }
    }
  }
  return orbit;
}

namespace {

// Intersect a codeword space with {A : A avoids every point of mask}.
Subspace avoid_points(const Subspace& s, Word mask) {
  std::vector<Word> rows = s.basis;
  for (int bit = 0; bit < s.ambient_dim; ++bit) {
    if (!(mask & (Word{1} << bit))) continue;
    std::vector<Word> next;
    Word carrier = 0;
    for (Word r : rows) {
      if (r & (Word{1} << bit)) {
        if (carrier) next.push_back(carrier ^ r);
        carrier = r;
      } else {
        next.push_back(r);
      }
    }
    rows = std::move(next);
  }
  return gf2::span(rows, s.ambient_dim);
}

}  // namespace

SectionsD4 section_builders_d4() {
  SectionsD4 sec;
  const int d = 4, n = 16;
  sec.b0 = 0;
  for (int i = 0; i < n; ++i)
    if (!(i & 1)) sec.b0 |= Word{1} << i;
  sec.b1 = ~sec.b0 & 0xFFFF;
  sec.p01 = perm_of_translation(1, d);

  rm::RMCode rm1 = rm::build_rm(1, d);
  rm::RMCode rm2 = rm::build_rm(2, d);
  sec.e01 = avoid_points(rm1.space, 0b11);
  sec.j = avoid_points(rm2.space, 0b11);

  // S_i: span of the affine 2-spaces inside B_i.  A 4-set is an affine
  // 2-space iff its points xor to zero.
  auto span_of_planes = [&](Word box) {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (box & (Word{1} << i)) pts.push_back(i);
    std::vector<Word> gens;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        for (std::size_t c = b + 1; c < pts.size(); ++c)
          for (std::size_t e = c + 1; e < pts.size(); ++e)
            if ((pts[a] ^ pts[b] ^ pts[c] ^ pts[e]) == 0)
              gens.push_back((Word{1} << pts[a]) | (Word{1} << pts[b]) |
                             (Word{1} << pts[c]) | (Word{1} << pts[e]));
    return gf2::span(gens, n);
  };
  sec.s0 = span_of_planes(sec.b0);
  sec.s1 = span_of_planes(sec.b1);
  sec.t0 = avoid_points(sec.s0, 0b01);
  sec.t1 = avoid_points(sec.s1, 0b10);

  // B[01]: even subsets of B0 avoiding omega_0, symmetrized by p01.
  {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if ((sec.b0 & (Word{1} << i)) && i != 0) pts.push_back(i);
    std::vector<Word> gens;
    for (std::size_t a = 1; a < pts.size(); ++a) {
      Word half = (Word{1} << pts[0]) | (Word{1} << pts[a]);
      gens.push_back(half | sec.p01.image_of_set(half));
    }
    sec.b01 = gf2::span(gens, n);
  }

  // Q = GL(3,2) acting on bits 1..3, fixing bit 0 (so omega_1 = 1 is fixed
  // and both hyperplanes are stabilized).
  for (const CoordPerm& g3 : gl_generators(3)) {
    // Recover the 3x3 matrix from the permutation of F2^3.
    std::vector<Word> mat(d);
    mat[0] = 1;
    for (int i = 0; i < 3; ++i) mat[i + 1] = static_cast<Word>(g3(1 << i)) << 1;
    sec.q_gens.push_back(perm_of_linear(mat, d));
  }
  return sec;
}

std::vector<CoordPerm> perm_generators(const std::vector<CoordPerm>& elements) {
  std::vector<CoordPerm> gens;
  std::uint64_t have = 1;
  for (const CoordPerm& p : elements) {
    if (p.is_identity()) continue;
    std::vector<CoordPerm> trial = gens;
    trial.push_back(p);
    std::uint64_t ord = perm_set_order(trial);
    if (ord > have) {
      gens = std::move(trial);
      have = ord;
      if (have == elements.size()) break;
    }
  }
  return gens;
}

std::uint64_t perm_set_order(const std::vector<CoordPerm>& gens) {
  if (gens.empty()) return 1;
  std::vector<MonoElt> mgens;
  for (const CoordPerm& p : gens) mgens.push_back(MonoElt::of_perm(p));
  return closure(mgens).order;
}

}  // namespace fewcos::mono
