#include "fewcos/forge.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "fewcos/rm.hpp"

namespace fewcos::forge {

using mono::CoordPerm;
using mono::MonoElt;

namespace {

std::vector<int> ones_vector(int n) { return std::vector<int>(n, 1); }

std::vector<int> vector_from_sign_word(Word w, int n) {
  std::vector<int> v(n, 1);
  for (int i = 0; i < n; ++i)
    if (w >> i & 1) v[i] = -1;
  return v;
}

std::vector<std::int64_t> gram_multiset(const sphere::SphericalCode& c) {
  std::vector<std::int64_t> ips;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      ips.push_back(sphere::inner(c.vectors[i], c.vectors[j]));
  std::sort(ips.begin(), ips.end());
  return ips;
}

// Greedy small generating set for an explicit element list.
std::vector<MonoElt> elt_generators(const std::vector<MonoElt>& elements) {
  std::vector<MonoElt> gens;
  std::unordered_set<mono::EltKey, mono::EltKeyHash> have;
  int n = elements.empty() ? 0 : elements[0].size();
  have.insert(mono::key_of(MonoElt::identity(n)));
  for (const MonoElt& e : elements) {
    if (have.count(mono::key_of(e))) continue;
    gens.push_back(e);
    auto cl = mono::closure(gens, elements.size() + 1);
    have.clear();
    for (const MonoElt& z : cl.elements) have.insert(mono::key_of(z));
    if (cl.order == elements.size()) break;
  }
  return gens;
}

std::unordered_set<mono::EltKey, mono::EltKeyHash> key_set(
    const std::vector<MonoElt>& elements) {
  std::unordered_set<mono::EltKey, mono::EltKeyHash> s;
  for (const MonoElt& e : elements) s.insert(mono::key_of(e));
  return s;
}

// ---- polynomials over F2, coefficient of x^i at bit i -------------------

int poly_deg(Word p) { return p ? 63 - __builtin_clzll(p) : -1; }

Word poly_mod(Word a, Word m) {
  int dm = poly_deg(m);
  while (poly_deg(a) >= dm) a ^= m << (poly_deg(a) - dm);
  return a;
}

bool poly_irreducible(Word p) {
  int d = poly_deg(p);
  if (d < 1) return false;
  for (Word q = 2; poly_deg(q) <= d / 2; ++q)
    if (poly_mod(p, q) == 0) return false;
  return true;
}

std::vector<Word> irreducibles_of_degree(int m) {
  std::vector<Word> out;
  for (Word p = (Word{1} << m) | 1; p < (Word{2} << m); p += 2)
    if (poly_irreducible(p)) out.push_back(p);
  return out;  // already in increasing coefficient-word order
}

// p(M) for a square bit matrix acting on row vectors.
std::vector<Word> poly_eval(Word p, const std::vector<Word>& mat) {
  int n = static_cast<int>(mat.size());
  std::vector<Word> acc(n, 0), pw = gf2::mat_identity(n);
  for (int i = 0; p >> i; ++i) {
    if (p >> i & 1)
      for (int r = 0; r < n; ++r) acc[r] ^= pw[r];
    pw = gf2::mat_mul(pw, mat);
  }
  return acc;
}

Word monomial_truth_table(Word s, int d) {
  Word tt = 0;
  for (int i = 0; i < (1 << d); ++i)
    if ((static_cast<Word>(i) & s) == s) tt |= Word{1} << i;
  return tt;
}

// Codewords of degree <= 2 avoiding point 0: spanned by the nonconstant
// monomials of degree <= 2.
Subspace degree2_avoiding_origin(int d) {
  std::vector<Word> rows;
  for (Word s = 1; s < (Word{1} << d); ++s)
    if (gf2::weight(s) <= 2) rows.push_back(monomial_truth_table(s, d));
  return gf2::span(rows, 1 << d);
}

struct DscConstituents {
  Subspace ambient;  // degree <= 2 words avoiding point 0
  Subspace lower;    // degree <= 1 words avoiding point 0
  std::vector<Word> action;  // matrix of the prime-order permutation on the quotient
  std::vector<std::vector<Word>> constituents;  // quotient-coordinate bases
};

DscConstituents dsc_constituents(int d, int m) {
  if (m < 3 || m > d || d > 5) throw std::invalid_argument("build_dsc: need 3 <= m <= d <= 5");
  int p = (1 << m) - 1;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("build_dsc: 2^m - 1 not prime");
  DscConstituents out;
  out.ambient = degree2_avoiding_origin(d);
  out.lower = rm::rm1_avoiding_origin(d);
  CoordPerm g = mono::singer_like_element(m, d);
  auto act = coc::quotient_codeword_action({g}, out.ambient, out.lower);
  out.action = act.gen_matrices[0];
  int n = act.module_dim;
  for (Word poly : irreducibles_of_degree(m)) {
    auto ker = gf2::nullspace(gf2::Matrix{poly_eval(poly, out.action), n});
    if (ker.empty()) continue;
    Subspace kspace = gf2::span(ker, n);
    std::vector<std::vector<Word>> found;
    for (Word v : kspace.elements()) {
      if (!v) continue;
      std::vector<Word> cyc;
      Word w = v;
      for (int j = 0; j < m; ++j) {
        cyc.push_back(w);
        w = gf2::mat_apply(out.action, w);
      }
      Subspace sub = gf2::span(cyc, n);
      if (sub.dim() != m) throw std::logic_error("build_dsc: constituent of wrong dimension");
      if (std::find(found.begin(), found.end(), sub.basis) == found.end())
        found.push_back(sub.basis);
    }
    std::sort(found.begin(), found.end());
    for (auto& b : found) out.constituents.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::size_t dsc_constituent_count(int d, int m) {
  return dsc_constituents(d, m).constituents.size();
}

DscReport build_dsc(int d, int m, int selector) {
  DscConstituents c = dsc_constituents(d, m);
  if (selector < 0 || static_cast<std::size_t>(selector) >= c.constituents.size())
    throw std::invalid_argument("build_dsc: selector out of range");
  DscReport rep;
  rep.d = d;
  rep.m = m;
  rep.selector = selector;
  rep.constituent_count = c.constituents.size();

  std::vector<Word> rows = c.lower.basis;
  for (Word u : c.constituents[selector])
    rows.push_back(gf2::quotient_lift(c.ambient, c.lower, u));
  rep.sign_space = gf2::span(rows, 1 << d);
  if (rep.sign_space.dim() != m + d) throw std::logic_error("build_dsc: sign space dimension");

  rm::RMCode rm2 = rm::build_rm(2, d);
  rm::RMCode rm1 = rm::build_rm(1, d);
  std::set<int> defects;
  for (Word w : rep.sign_space.elements()) {
    if (w == 0 || rm1.space.contains(w)) continue;
    defects.insert(rm::defect(rm2, w).k);
  }
  rep.pure = defects.size() == 1;
  if (!rep.pure) throw std::runtime_error("build_dsc: selected constituent is not pure");
  rep.k = *defects.begin();

  int half = 1 << (d - 1), off = 1 << (d - rep.k - 1);
  bool lo = false, hi = false;
  std::vector<std::vector<int>> vecs;
  for (Word w : rep.sign_space.elements()) {
    int wt = gf2::weight(w);
    lo |= wt == half - off;
    hi |= wt == half + off;
    vecs.push_back(vector_from_sign_word(w, 1 << d));
  }
  rep.both_signs = lo && hi;
  rep.code = sphere::make_code(std::move(vecs));
  return rep;
}

BigGroupReport build_big_group() {
  rm::RMCode rm2 = rm::build_rm(2, 4);
  rm::RMCode rm1 = rm::build_rm(1, 4);
  BigGroupReport rep;
  rep.action = std::make_shared<coc::ModuleAction>(
      coc::quotient_codeword_action(mono::gl_generators(4), rm2.space, rm1.space));
  auto z1 = coc::z1_basis(*rep.action);
  const coc::Derivation* noninner = nullptr;
  for (const auto& f : z1)
    if (!coc::is_inner(f, *rep.action)) {
      noninner = &f;
      break;
    }
  if (!noninner) throw std::logic_error("build_big_group: no outer cohomology class");
  auto sel = coc::select_noninner_with_kernel_index(*rep.action, *noninner, 8);
  if (!sel) throw std::logic_error("build_big_group: no kernel-index-8 cocycle");
  rep.nd = coc::lift_to_near_derivation(*sel, rm2.space, rm1.space);
  rep.nd.quotient.action = rep.action.get();

  for (Word w : rep.nd.lifted)
    if (w) rep.lifted_weights.insert(gf2::weight(w));
  rep.unidef = coc::unidefect_check(coc::diagonal_parts(rm1.space, rep.nd), 4, 2);

  for (Word b : rm1.space.basis) rep.generators.push_back(MonoElt::diag(b, 16));
  for (const CoordPerm& s : mono::gl_generators(4))
    rep.generators.push_back({rep.nd.lifted[rep.action->index_of(s)], s});
  rep.generators.push_back(MonoElt::of_perm(mono::perm_of_translation(1, 4)));

  rep.order = 32ull * mono::agl_order(4);
  auto orbit = mono::orbit_vectors(ones_vector(16), rep.generators, 1 << 10);
  rep.orbit_size = orbit.size();
  rep.stabilizer_order = rep.order / rep.orbit_size;

  // Cocycle identity of the extension to affine maps (pairs sampled): an
  // affine element is (matrix, translation), translations taking value 0.
  std::uint64_t seed = 0x853c49e6748fea9bull;
  auto rnd = [&seed]() {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return seed >> 33;
  };
  auto random_affine = [&]() {
    while (true) {
      std::vector<Word> mat(4);
      for (auto& r : mat) r = rnd() & 15;
      if (gf2::mat_inverse(mat)) return std::make_pair(mat, static_cast<Word>(rnd() & 15));
    }
  };
  auto value_of = [&](const std::vector<Word>& mat) {
    return sel->table[rep.action->index_of(mono::perm_of_linear(mat, 4))];
  };
  auto module_matrix = [&](const std::vector<Word>& mat) {
    return rep.action->matrices[rep.action->index_of(mono::perm_of_linear(mat, 4))];
  };
  rep.extension_identity_ok = true;
  for (int t = 0; t < 500; ++t) {
    auto [ma, ba] = random_affine();
    auto [mb, bb] = random_affine();
    auto prod = gf2::mat_mul(ma, mb);  // translation part irrelevant to values
    Word lhs = value_of(prod);
    Word rhs = value_of(ma) ^
               gf2::mat_apply(*gf2::mat_inverse(module_matrix(ma)), value_of(mb));
    if (lhs != rhs) rep.extension_identity_ok = false;
  }
  return rep;
}

BigCodeReport build_big_code(const sphere::SphericalCode* sub64) {
  BigCodeReport rep;
  rep.group = build_big_group();
  auto orbit = mono::orbit_vectors(ones_vector(16), rep.group.generators, 1 << 10);
  rep.code = sphere::make_code(orbit);
  rep.binary = sphere::to_binary(rep.code);

  NscFamily fam;
  if (!sub64) {
    fam = build_nsc_family();
    sub64 = &fam.nsc16_64;
  }
  rm::RMCode rm1 = rm::build_rm(1, 4);
  std::set<std::vector<int>> alt;
  for (const auto& v : sub64->vectors)
    for (Word w : rm1.space.elements())
      alt.insert(mono::act_vector(v, MonoElt::diag(w, 16)));
  std::set<std::vector<int>> got(rep.code.vectors.begin(), rep.code.vectors.end());
  rep.alternate_route_equal = alt == got;
  return rep;
}

NscFamily build_nsc_family() {
  NscFamily fam;
  BigGroupReport big = build_big_group();
  rm::RMCode rm1 = rm::build_rm(1, 4);
  mono::SectionsD4 sec = mono::section_builders_d4();

  // The 645120-element group: lower signs extended by the lifted cocycle over
  // the point stabilizer.
  std::vector<MonoElt> xgens;
  for (Word b : rm1.space.basis) xgens.push_back(MonoElt::diag(b, 16));
  for (const CoordPerm& s : mono::gl_generators(4))
    xgens.push_back({big.nd.lifted[big.action->index_of(s)], s});
  mono::MonoGroup x = mono::closure(xgens, 700000);
  fam.x_order = x.order;

  // Same set by direct product enumeration: every element is a lower sign
  // word times a lifted coset representative.
  auto xkeys = key_set(x.elements);
  fam.x_direct_route_equal = x.order == 32ull * big.action->order();
  for (std::size_t i = 0; i < big.action->order() && fam.x_direct_route_equal; ++i)
    for (Word w : rm1.space.elements())
      if (!xkeys.count(mono::key_of({w ^ big.nd.lifted[i], big.action->elements[i]}))) {
        fam.x_direct_route_equal = false;
        break;
      }

  // H: fixes the first two coordinates with no sign there, and normalizes the
  // rank-3 sign space supported away from them.
  auto normalizes_e01 = [&sec](const CoordPerm& p) {
    for (Word b : sec.e01.basis)
      if (!sec.e01.contains(p.image_of_set(b))) return false;
    return true;
  };
  for (const MonoElt& g : x.elements) {
    if (g.perm(0) != 0 || g.perm(1) != 1 || (g.signs & 3) != 0) continue;
    if (!normalizes_e01(g.perm)) continue;
    fam.h.elements.push_back(g);
  }
  fam.h.order = fam.h.elements.size();
  fam.h.generators = elt_generators(fam.h.elements);

  std::set<Word> diag_signs;
  for (const MonoElt& g : fam.h.elements)
    if (g.perm.is_identity()) diag_signs.insert(g.signs);
  auto e01_elts = sec.e01.elements();
  fam.h_cap_r_is_lower =
      diag_signs == std::set<Word>(e01_elts.begin(), e01_elts.end());

  fam.o2 = mono::o2_subgroup(fam.h);
  fam.o2_abelian = true;
  fam.o2_exponent = 1;
  fam.o2_sqrt1_count = 0;
  for (const MonoElt& a : fam.o2.elements) {
    int ord = 1;
    MonoElt p = a;
    while (!(p == MonoElt::identity(16))) {
      p = mono::compose(p, a);
      ++ord;
    }
    fam.o2_exponent = std::max(fam.o2_exponent, ord);
    if (ord <= 2) ++fam.o2_sqrt1_count;
    for (const MonoElt& b : fam.o2.elements)
      if (!(mono::compose(a, b) == mono::compose(b, a))) fam.o2_abelian = false;
  }

  auto orbit64 = mono::orbit_vectors(ones_vector(16), fam.h.generators, 1 << 8);
  fam.nsc16_64 = sphere::make_code(orbit64);
  auto o2_orbit = mono::orbit_vectors(ones_vector(16), fam.o2.elements, 1 << 8);
  fam.o2_regular = o2_orbit.size() == fam.o2.order;

  MonoElt p01 = MonoElt::of_perm(sec.p01);
  auto hkeys = key_set(fam.h.elements);
  fam.p01_normalizes_h = true;
  Subspace comm_span{{}, 16};
  std::vector<Word> comm_words;
  for (const MonoElt& g : fam.h.elements) {
    MonoElt conj = mono::compose(mono::compose(mono::inverse(p01), g), p01);
    if (!hkeys.count(mono::key_of(conj))) fam.p01_normalizes_h = false;
    MonoElt comm = mono::compose(mono::inverse(g), conj);
    if (!comm.perm.is_identity() || !sec.e01.contains(comm.signs)) {
      fam.comm_h_p01_spans_lower = false;
      comm_words.clear();
      break;
    }
    comm_words.push_back(comm.signs);
  }
  if (!comm_words.empty())
    fam.comm_h_p01_spans_lower = gf2::span(comm_words, 16).dim() == sec.e01.dim();

  MonoElt eps = MonoElt::diag(sec.b1, 16);
  fam.comm_h_eps_in_lower = true;
  for (const MonoElt& g : fam.h.generators) {
    MonoElt conj = mono::compose(mono::compose(mono::inverse(eps), g), eps);
    MonoElt comm = mono::compose(mono::inverse(g), conj);
    if (!comm.perm.is_identity() || !sec.e01.contains(comm.signs))
      fam.comm_h_eps_in_lower = false;
  }

  std::vector<MonoElt> hh = fam.h.generators;
  hh.push_back(eps);
  auto orbit128 = mono::orbit_vectors(ones_vector(16), hh, 1 << 9);
  fam.nsc16_128 = sphere::make_code(orbit128);
  fam.minus_one_absent = !sphere::cosine_set(fam.nsc16_128).count(Rat(-1));

  fam.nsc15_64 = sphere::reduce(fam.nsc16_64, {0});
  fam.nsc14_64 = sphere::reduce(fam.nsc16_64, {0, 1});
  fam.nsc15_128 = sphere::reduce(fam.nsc16_128, {0});
  return fam;
}

HStarReport build_h_star_route(const sphere::SphericalCode* reference) {
  mono::SectionsD4 sec = mono::section_builders_d4();
  HStarReport rep;
  rep.action = std::make_shared<coc::ModuleAction>(
      coc::quotient_codeword_action(sec.q_gens, sec.j, sec.e01));
  auto z1 = coc::z1_basis(*rep.action);
  rep.z1_dim = static_cast<int>(z1.size());

  // The two invariant 3-dimensional components of the 6-dimensional module.
  std::vector<Word> u0_rows, u1_rows;
  for (Word b : sec.t0.basis)
    u0_rows.push_back(gf2::quotient_coords(sec.j, sec.e01, b));
  for (Word b : sec.b01.basis) {
    Word q = gf2::quotient_coords(sec.j, sec.e01, b);
    if (q) u1_rows.push_back(q);
  }
  Subspace u0 = gf2::span(u0_rows, rep.action->module_dim);
  Subspace u1 = gf2::span(u1_rows, rep.action->module_dim);
  std::vector<Word> both = u0.basis;
  both.insert(both.end(), u1.basis.begin(), u1.basis.end());
  gf2::Matrix basis_mat{both, rep.action->module_dim};
  if (u0.dim() != 3 || u1.dim() != 3 || gf2::span(both, rep.action->module_dim).dim() != 6)
    throw std::logic_error("h_star: component decomposition failed");
  for (const auto& m : rep.action->gen_matrices)
    for (Word b : u0.basis)
      if (!u0.contains(gf2::mat_apply(m, b)))
        throw std::logic_error("h_star: first component not invariant");
  for (const auto& m : rep.action->gen_matrices)
    for (Word b : u1.basis)
      if (!u1.contains(gf2::mat_apply(m, b)))
        throw std::logic_error("h_star: second component not invariant");

  auto project = [&](Word v, bool second) {
    auto x = gf2::solve(basis_mat, v);
    if (!x) throw std::logic_error("h_star: projection failed");
    Word out = 0;
    for (std::size_t r = 0; r < both.size(); ++r)
      if ((*x >> r & 1) && (r >= u0.basis.size()) == second) out ^= both[r];
    return out;
  };

  bool found = false;
  for (Word c = 1; c < (Word{1} << rep.z1_dim) && !found; ++c) {
    coc::Derivation f = z1[__builtin_ctzll(c)];
    for (int i = __builtin_ctzll(c) + 1; i < rep.z1_dim; ++i)
      if (c >> i & 1) f = coc::add(f, z1[i]);
    coc::Derivation g0 = f, g1 = f;
    for (std::size_t i = 0; i < f.table.size(); ++i) {
      g0.table[i] = project(f.table[i], false);
      g1.table[i] = project(f.table[i], true);
    }
    for (std::size_t s = 0; s < f.gen_values.size(); ++s) {
      g0.gen_values[s] = project(f.gen_values[s], false);
      g1.gen_values[s] = project(f.gen_values[s], true);
    }
    if (g0.is_zero() || g1.is_zero()) continue;
    if (coc::is_inner(g0, *rep.action) || coc::is_inner(g1, *rep.action)) continue;
    auto k0 = coc::kernel(g0), k1 = coc::kernel(g1);
    if (k0 != k1 || k0.size() != 21) continue;
    auto nd = coc::lift_to_near_derivation(f, sec.j, sec.e01);
    auto unidef = coc::unidefect_check(coc::diagonal_parts(sec.e01, nd), 4, 2);
    if (unidef.level == coc::Unidefect::kFail) continue;
    rep.chosen = c;
    rep.components_noninner = true;
    rep.kernels_equal = true;
    rep.component_kernel_order = k0.size();
    rep.unidef = unidef;
    rep.nd = std::move(nd);
    rep.nd.quotient.action = rep.action.get();
    found = true;
  }
  if (!found) throw std::runtime_error("h_star: no qualifying cocycle");

  for (Word b : sec.e01.basis) rep.generators.push_back(MonoElt::diag(b, 16));
  for (const CoordPerm& q : sec.q_gens)
    rep.generators.push_back({rep.nd.lifted[rep.action->index_of(q)], q});
  rep.order = mono::closure(rep.generators, 3000).order;
  rep.code = sphere::make_code(mono::orbit_vectors(ones_vector(16), rep.generators, 1 << 8));
  if (reference) rep.gram_matches = gram_multiset(rep.code) == gram_multiset(*reference);
  return rep;
}

Word six_set_from_involution(const mono::SectionsD4& sec, const CoordPerm& t) {
  if (!(t.then(t).is_identity()) || t.is_identity())
    throw std::invalid_argument("six_set: not an involution");
  std::vector<int> pts;
  for (int i = 1; i < 16; ++i)
    if (sec.b0 >> i & 1) pts.push_back(i);
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> fixed;
  for (int p : pts) {
    int q = t(p);
    if (q == p)
      fixed.push_back(p);
    else if (p < q)
      pairs.emplace_back(p, q);
  }
  if (pairs.size() != 2 || fixed.size() != 3)
    throw std::invalid_argument("six_set: wrong cycle structure on the hyperplane");
  rm::RMCode rm2 = rm::build_rm(2, 4);
  for (auto [a, a2] : pairs) {
    for (int di = 0; di < 3; ++di)
      for (int ei = 0; ei < 3; ++ei) {
        if (di == ei) continue;
        int dd = fixed[di], e = fixed[ei], ff = fixed[3 - di - ei];
        if ((a ^ a2 ^ dd ^ e) != 0) continue;
        int u = e ^ 1, v = ff ^ 1;
        Word y = (Word{1} << u) ^ (Word{1} << v) ^ (Word{1} << a) ^ (Word{1} << a2) ^
                 (Word{1} << dd) ^ (Word{1} << ff);
        Word plane = (Word{1} << a) ^ (Word{1} << a2) ^ (Word{1} << dd) ^ (Word{1} << e);
        Word sym = (Word{1} << u) ^ (Word{1} << v) ^ (Word{1} << e) ^ (Word{1} << ff);
        if (gf2::weight(y) != 6) continue;
        if (t.image_of_set(y) != y) continue;
        if (!sec.t0.contains(plane) || !sec.b01.contains(sym)) continue;
        if (rm::defect(rm2, y).k != 2) continue;
        return y;
      }
  }
  throw std::runtime_error("six_set: construction failed");
}

SplitReport complement_search(const Subspace& e, const MonoElt& g1, const MonoElt& g2,
                              std::uint64_t quotient_order) {
  SplitReport rep;
  for (Word wa : e.elements()) {
    for (Word wb : e.elements()) {
      ++rep.pairs_tried;
      MonoElt c1 = mono::compose(MonoElt::diag(wa, g1.size()), g1);
      MonoElt c2 = mono::compose(MonoElt::diag(wb, g2.size()), g2);
      mono::MonoGroup cl;
      try {
        cl = mono::closure({c1, c2}, quotient_order * e.size() + 1);
      } catch (const mono::ClosureCap&) {
        continue;
      }
      if (cl.order != quotient_order) continue;
      bool trivial_meet = true;
      for (const MonoElt& z : cl.elements)
        if (z.perm.is_identity() && z.signs != 0) trivial_meet = false;
      if (trivial_meet) {
        rep.split = true;
        rep.witness = std::make_pair(c1, c2);
        return rep;
      }
    }
  }
  return rep;
}

SearchResult orbit_union_search(const SearchConfig& cfg,
                                const std::vector<MonoElt>& subgroup_gens) {
  int n = 1 << cfg.d;
  rm::RMCode rm2 = rm::build_rm(2, cfg.d);
  std::vector<Word> words = rm2.space.elements();
  SearchResult res;
  res.universe_size = words.size();

  // Action on sign words: under (signs A, perm p) the word B maps to the
  // image of B xor A.
  auto act_word = [](Word b, const MonoElt& g) {
    return g.perm.image_of_set(b ^ g.signs);
  };
  for (const MonoElt& g : subgroup_gens)
    for (Word b : rm2.space.basis)
      if (!rm2.space.contains(act_word(b, g)) || !rm2.space.contains(act_word(0, g)))
        throw std::invalid_argument("orbit_union_search: subgroup does not preserve the vector set");

  // Orbit partition, orbits labeled by their smallest word.
  std::map<Word, int> orbit_of;
  std::vector<std::vector<Word>> orbits;
  for (Word w : words) {
    if (orbit_of.count(w)) continue;
    std::vector<Word> orb{w};
    std::set<Word> seen{w};
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const MonoElt& g : subgroup_gens) {
        Word img = act_word(orb[head], g);
        if (seen.insert(img).second) orb.push_back(img);
      }
    int id = static_cast<int>(orbits.size());
    for (Word o : orb) orbit_of[o] = id;
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  for (const auto& o : orbits) res.orbit_sizes.push_back(o.size());

  // Pairwise inner-product profiles.
  std::size_t no = orbits.size();
  std::vector<std::vector<std::set<int>>> profile(no, std::vector<std::set<int>>(no));
  for (std::size_t i = 0; i < no; ++i)
    for (std::size_t j = i; j < no; ++j) {
      std::set<int> ips;
      for (Word u : orbits[i])
        for (Word w : orbits[j]) {
          if (i == j && u >= w) continue;
          ips.insert(n - 2 * gf2::weight(u ^ w));
        }
      profile[i][j] = ips;
      profile[j][i] = std::move(ips);
    }

  auto budget_of = [&](const std::set<int>& ips) {
    std::size_t b = ips.size();
    if (!cfg.include_antipodal && ips.count(-n)) --b;
    return b;
  };

  std::vector<int> chosen;
  std::set<int> current;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (res.hits.size() >= cfg.max_hits) return;
    if (chosen.size() >= cfg.min_orbits &&
        budget_of(current) <= static_cast<std::size_t>(cfg.max_cosines)) {
      SearchHit hit;
      hit.orbits = chosen;
      for (int id : chosen) hit.vector_count += orbits[id].size();
      for (int ip : current) hit.cosines.insert(Rat(ip, n));
      res.hits.push_back(std::move(hit));
    }
    if (chosen.size() == cfg.max_orbits) return;
    for (std::size_t next = start; next < no; ++next) {
      std::set<int> saved = current;
      bool ok = true;
      for (int id : chosen)
        current.insert(profile[id][next].begin(), profile[id][next].end());
      current.insert(profile[next][next].begin(), profile[next][next].end());
      if (budget_of(current) > static_cast<std::size_t>(cfg.max_cosines)) ok = false;
      if (ok) {
        chosen.push_back(static_cast<int>(next));
        dfs(next + 1);
        chosen.pop_back();
      }
      current = std::move(saved);
    }
  };
  dfs(0);
  return res;
}

std::vector<MonoElt> nsc_search_subgroup(const NscFamily& fam) {
  mono::SectionsD4 sec = mono::section_builders_d4();
  std::vector<MonoElt> gens;
  for (Word b : sec.e01.basis) gens.push_back(MonoElt::diag(b, 16));
  std::vector<MonoElt> perms;
  for (const MonoElt& g : fam.h.elements)
    if (g.signs == 0 && !g.perm.is_identity()) perms.push_back(g);
  for (const MonoElt& g : elt_generators(perms)) gens.push_back(g);
  return gens;
}

namespace {

std::string cosine_string(const std::set<Rat>& s) {
  std::string out = "{";
  for (const Rat& r : s) {
    if (out.size() > 1) out += ", ";
    out += r.str();
  }
  return out + "}";
}

// Expected cosines of an ell-coordinate reduction of a defect-k code.
std::set<Rat> reduction_formula(int d, int k, int ell) {
  int den = (1 << d) - ell;
  return {Rat(-(1 << (d - k)) - ell, den), Rat(-ell, den), Rat((1 << (d - k)) - ell, den)};
}

RowReport check_code(const std::string& name, const sphere::SphericalCode& c,
                     std::size_t want_n, const std::set<Rat>& printed,
                     const std::set<Rat>* formula = nullptr) {
  RowReport row;
  row.name = name;
  auto cos = sphere::cosine_set(c);
  bool n_ok = c.size() == want_n;
  row.pass = n_ok && cos == printed;
  if (!row.pass && formula && n_ok && cos == *formula) row.erratum = true;
  std::ostringstream os;
  os << c.size() << " vectors, cosines " << cosine_string(cos);
  if (row.pass)
    os << " (matches)";
  else if (row.erratum)
    os << " (differs from the published row but matches the reduction formula)";
  else
    os << " (MISMATCH: published " << cosine_string(printed) << ")";
  row.detail = os.str();
  return row;
}

}  // namespace

std::vector<RowReport> verify_published_table() {
  std::vector<RowReport> rows;

  // Mersenne diagonal rows, checked through the generic cosine formula at
  // ell = 0 and ell = 1.
  auto dsc_row = [&](int d, int m, int sel, const std::string& name) {
    DscReport r = build_dsc(d, m, sel);
    std::set<Rat> want{Rat(-1, 1 << r.k), Rat(0), Rat(1, 1 << r.k)};
    RowReport row = check_code(name, r.code, std::size_t{1} << (m + d), want);
    row.pass = row.pass && r.pure && r.both_signs;
    RowReport red = check_code(name + "_reduced", sphere::reduce(r.code, {0}),
                               std::size_t{1} << (m + d), reduction_formula(d, r.k, 1));
    row.pass = row.pass && red.pass;
    row.detail += "; ell=1 reduction " + red.detail;
    rows.push_back(std::move(row));
    return r.k;
  };
  dsc_row(3, 3, 0, "DSC_8_64");
  dsc_row(5, 5, 0, "DSC_32_1024_a");
  dsc_row(5, 5, 1, "DSC_32_1024_b");
  dsc_row(4, 3, 0, "DSC_16_128");

  NscFamily fam = build_nsc_family();
  std::set<Rat> quarter{Rat(-1, 4), Rat(0), Rat(1, 4)};
  std::set<Rat> printed15{Rat(-1, 5), Rat(-1, 15), Rat(1, 3)};
  auto formula15 = reduction_formula(4, 2, 1);
  std::set<Rat> seventh{Rat(-3, 7), Rat(-1, 7), Rat(1, 7)};
  rows.push_back(check_code("NSC_16_64", fam.nsc16_64, 64, quarter));
  rows.push_back(check_code("NSC_15_64", fam.nsc15_64, 64, printed15, &formula15));
  rows.push_back(check_code("NSC_14_64", fam.nsc14_64, 64, seventh));
  rows.push_back(check_code("NSC_16_128", fam.nsc16_128, 128, quarter));
  rows.push_back(check_code("NSC_15_128", fam.nsc15_128, 128, printed15, &formula15));
  return rows;
}

std::string code_to_json(const std::string& name, const sphere::SphericalCode& c,
                         const std::string& construction) {
  nlohmann::json j;
  j["name"] = name;
  j["dimension"] = c.dim;
  j["norm_squared"] = c.norm_sq;
  j["vectors"] = c.vectors;
  std::vector<std::string> cos;
  for (const Rat& r : sphere::cosine_set(c)) cos.push_back(r.str());
  j["cosines"] = cos;
  nlohmann::json cons;
  if (!construction.empty() && nlohmann::json::accept(construction))
    cons = nlohmann::json::parse(construction);
  else
    cons["recipe"] = construction;
  j["construction"] = cons;
  return j.dump(2) + "\n";
}

std::string code_to_csv(const sphere::SphericalCode& c) {
  std::ostringstream os;
  for (const auto& v : c.vectors) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "\n";
  }
  return os.str();
}

std::string binary_to_hex(const sphere::BinaryCode& b) {
  std::ostringstream os;
  for (std::uint32_t w : b.words) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04x", w);
    os << buf << "\n";
  }
  return os.str();
}

sphere::SphericalCode code_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::vector<int>> vecs = j.at("vectors");
  return sphere::make_code(std::move(vecs));
}

}  // namespace fewcos::forge
