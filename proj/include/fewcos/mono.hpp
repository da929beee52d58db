#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fewcos/gf2.hpp"

// Signed coordinate permutations over 2^d coordinates (d <= 6), group
// closure, orbits, and the specific subgroups of the frame normalizer used
// by the catalog constructions.  Actions are on the right throughout:
// v_i maps to (-1)^{[i in signs]} v_{perm[i]}.

namespace fewcos::mono {

using gf2::Subspace;
using gf2::Word;

struct CoordPerm {
  std::vector<std::uint8_t> img;

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  bool is_identity() const;
  bool operator==(const CoordPerm&) const = default;

  static CoordPerm identity(int n);
  // (p.then(q))(i) = q(p(i)): apply p first.
  CoordPerm then(const CoordPerm& q) const;
  CoordPerm inverse() const;
  // Image of a coordinate set under the permutation.
  Word image_of_set(Word a) const;
  // Preimage {i : p(i) in a}.
  Word preimage_of_set(Word a) const;
  int order() const;
};

struct MonoElt {
  Word signs = 0;  // set of negated coordinates
  CoordPerm perm;

  int size() const { return perm.size(); }
  bool operator==(const MonoElt&) const = default;

  static MonoElt identity(int n);
  static MonoElt diag(Word a, int n) { return {a, CoordPerm::identity(n)}; }
  static MonoElt of_perm(CoordPerm p) { return {0, std::move(p)}; }
};

// g then h, sequential right action.
MonoElt compose(const MonoElt& g, const MonoElt& h);
MonoElt inverse(const MonoElt& g);
// Conjugate of the sign change at a by g: eps_a^g = eps_{p[a]}.
inline Word conj_sign_set(Word a, const MonoElt& g) { return g.perm.image_of_set(a); }

// Packed key for hashing; supports <= 64 coordinates.
struct EltKey {
  std::array<std::uint64_t, 8> v{};
  bool operator==(const EltKey&) const = default;
};
struct EltKeyHash {
  std::size_t operator()(const EltKey& k) const;
};
EltKey key_of(const MonoElt& g);

struct MonoGroup {
  std::vector<MonoElt> generators;
  std::vector<MonoElt> elements;  // BFS order when materialized
  std::uint64_t order = 0;

  bool contains(const MonoElt& g) const;
};

// Breadth-first closure with deterministic ordering.  Throws ClosureCap
// when the cap is exceeded.
struct ClosureCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};
MonoGroup closure(const std::vector<MonoElt>& gens, std::uint64_t cap = 2000000);

// Orbit of an exact integer vector, BFS order.
std::vector<std::vector<int>> orbit_vectors(const std::vector<int>& start,
                                            const std::vector<MonoElt>& gens,
                                            std::uint64_t cap = 1 << 20);

std::vector<int> act_vector(const std::vector<int>& x, const MonoElt& g);

// Largest normal 2-subgroup, by brute force over the materialized elements.
MonoGroup o2_subgroup(const MonoGroup& g);

// Permutations of Omega = F2^d induced by affine maps.
CoordPerm perm_of_linear(const std::vector<Word>& mat, int d);        // w -> w*mat
CoordPerm perm_of_translation(int t, int d);                          // w -> w + t
std::vector<CoordPerm> gl_generators(int d);
std::vector<CoordPerm> agl_generators(int d);   // gl gens plus translation by omega_1
std::uint64_t gl_order(int d);
std::uint64_t agl_order(int d);

// Permutation of order 2^m - 1 (prime) fixing omega_0, block companion of a
// primitive degree-m polynomial extended by the identity.
CoordPerm singer_like_element(int m, int d);

// Orbit/stabilizer over coordinate indices for a set of permutations.
std::vector<int> point_orbit(int start, const std::vector<CoordPerm>& gens);

// The fixed d=4 point sets and codeword sections used by the 64- and
// 128-vector constructions.  B0 is the linear
// hyperplane {w : bit0(w) = 0}, which contains omega_0 = 0 but not
// omega_1 = 1; B1 is its complement.
struct SectionsD4 {
  Word b0 = 0, b1 = 0;               // point sets, as length-16 bit masks
  Subspace e01;                      // RM(1,4) words avoiding omega_0, omega_1 (dim 3)
  Subspace t0, t1;                   // dim-3 codeword spaces inside S_i
  Subspace s0, s1;                   // dim-4 spans of affine 2-spaces inside B_i
  Subspace b01;                      // B[01], the p01-symmetric part (dim 6)
  Subspace j;                        // RM(2,4) words avoiding omega_0, omega_1 (dim 9)
  std::vector<CoordPerm> q_gens;     // GL(3,2) fixing omega_1, stabilizing B0, B1
  CoordPerm p01;                     // translation by omega_1
};
SectionsD4 section_builders_d4();

// Small generating set for a materialized permutation set (greedy closure).
std::vector<CoordPerm> perm_generators(const std::vector<CoordPerm>& elements);

std::uint64_t perm_set_order(const std::vector<CoordPerm>& gens);

}  // namespace fewcos::mono
