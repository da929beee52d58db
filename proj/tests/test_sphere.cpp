#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fewcos/mono.hpp"
#include "fewcos/rm.hpp"
#include "fewcos/sphere.hpp"

using namespace fewcos;
using sphere::BinaryCode;
using sphere::SphericalCode;

namespace {

// +-1 vectors of length 16 whose sign sets run over a codeword space.
SphericalCode pm_code_from_space(const gf2::Subspace& s) {
  std::vector<std::vector<int>> vecs;
  for (gf2::Word w : s.elements()) {
    std::vector<int> v(16, 1);
    for (int i = 0; i < 16; ++i)
      if (w >> i & 1) v[i] = -1;
    vecs.push_back(v);
  }
  return sphere::make_code(std::move(vecs));
}

}  // namespace

TEST_CASE("make_code validation") {
  CHECK_THROWS(sphere::make_code({}));
  CHECK_THROWS(sphere::make_code({{1, 1}, {1, 1}}));          // duplicate
  CHECK_THROWS(sphere::make_code({{1, 0}, {1, 1}}));          // mixed norms
  CHECK_THROWS(sphere::make_code({{0, 0}}));                  // zero vector
  auto c = sphere::make_code({{3, 4}, {4, 3}});
  CHECK(c.norm_sq == 25);
  CHECK(c.dim == 2);
}

TEST_CASE("cosine sets") {
  // Regular simplex in the plane via a 3-cycle of coordinates.
  auto simplex = sphere::make_code({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  std::set<Rat> want{Rat(-1, 2)};
  CHECK(sphere::cosine_set(simplex) == want);

  // Cross-polytope: cosines {-1, 0}.
  auto cross = sphere::make_code(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  std::set<Rat> want2{Rat(-1), Rat(0)};
  CHECK(sphere::cosine_set(cross) == want2);
}

TEST_CASE("cosines of a +-1 code match binary weight enumeration") {
  auto rm1 = rm::build_rm(1, 4);
  auto c = pm_code_from_space(rm1.space);
  // RM(1,4) weights {0,8,16} minus self give cosines 16-2w over 16.
  std::set<Rat> want{Rat(-1), Rat(0)};
  CHECK(sphere::cosine_set(c) == want);
}

TEST_CASE("reduce drops constant coordinates and rejects others") {
  auto c = sphere::make_code({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}});
  auto r = sphere::reduce(c, {0});
  CHECK(r.dim == 3);
  CHECK(r.norm_sq == 3);
  CHECK(r.size() == 3);
  CHECK_THROWS(sphere::reduce(c, {1}));  // coordinate 1 disagrees
  CHECK_THROWS(sphere::reduce(c, {0, 1, 2, 3}));
}

TEST_CASE("binary round trip and equivariance under signed permutations") {
  auto rm2 = rm::build_rm(2, 4);
  auto c = pm_code_from_space(rm2.space);
  auto bc = sphere::to_binary(c);
  CHECK(bc.length == 16);
  CHECK(bc.words.size() == 2048);
  auto back = sphere::from_binary(bc);
  CHECK(back.vectors == c.vectors);

  // Sign change by a codeword composed with a code permutation keeps the
  // word set; the binary image is unchanged as a set.
  mono::MonoElt g{0b0110011001100110,
                  mono::perm_of_translation(3, 4)};  // RM(1,4) word, AGL perm
  std::vector<std::vector<int>> moved;
  for (const auto& v : c.vectors) moved.push_back(mono::act_vector(v, g));
  auto bc2 = sphere::to_binary(sphere::make_code(std::move(moved)));
  CHECK(bc2.words == bc.words);
}

TEST_CASE("to_binary rejects non-unit coordinates") {
  CHECK_THROWS(sphere::to_binary(sphere::make_code({{2, 1}, {1, 2}})));
}

TEST_CASE("distance statistics of RM(1,4)") {
  auto rm1 = rm::build_rm(1, 4);
  BinaryCode b{16, {}};
  for (gf2::Word w : rm1.space.elements()) b.words.push_back(static_cast<std::uint32_t>(w));
  std::sort(b.words.begin(), b.words.end());
  CHECK(sphere::min_distance(b) == 8);
  // Aggregate counts ordered pairs; per-word matches it divided by |C| for a
  // distance-invariant code.
  std::map<int, std::int64_t> agg{{0, 32}, {8, 960}, {16, 32}};
  CHECK(sphere::distance_distribution(b) == agg);
  std::map<int, std::int64_t> want{{0, 1}, {8, 30}, {16, 1}};
  CHECK(sphere::distance_distribution_from(b, 0) == want);
  CHECK(!sphere::nonlinearity_witness(b).has_value());  // linear code
}

TEST_CASE("nonlinearity witness on a nonlinear set") {
  BinaryCode b{4, {0b0000, 0b0011, 0b0101}};
  auto w = sphere::nonlinearity_witness(b);
  REQUIRE(w.has_value());
  CHECK((w->first ^ w->second) == 0b0110);
}

TEST_CASE("association scheme: simplex passes, perturbed set fails") {
  auto simplex = sphere::make_code({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  auto rep = sphere::association_scheme_check(simplex);
  CHECK(rep.is_scheme);
  REQUIRE(rep.relation_values.size() == 2);  // self ip 6 and cross ip -3
  CHECK(rep.relation_values[0] == 6);
  CHECK(rep.numbers[1][1][1] == 1);  // two non-self relations from any pair

  // A path-like inner-product pattern is not a scheme: vector 1 sees the
  // inner product 0 twice, vectors 0 and 2 see it once.
  auto bad = sphere::make_code({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  auto rep2 = sphere::association_scheme_check(bad);
  CHECK(!rep2.is_scheme);
  CHECK(rep2.violation.has_value());
}

TEST_CASE("cross-polytope scheme with intersection numbers") {
  auto cross = sphere::make_code(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  auto rep = sphere::association_scheme_check(cross);
  REQUIRE(rep.is_scheme);
  // relations: self(1), antipode(-1), orthogonal(0)
  REQUIRE(rep.relation_values.size() == 3);
  std::vector<std::int64_t> vals = rep.relation_values;
  // valencies: p^0_{aa} per class
  std::size_t anti = 0, orth = 0;
  for (std::size_t i = 1; i < vals.size(); ++i)
    (vals[i] == -1 ? anti : orth) = i;
  CHECK(rep.numbers[0][anti][anti] == 1);
  CHECK(rep.numbers[0][orth][orth] == 4);
  CHECK(rep.numbers[anti][orth][orth] == 4);
  CHECK(rep.numbers[orth][orth][orth] == 2);
}

TEST_CASE("orbit inner-product invariants") {
  auto cross = sphere::make_code(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  // make_code sorts lexicographically, so {-e0, e0} are indices 0 and 5.
  auto rep = sphere::orbit_ip_invariants(cross, {{0, 5}, {1, 2, 3, 4}});
  CHECK(rep.within == std::set<std::int64_t>{-1, 0});
  CHECK(rep.cross == std::set<std::int64_t>{0});
}

TEST_CASE("binary automorphisms: membership test and small groups") {
  auto rm1 = rm::build_rm(1, 3);
  BinaryCode b{8, {}};
  for (gf2::Word w : rm1.space.elements()) b.words.push_back(static_cast<std::uint32_t>(w));
  std::sort(b.words.begin(), b.words.end());

  for (const auto& p : mono::agl_generators(3)) {
    std::vector<int> perm(8);
    for (int i = 0; i < 8; ++i) perm[i] = p(i);
    CHECK(sphere::is_binary_automorphism(b, perm));
  }
  CHECK(!sphere::is_binary_automorphism(b, {1, 0, 2, 3, 4, 5, 6, 7}));

  // Aut(RM(1,3)) = AGL(3,2), order 1344.
  auto aut = sphere::binary_automorphism_group(b);
  CHECK(aut.order == 1344);
  for (const auto& g : aut.generators) CHECK(sphere::is_binary_automorphism(b, g));

  // Weight <= 1 words: every coordinate permutation works.
  BinaryCode all1{5, {0, 1, 2, 4, 8, 16}};
  CHECK(sphere::binary_automorphism_group(all1).order == 120);

  // An asymmetric code: only the identity.
  BinaryCode rigid{4, {0b0001, 0b0011, 0b0111}};
  CHECK(sphere::binary_automorphism_group(rigid).order == 1);
}
