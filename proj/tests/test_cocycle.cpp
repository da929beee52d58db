#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fewcos/cocycle.hpp"
#include "fewcos/mono.hpp"
#include "fewcos/rm.hpp"

using namespace fewcos;
using coc::Derivation;
using coc::ModuleAction;
using gf2::Word;
using mono::CoordPerm;

namespace {

// GL(3,2) on its standard 3-dimensional module: permutations of F2^3 with the
// matrix action read off from the generators.
ModuleAction gl32_standard() {
  ModuleAction act;
  act.gens = mono::gl_generators(3);
  act.module_dim = 3;
  for (const CoordPerm& g : act.gens) {
    std::vector<Word> mat(3);
    for (int i = 0; i < 3; ++i) mat[i] = static_cast<Word>(g(1 << i));
    act.gen_matrices.push_back(mat);
  }
  return act;
}

ModuleAction gl32_trivial() {
  ModuleAction act;
  act.gens = mono::gl_generators(3);
  act.module_dim = 1;
  act.gen_matrices = {{1}, {1}};
  return act;
}

// GL(4,2) on the 6-dimensional quotient RM(2,4)/RM(1,4), codewords moving by
// set image.
ModuleAction gl42_m6() {
  auto rm2 = rm::build_rm(2, 4);
  auto rm1 = rm::build_rm(1, 4);
  return coc::quotient_codeword_action(mono::gl_generators(4), rm2.space, rm1.space);
}

void check_cocycle_identity_exhaustive(const Derivation& f) {
  const ModuleAction& act = *f.action;
  for (std::size_t x = 0; x < act.order(); ++x) {
    auto inv = gf2::mat_inverse(act.matrices[x]);
    for (std::size_t y = 0; y < act.order(); ++y) {
      int xy = act.index_of(act.elements[x].then(act.elements[y]));
      CHECK(f.table[xy] == (f.table[x] ^ gf2::mat_apply(*inv, f.table[y])));
    }
  }
}

}  // namespace

TEST_CASE("Z1 dimensions") {
  auto std3 = gl32_standard();
  CHECK(coc::z1_basis(std3).size() == 4);

  auto triv = gl32_trivial();
  CHECK(coc::z1_basis(triv).empty());  // Hom(GL(3,2), F2) = 0

  auto m6 = gl42_m6();
  CHECK(m6.module_dim == 6);
  auto z1 = coc::z1_basis(m6);
  CHECK(z1.size() == 7);
  CHECK(m6.order() == 20160);
}

TEST_CASE("B1 and H1 dimensions") {
  auto std3 = gl32_standard();
  CHECK(coc::b1_basis(std3).size() == 3);
  CHECK(coc::h1_dim(std3) == 1);

  auto m6 = gl42_m6();
  CHECK(coc::b1_basis(m6).size() == 6);
  CHECK(coc::h1_dim(m6) == 1);

  auto triv = gl32_trivial();
  CHECK(coc::h1_dim(triv) == 0);
}

TEST_CASE("cocycle identity holds exhaustively on GL(3,2)") {
  auto std3 = gl32_standard();
  for (const Derivation& f : coc::z1_basis(std3)) {
    CHECK(f.table[0] == 0);
    check_cocycle_identity_exhaustive(f);
  }
}

TEST_CASE("cocycle identity spot-checked on GL(4,2)") {
  auto m6 = gl42_m6();
  auto z1 = coc::z1_basis(m6);
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  for (const Derivation& f : z1) {
    CHECK(f.table[0] == 0);
    for (int t = 0; t < 20000; ++t) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      std::size_t x = (seed >> 20) % m6.order();
      std::size_t y = (seed >> 40) % m6.order();
      int xy = m6.index_of(m6.elements[x].then(m6.elements[y]));
      auto inv = gf2::mat_inverse(m6.matrices[x]);
      CHECK(f.table[xy] == (f.table[x] ^ gf2::mat_apply(*inv, f.table[y])));
    }
  }
}

TEST_CASE("inner derivations: fixed vector gives zero; image anatomy") {
  auto std3 = gl32_standard();
  std3.enumerate();
  // Module has no nonzero fixed vector, so every nonzero a gives nonzero f_a
  // whose image is a 7-subset of M containing 0.
  for (Word a = 1; a < 8; ++a) {
    Derivation f = coc::inner_derivation(std3, a);
    CHECK(!f.is_zero());
    CHECK(coc::is_inner(f, std3));
    std::set<Word> image(f.table.begin(), f.table.end());
    CHECK(image.size() == 7);
    CHECK(image.count(0) == 1);
    check_cocycle_identity_exhaustive(f);
  }
}

TEST_CASE("noninner derivations on GL(3,2): kernel 7:3, image all of M") {
  auto std3 = gl32_standard();
  auto z1 = coc::z1_basis(std3);
  Derivation noninner = z1[0];
  bool found = false;
  for (const Derivation& f : z1) {
    if (!coc::is_inner(f, std3)) {
      noninner = f;
      found = true;
      break;
    }
  }
  REQUIRE(found);
  // All 8 members of the noninner class: image = M, kernel of order 21,
  // nonabelian with derived subgroup of order 7 (Frobenius 7:3).
  auto b1 = coc::b1_basis(std3);
  int count = 0;
  for (int c = 0; c < 8; ++c) {
    Derivation f = noninner;
    for (int i = 0; i < 3; ++i)
      if (c & (1 << i)) f = coc::add(f, b1[i]);
    CHECK(!coc::is_inner(f, std3));
    std::set<Word> image(f.table.begin(), f.table.end());
    CHECK(image.size() == 8);  // surjective
    auto ker = coc::kernel(f);
    CHECK(ker.size() == 21);
    // Nonabelian check.
    bool abelian = true;
    for (int i : ker)
      for (int j : ker) {
        auto xy = std3.elements[i].then(std3.elements[j]);
        auto yx = std3.elements[j].then(std3.elements[i]);
        if (!(xy == yx)) abelian = false;
      }
    CHECK(!abelian);
    ++count;
  }
  CHECK(count == 8);
}

TEST_CASE("selected GL(4,2) cocycle: kernel order 2520, exactly 8 qualify") {
  auto m6 = gl42_m6();
  auto z1 = coc::z1_basis(m6);
  Derivation noninner = z1[0];
  bool found = false;
  for (const Derivation& f : z1) {
    if (!coc::is_inner(f, m6)) {
      noninner = f;
      found = true;
      break;
    }
  }
  REQUIRE(found);
  auto sel = coc::select_noninner_with_kernel_index(m6, noninner, 8);
  REQUIRE(sel.has_value());
  auto ker = coc::kernel(*sel);
  CHECK(ker.size() == 2520);
  CHECK(coc::count_with_kernel_index(m6, noninner, 8) == 8);

  // The nonzero values form a single kernel-orbit of size 7.
  std::set<Word> values(sel->table.begin(), sel->table.end());
  values.erase(0);
  CHECK(values.size() == 7);
  // Orbit of one value under the kernel action.
  Word v0 = *values.begin();
  std::set<Word> orbit;
  for (int k : ker) orbit.insert(gf2::mat_apply(m6.matrices[k], v0));
  CHECK(orbit == values);
}

TEST_CASE("GL(3,2) route: derivation values constant on left kernel cosets") {
  auto std3 = gl32_standard();
  auto z1 = coc::z1_basis(std3);
  for (const Derivation& f : z1) {
    auto ker = coc::kernel(f);
    // f(x k) = f(x) for k in Ker(f).
    for (std::size_t x = 0; x < std3.order(); x += 7) {
      for (std::size_t ki = 0; ki < ker.size(); ki += 3) {
        int xk = std3.index_of(std3.elements[x].then(std3.elements[ker[ki]]));
        CHECK(f.table[xk] == f.table[x]);
      }
    }
  }
}

TEST_CASE("kernel of the zero derivation is the whole group") {
  auto std3 = gl32_standard();
  std3.enumerate();
  Derivation zero = coc::derivation_from_gen_values(std3, {0, 0});
  CHECK(coc::kernel(zero).size() == std3.order());
}

TEST_CASE("lift to near-derivation: canonical reps with defect-2 values") {
  auto rm2 = rm::build_rm(2, 4);
  auto rm1 = rm::build_rm(1, 4);
  auto m6 = gl42_m6();
  auto z1 = coc::z1_basis(m6);
  Derivation noninner = z1[0];
  for (const Derivation& f : z1)
    if (!coc::is_inner(f, m6)) {
      noninner = f;
      break;
    }
  auto sel = coc::select_noninner_with_kernel_index(m6, noninner, 8);
  REQUIRE(sel.has_value());
  auto nd = coc::lift_to_near_derivation(*sel, rm2.space, rm1.space);
  std::set<Word> lifted(nd.lifted.begin(), nd.lifted.end());
  for (Word w : lifted) {
    CHECK(rm1.space.reduce(w) == w);  // canonical rep
    if (w == 0) continue;
    CHECK(rm::defect(rm2, w).k == 2);
    int wt = gf2::weight(w);
    CHECK((wt == 6 || wt == 8 || wt == 10));
  }
  // Zero quotient derivation lifts to zero.
  Derivation zero = coc::derivation_from_gen_values(m6, {0, 0});
  auto ndz = coc::lift_to_near_derivation(zero, rm2.space, rm1.space);
  for (Word w : ndz.lifted) CHECK(w == 0);
}

TEST_CASE("unidefect check") {
  auto rm1 = rm::build_rm(1, 4);
  // All parts in RM(1,4): strong.
  std::vector<Word> parts = rm1.space.elements();
  auto rep = coc::unidefect_check(parts, 4, 2);
  CHECK(rep.level == coc::Unidefect::kStrong);

  // A deliberately mixed-defect value set: fail with witness.
  std::vector<Word> bad = parts;
  bad.push_back(0b1111);  // defect-1 weight-4 plane
  auto rep2 = coc::unidefect_check(bad, 4, 2);
  CHECK(rep2.level == coc::Unidefect::kFail);
  CHECK(rep2.witness == Word{0b1111});
}

TEST_CASE("group from near-derivation: the trivial diagonal case") {
  auto rm2 = rm::build_rm(2, 4);
  auto rm1 = rm::build_rm(1, 4);
  auto m6 = gl42_m6();
  m6.enumerate();
  Derivation zero = coc::derivation_from_gen_values(m6, {0, 0});
  auto nd = coc::lift_to_near_derivation(zero, rm2.space, rm1.space);
  auto bg = coc::group_from_near_derivation(rm1.space, nd, 4);
  CHECK(bg.order == 32ull * 20160);
  CHECK(bg.predicted_orbit == 32);  // kernel is everything
}
