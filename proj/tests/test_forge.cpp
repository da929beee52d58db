#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fewcos/forge.hpp"
#include "fewcos/rm.hpp"

using namespace fewcos;
using gf2::Word;

namespace {

// The expensive reports, built once and shared across cases.
const forge::NscFamily& family() {
  static forge::NscFamily f = forge::build_nsc_family();
  return f;
}

const forge::BigCodeReport& big() {
  static forge::BigCodeReport r = forge::build_big_code(&family().nsc16_64);
  return r;
}

std::set<Rat> tricos(int k, int denom_log) {
  int n = 1 << denom_log;
  int t = 1 << (denom_log - k);
  return {Rat(0), Rat(t, n), Rat(-t, n)};
}

}  // namespace

TEST_CASE("diagonal code, d = m = 3") {
  // One nontrivial constituent above the sign group when m = d = 3.
  CHECK(forge::dsc_constituent_count(3, 3) == 1);
  {
    auto r = forge::build_dsc(3, 3, 0);
    CHECK(r.k == 1);
    CHECK(r.pure);
    CHECK(r.both_signs);
    CHECK(r.sign_space.dim() == 6);
    CHECK(r.code.size() == 64);
    CHECK(r.code.dim == 8);
    CHECK(sphere::cosine_set(r.code) == tricos(1, 3));
  }
}

TEST_CASE("diagonal code, d = 4, m = 3") {
  CHECK(forge::dsc_constituent_count(4, 3) == 2);
  for (int sel : {0, 1}) {
    auto r = forge::build_dsc(4, 3, sel);
    CHECK(r.k == 1);
    CHECK(r.pure);
    CHECK(r.both_signs);
    CHECK(r.code.size() == 128);
    CHECK(r.code.dim == 16);
    CHECK(sphere::cosine_set(r.code) == tricos(1, 4));
  }
}

TEST_CASE("diagonal code, d = m = 5, and the drop-one-coordinate projections") {
  CHECK(forge::dsc_constituent_count(5, 5) == 2);
  // Both constituents of the order-31 element on the 10-dimensional quotient
  // consist entirely of rank-4 quadratic forms, so both codes have defect 2.
  for (int sel : {0, 1}) {
    auto r = forge::build_dsc(5, 5, sel);
    CHECK(r.k == 2);
    CHECK(r.pure);
    CHECK(r.both_signs);
    CHECK(r.code.size() == 1024);
    CHECK(r.code.dim == 32);
    CHECK(sphere::cosine_set(r.code) == tricos(2, 5));
    // Coordinate 0 is constant (+1): the sign words avoid the origin.
    auto cut = sphere::reduce(r.code, {0});
    std::set<Rat> want = {Rat(-9, 31), Rat(-1, 31), Rat(7, 31)};
    CHECK(sphere::cosine_set(cut) == want);
  }
}

TEST_CASE("diagonal code argument validation") {
  CHECK_THROWS(forge::build_dsc(4, 4, 0));  // 2^4 - 1 not prime
  CHECK_THROWS(forge::build_dsc(3, 3, 1));  // selector out of range
  CHECK_THROWS(forge::build_dsc(6, 3, 0));  // d out of range
  CHECK_THROWS(forge::build_dsc(3, 5, 0));  // m > d
}

TEST_CASE("the order-10321920 group") {
  const auto& g = big().group;
  CHECK(g.order == 10321920);
  CHECK(g.orbit_size == 256);
  CHECK(g.stabilizer_order == 40320);
  CHECK(g.lifted_weights == std::set<int>{6});  // one orbit of weight-6 words
  CHECK(g.unidef.level == coc::Unidefect::kStrong);
  CHECK(g.extension_identity_ok);
}

TEST_CASE("the 256-point 4-cosine code and its (16,256,6) binary image") {
  const auto& r = big();
  CHECK(r.code.size() == 256);
  CHECK(r.code.dim == 16);
  std::set<Rat> want = {Rat(-1), Rat(-1, 4), Rat(0), Rat(1, 4)};
  CHECK(sphere::cosine_set(r.code) == want);
  CHECK(r.alternate_route_equal);

  const auto& b = r.binary;
  CHECK(b.length == 16);
  CHECK(b.words.size() == 256);
  CHECK(sphere::min_distance(b) == 6);
  std::map<int, std::int64_t> dist = {{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}};
  for (std::uint32_t w : b.words)
    CHECK(sphere::distance_distribution_from(b, w) == dist);
  CHECK(sphere::nonlinearity_witness(b).has_value());
}

TEST_CASE("binary automorphism group of the (16,256,6) code") {
  auto aut = sphere::binary_automorphism_group(big().binary);
  CHECK(aut.order == 40320);
  for (const auto& p : aut.generators)
    CHECK(sphere::is_binary_automorphism(big().binary, p));
}

TEST_CASE("the order-645120 group and its order-10752 subgroup") {
  const auto& f = family();
  CHECK(f.x_order == 645120);
  CHECK(f.x_direct_route_equal);
  CHECK(f.h.order == 10752);
  CHECK(f.h_cap_r_is_lower);
  CHECK(f.o2.order == 64);
  CHECK(f.o2_abelian);
  CHECK(f.o2_exponent == 4);
  CHECK(f.o2_sqrt1_count == 8);  // homocyclic 4 x 4 x 4
  CHECK(f.o2_regular);
  CHECK(f.p01_normalizes_h);
  CHECK(f.comm_h_p01_spans_lower);
  CHECK(f.comm_h_eps_in_lower);
  CHECK(f.minus_one_absent);
}

TEST_CASE("the 64- and 128-point tricosine codes") {
  const auto& f = family();
  CHECK(f.nsc16_64.size() == 64);
  CHECK(f.nsc16_64.dim == 16);
  CHECK(sphere::cosine_set(f.nsc16_64) == tricos(2, 4));

  CHECK(f.nsc15_64.size() == 64);
  CHECK(f.nsc15_64.dim == 15);
  std::set<Rat> want15 = {Rat(-1, 3), Rat(-1, 15), Rat(1, 5)};
  CHECK(sphere::cosine_set(f.nsc15_64) == want15);

  CHECK(f.nsc14_64.size() == 64);
  CHECK(f.nsc14_64.dim == 14);
  std::set<Rat> want14 = {Rat(-3, 7), Rat(-1, 7), Rat(1, 7)};
  CHECK(sphere::cosine_set(f.nsc14_64) == want14);

  CHECK(f.nsc16_128.size() == 128);
  CHECK(f.nsc16_128.dim == 16);
  CHECK(sphere::cosine_set(f.nsc16_128) == tricos(2, 4));

  CHECK(f.nsc15_128.size() == 128);
  CHECK(f.nsc15_128.dim == 15);
  CHECK(sphere::cosine_set(f.nsc15_128) == want15);
}

TEST_CASE("the 64-point code is an association scheme in dimension 14") {
  auto rep = sphere::association_scheme_check(family().nsc14_64);
  CHECK(rep.is_scheme);
  CHECK(rep.relation_values.size() == 4);  // self plus three cosine classes
  CHECK(!rep.violation.has_value());
}

TEST_CASE("the order-1344 route reaches the same 64-point code") {
  auto rep = forge::build_h_star_route(&family().nsc16_64);
  CHECK(rep.components_noninner);
  CHECK(rep.kernels_equal);
  CHECK(rep.component_kernel_order == 21);
  CHECK(rep.unidef.level != coc::Unidefect::kFail);
  CHECK(rep.order == 1344);
  CHECK(rep.code.size() == 64);
  CHECK(rep.code.dim == 16);
  CHECK(sphere::cosine_set(rep.code) == tricos(2, 4));
  REQUIRE(rep.gram_matches.has_value());
  CHECK(*rep.gram_matches);
}

TEST_CASE("weight-6 defect-2 word from an involution") {
  auto sec = mono::section_builders_d4();
  std::vector<mono::MonoElt> qe;
  for (const auto& p : sec.q_gens) qe.push_back(mono::MonoElt::of_perm(p));
  auto q = mono::closure(qe, 200);
  REQUIRE(q.order == 168);
  int checked = 0;
  auto rm2 = rm::build_rm(2, 4);
  for (const auto& g : q.elements) {
    if (g.perm.order() != 2) continue;
    Word y = forge::six_set_from_involution(sec, g.perm);
    CHECK(gf2::weight(y) == 6);
    CHECK(g.perm.image_of_set(y) == y);
    CHECK(rm::defect(rm2, y).k == 2);
    CHECK(gf2::subspace_leq(gf2::span({y}, 16), sec.j));
    ++checked;
  }
  CHECK(checked == 21);  // the involutions of the order-168 group
}

TEST_CASE("complement search: split control and the nonsplit extension") {
  auto sec = mono::section_builders_d4();
  // Control: pure-permutation lifts close to the quotient itself.
  auto g1 = mono::MonoElt::of_perm(sec.q_gens[0]);
  auto g2 = mono::MonoElt::of_perm(sec.q_gens[1]);
  auto control = forge::complement_search(sec.e01, g1, g2, 168);
  CHECK(control.split);
  CHECK(control.witness.has_value());

  // The order-1344 extension has no complement: all 64 lift pairs fail.
  auto rep = forge::build_h_star_route();
  REQUIRE(rep.generators.size() == 5);
  auto res = forge::complement_search(sec.e01, rep.generators[3],
                                      rep.generators[4], 168);
  CHECK(!res.split);
  CHECK(res.pairs_tried == 64);
}

TEST_CASE("orbit-union search recovers a 64-point tricosine union") {
  forge::SearchConfig cfg;
  auto gens = forge::nsc_search_subgroup(family());
  auto res = forge::orbit_union_search(cfg, gens);
  CHECK(res.universe_size == 2048);
  CHECK(!res.hits.empty());
  bool found64 = false;
  for (const auto& h : res.hits) {
    // The antipodal cosine is outside the budget when excluded by config.
    std::size_t counted = h.cosines.size() - h.cosines.count(Rat(-1));
    CHECK(counted <= 3);
    if (h.vector_count == 64 && h.cosines.size() <= 3) found64 = true;
  }
  CHECK(found64);
}

TEST_CASE("published-table verification") {
  auto rows = forge::verify_published_table();
  REQUIRE(rows.size() == 9);
  for (const auto& r : rows) {
    if (r.name == "NSC_15_64" || r.name == "NSC_15_128") {
      CHECK(!r.pass);
      CHECK(r.erratum);  // the computed cosines match the projection formula
    } else {
      CHECK(r.pass);
      CHECK(!r.erratum);
    }
  }
}

TEST_CASE("serialization round trip") {
  const auto& c = family().nsc14_64;
  auto text = forge::code_to_json("NSC_14_64", c, "{\"entry\":\"NSC_14_64\"}");
  auto back = forge::code_from_json(text);
  CHECK(back.dim == c.dim);
  CHECK(back.vectors == c.vectors);
  CHECK(back.norm_sq == c.norm_sq);

  auto csv = forge::code_to_csv(c);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 64);

  auto hex = forge::binary_to_hex(big().binary);
  CHECK(std::count(hex.begin(), hex.end(), '\n') == 256);
}
