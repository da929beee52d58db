#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fewcos/cocycle.hpp"
#include "fewcos/gf2.hpp"
#include "fewcos/mono.hpp"
#include "fewcos/rat.hpp"
#include "fewcos/sphere.hpp"

// The named constructions: Mersenne-prime diagonal codes, the 256-point
// 4-cosine code with its (16,256,6) binary image, the 64- and 128-point
// tricosine codes in dimensions 14-16, structural verifications, the
// orbit-union search, and serialization for the command-line tool.

namespace fewcos::forge {

using gf2::Subspace;
using gf2::Word;

// ---- Mersenne diagonal codes -------------------------------------------

struct DscReport {
  int d = 0, m = 0, k = 0, selector = 0;
  std::size_t constituent_count = 0;
  bool pure = false;
  bool both_signs = false;
  Subspace sign_space;  // dimension m + d
  sphere::SphericalCode code;
};

// Diagonal code from a prime-order 2^m-1 coordinate permutation: the sign
// space is the preimage of the selector-th m-dimensional irreducible
// constituent of the induced action on the codewords-avoiding-point-0
// quotient.  Constituents are ordered by their minimal polynomial
// (lexicographic coefficient order) and then by canonical basis.
DscReport build_dsc(int d, int m, int selector);
std::size_t dsc_constituent_count(int d, int m);

// ---- the 256-point code and its group ----------------------------------

struct BigGroupReport {
  std::shared_ptr<coc::ModuleAction> action;  // keeps nd.quotient.action alive
  coc::NearDerivation nd;  // selected index-8 cocycle, canonically lifted
  std::vector<mono::MonoElt> generators;
  std::uint64_t order = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  std::set<int> lifted_weights;
  coc::UnidefectReport unidef;
  bool extension_identity_ok = false;  // sampled cocycle identity on the
                                       // affine extension
};
BigGroupReport build_big_group();

struct BigCodeReport {
  BigGroupReport group;
  sphere::SphericalCode code;  // 256 vectors
  sphere::BinaryCode binary;   // (16,256,6)
  bool alternate_route_equal = false;  // 64-code times the lower sign group
};
// `sub64`: the 64-point subcode used for the alternate construction; when
// null it is built internally.
BigCodeReport build_big_code(const sphere::SphericalCode* sub64 = nullptr);

// ---- the stabilizer-chain family ---------------------------------------

struct NscFamily {
  std::uint64_t x_order = 0;
  bool x_direct_route_equal = false;  // closure equals the product enumeration
  mono::MonoGroup h;                  // order 10752
  bool h_cap_r_is_lower = false;      // diagonal part of h = the 2^3 sign space
  mono::MonoGroup o2;                 // order 64
  bool o2_abelian = false;
  int o2_exponent = 0;
  std::size_t o2_sqrt1_count = 0;  // 8 for the homocyclic 4^3 group
  bool o2_regular = false;
  bool p01_normalizes_h = false;
  bool comm_h_p01_spans_lower = false;  // [h, p01] = the 2^3 sign space
  bool comm_h_eps_in_lower = false;     // [h, eps_B1] inside it
  bool minus_one_absent = false;        // in the 128-point code
  sphere::SphericalCode nsc16_64, nsc15_64, nsc14_64, nsc16_128, nsc15_128;
};
NscFamily build_nsc_family();

// ---- the order-168 route to the same 64-point code ---------------------

struct HStarReport {
  std::shared_ptr<coc::ModuleAction> action;
  coc::NearDerivation nd;
  int z1_dim = 0;
  Word chosen;  // coefficient word of the chosen cocycle in the z1 basis
  bool components_noninner = false;
  bool kernels_equal = false;
  std::uint64_t component_kernel_order = 0;
  coc::UnidefectReport unidef;
  std::vector<mono::MonoElt> generators;  // of the 1344-element group
  std::uint64_t order = 0;
  sphere::SphericalCode code;  // 64 vectors
  std::optional<bool> gram_matches;  // vs the reference code, when given
};
HStarReport build_h_star_route(const sphere::SphericalCode* reference = nullptr);

// Weight-6 defect-2 codeword assembled from the orbit structure of an
// involution t of the order-168 permutation group on the hyperplane minus
// the origin (two 2-point orbits and three fixed points).
Word six_set_from_involution(const mono::SectionsD4& sec, const mono::CoordPerm& t);

// ---- complement search --------------------------------------------------

struct SplitReport {
  bool split = false;
  int pairs_tried = 0;
  std::optional<std::pair<mono::MonoElt, mono::MonoElt>> witness;  // complement gens
};

// Does the extension (sign space e) -> group -> quotient split?  g1, g2 are
// fixed lifts of two quotient generators; all |e|^2 lift pairs are closed and
// tested for order == quotient_order and trivial diagonal intersection.
SplitReport complement_search(const Subspace& e, const mono::MonoElt& g1,
                              const mono::MonoElt& g2, std::uint64_t quotient_order);

// ---- orbit-union search -------------------------------------------------

struct SearchConfig {
  int d = 4;
  int max_cosines = 3;
  bool include_antipodal = false;  // count cosine -1 toward the budget
  std::size_t min_orbits = 2;
  std::size_t max_orbits = 4;
  std::size_t max_hits = 64;
};

struct SearchHit {
  std::vector<int> orbits;
  std::size_t vector_count = 0;
  std::set<Rat> cosines;
};

struct SearchResult {
  std::size_t universe_size = 0;
  std::vector<std::size_t> orbit_sizes;
  std::vector<SearchHit> hits;
};

// Scan unions of orbits of the configured signed-permutation subgroup on the
// set of all +-1 vectors whose sign set is a degree-<=2 codeword, keeping
// unions whose distinct-pair inner-product set stays within the budget.
// Throws if a generator does not preserve the vector set.
SearchResult orbit_union_search(const SearchConfig& cfg,
                                const std::vector<mono::MonoElt>& subgroup_gens);

// The standard subgroup for the d=4 search: the 2^3 sign space times the
// pure-permutation part of the order-10752 group.
std::vector<mono::MonoElt> nsc_search_subgroup(const NscFamily& fam);

// ---- published-table verification --------------------------------------

struct RowReport {
  std::string name;
  bool pass = false;     // matches the published cardinality and cosine set
  bool erratum = false;  // cosines instead match the projection formula
  std::string detail;
};
std::vector<RowReport> verify_published_table();

// ---- serialization ------------------------------------------------------

std::string code_to_json(const std::string& name, const sphere::SphericalCode& c,
                         const std::string& construction);
std::string code_to_csv(const sphere::SphericalCode& c);
std::string binary_to_hex(const sphere::BinaryCode& b);
sphere::SphericalCode code_from_json(const std::string& text);

}  // namespace fewcos::forge
