#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fewcos/gf2.hpp"
#include "fewcos/mono.hpp"

// 1-cocycles (right derivations) of finite permutation-represented groups on
// F2-modules: f(xy) = f(x) + f(y) * x^{-1}, with the module acting on the
// right.  Inner derivations are f_a(x) = a + a * x^{-1}.

namespace fewcos::coc {

using gf2::Subspace;
using gf2::Word;
using mono::CoordPerm;

// A finite group given by permutation generators together with the matrix of
// each generator on F2^module_dim.  The group is enumerated by BFS; every
// element receives an index, its permutation, and its module matrix.
struct ModuleAction {
  std::vector<CoordPerm> gens;
  std::vector<std::vector<Word>> gen_matrices;
  int module_dim = 0;

  // Filled by enumerate().
  std::vector<CoordPerm> elements;
  std::vector<std::vector<Word>> matrices;

  std::uint64_t order() const { return elements.size(); }
  void enumerate(std::uint64_t cap = 30000);
  int index_of(const CoordPerm& p) const;

 private:
  std::unordered_map<std::string, int> index_;
};

// Permutation action of group generators on the codeword quotient a/b:
// codewords move by set image, coordinates via the fixed quotient basis.
ModuleAction quotient_codeword_action(const std::vector<CoordPerm>& gens,
                                      const Subspace& a, const Subspace& b);

struct Derivation {
  const ModuleAction* action = nullptr;
  std::vector<Word> gen_values;
  std::vector<Word> table;  // value per element index, module coordinates

  Word value(int elt_index) const { return table[elt_index]; }
  bool is_zero() const;
};

std::vector<Derivation> z1_basis(ModuleAction& action);
std::vector<Derivation> b1_basis(ModuleAction& action);
int h1_dim(ModuleAction& action);

Derivation derivation_from_gen_values(const ModuleAction& action,
                                      const std::vector<Word>& gen_values);
Derivation inner_derivation(const ModuleAction& action, Word a);
Derivation add(const Derivation& f, const Derivation& g);

// Kernel {x : f(x) = 0} as element indices (a subgroup, checked closed).
std::vector<int> kernel(const Derivation& f);

bool is_inner(const Derivation& f, ModuleAction& action);

// First (in lexicographic coboundary-coefficient order) noninner cocycle in
// z + B1 whose kernel has the requested index; nullopt when none qualifies.
std::optional<Derivation> select_noninner_with_kernel_index(
    ModuleAction& action, const Derivation& noninner_rep, std::uint64_t index);

// Count of qualifying cocycles in the same coset.
int count_with_kernel_index(ModuleAction& action, const Derivation& noninner_rep,
                            std::uint64_t index);

// A derivation on the codeword quotient a/b with its values lifted to the
// canonical (smallest-integer) codeword of each coset.
struct NearDerivation {
  Derivation quotient;
  Subspace a, b;
  std::vector<Word> lifted;  // codeword per element index

  Word lift_value(int elt_index) const { return lifted[elt_index]; }
};

NearDerivation lift_to_near_derivation(const Derivation& fbar, const Subspace& a,
                                       const Subspace& b);

enum class Unidefect { kStrong, kWeak, kFail };

struct UnidefectReport {
  Unidefect level = Unidefect::kFail;
  std::optional<Word> witness;  // a failing diagonal part, when kFail
};

// Checks all diagonal parts lower + f(x) of the constructed group.
UnidefectReport unidefect_check(const std::vector<Word>& diag_parts, int d, int k);

struct BuiltGroup {
  std::vector<mono::MonoElt> generators;
  std::uint64_t order = 0;
  std::uint64_t predicted_orbit = 0;
};

// H = (lower){ eps_{lift f(x)} x : x in Q } from a near-derivation; the
// lower subgroup is the diagonal group of `lower_space`.
BuiltGroup group_from_near_derivation(const Subspace& lower_space,
                                      const NearDerivation& nd, int omega_dim);

// All diagonal parts lower + lift(f(x)), one per (coset element, x) pair set;
// used by the unidefect filter.
std::vector<Word> diagonal_parts(const Subspace& lower_space, const NearDerivation& nd);

}  // namespace fewcos::coc
