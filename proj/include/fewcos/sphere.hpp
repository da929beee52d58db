#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fewcos/rat.hpp"

// Spherical codes as exact integer-vector sets, their cosine sets, binary
// images, distance analysis, association-scheme checking, and the binary
// automorphism backtrack.  No floating point anywhere.

namespace fewcos::sphere {

struct SphericalCode {
  int dim = 0;
  std::vector<std::vector<int>> vectors;
  std::int64_t norm_sq = 0;

  std::size_t size() const { return vectors.size(); }
};

SphericalCode make_code(std::vector<std::vector<int>> vectors);

std::int64_t inner(const std::vector<int>& x, const std::vector<int>& y);

std::set<Rat> cosine_set(const SphericalCode& c);

struct ReduceError {
  std::size_t vector_index;
  int coordinate;
};

// Remove the given coordinates (all vectors must agree there).
SphericalCode reduce(const SphericalCode& c, const std::vector<int>& drop);

// Inner-product invariants of a code split into suborbits: within-part inner
// products and cross-part inner products, per part pair.
struct IpInvariantReport {
  std::set<std::int64_t> within;
  std::set<std::int64_t> cross;
};
IpInvariantReport orbit_ip_invariants(const SphericalCode& c,
                                      const std::vector<std::vector<std::size_t>>& parts);

struct BinaryCode {
  int length = 0;
  std::vector<std::uint32_t> words;  // sorted, distinct
};

// Sign rule: bit i set iff coordinate i is -1.  Requires +-1 coordinates.
BinaryCode to_binary(const SphericalCode& c);
SphericalCode from_binary(const BinaryCode& b);

int min_distance(const BinaryCode& b);
std::map<int, std::int64_t> distance_distribution(const BinaryCode& b);
std::map<int, std::int64_t> distance_distribution_from(const BinaryCode& b,
                                                       std::uint32_t word);
// A pair (u,w) of codewords with u xor w not in the code, if any.
std::optional<std::pair<std::uint32_t, std::uint32_t>> nonlinearity_witness(
    const BinaryCode& b);

// Association scheme test: relations are identity plus one class per inner
// product value.  On success, numbers[c][a][b] is the intersection tensor.
struct SchemeReport {
  bool is_scheme = false;
  std::vector<std::int64_t> relation_values;  // inner products incl. self
  std::vector<std::vector<std::vector<std::int64_t>>> numbers;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // pair of vector indices
};
SchemeReport association_scheme_check(const SphericalCode& c);

// All coordinate permutations mapping the word set to itself, found by
// backtracking with pair-invariant pruning.
struct AutGroupResult {
  std::vector<std::vector<int>> generators;  // permutations, image form
  std::uint64_t order = 0;
  std::uint64_t nodes = 0;
};
AutGroupResult binary_automorphism_group(const BinaryCode& b,
                                         std::uint64_t node_budget = 100000000);

bool is_binary_automorphism(const BinaryCode& b, const std::vector<int>& perm);

}  // namespace fewcos::sphere
