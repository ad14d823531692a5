#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcompact/exact.hpp"
#include "pcompact/matrix.hpp"
#include "pcompact/sympoly.hpp"

namespace pcompact {

enum class GroupId { G29, G31, G34 };

std::string group_name(GroupId g);
// Accepts "29", "G29", "X29" and so on.
GroupId parse_group(std::string_view text);
inline constexpr std::array<GroupId, 3> kAllGroups{GroupId::G29, GroupId::G31, GroupId::G34};

struct NamedMatrix {
  std::string name;
  CycMatrix matrix;
};

struct ReflectionGroupData {
  GroupId id;
  unsigned long prime;
  int nvars;
  std::vector<int> degrees;
  std::vector<NamedMatrix> generators;
  // Non-permutation generators (the ones worth an explicit invariance check).
  std::vector<std::string> special;

  const CycMatrix& generator(std::string_view name) const;
};

const ReflectionGroupData& group_data(GroupId id);

struct InvariantFamily {
  GroupId group;
  // degree -> generator polynomial; for G34 this holds f_6, ..., f_42
  // including the decomposable f_36.
  std::map<int, SymPoly> polys;

  const SymPoly& at(int degree) const;
};

InvariantFamily build_invariants(GroupId id);

// Closed formula for the G34 invariant of degree 6k.
SymPoly g34_invariant(int k);

struct PowerSumOptions {
  int max_m = 12;
  bool normalize = true;  // (-27)^k p_{6k} / 486 when 6 | m
};

// Power sum of <v, x>^m over the 756 lattice vectors; rational by
// certification (throws if an irrational coefficient survives).
SymPoly power_sum(int m, const PowerSumOptions& opts = {});

using LatticeVector = std::array<CycRational, 6>;

struct LatticeVectorSet {
  std::vector<LatticeVector> vectors;

  std::optional<std::size_t> find(const LatticeVector& v) const;
  bool contains(const LatticeVector& v) const { return find(v).has_value(); }
  void index();

 private:
  std::map<std::vector<Rational>, std::size_t> lookup_;
};

// The 270 + 486 vectors built from their description.
LatticeVectorSet lattice_vectors();
// The copy shipped as a data file.
LatticeVectorSet shipped_lattice();

LatticeVector apply(const CycMatrix& m, const LatticeVector& v);
Rational hermitian_norm(const LatticeVector& v);

struct LatticeImageCheck {
  std::string description;
  LatticeVector source;
  LatticeVector expected;
  LatticeVector actual;
  bool source_in_set = false;
  // A bullet kept exactly as printed for the record; its source is not a
  // lattice vector, so it does not count towards LatticeReport::ok().
  bool as_printed = false;
  bool ok = false;
};

struct GeneratorPermutation {
  std::string generator;
  bool closed = false;
  std::vector<std::size_t> permutation;  // image index per vector
  std::vector<std::size_t> missing;      // vectors whose image is outside the set
};

struct LatticeReport {
  std::size_t count = 0;
  bool no_duplicates = false;
  bool all_norm_two = false;
  bool sum_condition = false;  // sum a_i == 0 mod 3 for the scaled type
  std::size_t short_type = 0;
  std::size_t scaled_type = 0;
  std::vector<GeneratorPermutation> generators;
  std::vector<LatticeImageCheck> bullets;
  bool ok() const;
};

LatticeReport verify_lattice(const LatticeVectorSet& set, const ReflectionGroupData& group);

struct DecompositionVerdict {
  bool decomposable = false;
  // Products of lower generators (each a list of degrees) and, when
  // decomposable, witness coefficients mod p for each.
  std::vector<std::vector<int>> products;
  std::vector<Integer> witness;
  std::size_t equations = 0;
};

// Is `target` congruent mod p to a combination of products of the lower
// generators (every monomial in them of the target's degree)?
DecompositionVerdict decompose_mod_p(const InvariantFamily& family, const SymPoly& target,
                                     int target_degree, const std::vector<int>& lower_degrees,
                                     unsigned long p);
// Same with the target being family.at(target_degree) and all lower
// family degrees (f_36 excluded for G34) as building blocks.
DecompositionVerdict indecomposable_mod_p(const InvariantFamily& family, int target_degree);

// h_42 = (f_42 - f_6^7)/7, after checking every coefficient of the
// difference is divisible by 7.
SymPoly divisibility_check_h42();
SymPoly divisibility_check_h42(const InvariantFamily& g34);

struct F36Decomposition {
  std::vector<std::vector<int>> products;  // ten degree lists in the stated order
  std::vector<Rational> q;
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool residual_zero = false;
  bool all_seven_adic_units = false;
};

F36Decomposition decompose_f36();
F36Decomposition decompose_f36(const InvariantFamily& g34);

// Partitions of n with at most max_len parts, all parts in `allowed` if given.
std::vector<Partition> partitions_of(int n, int max_len);

// All multisets of `degrees` summing to `total` (each list non-increasing).
std::vector<std::vector<int>> degree_monomials(int total, const std::vector<int>& degrees);

}  // namespace pcompact
