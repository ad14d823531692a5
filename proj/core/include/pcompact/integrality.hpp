#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pcompact/exact.hpp"
#include "pcompact/invariants.hpp"
#include "pcompact/sympoly.hpp"

namespace pcompact {

// A monomial in the F symbols, as the sorted (non-increasing) list of the
// degrees of its factors: {8, 4} is F_8 F_4.
using FMonomial = std::vector<int>;

std::string fmonomial_to_string(const FMonomial& m);
FMonomial parse_fmonomial(std::string_view text);  // "F8F4", "F4^3"
int fmonomial_degree(const FMonomial& m);

struct IntegralCombination {
  GroupId group = GroupId::G29;
  int base_degree = 0;
  // Ordered by total degree, then in the F-monomial order used for candidates.
  std::vector<std::pair<FMonomial, Rational>> terms;
  int verified_through = -1;

  Rational coeff(const FMonomial& m) const;
  void set(const FMonomial& m, const Rational& c);
  // The terms of total degree < grading.
  IntegralCombination truncated_below(int grading) const;
  // Base coefficient 1 and p-power denominators.
  bool well_formed(unsigned long p) const;
};

struct GroupSetting {
  unsigned long prime;
  int cap;
  int step;  // p - 1
  std::vector<int> adams_degrees;
};

GroupSetting group_setting(GroupId id);

// The listed combinations, one per Adams degree.
std::vector<IntegralCombination> listed_combinations(GroupId id);
IntegralCombination listed_combination(GroupId id, int base_degree);
// G34 row scaling applied when forming the change-of-basis matrix.
std::map<int, Integer> listed_row_scale(GroupId id);

// F-monomial expansions in the p-typical picture, x -> x + x^p/p + ...,
// truncated at the group's cap. Thread-safe; products are memoized.
class FExpander {
 public:
  explicit FExpander(GroupId id);
  FExpander(GroupId id, SubstitutionTail tail);

  GroupId group() const { return group_; }
  const GroupSetting& setting() const { return setting_; }
  const InvariantFamily& family() const { return family_; }

  // All gradings <= cap of the product.
  GradedSeries series(const FMonomial& m);
  SymPoly component(const FMonomial& m, int grading);
  // Sum of coeff * monomial over the combination, at one grading.
  SymPoly component(const IntegralCombination& c, int grading);

  // Shared instance per group.
  static FExpander& shared(GroupId id);

 private:
  GroupId group_;
  GroupSetting setting_;
  InvariantFamily family_;
  SubstitutionTail tail_;
  std::mutex mu_;
  std::map<FMonomial, std::shared_ptr<const GradedSeries>> cache_;
};

SymPoly expand_F_monomial(GroupId id, const FMonomial& m, int grading);

// Candidates of total degree `grading`: every F-monomial in the Adams
// degrees, or just the single linear F_grading when linear_only.
std::vector<FMonomial> candidate_monomials(GroupId id, int grading, bool linear_only = false);

struct IntegralizationStep {
  int grading = 0;
  int k = 0;  // the system is solved mod p^k
  Integer modulus = 1;
  std::vector<FMonomial> candidates;
  std::size_t equations = 0;
  bool needed = false;  // false when the component was already integral
  bool solvable = false;
  // a_i mod p^k; the update is C - sum (a_i / p^k) candidate_i.
  std::vector<Integer> residues;
  IntegralCombination updated;
};

// One correction step at `grading`, with `current` holding every term of
// lower total degree.
IntegralizationStep solve_integralization(const IntegralCombination& current, int grading,
                                          const std::vector<FMonomial>& candidates);

// Run the steps from base + step through the cap.
struct Derivation {
  IntegralCombination combination;
  std::vector<IntegralizationStep> steps;
  bool ok = false;
};
Derivation derive_combination(GroupId id, int base_degree, bool linear_only);

// Do the given coefficients for the degree-`grading` candidates solve the
// system at that grading? Coefficients become residues a_i = -p^k c_i.
struct ListedSolutionCheck {
  int grading = 0;
  int k = 0;
  std::vector<FMonomial> candidates;
  std::vector<Integer> residues;
  bool solves = false;
};
ListedSolutionCheck check_listed_solution(const IntegralCombination& listed, int grading);

struct LedgerEntry {
  int grading = 0;
  int t = 0;          // (grading - base) / step
  Integer modulus;    // p^t
  std::size_t coordinates = 0;
  // p^t times the rational component, reduced mod p^t; all zero on pass.
  std::map<Partition, Integer> residues;
  Valuation min_valuation = Valuation::infinity();
  bool pass = false;
};

struct CongruenceLedger {
  GroupId group = GroupId::G29;
  int base_degree = 0;
  std::vector<LedgerEntry> entries;
  bool pass() const;
  int verified_through() const;
};

CongruenceLedger verify_combination(const IntegralCombination& c);

// The same grading in the two pictures: p-integrality with x + x^p/p and
// vanishing mod p^t with x + x^p. Returns whether the verdicts and the
// scaled coordinates agree.
struct PictureComparison {
  int grading = 0;
  bool typical_integral = false;
  bool congruence_zero = false;
  bool coordinates_match = false;
  bool agree() const { return coordinates_match && typical_integral == congruence_zero; }
};
PictureComparison compare_pictures(const IntegralCombination& c, int grading);

// The f_36 coefficients applied to the F series agree with F_36 on the
// length <= 4 coordinates of every grading 36..42.
struct F36Transfer {
  std::vector<int> gradings;
  std::size_t coordinates = 0;
  bool matches = false;
};
F36Transfer verify_f36_transfer();

}  // namespace pcompact
