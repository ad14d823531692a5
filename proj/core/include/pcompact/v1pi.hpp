#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcompact/exact.hpp"
#include "pcompact/intpoly.hpp"
#include "pcompact/invariants.hpp"
#include "pcompact/matrix.hpp"
#include "pcompact/snf.hpp"

namespace pcompact {

struct V1Setting {
  GroupId group;
  unsigned long p;
  unsigned long r;        // generator of (Z/p^2)^x: 2 at p = 5, 3 at p = 7
  std::size_t n;          // rank of QK^1
  int precision_cap;      // largest Adams degree; valuations never exceed it
  long period;            // p (p - 1)
};

V1Setting v1_setting(GroupId id);
// r generates (Z/p^2)^x.
bool generates_units_mod_p2(unsigned long r, unsigned long p);

// Even: rows (psi^p)^T over (psi^r)^T - x I, presenting pi_{2t}.
// Odd: the same blocks untransposed, presenting pi_{2t-1}.
enum class Arrangement { kEven, kOdd };

using PolyMatrix = Matrix<IntPoly>;
using RatFuncMatrix = Matrix<RatFunc>;

// Symbolic in x, each row scaled by the lcm of its denominators (prime to p).
PolyMatrix presentation_matrix(GroupId id, Arrangement arrangement = Arrangement::kEven);
// x = r^t; throws BudgetExceeded past ~10^6 bits.
IntegerMatrix presentation_matrix_at(GroupId id, long t, Arrangement arrangement = Arrangement::kEven);

enum class Method { kSnf, kResidual, kClosedForm };
std::string method_name(Method m);

struct V1Group {
  Integer t;
  unsigned long p = 0;
  int exponent = 0;  // cyclic p-group Z/p^exponent; 0 is trivial
  std::vector<Method> methods;
  bool cyclic = true;
  std::vector<int> summands;  // only filled when not cyclic

  bool trivial() const { return exponent == 0; }
  std::string to_string() const;  // "Z/5^7" or "0"
};

V1Group snf_group(GroupId id, long t, Arrangement arrangement = Arrangement::kEven);

struct PivotRecord {
  std::size_t row = 0;  // position in the matrix at the time of the pivot
  std::size_t col = 0;
  std::size_t original_row = 0;
  std::size_t original_col = 0;
  std::string entry;
};

struct ClassReduction {
  long x_class = 0;  // x mod p
  std::vector<PivotRecord> transcript;
  RatFuncMatrix remaining;
  // The remaining single column, when the class leaves one.
  std::vector<RatFunc> residuals;
  bool single_column() const { return remaining.cols() == 1; }
  // Numerator polynomials of the residual entries.
  std::vector<IntPoly> polynomials() const;
};

RatFuncMatrix to_ratfunc(const PolyMatrix& m);
// Pivot on the first (row-major) entry that is a unit on the class, until
// none is left.
ClassReduction reduce_class(const RatFuncMatrix& m, long x_class, unsigned long p);
// Pivot at the given positions (current coordinates) in order.
ClassReduction replay_pivots(const RatFuncMatrix& m, const std::vector<std::pair<std::size_t, std::size_t>>& positions);

struct ResidualPolynomials {
  GroupId group;
  Arrangement arrangement;
  std::map<long, ClassReduction> classes;  // keyed by x mod p
};

// Cached per (group, arrangement).
const ResidualPolynomials& reduce_to_residuals(GroupId id, Arrangement arrangement = Arrangement::kEven);

// Exponent at x = r^t from the residuals, evaluated mod p^N with
// N = cap + guard, doubling N when a value vanishes to that precision.
V1Group exponent_at(GroupId id, const Integer& t, int guard = 20);

struct PeakStage {
  Integer modulus;          // (p - 1) p^k
  Integer centre;           // current lift, t* mod modulus
  std::vector<int> values;  // exponents at centre + j * modulus
};

struct ClassForm {
  long residue = 0;  // t mod period
  enum Kind { kZero, kConstant, kPeak } kind = kZero;
  int constant = 0;
  int base = 0;
  int cap = 0;
  Integer t_star;          // least non-negative representative
  Integer t_star_modulus;  // t* is determined modulo this
  Integer a;               // t* - residue = a p^b
  int b = 0;
  std::vector<PeakStage> stages;

  int predict(const Integer& t, unsigned long p) const;
};

ClassForm find_peak(GroupId id, long residue);

struct ClosedForm {
  GroupId group;
  unsigned long p;
  long period;
  std::vector<ClassForm> classes;  // one per residue mod period

  int predict(const Integer& t) const;
  // One line per case.
  std::vector<std::pair<std::string, std::string>> rows() const;
  std::string render() const;
};

ClosedForm closed_form(GroupId id);

// The listed closed form, from data, in the same shape.
struct ListedPeak {
  long residue;
  int cap;
  int base;
  Integer a;
  int b;
};
struct ListedClosedForm {
  GroupId group;
  long period;
  long nonzero_modulus;
  long nonzero_residue;
  std::vector<long> constant_classes;
  int constant_exponent;
  std::vector<ListedPeak> peaks;
};
ListedClosedForm listed_closed_form(GroupId id);

struct ClosedFormComparison {
  bool zero_classes_match = false;
  bool constant_classes_match = false;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty() && zero_classes_match && constant_classes_match; }
};
ClosedFormComparison compare_closed_form(const ClosedForm& computed, const ListedClosedForm& listed);

struct CyclicityReport {
  std::size_t n = 0;
  std::size_t min_pivots = 0;  // over the classes with a nonzero group
  std::map<long, std::size_t> pivots_by_class;
  bool cyclic() const { return min_pivots + 1 >= n; }
};
CyclicityReport verify_cyclic_odd(GroupId id);

// |pi_{2t-1}| == |pi_{2t}| from the two SNFs.
bool orders_equal(GroupId id, long t);

struct BSpaceFormula {
  std::vector<int> dims;
  unsigned long prime;
  long modulus;
  long residue;
  int offset;
  std::vector<int> gammas;
};
std::vector<BSpaceFormula> bspace_formulas();
// Throws NotFound for unsupported (dims, p).
V1Group bspace_group(const std::vector<int>& dims, unsigned long p, const Integer& t);

}  // namespace pcompact
