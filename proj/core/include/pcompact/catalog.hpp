#pragma once

#include <string>
#include <vector>

namespace pcompact {

struct SpaceFactor {
  enum Kind { kSphere, kB, kFamily, kNamed };
  Kind kind = kSphere;
  // Sphere and B: cell dimensions. Family X(m,r,n): {m, r, n}. Named: exterior dimensions.
  std::vector<int> dims;
  std::string text;
};

struct HomotopyTypeEntry {
  std::string case_label;  // "32", or "X(2,2,6)" for family inputs
  unsigned long prime = 0;
  std::string space;       // as returned, after corrections
  std::string printed;     // as originally tabulated; equals space unless corrected
  std::string note;
  std::string source;
  std::vector<SpaceFactor> factors;
  std::vector<int> degrees;  // invariant degrees of the case
};

// "B(23,59) x S^11 x X(2,1,5) x X0(E8)"; named factors need their exterior dims supplied.
std::vector<SpaceFactor> parse_space(const std::string& s, const std::vector<int>& named_dims = {});

// Degrees of the exceptional Shephard-Todd cases in the catalog.
std::vector<int> case_degrees(int case_number);
// Degrees of G(m,r,n): m, 2m, ..., (n-1)m, nm/r.
std::vector<int> family_degrees(int m, int r, int n);

// case is a Shephard-Todd number ("32") or a family "X(m,r,n)".
HomotopyTypeEntry lookup(const std::string& case_label, unsigned long prime);
HomotopyTypeEntry lookup(int case_number, unsigned long prime);
HomotopyTypeEntry family_entry(int m, int r, int n, unsigned long prime);

// Rows of the non-modular table (31 of them), in file order.
const std::vector<HomotopyTypeEntry>& table_rows();
const std::vector<HomotopyTypeEntry>& modular_entries();

// The multiset of (dim+1)/2 across all factors equals the degree set.
bool degree_bookkeeping_holds(const HomotopyTypeEntry& e);
// (p-1) divides the difference of two distinct degrees.
bool admissible_prime(const std::vector<int>& degrees, unsigned long p);

}  // namespace pcompact
