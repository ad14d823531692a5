#include "pcompact/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "pcompact/data.hpp"
#include "pcompact/error.hpp"

namespace pcompact {

namespace {

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

std::vector<SpaceFactor> parse_space(const std::string& s, const std::vector<int>& named_dims) {
  static const std::regex sphere(R"(S\^(\d+))");
  static const std::regex bspace(R"(B\((\d+(?:,\d+)*)\))");
  static const std::regex family(R"(X\((\d+),(\d+),(\d+)\))");
  std::vector<SpaceFactor> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(" x ", pos);
    if (next == std::string::npos) next = s.size();
    const std::string part = trim(s.substr(pos, next - pos));
    std::smatch m;
    SpaceFactor f;
    f.text = part;
    if (std::regex_match(part, m, sphere)) {
      f.kind = SpaceFactor::kSphere;
      f.dims = {std::stoi(m[1])};
    } else if (std::regex_match(part, m, bspace)) {
      f.kind = SpaceFactor::kB;
      f.dims = split_ints(m[1]);
    } else if (std::regex_match(part, m, family)) {
      f.kind = SpaceFactor::kFamily;
      f.dims = {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
    } else if (!part.empty() && !named_dims.empty()) {
      f.kind = SpaceFactor::kNamed;
      f.dims = named_dims;
    } else {
      throw ParseError("cannot parse space factor '" + part + "'");
    }
    out.push_back(std::move(f));
    pos = next + 3;
  }
  return out;
}

std::vector<int> case_degrees(int case_number) {
  const auto& deg = data_json("catalog.json").at("degrees");
  const std::string key = std::to_string(case_number);
  if (!deg.contains(key)) throw NotFound("no degree data for case " + key);
  return deg.at(key).get<std::vector<int>>();
}

std::vector<int> family_degrees(int m, int r, int n) {
  if (m < 1 || r < 1 || n < 1 || m % r != 0) throw Error("G(m,r,n) needs r | m");
  std::vector<int> out;
  for (int i = 1; i < n; ++i) out.push_back(i * m);
  out.push_back(n * m / r);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

HomotopyTypeEntry entry_from_json(const nlohmann::json& j) {
  HomotopyTypeEntry e;
  e.case_label = std::to_string(j.at("case").get<int>());
  e.prime = j.at("prime").get<unsigned long>();
  e.space = j.at("space").get<std::string>();
  e.printed = j.value("printed", e.space);
  e.note = j.value("note", "");
  e.source = j.value("source", "");
  e.factors = parse_space(e.space, j.value("exterior", std::vector<int>{}));
  e.degrees = case_degrees(j.at("case").get<int>());
  return e;
}

std::vector<HomotopyTypeEntry> load(const char* key) {
  std::vector<HomotopyTypeEntry> out;
  for (const auto& j : data_json("catalog.json").at(key)) out.push_back(entry_from_json(j));
  return out;
}

}  // namespace

const std::vector<HomotopyTypeEntry>& table_rows() {
  static const std::vector<HomotopyTypeEntry> rows = load("table");
  return rows;
}

const std::vector<HomotopyTypeEntry>& modular_entries() {
  static const std::vector<HomotopyTypeEntry> rows = load("modular");
  return rows;
}

HomotopyTypeEntry family_entry(int m, int r, int n, unsigned long prime) {
  const std::string label = "X(" + join({m, r, n}) + ")";
  const long p = static_cast<long>(prime);
  HomotopyTypeEntry e;
  e.case_label = label;
  e.prime = prime;
  e.degrees = family_degrees(m, r, n);
  if (r > 1 && n > 1 && (p - 1) % m == 0) {
    e.space = "X(" + join({m, 1, n - 1}) + ") x S^" + std::to_string(2 * n * m / r - 1);
    e.source = "family splitting, m | p-1";
  } else if (r == m && n == 2 && m == p + 1) {
    e.space = "B(3," + std::to_string(2 * p + 1) + ")";
    e.source = "family, m = p+1";
  } else {
    throw NotFound("no catalog rule for " + label + " at p = " + std::to_string(prime));
  }
  e.printed = e.space;
  e.factors = parse_space(e.space);
  return e;
}

HomotopyTypeEntry lookup(int case_number, unsigned long prime) {
  for (const auto* rows : {&table_rows(), &modular_entries()})
    for (const auto& e : *rows)
      if (e.case_label == std::to_string(case_number) && e.prime == prime) return e;
  throw NotFound("case " + std::to_string(case_number) + " at p = " + std::to_string(prime) + " is not in the catalog");
}

HomotopyTypeEntry lookup(const std::string& case_label, unsigned long prime) {
  static const std::regex family(R"(\s*[XG]\((\d+),\s*(\d+),\s*(\d+)\)\s*)");
  std::smatch m;
  if (std::regex_match(case_label, m, family))
    return family_entry(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), prime);
  std::string digits = case_label;
  if (!digits.empty() && (digits[0] == 'G' || digits[0] == 'X' || digits[0] == 'g' || digits[0] == 'x'))
    digits.erase(0, 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("unrecognised case '" + case_label + "'");
  return lookup(std::stoi(digits), prime);
}

bool degree_bookkeeping_holds(const HomotopyTypeEntry& e) {
  std::vector<int> got;
  for (const auto& f : e.factors) {
    if (f.kind == SpaceFactor::kFamily) {
      for (int d : family_degrees(f.dims[0], f.dims[1], f.dims[2])) got.push_back(d);
      continue;
    }
    for (int d : f.dims) {
      if (d % 2 == 0) return false;
      got.push_back((d + 1) / 2);
    }
  }
  std::vector<int> want = e.degrees;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

bool admissible_prime(const std::vector<int>& degrees, unsigned long p) {
  const long q = static_cast<long>(p) - 1;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t j = i + 1; j < degrees.size(); ++j)
      if (degrees[i] != degrees[j] && (degrees[i] - degrees[j]) % q == 0) return true;
  return false;
}

}  // namespace pcompact
