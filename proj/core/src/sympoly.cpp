#include "pcompact/sympoly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "pcompact/error.hpp"

namespace pcompact {

// ---- Partition -----------------------------------------------------------

Partition::Partition(std::initializer_list<int> parts) {
  *this = from_parts(std::span<const int>(parts.begin(), parts.size()));
}

Partition Partition::from_parts(std::span<const int> parts) {
  std::vector<int> v;
  v.reserve(parts.size());
  for (int x : parts) {
    if (x < 0) throw Error("partition with a negative part");
    if (x > 255) throw Error("partition part exceeds 255");
    if (x > 0) v.push_back(x);
  }
  if (v.size() > static_cast<std::size_t>(kMaxVars))
    throw DimensionMismatch("partition longer than " + std::to_string(kMaxVars));
  std::sort(v.begin(), v.end(), std::greater<>());
  Partition p;
  p.len_ = static_cast<std::uint8_t>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p.parts_[i] = static_cast<std::uint8_t>(v[i]);
  return p;
}

int Partition::grading() const {
  int s = 0;
  for (int i = 0; i < len_; ++i) s += parts_[static_cast<std::size_t>(i)];
  return s;
}

std::vector<int> Partition::parts() const {
  return std::vector<int>(parts_.begin(), parts_.begin() + len_);
}

std::uint64_t Partition::pack() const {
  std::uint64_t key = 0;
  for (int i = 0; i < len_; ++i) key |= std::uint64_t{parts_[static_cast<std::size_t>(i)]} << (8 * i);
  return key;
}

std::vector<int> Partition::padded(int nvars) const {
  if (len_ > nvars) throw DimensionMismatch("partition " + to_string() + " does not fit in " +
                                            std::to_string(nvars) + " variables");
  std::vector<int> v(static_cast<std::size_t>(nvars), 0);
  for (int i = 0; i < len_; ++i) v[static_cast<std::size_t>(i)] = parts_[static_cast<std::size_t>(i)];
  return v;
}

Integer Partition::orbit_size(int nvars) const {
  if (len_ > nvars) throw DimensionMismatch("partition does not fit");
  Integer denom = factorial(static_cast<unsigned long>(nvars - len_));
  denom *= repetend_factor();
  return factorial(static_cast<unsigned long>(nvars)) / denom;
}

Integer Partition::repetend_factor() const {
  Integer r = 1;
  int i = 0;
  while (i < len_) {
    int j = i;
    while (j < len_ && parts_[static_cast<std::size_t>(j)] == parts_[static_cast<std::size_t>(i)]) ++j;
    r *= factorial(static_cast<unsigned long>(j - i));
    i = j;
  }
  return r;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < len_; ++i) os << (i ? "," : "") << int(parts_[static_cast<std::size_t>(i)]);
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.grading() <=> b.grading(); c != 0) return c;
  if (auto c = a.len_ <=> b.len_; c != 0) return c;
  for (int i = 0; i < a.len_; ++i) {
    auto x = a.parts_[static_cast<std::size_t>(i)];
    auto y = b.parts_[static_cast<std::size_t>(i)];
    if (x != y) return y <=> x;
  }
  return std::strong_ordering::equal;
}

// ---- SymPoly ------------------------------------------------------------

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw DimensionMismatch("unsupported variable count");
}

SymPoly::SymPoly(int nvars, std::initializer_list<std::pair<Partition, Rational>> terms)
    : SymPoly(nvars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

SymPoly SymPoly::monomial(int nvars, const Partition& e, const Rational& coeff) {
  SymPoly f(nvars);
  f.add_term(e, coeff);
  return f;
}

void SymPoly::check_fits(const Partition& e) const {
  if (e.length() > nvars_)
    throw DimensionMismatch("partition " + e.to_string() + " longer than " +
                            std::to_string(nvars_) + " variables");
}

Rational SymPoly::coeff(const Partition& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& e, const Rational& c) {
  if (sgn(c) == 0) return;
  check_fits(e);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SymPoly SymPoly::component(int grading) const {
  SymPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e.grading() == grading) r.terms_.emplace(e, c);
  return r;
}

SymPoly SymPoly::truncate(int cap) const {
  SymPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e.grading() <= cap) r.terms_.emplace(e, c);
  return r;
}

SymPoly SymPoly::restrict_length(int max_len) const {
  SymPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e.length() <= max_len) r.terms_.emplace(e, c);
  return r;
}

bool SymPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const auto& t) { return t.first.grading() == degree; });
}

int SymPoly::max_grading() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, e.grading());
  return m;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("adding polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("subtracting polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Integer SymPoly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1 || e.empty()) os << pcompact::to_string(a) << (e.empty() ? "" : "*");
    if (!e.empty()) os << "m" << e.to_string();
  }
  return os.str();
}

// ---- orbit products ---------------------------------------------------------

namespace {

struct ProductKey {
  std::uint64_t a;
  std::uint64_t b;
  int nvars;
  bool operator==(const ProductKey&) const = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const {
    std::uint64_t h = k.a * 0x9E3779B97F4A7C15ULL;
    h ^= k.b + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.nvars) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using ProductTerms = std::vector<std::pair<Partition, Integer>>;

std::mutex& product_cache_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<ProductKey, std::unique_ptr<ProductTerms>, ProductKeyHash>& product_cache() {
  static std::unordered_map<ProductKey, std::unique_ptr<ProductTerms>, ProductKeyHash> cache;
  return cache;
}

// Fix the representative of m_a, run over the distinct monomials of m_b,
// count how often each orbit is hit and divide out the overcount.
ProductTerms compute_m_product(const Partition& a, const Partition& b, int nvars) {
  std::vector<int> alpha = a.padded(nvars);
  std::vector<int> beta = b.padded(nvars);
  std::sort(beta.begin(), beta.end());
  std::map<Partition, long> hits;
  std::vector<int> sum(static_cast<std::size_t>(nvars));
  do {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = alpha[i] + beta[i];
    ++hits[Partition::from_parts(sum)];
  } while (std::next_permutation(beta.begin(), beta.end()));

  Integer orbit_a = a.orbit_size(nvars);
  ProductTerms out;
  out.reserve(hits.size());
  for (const auto& [c, count] : hits) {
    Integer num = orbit_a * count;
    Integer orbit_c = c.orbit_size(nvars);
    if (!mpz_divisible_p(num.get_mpz_t(), orbit_c.get_mpz_t()))
      throw Error("orbit count not divisible; internal error in m_product");
    out.emplace_back(c, num / orbit_c);
  }
  return out;
}

}  // namespace

const std::vector<std::pair<Partition, Integer>>& m_product_terms(const Partition& a,
                                                                   const Partition& b, int nvars) {
  if (a.length() > nvars || b.length() > nvars)
    throw DimensionMismatch("m_product: partition longer than " + std::to_string(nvars) +
                            " variables");
  // Commutative: canonical key puts the smaller partition first.
  const Partition& lo = a < b ? a : b;
  const Partition& hi = a < b ? b : a;
  ProductKey key{lo.pack(), hi.pack(), nvars};
  {
    std::lock_guard lock(product_cache_mutex());
    auto it = product_cache().find(key);
    if (it != product_cache().end()) return *it->second;
  }
  auto terms = std::make_unique<ProductTerms>(compute_m_product(hi, lo, nvars));
  std::lock_guard lock(product_cache_mutex());
  auto [it, inserted] = product_cache().try_emplace(key, std::move(terms));
  return *it->second;
}

SymPoly m_product(const Partition& a, const Partition& b, int nvars) {
  SymPoly r(nvars);
  for (const auto& [c, n] : m_product_terms(a, b, nvars)) r.add_term(c, Rational(n));
  return r;
}

SymPoly multiply(const SymPoly& f, const SymPoly& g, const ProductLimits& limits) {
  if (f.nvars() != g.nvars()) throw DimensionMismatch("multiplying polynomials in different variables");
  const int n = f.nvars();
  // Work with integer coefficients and divide once at the end.
  Integer lf = f.denominator_lcm();
  Integer lg = g.denominator_lcm();
  std::vector<std::pair<Partition, Integer>> fi;
  std::vector<std::pair<Partition, Integer>> gi;
  for (const auto& [e, c] : f.terms()) fi.emplace_back(e, Integer(c * lf));
  for (const auto& [e, c] : g.terms()) gi.emplace_back(e, Integer(c * lg));

  std::map<Partition, Integer> acc;
  Integer prod;
  for (const auto& [a, ca] : fi) {
    for (const auto& [b, cb] : gi) {
      if (limits.max_grading >= 0 && a.grading() + b.grading() > limits.max_grading) continue;
      if (limits.max_length >= 0 && std::max(a.length(), b.length()) > limits.max_length) continue;
      Integer cab = ca * cb;
      for (const auto& [c, k] : m_product_terms(a, b, n)) {
        if (limits.max_length >= 0 && c.length() > limits.max_length) continue;
        prod = cab * k;
        acc[c] += prod;
      }
    }
  }
  SymPoly r(n);
  Rational scale(Integer(1), lf * lg);
  for (auto& [c, v] : acc)
    if (sgn(v) != 0) r.add_term(c, Rational(v) * scale);
  return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) { return multiply(a, b); }

SymPoly power(const SymPoly& f, int exponent, const ProductLimits& limits) {
  if (exponent < 0) throw Error("negative power");
  SymPoly r = SymPoly::one(f.nvars());
  SymPoly base = f;
  while (exponent > 0) {
    if (exponent & 1) r = multiply(r, base, limits);
    exponent >>= 1;
    if (exponent) base = multiply(base, base, limits);
  }
  return r;
}

// ---- GradedSeries ---------------------------------------------------------

GradedSeries::GradedSeries(SymPoly poly, int cap) : poly_(poly.truncate(cap)), cap_(cap) {}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  cap_ = std::min(cap_, o.cap_);
  poly_ = (poly_ + o.poly_).truncate(cap_);
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  int cap = std::min(a.cap_, b.cap_);
  return GradedSeries(multiply(a.poly_, b.poly_, {cap, -1}), cap);
}

GradedSeries GradedSeries::pow(int exponent) const {
  return GradedSeries(power(poly_, exponent, {cap_, -1}), cap_);
}

// ---- substitutions ----------------------------------------------------------

SubstitutionTail::SubstitutionTail(std::vector<std::pair<int, Rational>> terms)
    : terms_(std::move(terms)) {
  for (const auto& [q, c] : terms_)
    if (q < 2) throw Error("tail powers must be at least 2");
}

SubstitutionTail SubstitutionTail::typical_log(unsigned long p, int max_power) {
  std::vector<std::pair<int, Rational>> terms;
  Integer q = p;
  while (q <= max_power) {
    terms.emplace_back(static_cast<int>(q.get_si()), Rational(Integer(1), q));
    q *= p;
  }
  return SubstitutionTail(std::move(terms));
}

SubstitutionTail SubstitutionTail::unit_shift(unsigned long p) {
  return SubstitutionTail({{static_cast<int>(p), Rational(1)}});
}

int SubstitutionTail::step() const {
  int g = 0;
  for (const auto& [q, c] : terms_) g = std::gcd(g, q - 1);
  return g;
}

std::vector<Rational> SubstitutionTail::power_series(int e, int max_n) const {
  std::vector<Rational> base(static_cast<std::size_t>(max_n + 1), Rational(0));
  base[0] = 1;
  for (const auto& [q, c] : terms_)
    if (q - 1 <= max_n) base[static_cast<std::size_t>(q - 1)] += c;
  std::vector<Rational> r(static_cast<std::size_t>(max_n + 1), Rational(0));
  r[0] = 1;
  for (int k = 0; k < e; ++k) {
    std::vector<Rational> next(r.size(), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (sgn(r[i]) == 0) continue;
      for (std::size_t j = 0; i + j < r.size(); ++j)
        if (sgn(base[j]) != 0) next[i + j] += r[i] * base[j];
    }
    r = std::move(next);
  }
  return r;
}

SymPoly padic_log_substitute(const Partition& e, const SubstitutionTail& tail, int grading,
                             int nvars) {
  SymPoly out(nvars);
  const int excess = grading - e.grading();
  if (excess < 0) return out;
  if (excess == 0) {
    out.add_term(e, 1);
    return out;
  }
  if (tail.empty() || e.empty()) return out;

  const int r = e.length();
  std::vector<std::vector<Rational>> series;
  series.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) series.push_back(tail.power_series(e[i], excess));
  const Integer base_p = e.repetend_factor();

  std::vector<int> n(static_cast<std::size_t>(r), 0);
  std::vector<int> parts(static_cast<std::size_t>(r));
  // Depth-first over compositions of the excess into r parts.
  auto rec = [&](auto&& self, int i, int left, const Rational& weight) -> void {
    if (i == r - 1) {
      const Rational& last = series[static_cast<std::size_t>(i)][static_cast<std::size_t>(left)];
      if (sgn(last) == 0) return;
      n[static_cast<std::size_t>(i)] = left;
      for (int k = 0; k < r; ++k) parts[static_cast<std::size_t>(k)] = e[k] + n[static_cast<std::size_t>(k)];
      Partition c = Partition::from_parts(parts);
      Rational coef = weight * last;
      Rational ratio(c.repetend_factor(), base_p);
      ratio.canonicalize();
      coef *= ratio;
      out.add_term(c, coef);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      const Rational& s = series[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (sgn(s) == 0) continue;
      n[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k, weight * s);
    }
  };
  rec(rec, 0, excess, Rational(1));
  return out;
}

SymPoly padic_log_substitute(const Partition& e, unsigned long p, int grading, int nvars) {
  SubstitutionTail tail = p == 7 ? SubstitutionTail::unit_shift(7)
                                 : SubstitutionTail::typical_log(p, static_cast<int>(p * p));
  return padic_log_substitute(e, tail, grading, nvars);
}

GradedSeries substitute_series(const SymPoly& f, const SubstitutionTail& tail, int cap) {
  SymPoly out(f.nvars());
  for (const auto& [e, c] : f.terms())
    for (int g = e.grading(); g <= cap; ++g) {
      SymPoly piece = padic_log_substitute(e, tail, g, f.nvars());
      if (!piece.is_zero()) out += piece * c;
    }
  return GradedSeries(std::move(out), cap);
}

}  // namespace pcompact
