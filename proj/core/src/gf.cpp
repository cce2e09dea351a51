#include "saxl/gf.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "saxl/errors.hpp"
#include "saxl/number_theory.hpp"

namespace saxl::gf {

namespace {

constexpr std::uint32_t kTableCap = 1u << 20;

// Dense polynomials over GF(p), lowest coefficient first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;  // m is monic
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  r = poly_mod(r, m, p);
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic so poly_mod applies.
    const std::uint32_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * li % p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test for a monic polynomial m of degree f.
bool irreducible(const Poly& m, std::uint32_t p, std::uint32_t f) {
  const Poly x{0, 1};
  auto frob_power = [&](std::uint32_t k) {
    Poly r = poly_mod(x, m, p);
    for (std::uint32_t i = 0; i < k; ++i) r = poly_powmod(r, p, m, p);
    return r;
  };
  if (!poly_sub(frob_power(f), poly_mod(x, m, p), p).empty()) return false;
  for (auto [r, e] : factorize(f)) {
    Poly g = poly_gcd(m, poly_sub(frob_power(f / static_cast<std::uint32_t>(r)), poly_mod(x, m, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Coefficient tuples (c_0, ..., c_{n-1}) in lex order with c_0 most significant.
bool next_tuple(std::vector<std::uint32_t>& c, std::uint32_t p) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (f == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kTableCap) throw UnsupportedError("field order exceeds table cap 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);

  std::vector<std::uint32_t> c(f, 0);
  do {
    Poly m(c.begin(), c.end());
    m.push_back(1);
    if (irreducible(m, p, f)) {
      modulus_ = m;
      break;
    }
  } while (next_tuple(c, p));
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

  const auto q1_factors = factorize(q_ - 1);
  auto pack = [&](const Poly& a) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
  };
  Poly lambda;
  std::fill(c.begin(), c.end(), 0);
  while (next_tuple(c, p)) {
    Poly cand(c.begin(), c.end());
    trim(cand);
    bool primitive = true;
    for (auto [r, e] : q1_factors) {
      Poly t = poly_powmod(cand, (q_ - 1) / r, modulus_, p);
      if (t == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      lambda = cand;
      break;
    }
  }
  if (q_ == 2) lambda = Poly{1};
  if (lambda.empty()) throw std::logic_error("no primitive element found");

  exp_.resize(q_ - 1);
  std::vector<Log> log(q_, ZERO);
  Poly cur{1};
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    const std::uint32_t v = pack(cur);
    if (log[v] != ZERO) throw std::logic_error("lambda is not primitive");
    exp_[k] = v;
    log[v] = static_cast<Log>(k);
    cur = poly_mulmod(cur, lambda, modulus_, p);
  }
  zech_.resize(q_ - 1);
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    const std::uint32_t v = exp_[k];
    const std::uint32_t c0 = v % p;
    const std::uint32_t w = v - c0 + (c0 + 1) % p;
    zech_[k] = log[w];
  }
}

std::vector<std::uint32_t> Field::coefficients(Log a) const {
  std::vector<std::uint32_t> c(f_, 0);
  if (a == ZERO) return c;
  std::uint32_t v = exp_[static_cast<std::size_t>(a)];
  for (std::uint32_t i = 0; i < f_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Log Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() != f_) throw std::invalid_argument("coefficient vector has wrong length");
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + c[i];
  }
  if (v == 0) return ZERO;
  // The log table is not kept; a linear scan is fine for this rare call.
  for (std::uint32_t k = 0; k < q1(); ++k) {
    if (exp_[k] == v) return static_cast<Log>(k);
  }
  throw std::logic_error("element not found in exp table");
}

Log Field::from_int(std::int64_t n) const {
  const std::int64_t r = ((n % static_cast<std::int64_t>(p_)) + p_) % p_;
  std::vector<std::uint32_t> c(f_, 0);
  c[0] = static_cast<std::uint32_t>(r);
  return from_coefficients(c);
}

Log Field::inv(Log a) const {
  if (a == ZERO) throw std::domain_error("inverse of zero");
  return static_cast<Log>((q1() - static_cast<std::uint32_t>(a)) % q1());
}

Log Field::add(Log a, Log b) const noexcept {
  if (a == ZERO) return b;
  if (b == ZERO) return a;
  // l^a + l^b = l^a (1 + l^(b-a))
  const std::int64_t d = ((static_cast<std::int64_t>(b) - a) % q1() + q1()) % q1();
  const Log z = zech_[static_cast<std::size_t>(d)];
  if (z == ZERO) return ZERO;
  return static_cast<Log>((static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(z)) % q1());
}

Log Field::pow(Log a, std::int64_t e) const {
  if (a == ZERO) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 0 : ZERO;
  }
  const std::int64_t m = q1();
  const std::int64_t er = ((e % m) + m) % m;
  return static_cast<Log>((static_cast<std::int64_t>(a) * er) % m);
}

Log Field::frobenius(Log a, std::uint32_t k) const noexcept {
  if (a == ZERO) return ZERO;
  std::uint64_t r = static_cast<std::uint64_t>(a);
  for (std::uint32_t i = 0; i < k; ++i) r = r * p_ % q1();
  return static_cast<Log>(r);
}

bool Field::is_square(Log a) const {
  if (!odd()) throw std::invalid_argument("is_square requires odd q");
  if (a == ZERO) throw std::invalid_argument("is_square requires a nonzero element");
  return a % 2 == 0;
}

bool Field::in_proper_subfield(Log a) const noexcept {
  if (a == ZERO) return true;
  std::uint64_t pk = 1;
  for (std::uint32_t k = 1; k < f_; ++k) {
    pk = pk * p_;
    // x^(p^k) = x  <=>  log * (p^k - 1) = 0 mod (q - 1)
    if ((static_cast<std::uint64_t>(a) * (pk - 1)) % q1() == 0) return true;
  }
  return false;
}

bool Field::in_proper_subfield_divisors(Log a) const noexcept {
  if (a == ZERO) return true;
  for (std::uint32_t k = 1; k < f_; ++k) {
    if (f_ % k != 0) continue;
    const std::uint64_t sub = ipow(p_, k) - 1;
    // GF(p^k)^x is generated by lambda^((q-1)/(p^k-1)).
    if (static_cast<std::uint64_t>(a) % (q1() / sub) == 0) return true;
  }
  return false;
}

std::uint32_t Field::order(Log a) const {
  if (a == ZERO) throw std::domain_error("order of zero");
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(q1()));
  return static_cast<std::uint32_t>(q1() / g);
}

std::string Field::to_string(Log a) const {
  if (f_ == 1) return std::to_string(a == ZERO ? 0 : exp_[static_cast<std::size_t>(a)]);
  if (a == ZERO) return "0";
  return "L^" + std::to_string(a);
}

const Field& field(std::uint32_t p, std::uint32_t f) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, f}];
  if (!slot) slot = std::make_unique<Field>(p, f);
  return *slot;
}

const Field& field_of_order(std::uint32_t q) {
  auto [p, f] = prime_power(q);
  if (p == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return field(static_cast<std::uint32_t>(p), f);
}

std::uint64_t count_nonsquare_nonsubfield(const Field& field) {
  if (!field.odd()) throw std::invalid_argument("count_nonsquare_nonsubfield requires odd q");
  std::uint64_t m = 0;
  for (Log a = 0; a < static_cast<Log>(field.q1()); ++a) {
    if (!field.is_square(a) && !field.in_proper_subfield(a)) ++m;
  }
  return m;
}

double euler_lower_bound(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("euler_lower_bound requires n >= 3");
  constexpr double kGamma = 0.5772156649;
  const double ll = std::log(std::log(static_cast<double>(n)));
  return static_cast<double>(n) / (std::exp(kGamma) * ll + 3.0 / ll);
}

bool euler_bound_holds(std::uint64_t n) { return euler_bound_holds(n, euler_phi(n)); }

bool euler_bound_holds(std::uint64_t n, std::uint64_t phi) {
  const double bound = euler_lower_bound(n) * (1.0 + std::ldexp(1.0, -40));
  return static_cast<double>(phi) > bound;
}

}  // namespace saxl::gf
