#include "cyclesplit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclesplit/error.hpp"

namespace cyclesplit {

namespace {

using BigRational = boost::multiprecision::cpp_rational;

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 61;

void strip(std::vector<BigInt> &c) {
  while (!c.empty() && c.back() == 0)
    c.pop_back();
}

} // namespace

// --- IntPolynomial --------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  strip(coeffs_);
  if (coeffs_.size() < 2)
    throw Error(ErrorKind::InvalidPolynomial, "polynomial must have degree >= 1");
  if (coeffs_.back() != 1)
    throw Error(ErrorKind::InvalidPolynomial,
                "polynomial must be monic, leading coefficient is " + coeffs_.back().str());
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  auto fail = [&](const std::string &msg) -> IntPolynomial {
    throw Error(ErrorKind::Parse, "polynomial '" + std::string(text) + "': " + msg);
  };
  if (s.empty())
    return fail("empty");

  std::vector<BigInt> coeffs;
  char var = 0;
  std::size_t i = 0;
  auto read_number = [&](BigInt &out) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    if (i == start)
      return false;
    out = BigInt(s.substr(start, i - start));
    return true;
  };

  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      return fail("expected '+' or '-'");
    }
    first = false;

    BigInt coef = 1;
    bool has_coef = read_number(coef);
    if (has_coef && i < s.size() && s[i] == '*')
      ++i;
    std::size_t exponent = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (var && s[i] != var)
        return fail("more than one variable");
      var = s[i++];
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        BigInt e;
        if (!read_number(e))
          return fail("expected exponent after '^'");
        if (e > 4096)
          return fail("exponent too large");
        exponent = e.convert_to<std::size_t>();
      }
    } else if (!has_coef) {
      return fail("expected a term");
    }
    if (coeffs.size() <= exponent)
      coeffs.resize(exponent + 1);
    coeffs[exponent] += sign * coef;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::to_string(char var) const {
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt &c = coeffs_[k];
    if (c == 0)
      continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? "-" : "+";
    if (mag != 1 || k == 0)
      out += mag.str();
    if (k >= 1)
      out += var;
    if (k >= 2)
      out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

// --- resultant / discriminant --------------------------------------------

namespace {

using QPoly = std::vector<BigRational>;

long qdeg(const QPoly &p) { return static_cast<long>(p.size()) - 1; }

void qtrim(QPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

QPoly qmod(QPoly a, const QPoly &b) {
  while (qdeg(a) >= qdeg(b)) {
    const BigRational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k)
      a[shift + k] -= factor * b[k];
    a.pop_back(); // exact cancellation of the leading term
    qtrim(a);
  }
  return a;
}

BigRational qpow(const BigRational &x, long e) {
  BigRational r = 1;
  for (long k = 0; k < e; ++k)
    r *= x;
  return r;
}

} // namespace

BigInt resultant(std::span<const BigInt> a_in, std::span<const BigInt> b_in) {
  QPoly a(a_in.begin(), a_in.end());
  QPoly b(b_in.begin(), b_in.end());
  qtrim(a);
  qtrim(b);
  if (a.empty() || b.empty())
    return 0;

  // Res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) Res(b, r), r = a mod b
  BigRational acc = 1;
  if (qdeg(a) < qdeg(b)) {
    if ((qdeg(a) * qdeg(b)) % 2)
      acc = -acc;
    std::swap(a, b);
  }
  for (;;) {
    if (qdeg(b) == 0) {
      acc *= qpow(b.back(), qdeg(a));
      break;
    }
    QPoly r = qmod(a, b);
    if (r.empty())
      return 0;
    if ((qdeg(a) * qdeg(b)) % 2)
      acc = -acc;
    acc *= qpow(b.back(), qdeg(a) - qdeg(r));
    a = std::move(b);
    b = std::move(r);
  }
  if (denominator(acc) != 1)
    throw std::logic_error("resultant of integer polynomials is not an integer");
  return numerator(acc);
}

BigInt discriminant(const IntPolynomial &f) {
  const std::size_t n = f.degree();
  std::vector<BigInt> df;
  for (std::size_t k = 1; k <= n; ++k)
    df.push_back(f[k] * k);
  BigInt res = resultant(f.coefficients(), df);
  return (n * (n - 1) / 2) % 2 ? BigInt(-res) : res;
}

// --- modular arithmetic ---------------------------------------------------

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0)
    throw std::domain_error("zero has no inverse");
  return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0)
      return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // these bases are deterministic for all 64-bit n
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int k = 1; k < s && composite; ++k) {
      x = mulmod(x, x, n);
      if (x == n - 1)
        composite = false;
    }
    if (composite)
      return false;
  }
  return true;
}

// --- ModPolynomial --------------------------------------------------------

ModPolynomial::ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> coefficients)
    : p_(p), c_(std::move(coefficients)) {
  if (p < 2 || p >= kMaxPrime)
    throw Error(ErrorKind::InvalidPolynomial, "modulus out of range");
  for (auto &x : c_)
    x %= p_;
  trim();
}

void ModPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

ModPolynomial ModPolynomial::derivative() const {
  std::vector<std::uint64_t> d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(mulmod(c_[k], k % p_, p_));
  return ModPolynomial(p_, std::move(d));
}

ModPolynomial ModPolynomial::monic() const {
  if (c_.empty())
    return *this;
  const std::uint64_t inv = invmod(c_.back(), p_);
  std::vector<std::uint64_t> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k)
    out[k] = mulmod(c_[k], inv, p_);
  return ModPolynomial(p_, std::move(out));
}

ModPolynomial operator+(const ModPolynomial &a, const ModPolynomial &b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::uint64_t s = a[k] + b[k];
    c[k] = s >= a.p_ ? s - a.p_ : s;
  }
  return ModPolynomial(a.p_, std::move(c));
}

ModPolynomial operator-(const ModPolynomial &a, const ModPolynomial &b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = a[k] >= b[k] ? a[k] - b[k] : a[k] + a.p_ - b[k];
  return ModPolynomial(a.p_, std::move(c));
}

ModPolynomial operator*(const ModPolynomial &a, const ModPolynomial &b) {
  if (a.is_zero() || b.is_zero())
    return ModPolynomial(a.p_, {});
  std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  return ModPolynomial(a.p_, std::move(c));
}

std::pair<ModPolynomial, ModPolynomial> ModPolynomial::divmod(const ModPolynomial &a,
                                                              const ModPolynomial &b) {
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> rem = a.c_;
  if (a.degree() < b.degree())
    return {ModPolynomial(p, {}), a};
  std::vector<std::uint64_t> quot(rem.size() - b.c_.size() + 1, 0);
  const std::uint64_t inv = invmod(b.c_.back(), p);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint64_t q = mulmod(rem[k + b.c_.size() - 1], inv, p);
    quot[k] = q;
    if (q == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      const std::uint64_t t = mulmod(q, b.c_[j], p);
      std::uint64_t &r = rem[k + j];
      r = r >= t ? r - t : r + p - t;
    }
  }
  rem.resize(b.c_.size() - 1);
  return {ModPolynomial(p, std::move(quot)), ModPolynomial(p, std::move(rem))};
}

ModPolynomial operator%(const ModPolynomial &a, const ModPolynomial &b) {
  return ModPolynomial::divmod(a, b).second;
}

ModPolynomial operator/(const ModPolynomial &a, const ModPolynomial &b) {
  return ModPolynomial::divmod(a, b).first;
}

ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
  while (!b.is_zero()) {
    ModPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPolynomial powmod(const ModPolynomial &base, std::uint64_t e,
                     const ModPolynomial &modulus) {
  ModPolynomial result(modulus.prime(), {1});
  result = result % modulus;
  ModPolynomial b = base % modulus;
  while (e) {
    if (e & 1)
      result = result * b % modulus;
    b = b * b % modulus;
    e >>= 1;
  }
  return result;
}

ModPolynomial reduce_mod_p(const IntPolynomial &f, std::uint64_t p) {
  if (!is_prime(p) || p >= kMaxPrime)
    throw Error(ErrorKind::InvalidPolynomial, std::to_string(p) + " is not a usable prime");
  std::vector<std::uint64_t> c;
  c.reserve(f.degree() + 1);
  const BigInt bp = p;
  for (const BigInt &x : f.coefficients()) {
    BigInt r = x % bp;
    if (r < 0)
      r += bp;
    c.push_back(r.convert_to<std::uint64_t>());
  }
  return ModPolynomial(p, std::move(c));
}

bool is_squarefree(const ModPolynomial &g) {
  return gcd(g, g.derivative()).degree() == 0;
}

DegreePattern factor_degree_pattern(const ModPolynomial &g) {
  if (g.degree() < 1)
    throw Error(ErrorKind::InvalidPolynomial, "need a polynomial of degree >= 1");
  if (!is_squarefree(g))
    throw Error(ErrorKind::NotSquarefree,
                "polynomial is not squarefree modulo " + std::to_string(g.prime()));

  const std::uint64_t p = g.prime();
  const ModPolynomial x(p, {0, 1});
  ModPolynomial rest = g.monic();
  ModPolynomial frob = x % rest; // x^(p^d) mod rest
  DegreePattern degrees;
  for (std::uint64_t d = 1; rest.degree() >= static_cast<long>(2 * d); ++d) {
    frob = powmod(frob, p, rest);
    ModPolynomial part = gcd(rest, frob - x);
    if (part.degree() > 0) {
      degrees.insert(degrees.end(), static_cast<std::uint64_t>(part.degree()) / d, d);
      rest = rest / part;
      frob = frob % rest;
    }
  }
  if (rest.degree() > 0)
    degrees.push_back(static_cast<std::uint64_t>(rest.degree()));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<std::uint64_t> prime_stream(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2)
    return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i])
      continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i)
      composite[j] = true;
  }
  return primes;
}

} // namespace cyclesplit
