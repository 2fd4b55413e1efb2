#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclesplit {

using BigInt = boost::multiprecision::cpp_int;

/// Monic polynomial with integer coefficients, constant term first.
class IntPolynomial {
public:
  /// Throws InvalidPolynomial unless monic of degree >= 1. Trailing zero
  /// coefficients are stripped first.
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  /// Parses "t^6-3t^2-1", "x^2 + 1", "2*t + t^3" ... Any single-letter
  /// variable is accepted, but only one per polynomial.
  static IntPolynomial parse(std::string_view text);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  const BigInt &operator[](std::size_t i) const { return coeffs_[i]; }

  std::string to_string(char var = 't') const;

  friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
  friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

private:
  std::vector<BigInt> coeffs_;
};

/// Res(a, b) of integer polynomials (constant term first, arbitrary leading
/// coefficients), computed by the Euclidean remainder sequence over Q.
BigInt resultant(std::span<const BigInt> a, std::span<const BigInt> b);

/// (-1)^(n(n-1)/2) Res(f, f'); zero iff f has a repeated factor over Q.
BigInt discriminant(const IntPolynomial &f);

/// Polynomial over F_p, p prime and below 2^61. Coefficients are reduced into
/// [0, p), constant term first, without trailing zeros (the zero polynomial
/// is empty).
class ModPolynomial {
public:
  ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> coefficients);

  std::uint64_t prime() const noexcept { return p_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const std::uint64_t> coefficients() const noexcept { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.back(); }

  ModPolynomial derivative() const;
  ModPolynomial monic() const;

  friend ModPolynomial operator+(const ModPolynomial &a, const ModPolynomial &b);
  friend ModPolynomial operator-(const ModPolynomial &a, const ModPolynomial &b);
  friend ModPolynomial operator*(const ModPolynomial &a, const ModPolynomial &b);
  friend ModPolynomial operator%(const ModPolynomial &a, const ModPolynomial &b);
  friend ModPolynomial operator/(const ModPolynomial &a, const ModPolynomial &b);
  friend bool operator==(const ModPolynomial &, const ModPolynomial &) = default;

  /// Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial &a,
                                                        const ModPolynomial &b);

private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Monic gcd; gcd(0, 0) = 0.
ModPolynomial gcd(ModPolynomial a, ModPolynomial b);

/// base^e mod modulus by square-and-multiply.
ModPolynomial powmod(const ModPolynomial &base, std::uint64_t e,
                     const ModPolynomial &modulus);

ModPolynomial reduce_mod_p(const IntPolynomial &f, std::uint64_t p);

bool is_squarefree(const ModPolynomial &g);

/// Sorted multiset of irreducible factor degrees.
using DegreePattern = std::vector<std::uint64_t>;

/// Degrees of the monic irreducible factors of a squarefree g by
/// distinct-degree factorization. Throws NotSquarefree.
DegreePattern factor_degree_pattern(const ModPolynomial &g);

/// Primes <= bound in increasing order.
std::vector<std::uint64_t> prime_stream(std::uint64_t bound);

bool is_prime(std::uint64_t n);

} // namespace cyclesplit
