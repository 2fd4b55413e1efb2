#include "oracles/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

Perm compose(const Perm &a, const Perm &b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[x] = b[a[x]];
  return c;
}

Perm inverse(const Perm &a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[a[x]] = static_cast<std::uint32_t>(x);
  return c;
}

Perm identity(std::size_t n) {
  Perm c(n);
  std::iota(c.begin(), c.end(), 0u);
  return c;
}

std::set<Perm> closure(const std::vector<Perm> &gens, std::size_t degree) {
  std::set<Perm> s(gens.begin(), gens.end());
  s.insert(identity(degree));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Perm> cur(s.begin(), s.end());
    for (const auto &a : cur)
      for (const auto &b : cur)
        grew |= s.insert(compose(a, b)).second;
  }
  return s;
}

std::vector<std::size_t> class_sizes(const std::set<Perm> &group) {
  std::set<std::set<Perm>> classes;
  for (const auto &x : group) {
    std::set<Perm> cls;
    for (const auto &h : group)
      cls.insert(compose(compose(inverse(h), x), h));
    classes.insert(cls);
  }
  std::vector<std::size_t> sizes;
  for (const auto &c : classes)
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::uint64_t> coset_orbit_sizes(const std::set<Perm> &group,
                                             const std::set<Perm> &subgroup, const Perm &g) {
  std::set<std::set<Perm>> seen;
  std::vector<std::uint64_t> sizes;
  for (const auto &t : group) {
    std::set<Perm> coset;
    for (const auto &h : subgroup)
      coset.insert(compose(h, t));
    if (!seen.insert(coset).second)
      continue;
    std::set<Perm> conj;
    for (const auto &h : subgroup)
      conj.insert(compose(compose(inverse(t), h), t));
    Perm power = g;
    std::uint64_t j = 1;
    while (!conj.contains(power)) {
      power = compose(power, g);
      ++j;
    }
    sizes.push_back(j);
  }
  // every coset in an orbit of size k reports k; keep one entry per orbit
  std::map<std::uint64_t, std::uint64_t> per_value;
  for (auto j : sizes)
    ++per_value[j];
  std::vector<std::uint64_t> orbits;
  for (const auto &[k, n] : per_value)
    orbits.insert(orbits.end(), n / k, k);
  return orbits;
}

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

std::int64_t inv(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (a * x % p == 1)
      return x;
  return 0;
}

/// Remainder of f modulo monic-or-not q; returns true when q divides f and
/// stores the quotient.
bool divides(const Poly &f, const Poly &q, std::int64_t p, Poly &quotient) {
  Poly r = f;
  quotient.assign(f.size() >= q.size() ? f.size() - q.size() + 1 : 0, 0);
  const std::int64_t li = inv(q.back(), p);
  while (r.size() >= q.size()) {
    const std::int64_t c = r.back() * li % p;
    const std::size_t shift = r.size() - q.size();
    quotient[shift] = c;
    for (std::size_t k = 0; k < q.size(); ++k)
      r[shift + k] = ((r[shift + k] - c * q[k]) % p + p) % p;
    r.pop_back();
    trim(r);
  }
  return r.empty();
}

} // namespace

std::vector<std::uint64_t> trial_division_degrees(std::vector<std::int64_t> f, std::int64_t p) {
  for (auto &c : f)
    c = ((c % p) + p) % p;
  trim(f);
  std::vector<std::uint64_t> degrees;
  for (std::size_t k = 1; f.size() > 1 && 2 * k <= f.size() - 1;) {
    // all monic polynomials of degree k
    bool found = false;
    std::vector<std::int64_t> low(k, 0);
    for (;;) {
      Poly q(low);
      q.push_back(1);
      Poly quotient;
      if (divides(f, q, p, quotient)) {
        degrees.push_back(k);
        f = quotient;
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < k && ++low[i] == p)
        low[i++] = 0;
      if (i == k)
        break;
    }
    // a smallest-degree divisor is irreducible; retry the same degree
    if (!found)
      ++k;
  }
  if (f.size() > 1)
    degrees.push_back(f.size() - 1);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

boost::multiprecision::cpp_int sylvester_discriminant(const std::vector<std::int64_t> &f) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = f.size() - 1;
  std::vector<cpp_int> a(f.begin(), f.end()), b;
  for (std::size_t k = 1; k <= n; ++k)
    b.push_back(cpp_int(f[k]) * k);
  const std::size_t m = n - 1; // deg f'
  const std::size_t size = n + m;
  std::vector<std::vector<cpp_int>> M(size, std::vector<cpp_int>(size, 0));
  // rows hold coefficients from the leading term down
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k)
      M[r][r + k] = a[n - k];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k)
      M[m + r][r + k] = b[m - k];

  // Bareiss elimination
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (M[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < size && M[swap][k] == 0)
        ++swap;
      if (swap == size)
        return 0;
      std::swap(M[k], M[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i)
      for (std::size_t j = k + 1; j < size; ++j)
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  cpp_int res = sign * M[size - 1][size - 1];
  return (n * (n - 1) / 2) % 2 ? cpp_int(-res) : res;
}

std::uint64_t count_primes_trial_division(std::uint64_t bound) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    count += prime;
  }
  return count;
}

std::uint64_t min_witness_maxdeg(const std::vector<std::uint64_t> &degrees, std::uint64_t r) {
  std::uint64_t best = 0;
  const std::size_t n = degrees.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t g = 0, mx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        g = std::gcd(g, degrees[i]);
        mx = std::max(mx, degrees[i]);
      }
    if (r % g == 0 && (best == 0 || mx < best))
      best = mx;
  }
  return best;
}

} // namespace oracle
