#include "cogirth/gf.hpp"

#include <algorithm>

namespace cogirth {

namespace {

constexpr int kMaxQ = 32;

// Polynomials over GF(p) as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

// Remainder of f modulo a monic divisor d.
Poly poly_mod(Poly f, const Poly& d, int p) {
  trim(f);
  const int deg_d = static_cast<int>(d.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= deg_d) {
    int shift = static_cast<int>(f.size()) - 1 - deg_d;
    int c = f.back();
    for (int i = 0; i <= deg_d; ++i)
      f[shift + i] = ((f[shift + i] - c * d[i]) % p + p) % p;
    trim(f);
    if (f.empty()) break;
  }
  return f;
}

// Enumerate monic degree-deg polynomials in lexicographic order of the
// coefficient sequence (c0, c1, ..., c_{deg-1}).
bool next_coeffs(std::vector<int>& c, int p) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    std::vector<int> c(d, 0);
    do {
      Poly div(c.begin(), c.end());
      div.push_back(1);
      if (poly_mod(f, div, p).empty()) return false;
    } while (next_coeffs(c, p));
  }
  return true;
}

Poly smallest_irreducible(int p, int m) {
  std::vector<int> c(m, 0);
  // Lexicographic order with c0 most significant.
  std::vector<std::vector<int>> all;
  do {
    all.push_back(c);
  } while (next_coeffs(c, p));
  std::sort(all.begin(), all.end());
  for (const auto& lo : all) {
    Poly f(lo.begin(), lo.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<int> digits_base_p(int a, int p, int m) {
  std::vector<int> d(m, 0);
  for (int i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int from_digits(const Poly& f, int p, int m) {
  int a = 0;
  for (int i = m - 1; i >= 0; --i) {
    int c = i < static_cast<int>(f.size()) ? f[i] : 0;
    a = a * p + c;
  }
  return a;
}

}  // namespace

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (p * p <= q) {
    if (q % p == 0) break;
    ++p;
  }
  if (p * p > q) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

Gf::Gf(int q) {
  if (q < 2 || q > kMaxQ)
    throw std::invalid_argument("Gf: q out of supported range [2, 32]");
  if (!is_prime_power(q))
    throw std::invalid_argument("Gf: q is not a prime power");

  auto d = std::make_shared<Data>();
  d->q = q;
  int p = 2;
  while (q % p != 0) ++p;
  d->p = p;
  d->m = 0;
  for (int t = q; t > 1; t /= p) ++d->m;

  if (d->m > 1) d->modulus = smallest_irreducible(p, d->m);

  const int m = d->m;
  d->add.assign(q * q, 0);
  d->mul.assign(q * q, 0);
  d->neg.assign(q, 0);
  d->inv.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    auto da = digits_base_p(a, p, m);
    for (int b = 0; b < q; ++b) {
      auto db = digits_base_p(b, p, m);
      Poly s(m);
      for (int i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      d->add[a * q + b] = static_cast<std::uint8_t>(from_digits(s, p, m));
      Poly prod = poly_mul(Poly(da.begin(), da.end()), Poly(db.begin(), db.end()), p);
      if (m > 1) prod = poly_mod(std::move(prod), d->modulus, p);
      d->mul[a * q + b] = static_cast<std::uint8_t>(from_digits(prod, p, m));
    }
    Poly ng(m);
    for (int i = 0; i < m; ++i) ng[i] = (p - da[i]) % p;
    d->neg[a] = static_cast<std::uint8_t>(from_digits(ng, p, m));
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (d->mul[a * q + b] == 1) {
        d->inv[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  d_ = std::move(d);
}

int Gf::pow(int a, long long e) const {
  check(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e > 0) {
    if (e & 1) r = d_->mul[r * d_->q + a];
    a = d_->mul[a * d_->q + a];
    e >>= 1;
  }
  return r;
}

}  // namespace cogirth
