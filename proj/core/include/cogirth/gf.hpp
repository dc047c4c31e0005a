// Arithmetic in GF(q) for prime powers q <= 32, with a canonical integer
// encoding of field elements: 0..q-1, where for q = p^m the base-p digits of
// an element are the coefficients of its polynomial representative (constant
// term first). Extension fields are reduced modulo the lexicographically
// smallest irreducible monic polynomial of degree m over GF(p).
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace cogirth {

// Thrown when an operation would exceed a hard enumeration cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Gf {
 public:
  // Throws std::invalid_argument if q is not a prime power or out of range.
  explicit Gf(int q);

  int q() const { return d_->q; }
  int p() const { return d_->p; }
  int m() const { return d_->m; }

  // Modulus coefficients, constant term first, length m+1 (monic).
  // Empty for prime fields.
  const std::vector<int>& modulus() const { return d_->modulus; }

  int add(int a, int b) const { check(a); check(b); return d_->add[a * d_->q + b]; }
  int sub(int a, int b) const { check(a); check(b); return d_->add[a * d_->q + d_->neg[b]]; }
  int neg(int a) const { check(a); return d_->neg[a]; }
  int mul(int a, int b) const { check(a); check(b); return d_->mul[a * d_->q + b]; }

  // Throws std::domain_error on a == 0.
  int inv(int a) const {
    check(a);
    if (a == 0) throw std::domain_error("Gf::inv: zero has no inverse");
    return d_->inv[a];
  }

  int pow(int a, long long e) const;

  // Unchecked q*q tables for inner loops.
  const std::uint8_t* add_table() const { return d_->add.data(); }
  const std::uint8_t* mul_table() const { return d_->mul.data(); }

  bool operator==(const Gf& o) const { return d_->q == o.d_->q; }
  bool operator!=(const Gf& o) const { return !(*this == o); }

 private:
  struct Data {
    int q = 0, p = 0, m = 0;
    std::vector<int> modulus;
    std::vector<std::uint8_t> add, mul, neg, inv;
  };

  void check(int a) const {
    if (a < 0 || a >= d_->q) throw std::out_of_range("Gf: element out of range");
  }

  std::shared_ptr<const Data> d_;
};

bool is_prime_power(int q);

}  // namespace cogirth
