#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qclique {

// Arbitrary-precision unsigned integer, 32-bit limbs, little-endian.
// Sized for exact hypergeometric/binomial work at S <= 200 and binomial
// coefficients up to n ~ 10^3; schoolbook multiplication is plenty there.
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v);  // NOLINT: implicit by design, mirrors integer literals

    static BigUint one() { return BigUint(1); }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);  // requires *this >= o
    BigUint operator+(const BigUint& o) const;
    BigUint operator-(const BigUint& o) const;
    BigUint operator*(const BigUint& o) const;

    BigUint& mul_small(std::uint32_t f);
    // Exact division by a small factor; throws if a remainder is left.
    BigUint& div_small_exact(std::uint32_t d);

    static BigUint pow(std::uint64_t base, std::uint64_t exp);

    // -1, 0, +1 comparison.
    int compare(const BigUint& o) const;
    bool operator==(const BigUint& o) const { return compare(o) == 0; }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }

    // Natural log, accurate to double precision; log(0) throws.
    double log() const;

    std::string to_string() const;  // decimal

  private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

// Exact C(n,k) via the multiplicative formula with exact divisions.
BigUint big_binom(std::uint64_t n, std::uint64_t k);

// Non-negative exact rational. Not auto-reduced; numbers stay small enough in
// the oracle paths that reduction is unnecessary.
struct BigRat {
    BigUint num;
    BigUint den = BigUint(1);

    static BigRat from_int(std::uint64_t v) { return BigRat{BigUint(v), BigUint(1)}; }

    BigRat operator+(const BigRat& o) const { return BigRat{num * o.den + o.num * den, den * o.den}; }
    BigRat operator*(const BigRat& o) const { return BigRat{num * o.num, den * o.den}; }

    bool operator==(const BigRat& o) const { return (num * o.den).compare(o.num * den) == 0; }
    bool operator<=(const BigRat& o) const { return (num * o.den).compare(o.num * den) <= 0; }

    // log(num/den); zero numerator maps to -inf via caller checks.
    double log() const { return num.log() - den.log(); }
    double value() const;
    bool is_zero() const { return num.is_zero(); }
};

}  // namespace qclique
