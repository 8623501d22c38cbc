#include "qclique/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qclique {

BigUint::BigUint(std::uint64_t v) {
    while (v) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xFFFFFFFFu));
        v >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (compare(o) < 0) throw std::underflow_error("BigUint: negative difference");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
        if (d < 0) {
            d += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(d);
    }
    trim();
    return *this;
}

BigUint BigUint::operator+(const BigUint& o) const {
    BigUint r = *this;
    r += o;
    return r;
}

BigUint BigUint::operator-(const BigUint& o) const {
    BigUint r = *this;
    r -= o;
    return r;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint& BigUint::mul_small(std::uint32_t f) {
    if (f == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    return *this;
}

BigUint& BigUint::div_small_exact(std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("BigUint: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0) throw std::logic_error("BigUint: inexact division");
    trim();
    return *this;
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exp) {
    BigUint r(1);
    BigUint b(base);
    while (exp) {
        if (exp & 1) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

int BigUint::compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

double BigUint::log() const {
    if (is_zero()) throw std::domain_error("BigUint: log of zero");
    // Value = top bits * 2^shift; take up to 64 leading bits for the mantissa.
    std::size_t top = limbs_.size() - 1;
    std::uint64_t mant = limbs_[top];
    int shift = static_cast<int>(top) * 32;
    if (top >= 1) {
        mant = (mant << 32) | limbs_[top - 1];
        shift -= 32;
    }
    return std::log(static_cast<double>(mant)) + shift * 0.6931471805599453;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint64_t rem = 0;
        for (std::size_t i = tmp.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | tmp.limbs_[i];
            tmp.limbs_[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        tmp.trim();
        std::string chunk = std::to_string(rem);
        if (!tmp.is_zero()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    return out;
}

BigUint big_binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUint();
    if (k > n - k) k = n - k;
    BigUint r(1);
    for (std::uint64_t i = 0; i < k; ++i) {
        r.mul_small(static_cast<std::uint32_t>(n - i));
        r.div_small_exact(static_cast<std::uint32_t>(i + 1));
    }
    return r;
}

double BigRat::value() const {
    return std::exp(log());
}

}  // namespace qclique
