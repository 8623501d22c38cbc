#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qclique {

// Exact rational density in [0,1]. Density thresholds of the form
// ceil(gamma * C(k,2)) are integer-exact, so gamma is never carried as a
// float: a boundary case where gamma*C(k,2) is integral must not depend on
// rounding.
class RationalDensity {
  public:
    RationalDensity() : num_(0), den_(1) {}

    RationalDensity(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("RationalDensity: zero denominator");
        if (num_ > den_) throw std::invalid_argument("RationalDensity: value above 1");
        std::uint64_t g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    // Accepts "p/q" or a finite decimal such as "0.35" or "1".
    static RationalDensity parse(std::string_view text);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // ceil(gamma * s), exact.
    std::uint64_t ceil_mul(std::uint64_t s) const {
        unsigned __int128 prod = static_cast<unsigned __int128>(num_) * s;
        return static_cast<std::uint64_t>((prod + den_ - 1) / den_);
    }

    // floor(gamma * s), exact.
    std::uint64_t floor_mul(std::uint64_t s) const {
        unsigned __int128 prod = static_cast<unsigned __int128>(num_) * s;
        return static_cast<std::uint64_t>(prod / den_);
    }

    // round-half-up of gamma * s, exact.
    std::uint64_t round_mul(std::uint64_t s) const {
        unsigned __int128 prod = static_cast<unsigned __int128>(num_) * s;
        return static_cast<std::uint64_t>((2 * prod + den_) / (2 * static_cast<unsigned __int128>(den_)));
    }

    bool operator==(const RationalDensity& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const RationalDensity& o) const {
        return static_cast<unsigned __int128>(num_) * o.den_ <
               static_cast<unsigned __int128>(o.num_) * den_;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  private:
    std::uint64_t num_;
    std::uint64_t den_;
};

inline RationalDensity RationalDensity::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("RationalDensity: empty string");
    auto to_u64 = [](std::string_view s) -> std::uint64_t {
        if (s.empty()) throw std::invalid_argument("RationalDensity: bad number");
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("RationalDensity: bad digit");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        return RationalDensity(to_u64(text.substr(0, slash)), to_u64(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return RationalDensity(to_u64(text), 1);
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("RationalDensity: too many decimals");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::uint64_t num = (whole.empty() ? 0 : to_u64(whole)) * den + (frac.empty() ? 0 : to_u64(frac));
    return RationalDensity(num, den);
}

}  // namespace qclique
