#pragma once

#include <cstdint>
#include <vector>

#include "wilf/rational.hpp"

// Small deterministic generators for property tests.
namespace gen {

class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : s_(seed * 2862933555777941757ULL + 3037000493ULL) {}

    std::uint64_t next()
    {
        s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return s_ >> 33;
    }

    // uniform in [lo, hi]
    std::int64_t range(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    wilf::Rational small_rational(std::int64_t num = 9, std::int64_t den = 6)
    {
        return wilf::Rational(wilf::BigInt(range(-num, num)), wilf::BigInt(range(1, den)));
    }

    wilf::Rational nonzero_rational(std::int64_t num = 9, std::int64_t den = 6)
    {
        for (;;) {
            auto q = small_rational(num, den);
            if (!q.is_zero()) return q;
        }
    }

    std::vector<wilf::Rational> rationals(std::size_t count, std::int64_t num = 9, std::int64_t den = 6)
    {
        std::vector<wilf::Rational> v;
        for (std::size_t i = 0; i < count; ++i) v.push_back(small_rational(num, den));
        return v;
    }

private:
    std::uint64_t s_;
};

} // namespace gen
