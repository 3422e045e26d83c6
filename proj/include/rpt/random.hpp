#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rpt {

/// Seeded generator whose output is identical across standard libraries:
/// only the raw mt19937_64 stream is used, never the std distributions.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound <= 1)
            return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % bound;
    }

    bool coin() { return (engine_() >> 63) != 0; }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T> & v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rpt
