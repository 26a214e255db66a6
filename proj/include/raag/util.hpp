#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace raag {

/// FNV-1a over a byte string; used for config digests embedded in artifacts.
inline std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a_hex(const std::string& s)
{
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

/// Deterministic sampler. mt19937_64 output is fully specified by the
/// standard; the bound helpers below avoid the implementation-defined
/// std distributions so identical seeds give identical artifacts.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, n). Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return v % n;
    }

    long long in_range(long long lo, long long hi) // inclusive
    {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <typename T>
    const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

private:
    std::mt19937_64 eng_;
};

} // namespace raag
