#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace lethargy {

inline constexpr const char* kVersion = "0.3.0";
inline constexpr int kSchemaVersion = 1;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Base class so callers can catch everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class InsufficientWindow : public Error {
public:
    using Error::Error;
};

class NoSolver : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class IncompatibleVersion : public Error {
public:
    using Error::Error;
};

// splitmix64 plus hand-rolled distributions: std distributions are
// implementation-defined, and seeds must replay identically everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {
        for (int i = 0; i < 4; ++i) next();
    }

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::size_t index(std::size_t n) { return n ? static_cast<std::size_t>(next() % n) : 0; }

    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    Rng fork(std::uint64_t stream) { return Rng(next() ^ (stream * 0xd1342543de82ef95ULL)); }

private:
    std::uint64_t state_;
};

inline double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

// Thread cap from LETHARGY_THREADS (default 1 = serial).
std::size_t thread_cap();

}  // namespace lethargy
