#pragma once

#include "loopcell/rational.hpp"

#include <cstdint>

namespace loopcell {

// splitmix64. Deliberately self-contained: std:: distributions are
// implementation-defined, and seeded runs must be byte-identical everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // modulo reduction; slight bias is irrelevant for test-case generation
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next_u64() % n; }

    // inclusive bounds
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }

    // Derive an independent stream (for per-case or per-suite seeding).
    Rng fork(std::uint64_t salt) {
        return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL));
    }

    // random rational strictly between lo and hi, denominator <= max_den
    Rat rat_between(const Rat& lo, const Rat& hi, unsigned max_den = 64) {
        if (!(lo < hi))
            throw std::invalid_argument("rat_between: empty interval");
        long long q = range(2, max_den);
        long long p = range(1, q - 1);
        return lo + (hi - lo) * Rat(p, q);
    }

    Rat rat_in_unit(unsigned max_den = 64) { return rat_between(Rat(0), Rat(1), max_den); }

    // signed rational in [-1, 1] with small denominator; may be zero
    Rat rat_signed(unsigned max_den = 16) {
        long long q = range(1, max_den);
        long long p = range(-q, q);
        return Rat(p, q);
    }

    Vec vec_in_unit(int dim, unsigned max_den = 64) {
        Vec v;
        v.reserve(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i)
            v.push_back(rat_in_unit(max_den));
        return v;
    }

    std::vector<size_t> permutation(size_t n) {
        std::vector<size_t> p(n);
        for (size_t i = 0; i < n; ++i)
            p[i] = i;
        for (size_t i = n; i > 1; --i) {
            size_t j = below(i);
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

  private:
    std::uint64_t state_;
};

}  // namespace loopcell
