#pragma once

#include <cstdint>
#include <vector>

#include "morseb/errors.hpp"

namespace morseb {

/// Sparse integer matrix; coboundary entries are +-1 but intermediate
/// complexes (products in tests) may hold larger values.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        long long value;
    };
    std::vector<Entry> entries;

    static IntMatrix zero(int rows, int cols) { return IntMatrix{rows, cols, {}}; }
    static IntMatrix identity(int size);
    void add(int row, int col, long long value) { entries.push_back({row, col, value}); }
};

/// Exact product, used for the d.d = 0 assertions.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
bool is_zero(const IntMatrix& m);

struct RankWitness {
    std::vector<std::uint64_t> primes; // prime moduli used for the cross-check
    bool used_int64_fast_path = false;
};

/// Exact rank by fraction-free (Bareiss) elimination, verified independently
/// by elimination over a random prime field of size >= 2^31. A discrepancy
/// triggers a second prime; persistent disagreement throws
/// RankVerificationError. Elimination runs in checked 64-bit arithmetic first
/// and falls back to arbitrary precision on overflow, so the result is always
/// exact.
int rank_exact(const IntMatrix& m, std::uint64_t seed = 0x9e3779b97f4a7c15ULL,
               RankWitness* witness = nullptr);

// Individual routes, exposed for cross-checking in tests.
int rank_bareiss_bigint(const IntMatrix& m);
int rank_bareiss_int64_checked(const IntMatrix& m); // throws ArithmeticOverflowError
int rank_mod_prime(const IntMatrix& m, std::uint64_t p);

std::uint64_t random_prime_at_least_2pow31(std::uint64_t& rng_state);
bool is_prime_u64(std::uint64_t n);

} // namespace morseb
