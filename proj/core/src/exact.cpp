#include "morseb/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>
#include <map>
#include <utility>

namespace morseb {

using bigint = boost::multiprecision::cpp_int;

IntMatrix IntMatrix::identity(int size) {
    IntMatrix m{size, size, {}};
    for (int i = 0; i < size; ++i) m.add(i, i, 1);
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw Error("matrix shape mismatch in multiply");
    std::map<std::pair<int, int>, long long> acc;
    // group b by row for the sparse product
    std::map<int, std::vector<std::pair<int, long long>>> b_rows;
    for (const auto& e : b.entries) b_rows[e.row].push_back({e.col, e.value});
    for (const auto& ea : a.entries) {
        auto it = b_rows.find(ea.col);
        if (it == b_rows.end()) continue;
        for (const auto& [col, value] : it->second) acc[{ea.row, col}] += ea.value * value;
    }
    IntMatrix out{a.rows, b.cols, {}};
    for (const auto& [rc, v] : acc)
        if (v != 0) out.add(rc.first, rc.second, v);
    return out;
}

bool is_zero(const IntMatrix& m) {
    std::map<std::pair<int, int>, long long> acc;
    for (const auto& e : m.entries) acc[{e.row, e.col}] += e.value;
    for (const auto& [rc, v] : acc)
        if (v != 0) return false;
    return true;
}

namespace {

template <typename T>
std::vector<T> to_dense(const IntMatrix& m) {
    std::vector<T> a(static_cast<std::size_t>(m.rows) * m.cols, T(0));
    for (const auto& e : m.entries) a[static_cast<std::size_t>(e.row) * m.cols + e.col] += T(e.value);
    return a;
}

// Fraction-free Gaussian elimination (Bareiss). Rank = number of pivots.
// Division by the previous pivot is exact. Overflow behaviour is supplied by
// the arithmetic hooks of T.
template <typename T, typename Mul, typename Sub, typename Div>
int bareiss_rank(std::vector<T> a, int rows, int cols, Mul mul, Sub sub, Div div) {
    std::vector<int> row_map(rows), col_map(cols);
    for (int i = 0; i < rows; ++i) row_map[i] = i;
    for (int j = 0; j < cols; ++j) col_map[j] = j;
    auto at = [&](int i, int j) -> T& {
        return a[static_cast<std::size_t>(row_map[i]) * cols + col_map[j]];
    };

    T prev(1);
    int r = 0;
    const int steps = std::min(rows, cols);
    while (r < steps) {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(row_map[r], row_map[pi]);
        std::swap(col_map[r], col_map[pj]);

        const T pivot = at(r, r);
        for (int i = r + 1; i < rows; ++i) {
            const T lead = at(i, r);
            for (int j = r + 1; j < cols; ++j) {
                T v = sub(mul(pivot, at(i, j)), mul(lead, at(r, j)));
                at(i, j) = div(v, prev); // exact by the Bareiss identity
            }
            at(i, r) = T(0);
        }
        prev = pivot;
        ++r;
    }
    return r;
}

long long checked_mul(long long x, long long y) {
    long long out;
    if (__builtin_mul_overflow(x, y, &out))
        throw ArithmeticOverflowError("64-bit overflow in fraction-free elimination");
    return out;
}

long long checked_sub(long long x, long long y) {
    long long out;
    if (__builtin_sub_overflow(x, y, &out))
        throw ArithmeticOverflowError("64-bit overflow in fraction-free elimination");
    return out;
}

long long checked_div(long long x, long long y) {
    if (y == -1 && x == std::numeric_limits<long long>::min())
        throw ArithmeticOverflowError("64-bit overflow in fraction-free elimination");
    return x / y;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t out = 1;
    base %= p;
    while (exp) {
        if (exp & 1) out = mulmod(out, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return out;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin witness set for 64-bit inputs
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t random_prime_at_least_2pow31(std::uint64_t& rng_state) {
    for (;;) {
        std::uint64_t candidate = (splitmix64(rng_state) & 0x7fffffffULL) | 0x80000001ULL;
        // candidate is odd and in [2^31, 2^32)
        if (is_prime_u64(candidate)) return candidate;
    }
}

int rank_bareiss_bigint(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return bareiss_rank<bigint>(
        to_dense<bigint>(m), m.rows, m.cols,
        [](const bigint& x, const bigint& y) { return x * y; },
        [](const bigint& x, const bigint& y) { return x - y; },
        [](const bigint& x, const bigint& y) { return x / y; });
}

int rank_bareiss_int64_checked(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return bareiss_rank<long long>(to_dense<long long>(m), m.rows, m.cols, checked_mul,
                                   checked_sub, checked_div);
}

int rank_mod_prime(const IntMatrix& m, std::uint64_t p) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (const auto& e : m.entries) {
        const std::size_t idx = static_cast<std::size_t>(e.row) * m.cols + e.col;
        long long v = (e.value % static_cast<long long>(p) + static_cast<long long>(p)) %
                      static_cast<long long>(p);
        a[idx] = (a[idx] + static_cast<std::uint64_t>(v)) % p;
    }

    int rank = 0;
    int pivot_row = 0;
    for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        int sel = -1;
        for (int i = pivot_row; i < m.rows; ++i)
            if (a[static_cast<std::size_t>(i) * m.cols + col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < m.cols; ++j)
            std::swap(a[static_cast<std::size_t>(sel) * m.cols + j],
                      a[static_cast<std::size_t>(pivot_row) * m.cols + j]);
        const std::uint64_t inv = invmod(a[static_cast<std::size_t>(pivot_row) * m.cols + col], p);
        for (int i = pivot_row + 1; i < m.rows; ++i) {
            std::uint64_t& lead = a[static_cast<std::size_t>(i) * m.cols + col];
            if (lead == 0) continue;
            const std::uint64_t factor = mulmod(lead, inv, p);
            for (int j = col; j < m.cols; ++j) {
                std::uint64_t& x = a[static_cast<std::size_t>(i) * m.cols + j];
                x = (x + p - mulmod(factor, a[static_cast<std::size_t>(pivot_row) * m.cols + j], p)) % p;
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

int rank_exact(const IntMatrix& m, std::uint64_t seed, RankWitness* witness) {
    int rank_ff;
    bool fast = true;
    try {
        rank_ff = rank_bareiss_int64_checked(m);
    } catch (const ArithmeticOverflowError&) {
        fast = false;
        rank_ff = rank_bareiss_bigint(m);
    }
    if (witness) witness->used_int64_fast_path = fast;

    std::uint64_t state = seed;
    const std::uint64_t p1 = random_prime_at_least_2pow31(state);
    if (witness) witness->primes.push_back(p1);
    int rank_p = rank_mod_prime(m, p1);
    if (rank_p != rank_ff) {
        // rank can drop modulo an unlucky prime; it can never grow
        if (rank_p > rank_ff)
            throw RankVerificationError("prime-field rank exceeds exact rank");
        const std::uint64_t p2 = random_prime_at_least_2pow31(state);
        if (witness) witness->primes.push_back(p2);
        rank_p = rank_mod_prime(m, p2);
        if (rank_p != rank_ff)
            throw RankVerificationError("rank disagreement persists across two primes: exact " +
                                        std::to_string(rank_ff) + " vs mod-p " +
                                        std::to_string(rank_p));
    }
    return rank_ff;
}

} // namespace morseb
