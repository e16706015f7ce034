#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plcg {

/// Thrown when a p-adic approximation is too coarse to decide the requested
/// operation. Never silently truncated.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an enumerative computation is unstable between the working
/// level and its successor, or when a level bound would be exceeded.
struct LevelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when input data violates a structural invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an enumeration would exceed its configured cap.
struct EnumerationCap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN)
        throw std::overflow_error("integer overflow in checked_mul");
    return static_cast<std::int64_t>(r);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) + b;
    if (r > INT64_MAX || r < INT64_MIN)
        throw std::overflow_error("integer overflow in checked_add");
    return static_cast<std::int64_t>(r);
}

/// p^e with overflow check.
inline std::int64_t ipow(std::int64_t p, int e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, p);
    return r;
}

/// a mod m in [0, m).
inline std::int64_t posmod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// (a*b) mod m without overflow.
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        (static_cast<__int128>(posmod(a, m)) * posmod(b, m)) % m);
}

/// p-adic valuation of a != 0 with respect to p; valuation of 0 is `inf_val`.
inline int pval(std::int64_t a, std::int64_t p, int inf_val = INT32_MAX) {
    if (a == 0) return inf_val;
    if (a < 0) a = -a;
    int v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

/// Inverse of a modulo m (extended Euclid); requires gcd(a, m) == 1.
std::int64_t invmod(std::int64_t a, std::int64_t m);

/// Outcome of a report-based validator: collects witnesses instead of
/// throwing. `ok()` iff no failure was recorded.
struct ValidationReport {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
    void fail(std::string what) { failures.push_back(std::move(what)); }
    void note(std::string what) { notes.push_back(std::move(what)); }
    void merge(const ValidationReport& o) {
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
};

}  // namespace plcg
