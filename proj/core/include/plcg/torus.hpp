#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plcg/util.hpp"

namespace plcg {

class IntMat;

/// One coordinate of a discrete p-torus element: the reduced fraction
/// num/p^exp in [0,1). Zero is stored as 0/p^0.
struct TorusCoord {
    std::int64_t num = 0;
    int exp = 0;

    auto operator<=>(const TorusCoord&) const = default;
};

/// A point of (Z/p^infty)^r in exact rational form. Immutable after
/// construction; all operations are pure and reduce mod 1.
class TorusElement {
  public:
    TorusElement() = default;
    TorusElement(std::int64_t p, int rank);
    TorusElement(std::int64_t p, std::vector<TorusCoord> coords);

    /// Parses coordinates given as strings "a/b" (b a power of p) or "a"
    /// (integer, reduces to 0).
    static TorusElement parse(std::int64_t p, const std::vector<std::string>& strs);

    std::int64_t prime() const { return p_; }
    int rank() const { return static_cast<int>(coords_.size()); }
    const TorusCoord& coord(int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<TorusCoord>& coords() const { return coords_; }

    bool is_zero() const;

    TorusElement add(const TorusElement& o) const;
    TorusElement neg() const;
    TorusElement sub(const TorusElement& o) const { return add(o.neg()); }
    /// Integer multiple n*t mod 1.
    TorusElement scaled(std::int64_t n) const;
    /// Matrix action (rows x rank integer matrix), result rank = rows.
    TorusElement apply(const IntMat& m) const;

    /// log_p of the order: max coordinate exponent.
    int order_exponent() const;

    /// Canonical division by p^m: each coordinate num/p^(exp+m), the solution
    /// of p^m * s = t with the smallest nonnegative numerators.
    TorusElement divided_by_ppower(int m) const;

    std::vector<std::string> to_strings() const;
    std::string str() const;

    auto operator<=>(const TorusElement&) const = default;

  private:
    std::int64_t p_ = 2;
    std::vector<TorusCoord> coords_;
};

/// Truncated p-adic unit: the coset residue + p^precision Z_p with
/// gcd(residue, p) = 1.
class PAdicUnitApprox {
  public:
    PAdicUnitApprox() = default;
    PAdicUnitApprox(std::int64_t p, int precision, std::int64_t residue);

    static PAdicUnitApprox one(std::int64_t p, int precision);
    /// Parses "u" (decimal, may be negative) or "1+a*p^m".
    static PAdicUnitApprox parse(std::int64_t p, int precision, const std::string& s);

    std::int64_t prime() const { return p_; }
    int precision() const { return precision_; }
    std::int64_t residue() const { return residue_; }

    PAdicUnitApprox mul(const PAdicUnitApprox& o) const;
    PAdicUnitApprox inv() const;
    PAdicUnitApprox pow(std::int64_t e) const;
    /// Same unit at a lower precision.
    PAdicUnitApprox truncated(int precision) const;

    bool is_one() const { return residue_ == 1; }

    auto operator<=>(const PAdicUnitApprox&) const = default;

  private:
    std::int64_t p_ = 2;
    int precision_ = 1;
    std::int64_t residue_ = 1;
};

/// A prime power p^exp, used for element orders.
struct PPower {
    std::int64_t p = 2;
    int exp = 0;
    std::int64_t value() const { return ipow(p, exp); }
    auto operator<=>(const PPower&) const = default;
};

/// Result of valuation_gamma: nu empty means "the residues agree, so the
/// valuation is >= the shared precision".
struct ValuationResult {
    std::optional<int> nu;
    bool member = false;
};

/// nu_p(zeta - zeta') on residues, plus membership of zeta*zeta'^-1... see
/// post: member reports whether nu >= m (with zeta' = 1 this is zeta in
/// Gamma_m(p)). Requires matching p and precision and m < precision.
ValuationResult valuation_gamma(const PAdicUnitApprox& zeta,
                                const PAdicUnitApprox& zeta_prime, int m);

/// Convenience: zeta in Gamma_m(p), i.e. nu_p(zeta - 1) >= m. Requires
/// m < precision unless m == 0.
bool in_gamma_m(const PAdicUnitApprox& zeta, int m);

/// nu_p(zeta - 1) on residues; empty when residue == 1 (">= precision").
std::optional<int> one_minus_valuation(const PAdicUnitApprox& zeta);

/// Decomposition zeta - 1 = unit * p^m. Fails (PrecisionError) when the
/// residue of zeta is 1, since then the valuation is undecidable.
struct UnitTimesPPower {
    int m = 0;
    PAdicUnitApprox unit;  // precision = original - m
};
UnitTimesPPower split_one_minus(const PAdicUnitApprox& zeta);

/// t^zeta computed coordinatewise. Requires precision >= log_p(ord t).
TorusElement power_map(const TorusElement& t, const PAdicUnitApprox& zeta);

/// Smallest p-power k with k*t = 0.
PPower element_order(const TorusElement& t);

/// Canonical s with s^(p^m * unit) = t: divide by the unit exactly, then take
/// the canonical p^m-th root. The full solution set is s + (p^m-torsion).
/// Requires unit precision >= log_p(ord t).
TorusElement solve_root(const TorusElement& t, int m, const PAdicUnitApprox& unit);

/// All solutions of s^(p^m * unit) = t at the appropriate level (the coset of
/// the p^m-torsion through the canonical root). Intended for tests/oracles.
std::vector<TorusElement> all_roots(const TorusElement& t, int m,
                                    const PAdicUnitApprox& unit);

/// Enumerate all of S_0[p^level] for the given rank (lexicographic order).
std::vector<TorusElement> enumerate_torus_level(std::int64_t p, int rank, int level);

}  // namespace plcg
