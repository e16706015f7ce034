#include "plcg/modsolve.hpp"

#include <algorithm>

namespace plcg {

namespace {

struct Elim {
    IntMat a;               // T * A mod p^N
    IntMat t;               // row-op transform
    std::vector<int> pivot_col;  // per step
    std::vector<int> pivot_val;  // valuation of each pivot
    std::int64_t mod;
    std::int64_t p;
    int n;
};

// Forward elimination with minimal-valuation pivoting. Z/p^N is not a field,
// so pivots are p^v * unit with v globally minimal among the remaining block;
// rows are scaled by unit inverses only.
Elim eliminate(const IntMat& a_in, std::int64_t p, int n) {
    Elim e;
    e.p = p;
    e.n = n;
    e.mod = ipow(p, n);
    e.a = a_in;
    for (int i = 0; i < e.a.rows(); ++i)
        for (int j = 0; j < e.a.cols(); ++j) e.a.at(i, j) = posmod(e.a.at(i, j), e.mod);
    e.t = IntMat::identity(a_in.rows());
    int rows = e.a.rows(), cols = e.a.cols();
    std::vector<bool> is_pivot_col(static_cast<size_t>(cols), false);

    int step = 0;
    while (step < rows) {
        int bi = -1, bj = -1, bv = n;
        for (int i = step; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (is_pivot_col[static_cast<size_t>(j)] || e.a.at(i, j) == 0) continue;
                int v = pval(e.a.at(i, j), p);
                if (v < bv) { bv = v; bi = i; bj = j; }
            }
        if (bi < 0) break;
        if (bi != step) {
            for (int j = 0; j < cols; ++j) std::swap(e.a.at(step, j), e.a.at(bi, j));
            for (int j = 0; j < rows; ++j) std::swap(e.t.at(step, j), e.t.at(bi, j));
        }
        std::int64_t unit = e.a.at(step, bj) / ipow(p, bv);
        std::int64_t ui = invmod(posmod(unit, e.mod), e.mod);
        for (int j = 0; j < cols; ++j) e.a.at(step, j) = mulmod(e.a.at(step, j), ui, e.mod);
        for (int j = 0; j < rows; ++j) e.t.at(step, j) = mulmod(e.t.at(step, j), ui, e.mod);
        // a[step][bj] is now exactly p^bv mod p^N.
        for (int i = step + 1; i < rows; ++i) {
            if (e.a.at(i, bj) == 0) continue;
            std::int64_t q = e.a.at(i, bj) / ipow(p, bv);  // valuation >= bv by minimality
            for (int j = 0; j < cols; ++j)
                e.a.at(i, j) = posmod(e.a.at(i, j) - mulmod(q, e.a.at(step, j), e.mod), e.mod);
            for (int j = 0; j < rows; ++j)
                e.t.at(i, j) = posmod(e.t.at(i, j) - mulmod(q, e.t.at(step, j), e.mod), e.mod);
        }
        is_pivot_col[static_cast<size_t>(bj)] = true;
        e.pivot_col.push_back(bj);
        e.pivot_val.push_back(bv);
        ++step;
    }
    return e;
}

// Back-substitution in reverse step order with the given values fixed for
// non-pivot columns. Row k is frozen after its step, and all its entries off
// the earlier pivot columns have valuation >= v_k, so a failure here proves
// global infeasibility (the failing row index is reported).
std::optional<std::vector<std::int64_t>> back_substitute(const Elim& e,
                                                         const std::vector<std::int64_t>& rhs,
                                                         std::vector<std::int64_t> x,
                                                         int* fail_row = nullptr) {
    int r = static_cast<int>(e.pivot_col.size());
    for (int k = r - 1; k >= 0; --k) {
        std::int64_t acc = posmod(rhs[static_cast<size_t>(k)], e.mod);
        for (int j = 0; j < e.a.cols(); ++j) {
            if (j == e.pivot_col[static_cast<size_t>(k)]) continue;
            if (x[static_cast<size_t>(j)] == 0) continue;
            acc = posmod(acc - mulmod(e.a.at(k, j), x[static_cast<size_t>(j)], e.mod), e.mod);
        }
        int v = e.pivot_val[static_cast<size_t>(k)];
        if (acc == 0) continue;
        if (pval(acc, e.p) < v) {
            if (fail_row) *fail_row = k;
            return std::nullopt;
        }
        x[static_cast<size_t>(e.pivot_col[static_cast<size_t>(k)])] = acc / ipow(e.p, v);
    }
    return x;
}

IntMat kernel_from_elim(const Elim& e) {
    int cols = e.a.cols();
    int r = static_cast<int>(e.pivot_col.size());
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : e.pivot_col) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<std::int64_t>> gens;
    // Free-column generators: x_j = 1, pivots back-substituted.
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        std::vector<std::int64_t> x(static_cast<size_t>(cols), 0);
        x[static_cast<size_t>(j)] = 1;
        std::vector<std::int64_t> rhs(static_cast<size_t>(r), 0);
        auto sol = back_substitute(e, rhs, x);
        gens.push_back(*sol);  // homogeneous back-substitution cannot fail
    }
    // Pivot torsion generators: x_{c_k} = p^(N - v_k).
    for (int k = 0; k < r; ++k) {
        if (e.pivot_val[static_cast<size_t>(k)] == 0) continue;  // p^N == 0: trivial
        std::vector<std::int64_t> x(static_cast<size_t>(cols), 0);
        x[static_cast<size_t>(e.pivot_col[static_cast<size_t>(k)])] =
            ipow(e.p, e.n - e.pivot_val[static_cast<size_t>(k)]);
        // Only rows above k need adjusting; rows below have the pivot column cleared.
        std::vector<std::int64_t> rhs(static_cast<size_t>(r), 0);
        auto sol = back_substitute(e, rhs, x);
        gens.push_back(*sol);
    }
    IntMat out(cols, static_cast<int>(gens.size()));
    for (size_t g = 0; g < gens.size(); ++g)
        for (int i = 0; i < cols; ++i) out.at(i, static_cast<int>(g)) = gens[g][static_cast<size_t>(i)];
    return out;
}

}  // namespace

ModSolveResult solve_mod_pn(const IntMat& a, const std::vector<std::int64_t>& b,
                            std::int64_t p, int n) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_mod_pn: rhs size mismatch");
    Elim e = eliminate(a, p, n);
    int rows = a.rows();
    int r = static_cast<int>(e.pivot_col.size());

    // Transform the rhs.
    std::vector<std::int64_t> tb(static_cast<size_t>(rows), 0);
    for (int i = 0; i < rows; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < rows; ++j)
            acc = posmod(acc + mulmod(e.t.at(i, j), b[static_cast<size_t>(j)], e.mod), e.mod);
        tb[static_cast<size_t>(i)] = acc;
    }

    ModSolveResult res;
    // Zero rows must have zero rhs.
    for (int i = r; i < rows; ++i) {
        if (tb[static_cast<size_t>(i)] != 0) {
            Infeasibility inf;
            inf.u.resize(static_cast<size_t>(rows));
            for (int j = 0; j < rows; ++j) inf.u[static_cast<size_t>(j)] = e.t.at(i, j);
            inf.residual = tb[static_cast<size_t>(i)];
            res.infeasible = inf;
            res.kernel = kernel_from_elim(e);
            return res;
        }
    }
    std::vector<std::int64_t> x(static_cast<size_t>(a.cols()), 0);
    std::vector<std::int64_t> rhs(tb.begin(), tb.begin() + r);
    int fail_row = -1;
    auto sol = back_substitute(e, rhs, x, &fail_row);
    if (!sol) {
        int v = e.pivot_val[static_cast<size_t>(fail_row)];
        Infeasibility inf;
        inf.u.resize(static_cast<size_t>(rows));
        std::int64_t scale = ipow(p, n - v);
        for (int j = 0; j < rows; ++j)
            inf.u[static_cast<size_t>(j)] = mulmod(scale, e.t.at(fail_row, j), e.mod);
        std::int64_t acc = 0;
        for (int j = 0; j < rows; ++j)
            acc = posmod(acc + mulmod(inf.u[static_cast<size_t>(j)], b[static_cast<size_t>(j)], e.mod), e.mod);
        inf.residual = acc;
        res.infeasible = inf;
        res.kernel = kernel_from_elim(e);
        return res;
    }
    res.solvable = true;
    res.particular = *sol;
    res.kernel = kernel_from_elim(e);
    return res;
}

IntMat kernel_mod_pn(const IntMat& a, std::int64_t p, int n) {
    Elim e = eliminate(a, p, n);
    return kernel_from_elim(e);
}

std::vector<std::vector<std::int64_t>> enumerate_solutions_mod_pn(
    const IntMat& a, const std::vector<std::int64_t>& b, std::int64_t p, int n,
    std::size_t cap) {
    auto res = solve_mod_pn(a, b, p, n);
    std::vector<std::vector<std::int64_t>> out;
    if (!res.solvable) return out;
    std::int64_t mod = ipow(p, n);

    // Order of each kernel generator (index of first multiple that vanishes).
    std::vector<std::int64_t> orders;
    for (int g = 0; g < res.kernel.cols(); ++g) {
        std::int64_t ord = 1;
        while (true) {
            bool zero = true;
            for (int i = 0; i < res.kernel.rows(); ++i)
                if (mulmod(ord, res.kernel.at(i, g), mod) != 0) { zero = false; break; }
            if (zero) break;
            ord = checked_mul(ord, p);
        }
        orders.push_back(ord);
    }
    std::size_t total = 1;
    for (auto o : orders) {
        total *= static_cast<std::size_t>(o);
        if (total > cap) throw EnumerationCap("solution set exceeds enumeration cap");
    }
    std::vector<std::int64_t> coef(orders.size(), 0);
    while (true) {
        std::vector<std::int64_t> x = res.particular;
        for (size_t g = 0; g < coef.size(); ++g) {
            if (coef[g] == 0) continue;
            for (int i = 0; i < res.kernel.rows(); ++i)
                x[static_cast<size_t>(i)] =
                    posmod(x[static_cast<size_t>(i)] + mulmod(coef[g], res.kernel.at(i, static_cast<int>(g)), mod), mod);
        }
        out.push_back(std::move(x));
        int g = static_cast<int>(coef.size()) - 1;
        for (; g >= 0; --g) {
            if (++coef[static_cast<size_t>(g)] < orders[static_cast<size_t>(g)]) break;
            coef[static_cast<size_t>(g)] = 0;
        }
        if (g < 0) break;
    }
    return out;
}

}  // namespace plcg
