#include "plcg/torus.hpp"

#include <algorithm>
#include <sstream>

#include "plcg/intmat.hpp"

namespace plcg {

namespace {

constexpr int kMaxExp = 48;  // hard cap on denominator exponents

void check_prime(std::int64_t p) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
}

TorusCoord make_coord(std::int64_t p, std::int64_t num, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > kMaxExp) throw LevelError("torus coordinate exponent exceeds cap");
    std::int64_t den = ipow(p, exp);
    num = posmod(num, den);
    while (exp > 0 && num % p == 0) {
        num /= p;
        den /= p;
        --exp;
    }
    if (num == 0) exp = 0;
    return TorusCoord{num, exp};
}

}  // namespace

std::int64_t invmod(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, newt = 1, r = m, newr = posmod(a, m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("invmod: not invertible");
    return posmod(t, m);
}

TorusElement::TorusElement(std::int64_t p, int rank) : p_(p), coords_(static_cast<size_t>(rank)) {
    check_prime(p);
}

TorusElement::TorusElement(std::int64_t p, std::vector<TorusCoord> coords)
    : p_(p), coords_(std::move(coords)) {
    check_prime(p);
    for (auto& c : coords_) {
        auto r = make_coord(p_, c.num, c.exp);
        c = r;
    }
}

TorusElement TorusElement::parse(std::int64_t p, const std::vector<std::string>& strs) {
    std::vector<TorusCoord> cs;
    cs.reserve(strs.size());
    for (const auto& s : strs) {
        auto slash = s.find('/');
        std::int64_t num = 0, den = 1;
        if (slash == std::string::npos) {
            num = std::stoll(s);
        } else {
            num = std::stoll(s.substr(0, slash));
            den = std::stoll(s.substr(slash + 1));
        }
        if (den <= 0) throw ValidationError("torus coordinate: nonpositive denominator");
        int exp = 0;
        std::int64_t d = den;
        while (d % p == 0) { d /= p; ++exp; }
        if (d != 1)
            throw ValidationError("torus coordinate denominator is not a power of p: " + s);
        cs.push_back(make_coord(p, num, exp));
    }
    return TorusElement(p, std::move(cs));
}

bool TorusElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const TorusCoord& c) { return c.num == 0; });
}

TorusElement TorusElement::add(const TorusElement& o) const {
    if (p_ != o.p_ || coords_.size() != o.coords_.size())
        throw std::invalid_argument("torus add: mismatched shape");
    std::vector<TorusCoord> out(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) {
        int e = std::max(coords_[i].exp, o.coords_[i].exp);
        std::int64_t num = checked_add(
            checked_mul(coords_[i].num, ipow(p_, e - coords_[i].exp)),
            checked_mul(o.coords_[i].num, ipow(p_, e - o.coords_[i].exp)));
        out[i] = make_coord(p_, num, e);
    }
    return TorusElement(p_, std::move(out));
}

TorusElement TorusElement::neg() const {
    std::vector<TorusCoord> out(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i)
        out[i] = make_coord(p_, -coords_[i].num, coords_[i].exp);
    return TorusElement(p_, std::move(out));
}

TorusElement TorusElement::scaled(std::int64_t n) const {
    std::vector<TorusCoord> out(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) {
        std::int64_t den = ipow(p_, coords_[i].exp);
        out[i] = make_coord(p_, mulmod(n, coords_[i].num, den), coords_[i].exp);
    }
    return TorusElement(p_, std::move(out));
}

TorusElement TorusElement::apply(const IntMat& m) const {
    if (m.cols() != rank()) throw std::invalid_argument("matrix/torus rank mismatch");
    // Work at the common level so the sum is exact.
    int e = order_exponent();
    std::int64_t den = ipow(p_, e);
    std::vector<TorusCoord> out(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        std::int64_t acc = 0;
        for (int c = 0; c < rank(); ++c) {
            std::int64_t lifted = checked_mul(coords_[static_cast<size_t>(c)].num,
                                              ipow(p_, e - coords_[static_cast<size_t>(c)].exp));
            acc = posmod(checked_add(acc, mulmod(m.at(r, c), lifted, den)), den);
        }
        out[static_cast<size_t>(r)] = make_coord(p_, acc, e);
    }
    return TorusElement(p_, std::move(out));
}

int TorusElement::order_exponent() const {
    int e = 0;
    for (const auto& c : coords_) e = std::max(e, c.exp);
    return e;
}

TorusElement TorusElement::divided_by_ppower(int m) const {
    std::vector<TorusCoord> out(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].num == 0 && coords_[i].exp == 0) {
            out[i] = TorusCoord{0, 0};
            continue;
        }
        out[i] = make_coord(p_, coords_[i].num, coords_[i].exp + m);
    }
    return TorusElement(p_, std::move(out));
}

std::vector<std::string> TorusElement::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
        if (c.num == 0)
            out.push_back("0");
        else
            out.push_back(std::to_string(c.num) + "/" + std::to_string(ipow(p_, c.exp)));
    }
    return out;
}

std::string TorusElement::str() const {
    std::ostringstream os;
    os << "(";
    auto ss = to_strings();
    for (size_t i = 0; i < ss.size(); ++i) os << (i ? "," : "") << ss[i];
    os << ")";
    return os.str();
}

PAdicUnitApprox::PAdicUnitApprox(std::int64_t p, int precision, std::int64_t residue)
    : p_(p), precision_(precision) {
    check_prime(p);
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    std::int64_t mod = ipow(p, precision);
    residue_ = posmod(residue, mod);
    if (residue_ % p == 0) throw ValidationError("p-adic unit residue divisible by p");
}

PAdicUnitApprox PAdicUnitApprox::one(std::int64_t p, int precision) {
    return PAdicUnitApprox(p, precision, 1);
}

PAdicUnitApprox PAdicUnitApprox::parse(std::int64_t p, int precision, const std::string& s) {
    // Either a decimal integer or the congruence form "1+a*p^m".
    auto plus = s.find('+');
    auto star = s.find('*');
    auto caret = s.find('^');
    if (plus != std::string::npos && star != std::string::npos && caret != std::string::npos) {
        std::int64_t head = std::stoll(s.substr(0, plus));
        std::int64_t a = std::stoll(s.substr(plus + 1, star - plus - 1));
        std::int64_t base = std::stoll(s.substr(star + 1, caret - star - 1));
        int m = std::stoi(s.substr(caret + 1));
        if (base != p) throw ValidationError("zeta congruence form uses a different prime");
        return PAdicUnitApprox(p, precision, checked_add(head, checked_mul(a, ipow(p, m))));
    }
    return PAdicUnitApprox(p, precision, std::stoll(s));
}

PAdicUnitApprox PAdicUnitApprox::mul(const PAdicUnitApprox& o) const {
    if (p_ != o.p_ || precision_ != o.precision_)
        throw PrecisionError("p-adic unit multiply: precision mismatch");
    return PAdicUnitApprox(p_, precision_, mulmod(residue_, o.residue_, ipow(p_, precision_)));
}

PAdicUnitApprox PAdicUnitApprox::inv() const {
    return PAdicUnitApprox(p_, precision_, invmod(residue_, ipow(p_, precision_)));
}

PAdicUnitApprox PAdicUnitApprox::pow(std::int64_t e) const {
    std::int64_t mod = ipow(p_, precision_);
    std::int64_t base = e < 0 ? invmod(residue_, mod) : residue_;
    std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    std::int64_t acc = 1;
    while (k) {
        if (k & 1) acc = mulmod(acc, base, mod);
        base = mulmod(base, base, mod);
        k >>= 1;
    }
    return PAdicUnitApprox(p_, precision_, acc);
}

PAdicUnitApprox PAdicUnitApprox::truncated(int precision) const {
    if (precision > precision_)
        throw PrecisionError("cannot raise p-adic precision by truncation");
    return PAdicUnitApprox(p_, precision, posmod(residue_, ipow(p_, precision)));
}

ValuationResult valuation_gamma(const PAdicUnitApprox& zeta,
                                const PAdicUnitApprox& zeta_prime, int m) {
    if (zeta.prime() != zeta_prime.prime() || zeta.precision() != zeta_prime.precision())
        throw PrecisionError("valuation_gamma: approximations do not share p and N");
    if (m < 0) throw std::invalid_argument("valuation_gamma: m < 0");
    if (m >= zeta.precision())
        throw PrecisionError("valuation_gamma: m >= precision, insufficient precision to decide");
    std::int64_t diff = posmod(zeta.residue() - zeta_prime.residue(),
                               ipow(zeta.prime(), zeta.precision()));
    ValuationResult r;
    if (diff == 0) {
        r.nu = std::nullopt;  // >= N
        r.member = true;
        return r;
    }
    r.nu = pval(diff, zeta.prime());
    r.member = *r.nu >= m;
    return r;
}

bool in_gamma_m(const PAdicUnitApprox& zeta, int m) {
    if (m == 0) return true;
    return valuation_gamma(zeta, PAdicUnitApprox::one(zeta.prime(), zeta.precision()), m).member;
}

std::optional<int> one_minus_valuation(const PAdicUnitApprox& zeta) {
    std::int64_t diff =
        posmod(zeta.residue() - 1, ipow(zeta.prime(), zeta.precision()));
    if (diff == 0) return std::nullopt;
    return pval(diff, zeta.prime());
}

UnitTimesPPower split_one_minus(const PAdicUnitApprox& zeta) {
    std::int64_t mod = ipow(zeta.prime(), zeta.precision());
    std::int64_t diff = posmod(1 - zeta.residue(), mod);
    if (diff == 0)
        throw PrecisionError("split_one_minus: zeta = 1 at working precision");
    int m = pval(diff, zeta.prime());
    UnitTimesPPower r;
    r.m = m;
    r.unit = PAdicUnitApprox(zeta.prime(), zeta.precision() - m, diff / ipow(zeta.prime(), m));
    return r;
}

TorusElement power_map(const TorusElement& t, const PAdicUnitApprox& zeta) {
    if (t.prime() != zeta.prime()) throw std::invalid_argument("power_map: prime mismatch");
    if (zeta.precision() < t.order_exponent())
        throw PrecisionError("power_map: precision below log_p(ord t)");
    return t.scaled(zeta.residue());
}

PPower element_order(const TorusElement& t) {
    return PPower{t.prime(), t.order_exponent()};
}

TorusElement solve_root(const TorusElement& t, int m, const PAdicUnitApprox& unit) {
    if (m < 0) throw std::invalid_argument("solve_root: negative p-power exponent");
    if (unit.prime() != t.prime()) throw std::invalid_argument("solve_root: prime mismatch");
    if (unit.precision() < t.order_exponent())
        throw PrecisionError("solve_root: unit precision below log_p(ord t)");
    TorusElement divided = t.scaled(unit.inv().residue());
    return divided.divided_by_ppower(m);
}

std::vector<TorusElement> all_roots(const TorusElement& t, int m,
                                    const PAdicUnitApprox& unit) {
    TorusElement canonical = solve_root(t, m, unit);
    std::vector<TorusElement> out;
    for (const auto& tor : enumerate_torus_level(t.prime(), t.rank(), m))
        out.push_back(canonical.add(tor));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TorusElement> enumerate_torus_level(std::int64_t p, int rank, int level) {
    std::int64_t den = ipow(p, level);
    std::vector<TorusElement> out;
    std::vector<std::int64_t> idx(static_cast<size_t>(rank), 0);
    while (true) {
        std::vector<TorusCoord> cs(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) cs[static_cast<size_t>(i)] = make_coord(p, idx[static_cast<size_t>(i)], level);
        out.emplace_back(p, std::move(cs));
        int i = rank - 1;
        for (; i >= 0; --i) {
            if (++idx[static_cast<size_t>(i)] < den) break;
            idx[static_cast<size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    if (rank == 0) out.resize(1, TorusElement(p, 0));
    return out;
}

}  // namespace plcg
