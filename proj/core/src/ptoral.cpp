#include "plcg/ptoral.hpp"

#include <algorithm>
#include <sstream>

namespace plcg {

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "(" << t.str() << ", x" << x << ")";
    return os.str();
}

PToralGroup::PToralGroup(std::int64_t p, int rank, int level, ComponentGroup gamma,
                         std::vector<IntMat> action,
                         std::vector<std::vector<TorusElement>> cocycle)
    : p_(p), rank_(rank), level_(level), gamma_(std::move(gamma)),
      action_(std::move(action)), cocycle_(std::move(cocycle)) {
    if (p_ != gamma_.prime()) throw ValidationError("group/component prime mismatch");
    if (rank_ < 0) throw ValidationError("negative rank");
    if (level_ < 1) throw ValidationError("working level must be >= 1");
    int n = gamma_.order();
    if (static_cast<int>(action_.size()) != n)
        throw ValidationError("action list size != |Gamma|");
    for (const auto& m : action_)
        if (m.rows() != rank_ || m.cols() != rank_)
            throw ValidationError("action matrix has wrong shape");
    if (static_cast<int>(cocycle_.size()) != n)
        throw ValidationError("cocycle table size != |Gamma|");
    for (auto& row : cocycle_) {
        if (static_cast<int>(row.size()) != n) throw ValidationError("cocycle table is ragged");
        for (auto& v : row) {
            if (v.prime() != p_ || v.rank() != rank_)
                throw ValidationError("cocycle value has wrong shape");
            cocycle_level_ = std::max(cocycle_level_, v.order_exponent());
        }
    }
}

PToralGroup PToralGroup::split(std::int64_t p, int rank, int level, ComponentGroup gamma,
                               std::vector<IntMat> action) {
    int n = gamma.order();
    std::vector<std::vector<TorusElement>> cocycle(
        static_cast<size_t>(n), std::vector<TorusElement>(static_cast<size_t>(n), TorusElement(p, rank)));
    return PToralGroup(p, rank, level, std::move(gamma), std::move(action), std::move(cocycle));
}

void PToralGroup::check_parent(const GroupElement& g, const char* op) const {
    if (g.parent != nullptr && g.parent != this)
        throw ValidationError(std::string(op) + ": element belongs to a different group");
    if (g.t.prime() != p_ || g.t.rank() != rank_ || g.x < 0 || g.x >= gamma_.order())
        throw ValidationError(std::string(op) + ": malformed element");
}

GroupElement PToralGroup::identity() const { return make(zero(), 0); }

GroupElement PToralGroup::make(TorusElement t, int x) const {
    if (t.prime() != p_ || t.rank() != rank_) throw ValidationError("make: torus shape mismatch");
    if (x < 0 || x >= gamma_.order()) throw ValidationError("make: component out of range");
    return GroupElement{std::move(t), x, this};
}

GroupElement PToralGroup::mul(const GroupElement& a, const GroupElement& b) const {
    check_parent(a, "mul");
    check_parent(b, "mul");
    TorusElement t = a.t.add(b.t.apply(act(a.x))).add(delta(a.x, b.x));
    return GroupElement{std::move(t), gamma_.mul(a.x, b.x), this};
}

GroupElement PToralGroup::inv(const GroupElement& a) const {
    check_parent(a, "inv");
    int xi = gamma_.inv(a.x);
    TorusElement s = a.t.add(delta(a.x, xi)).neg().apply(act(xi));
    return GroupElement{std::move(s), xi, this};
}

GroupElement PToralGroup::power(const GroupElement& a, std::int64_t e) const {
    check_parent(a, "power");
    if (e < 0) return power(inv(a), -e);
    GroupElement acc = identity();
    GroupElement base = a;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

GroupElement PToralGroup::conj(const GroupElement& g, const GroupElement& h) const {
    return mul(mul(g, h), inv(g));
}

TorusElement PToralGroup::theta(const GroupElement& g, const Section* sigma) const {
    check_parent(g, "theta");
    GroupElement sx = sigma ? (*sigma)(g.x) : make(zero(), g.x);
    GroupElement r = mul(g, inv(sx));
    if (r.x != 0) throw ValidationError("theta: section does not project correctly");
    return r.t;
}

PPower PToralGroup::element_order(const GroupElement& g) const {
    check_parent(g, "element_order");
    int a = 0;
    GroupElement h = g;
    // Raise to the p-th power until the component dies; every component order
    // is a p-power.
    while (h.x != 0) {
        h = power(h, p_);
        ++a;
        if (a > 64) throw LevelError("element_order: component order runaway");
    }
    return PPower{p_, a + h.t.order_exponent()};
}

Section PToralGroup::canonical_section() const {
    Section s;
    s.images.reserve(static_cast<size_t>(gamma_.order()));
    for (int x = 0; x < gamma_.order(); ++x) s.images.push_back(make(zero(), x));
    return s;
}

TorusElement PToralGroup::section_cocycle(const Section& s, int x, int y) const {
    GroupElement v = mul(mul(s(x), s(y)), inv(s(gamma_.mul(x, y))));
    if (v.x != 0) throw ValidationError("section cocycle has nontrivial component");
    return v.t;
}

ValidationReport PToralGroup::validate_section(const Section& s) const {
    ValidationReport rep;
    if (static_cast<int>(s.images.size()) != gamma_.order()) {
        rep.fail("section: wrong number of images");
        return rep;
    }
    for (int x = 0; x < gamma_.order(); ++x)
        if (s(x).x != x) rep.fail("section: image of x" + std::to_string(x) + " has wrong component");
    if (!(s(0) == identity())) rep.fail("section: sigma(1) != 1");
    return rep;
}

std::vector<GroupElement> PToralGroup::enumerate_level(int n) const {
    auto torus = enumerate_torus_level(p_, rank_, n);
    std::vector<GroupElement> out;
    out.reserve(torus.size() * static_cast<size_t>(gamma_.order()));
    for (int x = 0; x < gamma_.order(); ++x)
        for (const auto& t : torus) out.push_back(GroupElement{t, x, this});
    return out;
}

ValidationReport PToralGroup::validate_presentation() const {
    ValidationReport rep;
    int n = gamma_.order();
    // Action is a representation by exact integer matrices.
    if (!action_[0].is_identity()) rep.fail("action: A_1 is not the identity matrix");
    for (int x = 0; x < n && rep.ok(); ++x)
        for (int y = 0; y < n; ++y) {
            if (!(act(x).mul(act(y)) == act(gamma_.mul(x, y)))) {
                rep.fail("action: A_x*A_y != A_xy at (x" + std::to_string(x) + ",x" +
                         std::to_string(y) + ")");
                break;
            }
        }
    if (rank_ > 0)
        for (int x = 0; x < n; ++x) {
            std::int64_t d = act(x).det();
            if (posmod(d, p_) == 0) {
                rep.fail("action: A_x singular mod p at x" + std::to_string(x));
                break;
            }
        }
    // Cocycle normalized.
    for (int x = 0; x < n; ++x)
        if (!delta(x, 0).is_zero() || !delta(0, x).is_zero()) {
            rep.fail("cocycle: not normalized at x" + std::to_string(x));
            break;
        }
    // 2-cocycle identity x.d(y,z) - d(xy,z) + d(x,yz) - d(x,y) = 0.
    bool cocycle_ok = true;
    for (int x = 0; x < n && cocycle_ok; ++x)
        for (int y = 0; y < n && cocycle_ok; ++y)
            for (int z = 0; z < n; ++z) {
                TorusElement lhs = delta(y, z).apply(act(x))
                                       .sub(delta(gamma_.mul(x, y), z))
                                       .add(delta(x, gamma_.mul(y, z)))
                                       .sub(delta(x, y));
                if (!lhs.is_zero()) {
                    rep.fail("cocycle identity fails at (x" + std::to_string(x) + ",x" +
                             std::to_string(y) + ",x" + std::to_string(z) + ")");
                    cocycle_ok = false;
                    break;
                }
            }
    if (level_ < cocycle_level_)
        rep.fail("working level " + std::to_string(level_) + " below cocycle level " +
                 std::to_string(cocycle_level_));
    return rep;
}

bool PToralGroup::same_presentation(const PToralGroup& o) const {
    return p_ == o.p_ && rank_ == o.rank_ && gamma_ == o.gamma_ && action_ == o.action_ &&
           cocycle_ == o.cocycle_;
}

}  // namespace plcg
