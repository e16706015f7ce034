#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "plcg/intmat.hpp"
#include "plcg/table_group.hpp"
#include "plcg/torus.hpp"
#include "plcg/util.hpp"

namespace plcg {

class PToralGroup;

/// Element (t, x) of a discrete p-toral group presented as an extension of
/// the component group by the torus. Product law:
///   (t1, x1)(t2, x2) = (t1 + A_{x1} t2 + delta(x1, x2), x1 x2).
struct GroupElement {
    TorusElement t;
    int x = 0;
    const PToralGroup* parent = nullptr;

    bool operator==(const GroupElement& o) const { return x == o.x && t == o.t; }
    bool operator<(const GroupElement& o) const {
        if (x != o.x) return x < o.x;
        return t < o.t;
    }
    std::string str() const;
};

/// Set-theoretic section of the projection S -> Gamma: one element per
/// component, images[0] the identity. The derived cocycle is
/// sigma(x) sigma(y) sigma(xy)^-1, always a torus value.
struct Section {
    std::vector<GroupElement> images;

    const GroupElement& operator()(int x) const { return images[static_cast<size_t>(x)]; }
};

/// Discrete p-toral group S = S_0 . Gamma given by (component group, integer
/// matrix action, normalized 2-cocycle). Immutable after construction; all
/// operations are pure.
class PToralGroup {
  public:
    PToralGroup(std::int64_t p, int rank, int level, ComponentGroup gamma,
                std::vector<IntMat> action,
                std::vector<std::vector<TorusElement>> cocycle);

    /// Convenience: split extension (zero cocycle).
    static PToralGroup split(std::int64_t p, int rank, int level, ComponentGroup gamma,
                             std::vector<IntMat> action);

    std::int64_t prime() const { return p_; }
    int rank() const { return rank_; }
    int level() const { return level_; }
    const ComponentGroup& gamma() const { return gamma_; }
    const IntMat& act(int x) const { return action_[static_cast<size_t>(x)]; }
    const TorusElement& delta(int x, int y) const {
        return cocycle_[static_cast<size_t>(x)][static_cast<size_t>(y)];
    }
    /// Max log_p order over cocycle values.
    int cocycle_level() const { return cocycle_level_; }

    GroupElement identity() const;
    GroupElement make(TorusElement t, int x) const;
    GroupElement torus_elt(const TorusElement& t) const { return make(t, 0); }
    TorusElement zero() const { return TorusElement(p_, rank_); }

    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, std::int64_t e) const;
    /// g h g^-1.
    GroupElement conj(const GroupElement& g, const GroupElement& h) const;

    /// Torus part of g relative to the section (canonical section when null):
    /// g = theta(g) . sigma(gbar) exactly.
    TorusElement theta(const GroupElement& g, const Section* sigma = nullptr) const;

    PPower element_order(const GroupElement& g) const;

    Section canonical_section() const;
    /// sigma(x) sigma(y) sigma(xy)^-1; throws if the section is malformed.
    TorusElement section_cocycle(const Section& s, int x, int y) const;
    /// Component check + identity normalization for a section.
    ValidationReport validate_section(const Section& s) const;

    /// The finite truncation S[level n]: all (t, x) with t of level <= n.
    /// A subgroup of S whenever n >= cocycle_level().
    std::vector<GroupElement> enumerate_level(int n) const;

    /// Structural invariants: action is a representation, cocycle normalized
    /// and closed, level adequate. Witnesses for the first failures.
    ValidationReport validate_presentation() const;

    bool same_presentation(const PToralGroup& o) const;

  private:
    std::int64_t p_;
    int rank_;
    int level_;
    ComponentGroup gamma_;
    std::vector<IntMat> action_;
    std::vector<std::vector<TorusElement>> cocycle_;
    int cocycle_level_ = 0;

    void check_parent(const GroupElement& g, const char* op) const;
};

}  // namespace plcg
