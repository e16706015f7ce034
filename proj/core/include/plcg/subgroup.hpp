#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plcg/intmat.hpp"
#include "plcg/ptoral.hpp"

namespace plcg {

/// Divisible subgroup of the ambient torus. Held as a saturated integer
/// lattice basis (columns, in column HNF) together with its integer
/// annihilator; membership and inclusion tests are exact.
class Subtorus {
  public:
    Subtorus() = default;
    /// Divisible span of the given integer columns (saturated internally).
    Subtorus(std::int64_t p, int ambient, const IntMat& generators);
    static Subtorus zero(std::int64_t p, int ambient);
    static Subtorus full(std::int64_t p, int ambient);

    std::int64_t prime() const { return p_; }
    int ambient() const { return ambient_; }
    int rank() const { return basis_.cols(); }
    const IntMat& basis() const { return basis_; }
    /// Integer rows annihilating the basis; t belongs to the subtorus iff
    /// ann * (numerators of t at its level) = 0 mod p^level.
    const IntMat& annihilator() const { return ann_; }

    bool contains(const TorusElement& t) const;
    bool contains(const Subtorus& o) const;
    bool operator==(const Subtorus& o) const { return basis_ == o.basis_; }

    /// Image under an integer matrix invertible over Z_(p).
    Subtorus apply(const IntMat& a) const;
    Subtorus join(const Subtorus& o) const;
    Subtorus intersect(const Subtorus& o) const;

    /// All p^(n*rank) points of the subtorus of level <= n.
    std::vector<TorusElement> enumerate_level(int n) const;

    std::string key() const;

  private:
    std::int64_t p_ = 2;
    int ambient_ = 0;
    IntMat basis_;
    IntMat ann_;

    void rebuild(const IntMat& generators);
};

/// Subgroup P <= S: identity component (a subtorus of S_0) plus one coset
/// representative per component of P. comps[0] is the identity; every rep is
/// reduced modulo the identity component at the working level.
class SubgroupDescriptor {
  public:
    SubgroupDescriptor() = default;
    SubgroupDescriptor(const PToralGroup& g, Subtorus torus_part,
                       std::vector<GroupElement> comps);

    static SubgroupDescriptor whole_group(const PToralGroup& g);
    static SubgroupDescriptor maximal_torus(const PToralGroup& g);
    static SubgroupDescriptor trivial(const PToralGroup& g);
    /// Finite subgroup generated by the given elements (closure under the
    /// group law, capped). The divisible part of a finitely generated
    /// subgroup is trivial.
    static SubgroupDescriptor from_generators(const PToralGroup& g,
                                              const std::vector<GroupElement>& gens,
                                              std::size_t cap = 1u << 18);
    /// Partition an explicit finite element set into cosets of the given
    /// divisible part. The set must be closed at its level.
    static SubgroupDescriptor from_elements(const PToralGroup& g, Subtorus torus_part,
                                            const std::vector<GroupElement>& elements);

    const PToralGroup& group() const { return *group_; }
    const Subtorus& torus_part() const { return torus_; }
    const std::vector<GroupElement>& comps() const { return comps_; }
    int num_components() const { return static_cast<int>(comps_.size()); }

    bool contains(const GroupElement& g) const;
    bool contains(const SubgroupDescriptor& o) const;
    /// Decompose g = (tau, 1) * comps[i] with tau in the torus part.
    std::optional<std::pair<TorusElement, int>> decompose(const GroupElement& g) const;

    bool operator==(const SubgroupDescriptor& o) const {
        return torus_ == o.torus_ && comps_ == o.comps_;
    }
    bool operator<(const SubgroupDescriptor& o) const { return key() < o.key(); }
    std::string key() const;

    std::vector<GroupElement> enumerate_level(int n) const;
    /// Elements generating P at level n: subtorus generators at level n plus
    /// the component representatives.
    std::vector<GroupElement> generators_level(int n) const;

    SubgroupDescriptor conjugate(const GroupElement& g) const;
    bool is_whole_group() const;
    /// Max torus level appearing in the component representatives.
    int comp_level() const;

    /// Exact structural checks: identity rep, distinct cosets, closure under
    /// product and inverse, subtorus stable under component conjugation.
    ValidationReport validate() const;

  private:
    const PToralGroup* group_ = nullptr;
    Subtorus torus_;
    std::vector<GroupElement> comps_;

    GroupElement reduce_rep(const GroupElement& g) const;
    void canonicalize();
};

/// N_S(P,Q) as a finite family of cosets g * C_S(P).
struct TransporterFamily {
    std::vector<GroupElement> reps;
    SubgroupDescriptor centralizer;  // C_S(P)

    bool empty() const { return reps.empty(); }
};

/// C_S(P), with exact divisible part and level-(n, n+1) stability check.
SubgroupDescriptor centralizer(const PToralGroup& g, const SubgroupDescriptor& p, int level);
/// Z(P) = C_S(P) intersected with P.
SubgroupDescriptor center(const PToralGroup& g, const SubgroupDescriptor& p, int level);
/// N_S(P).
SubgroupDescriptor normalizer(const PToralGroup& g, const SubgroupDescriptor& p, int level);
/// N_S(P,Q) = {g : g P g^-1 <= Q} as cosets of C_S(P). Throws LevelError when
/// the family is unstable between levels (infinite or level too low).
TransporterFamily transporter(const PToralGroup& g, const SubgroupDescriptor& p,
                              const SubgroupDescriptor& q, int level);

/// Orbit partition of the given subgroups under S-conjugacy, using
/// conjugators of level `level`+1 with a stability check at +2. Returns one
/// sorted index list per class; within a class the first index is the
/// lexicographically minimal descriptor key.
std::vector<std::vector<int>> s_conjugacy_classes(const PToralGroup& g,
                                                  const std::vector<SubgroupDescriptor>& subs,
                                                  int level);

/// Search for an S-conjugator at the given level: some s with s P s^-1 == Q.
std::optional<GroupElement> find_conjugator(const PToralGroup& g, const SubgroupDescriptor& p,
                                            const SubgroupDescriptor& q, int level);

}  // namespace plcg
