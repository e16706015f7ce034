#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plcg/util.hpp"

namespace plcg {

/// Finite p-group of components, given by an explicit multiplication table.
/// Elements are indices 0..order-1 with 0 the identity. Validated on load:
/// associativity, identity, inverses, p-power order.
class ComponentGroup {
  public:
    ComponentGroup() = default;
    ComponentGroup(std::int64_t p, std::vector<std::vector<int>> table);

    static ComponentGroup trivial(std::int64_t p);
    static ComponentGroup cyclic(std::int64_t p, int order);
    static ComponentGroup direct_product(const ComponentGroup& a, const ComponentGroup& b);
    static ComponentGroup dihedral8();  // <r, s | r^4, s^2, srs = r^-1>, p = 2

    std::int64_t prime() const { return p_; }
    int order() const { return n_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    /// Order of the element (a p-power).
    int element_order(int a) const;
    int pow(int a, std::int64_t e) const;

    const std::vector<int>& table_flat() const { return table_; }
    std::vector<std::vector<int>> table_rows() const;

    /// All subgroups as sorted element lists (exhaustive closure search).
    std::vector<std::vector<int>> subgroups() const;
    /// All automorphisms as permutation vectors (image indexed by element).
    /// Brute force from a minimal generating set; guarded by `cap` candidates.
    std::vector<std::vector<int>> automorphisms(std::size_t cap = 1u << 22) const;
    /// A small generating set (greedy).
    std::vector<int> generating_set() const;

    bool operator==(const ComponentGroup&) const = default;

  private:
    std::int64_t p_ = 2;
    int n_ = 1;
    std::vector<int> table_;
    std::vector<int> inverse_;

    void validate() const;
};

/// Closure of a subset under multiplication (indices).
std::vector<int> subgroup_closure(const ComponentGroup& g, std::vector<int> gens);

}  // namespace plcg
