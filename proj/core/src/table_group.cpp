#include "plcg/table_group.hpp"

#include <algorithm>
#include <set>

namespace plcg {

ComponentGroup::ComponentGroup(std::int64_t p, std::vector<std::vector<int>> table) : p_(p) {
    n_ = static_cast<int>(table.size());
    if (n_ == 0) throw ValidationError("component group: empty table");
    table_.resize(static_cast<size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(table[static_cast<size_t>(i)].size()) != n_)
            throw ValidationError("component group: ragged table");
        for (int j = 0; j < n_; ++j) {
            int v = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v < 0 || v >= n_) throw ValidationError("component group: index out of range");
            table_[static_cast<size_t>(i) * n_ + j] = v;
        }
    }
    validate();
}

void ComponentGroup::validate() const {
    // Order must be a p-power.
    int m = n_;
    while (m % p_ == 0) m = static_cast<int>(m / p_);
    if (m != 1) throw ValidationError("component group order is not a power of p");
    // Identity.
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw ValidationError("component group: element 0 is not an identity");
    // Inverses (also fills the table).
    auto* self = const_cast<ComponentGroup*>(this);
    self->inverse_.assign(static_cast<size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                self->inverse_[static_cast<size_t>(a)] = b;
                break;
            }
        if (inverse_[static_cast<size_t>(a)] < 0)
            throw ValidationError("component group: element without inverse: " + std::to_string(a));
    }
    // Associativity.
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ValidationError("component group: associativity fails at (" +
                                          std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
}

ComponentGroup ComponentGroup::trivial(std::int64_t p) {
    return ComponentGroup(p, {{0}});
}

ComponentGroup ComponentGroup::cyclic(std::int64_t p, int order) {
    std::vector<std::vector<int>> t(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % order;
    return ComponentGroup(p, t);
}

ComponentGroup ComponentGroup::direct_product(const ComponentGroup& a, const ComponentGroup& b) {
    if (a.prime() != b.prime()) throw ValidationError("direct product: prime mismatch");
    int n = a.order() * b.order();
    auto enc = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[static_cast<size_t>(enc(x1, y1))][static_cast<size_t>(enc(x2, y2))] =
                        enc(a.mul(x1, x2), b.mul(y1, y2));
    return ComponentGroup(a.prime(), t);
}

ComponentGroup ComponentGroup::dihedral8() {
    // Elements r^i s^e encoded as i + 4e; (r^i s^e)(r^j s^f) = r^(i + j or i - j) s^(e xor f).
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    auto enc = [](int i, int e) { return (i & 3) + 4 * (e & 1); };
    for (int i = 0; i < 4; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < 4; ++j)
                for (int f = 0; f < 2; ++f)
                    t[static_cast<size_t>(enc(i, e))][static_cast<size_t>(enc(j, f))] =
                        enc(e ? i - j : i + j, e ^ f);
    return ComponentGroup(2, t);
}

int ComponentGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int ComponentGroup::pow(int a, std::int64_t e) const {
    int ord = element_order(a);
    e = posmod(e, ord);
    int r = 0;
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::vector<std::vector<int>> ComponentGroup::table_rows() const {
    std::vector<std::vector<int>> t(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = mul(i, j);
    return t;
}

std::vector<int> subgroup_closure(const ComponentGroup& g, std::vector<int> gens) {
    std::set<int> h{g.identity()};
    std::vector<int> frontier{g.identity()};
    gens.push_back(g.identity());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(h.begin(), h.end());
        for (int a : cur)
            for (int b : gens) {
                if (h.insert(g.mul(a, b)).second) grew = true;
                if (h.insert(g.mul(b, a)).second) grew = true;
            }
        // Also close under products of existing members (gens may not suffice
        // when starting sets are not generator-only).
        for (int a : cur)
            for (int b : cur)
                if (h.insert(g.mul(a, b)).second) grew = true;
    }
    return {h.begin(), h.end()};
}

std::vector<std::vector<int>> ComponentGroup::subgroups() const {
    std::set<std::vector<int>> found;
    found.insert({0});
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = found;
        for (const auto& h : snapshot) {
            for (int g = 0; g < n_; ++g) {
                if (std::binary_search(h.begin(), h.end(), g)) continue;
                std::vector<int> gens = h;
                gens.push_back(g);
                auto closed = subgroup_closure(*this, gens);
                if (found.insert(closed).second) grew = true;
            }
        }
    }
    return {found.begin(), found.end()};
}

std::vector<int> ComponentGroup::generating_set() const {
    std::vector<int> gens;
    std::vector<int> cur{0};
    while (static_cast<int>(cur.size()) < n_) {
        // Greedy: add the element extending the closure the most.
        int best = -1;
        size_t best_size = cur.size();
        for (int g = 0; g < n_; ++g) {
            if (std::binary_search(cur.begin(), cur.end(), g)) continue;
            auto gens2 = gens;
            gens2.push_back(g);
            auto c = subgroup_closure(*this, gens2);
            if (c.size() > best_size) {
                best_size = c.size();
                best = g;
            }
        }
        gens.push_back(best);
        auto c = subgroup_closure(*this, gens);
        cur = c;
    }
    return gens;
}

std::vector<std::vector<int>> ComponentGroup::automorphisms(std::size_t cap) const {
    std::vector<int> gens = generating_set();
    std::vector<std::vector<int>> autos;
    // Candidate images per generator: elements of the same order.
    std::vector<std::vector<int>> candidates;
    std::size_t total = 1;
    for (int g : gens) {
        std::vector<int> c;
        for (int x = 0; x < n_; ++x)
            if (element_order(x) == element_order(g)) c.push_back(x);
        total *= c.size();
        if (total > cap) throw EnumerationCap("automorphism enumeration exceeds cap");
        candidates.push_back(std::move(c));
    }
    std::vector<size_t> idx(gens.size(), 0);
    while (true) {
        // Extend generator images to a map by BFS over words.
        std::vector<int> img(static_cast<size_t>(n_), -1);
        img[0] = 0;
        bool ok = true;
        std::vector<int> queue{0};
        while (!queue.empty() && ok) {
            int x = queue.back();
            queue.pop_back();
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int y = mul(x, gens[gi]);
                int fy = mul(img[static_cast<size_t>(x)], candidates[gi][idx[gi]]);
                if (img[static_cast<size_t>(y)] < 0) {
                    img[static_cast<size_t>(y)] = fy;
                    queue.push_back(y);
                } else if (img[static_cast<size_t>(y)] != fy) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && std::all_of(img.begin(), img.end(), [](int v) { return v >= 0; })) {
            // Verify homomorphism + bijectivity.
            std::vector<bool> seen(static_cast<size_t>(n_), false);
            for (int v : img) {
                if (seen[static_cast<size_t>(v)]) { ok = false; break; }
                seen[static_cast<size_t>(v)] = true;
            }
            if (ok)
                for (int a = 0; a < n_ && ok; ++a)
                    for (int b = 0; b < n_ && ok; ++b)
                        if (img[static_cast<size_t>(mul(a, b))] !=
                            mul(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]))
                            ok = false;
            if (ok) autos.push_back(img);
        }
        int gi = static_cast<int>(idx.size()) - 1;
        for (; gi >= 0; --gi) {
            if (++idx[static_cast<size_t>(gi)] < candidates[static_cast<size_t>(gi)].size()) break;
            idx[static_cast<size_t>(gi)] = 0;
        }
        if (gi < 0) break;
    }
    std::sort(autos.begin(), autos.end());
    return autos;
}

}  // namespace plcg
