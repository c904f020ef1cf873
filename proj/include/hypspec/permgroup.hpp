#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hypspec/errors.hpp"

namespace hypspec {

// Permutation of {0, ..., degree-1} stored as its image vector.
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
    Perm p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    return p;
}

// (a * b)(x) = a(b(x)): apply b first.
inline Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

inline void validate_perm(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree)
        throw precondition_error("permutation degree",
                                 "expected " + std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v])
            throw precondition_error("valid permutation",
                                     "not a bijection of 0..degree-1");
        seen[v] = true;
    }
}

// A finite permutation group enumerated by closure from generators.
// Elements are indexed; index 0 is the identity.
class PermGroup {
public:
    PermGroup(int degree, const std::vector<Perm>& generators, size_t max_order)
        : degree_(degree) {
        for (const Perm& g : generators) validate_perm(g, degree);
        add(perm_identity(degree));
        // breadth-first closure
        for (size_t head = 0; head < elements_.size(); ++head) {
            const Perm cur = elements_[head];
            for (const Perm& g : generators) {
                const Perm nxt = perm_mul(cur, g);
                if (index_.find(nxt) == index_.end()) {
                    if (elements_.size() >= max_order)
                        throw precondition_error(
                            "group order bound",
                            "closure exceeds " + std::to_string(max_order));
                    add(nxt);
                }
            }
        }
        inverse_.resize(elements_.size());
        for (size_t i = 0; i < elements_.size(); ++i)
            inverse_[i] = id_of(perm_inverse(elements_[i]));
    }

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const Perm& element(int id) const { return elements_[id]; }

    int id_of(const Perm& p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw precondition_error("element of the group",
                                     "permutation not in the enumerated group");
        return it->second;
    }

    bool contains(const Perm& p) const { return index_.count(p) != 0; }
    int mul(int a, int b) const { return id_of(perm_mul(elements_[a], elements_[b])); }
    int inverse(int a) const { return inverse_[a]; }

    // Closure of the listed element ids; returns sorted element ids.
    std::vector<int> subgroup_closure(const std::vector<int>& gens) const {
        std::vector<char> in(order(), 0);
        std::vector<int> queue = {0};
        in[0] = 1;
        for (size_t head = 0; head < queue.size(); ++head)
            for (int g : gens) {
                const int nxt = mul(queue[head], g);
                if (!in[nxt]) {
                    in[nxt] = 1;
                    queue.push_back(nxt);
                }
            }
        std::sort(queue.begin(), queue.end());
        return queue;
    }

    static std::vector<int> intersect(const std::vector<int>& a,
                                      const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(out));
        return out;
    }

private:
    void add(const Perm& p) {
        index_.emplace(p, static_cast<int>(elements_.size()));
        elements_.push_back(p);
    }

    int degree_;
    std::vector<Perm> elements_;
    std::map<Perm, int> index_;
    std::vector<int> inverse_;
};

// Verifies the listed ids form a subgroup (closed under mul and inverse).
inline void check_subgroup(const PermGroup& G, const std::vector<int>& ids,
                           const std::string& name) {
    std::vector<char> in(G.order(), 0);
    for (int i : ids) in[i] = 1;
    if (ids.empty() || !in[0])
        throw precondition_error("subgroup " + name, "must contain the identity");
    for (int a : ids) {
        if (!in[G.inverse(a)])
            throw precondition_error("subgroup " + name, "not inverse-closed");
        for (int b : ids)
            if (!in[G.mul(a, b)])
                throw precondition_error("subgroup " + name, "not closed under products");
    }
}

} // namespace hypspec
