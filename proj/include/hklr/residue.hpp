/*
 * residue.hpp
 * -----------
 * Residue sequences and the Weyl-group "numbers game" on them.
 *
 * Residues live in I = Z when e = 0 and I = Z/e when e >= 2 (e = 1 is
 * excluded).  The action is sigma_r(i)_s = i_s - a[s][r] * i_r, computed
 * componentwise in I.  Orbits are enumerated breadth-first with a canonical
 * (sorted) ordering so that reports and tests are deterministic.
 */
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "weyl.hpp"

namespace hklr {

using ResVec = std::vector<long>;

class ResidueSystem {
public:
    ResidueSystem(const WeylGroup& g, long e) : g_(&g), e_(e) {
        if (e < 0 || e == 1) throw std::domain_error("residue: need e = 0 or e >= 2");
    }

    const WeylGroup& group() const { return *g_; }
    long e() const { return e_; }

    long reduce(long v) const {
        if (e_ == 0) return v;
        long r = v % e_;
        return r < 0 ? r + e_ : r;
    }

    ResVec reduce(ResVec i) const {
        for (auto& v : i) v = reduce(v);
        return i;
    }

    // Do two residues represent the same element of I?
    bool eq(long a, long b) const { return reduce(a) == reduce(b); }

    ResVec act_gen(int r, const ResVec& i) const {
        const auto& a = g_->cartan().a;
        int n = g_->rank();
        ResVec j(i);
        for (int s = 0; s < n; ++s) j[s] = reduce(i[s] - a[s][r] * i[r]);
        return j;
    }

    // w acting on i; the stored word is applied right-to-left.
    ResVec act(int w, const ResVec& i) const {
        ResVec j = reduce(i);
        const auto& ww = g_->word(w);
        for (auto it = ww.rbegin(); it != ww.rend(); ++it) j = act_gen(*it, j);
        return j;
    }

    // Orbit of a seed, sorted componentwise for determinism.
    std::vector<ResVec> orbit(const ResVec& seed) const {
        std::set<ResVec> seen;
        std::vector<ResVec> todo = {reduce(seed)};
        seen.insert(todo[0]);
        while (!todo.empty()) {
            ResVec cur = todo.back();
            todo.pop_back();
            for (int r = 0; r < g_->rank(); ++r) {
                ResVec nxt = act_gen(r, cur);
                if (seen.insert(nxt).second) todo.push_back(nxt);
            }
        }
        return {seen.begin(), seen.end()};
    }

    // Derived residue i_{s,k} for an ordered generator pair (r, s): apply k
    // alternating reflections starting with sigma_r, then read component s.
    //   i_{s,1} = sigma_r(i)_s,  i_{s,2} = sigma_s sigma_r(i)_s,
    //   i_{s,3} = sigma_r sigma_s sigma_r(i)_s, ...
    // Swapping the roles of r and s gives i_{r,k}.
    long derived(const ResVec& i, int r, int s, int target, int k) const {
        ResVec j = reduce(i);
        int other = target == s ? r : s;
        for (int step = 0; step < k; ++step)
            j = act_gen(step % 2 == 0 ? other : target, j);
        return j[target];
    }

private:
    const WeylGroup* g_;
    long e_;
};

}  // namespace hklr
