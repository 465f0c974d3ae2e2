/*
 * cartan.hpp
 * ----------
 * Generalized Cartan matrices for the finite types used here.
 *
 * Convention: a[r][r] = 2; for distinct r, s the entry a[r][s] is 0 when the
 * vertices are disconnected, -1 for a single edge or for the target side of a
 * multiple edge, and -m (m = 2, 3) when there is an m-fold arrow r => s
 * pointing from r to s.  The braid order attached to an edge is 2, 3, 4, 6
 * for a[r][s]*a[s][r] = 0, 1, 2, 3.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hklr {

struct Cartan {
    std::string name;
    std::vector<std::vector<int>> a;

    int rank() const { return static_cast<int>(a.size()); }

    // Order of t_r t_s in the Weyl group.
    int braid_order(int r, int s) const {
        if (r == s) return 1;
        switch (a[r][s] * a[s][r]) {
            case 0: return 2;
            case 1: return 3;
            case 2: return 4;
            case 3: return 6;
        }
        throw std::domain_error("cartan: non-finite braid order");
    }

    void validate() const {
        int n = rank();
        for (int r = 0; r < n; ++r) {
            if (static_cast<int>(a[r].size()) != n)
                throw std::domain_error("cartan: ragged matrix");
            if (a[r][r] != 2) throw std::domain_error("cartan: diagonal must be 2");
            for (int s = 0; s < n; ++s) {
                if (r == s) continue;
                if (a[r][s] > 0 || a[r][s] < -3)
                    throw std::domain_error("cartan: off-diagonal out of range");
                if ((a[r][s] == 0) != (a[s][r] == 0))
                    throw std::domain_error("cartan: asymmetric zero pattern");
                if (a[r][s] < -1 && a[s][r] != -1)
                    throw std::domain_error("cartan: multiple arrows in both directions");
                braid_order(r, s);
            }
        }
    }

    static Cartan a1() { return {"A1", {{2}}}; }
    static Cartan a1xa1() { return {"A1xA1", {{2, 0}, {0, 2}}}; }
    static Cartan a2() { return {"A2", {{2, -1}, {-1, 2}}}; }
    // B2 with the double arrow pointing from vertex 0 to vertex 1.
    static Cartan b2() { return {"B2", {{2, -2}, {-1, 2}}}; }
    // G2 with the triple arrow pointing from vertex 0 to vertex 1.
    static Cartan g2() { return {"G2", {{2, -3}, {-1, 2}}}; }

    static Cartan a_n(int n) {
        Cartan c;
        c.name = "A" + std::to_string(n);
        c.a.assign(n, std::vector<int>(n, 0));
        for (int r = 0; r < n; ++r) {
            c.a[r][r] = 2;
            if (r + 1 < n) c.a[r][r + 1] = c.a[r + 1][r] = -1;
        }
        return c;
    }

    static Cartan by_name(const std::string& t) {
        if (t == "A1") return a1();
        if (t == "A1xA1") return a1xa1();
        if (t == "A2") return a2();
        if (t == "B2") return b2();
        if (t == "G2") return g2();
        if (t.size() >= 2 && t[0] == 'A') {
            int n = std::stoi(t.substr(1));
            if (n >= 1) return a_n(n);
        }
        throw std::domain_error("cartan: unknown type " + t);
    }
};

}  // namespace hklr
