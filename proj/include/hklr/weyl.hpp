/*
 * weyl.hpp
 * --------
 * Finite Weyl groups through their integral reflection representation.
 *
 * Each element is stored as the n x n integer matrix of its action on the
 * coordinate functions: w sends the s-th coordinate to sum_t M[t][s] * x_t,
 * so M(uv) = M(u) M(v).  Elements are enumerated by breadth-first search in
 * (length, word) order, which makes the stored word of every element its
 * lexicographically smallest reduced expression.
 */
#pragma once

#include <map>
#include <vector>

#include "cartan.hpp"

namespace hklr {

using IntMat = std::vector<int>;  // row-major n x n

class WeylGroup {
public:
    explicit WeylGroup(Cartan c) : cartan_(std::move(c)) {
        cartan_.validate();
        build();
    }

    const Cartan& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }
    int size() const { return static_cast<int>(els_.size()); }

    int length(int w) const { return static_cast<int>(els_[w].word.size()); }
    const std::vector<int>& word(int w) const { return els_[w].word; }
    const IntMat& matrix(int w) const { return els_[w].mat; }

    int identity() const { return 0; }
    int longest() const { return size() - 1; }

    int generator(int r) const { return gen_idx_[r]; }

    int multiply(int u, int v) const {
        return index_of(mat_mul(els_[u].mat, els_[v].mat));
    }

    int inverse(int w) const {
        int inv = 0;
        const auto& ww = els_[w].word;
        for (auto it = ww.rbegin(); it != ww.rend(); ++it) inv = multiply(inv, gen_idx_[*it]);
        return inv;
    }

    // Index of sigma_r * w, plus whether the length went up.
    std::pair<int, bool> left_mult_gen(int r, int w) const {
        int u = multiply(gen_idx_[r], w);
        return {u, length(u) > length(w)};
    }
    std::pair<int, bool> right_mult_gen(int w, int r) const {
        int u = multiply(w, gen_idx_[r]);
        return {u, length(u) > length(w)};
    }

    // Entry M[t][s] of the reflection matrix of w.
    int coeff(int w, int t, int s) const { return els_[w].mat[t * rank() + s]; }

private:
    struct El {
        IntMat mat;
        std::vector<int> word;
    };

    Cartan cartan_;
    std::vector<El> els_;
    std::vector<int> gen_idx_;
    std::map<IntMat, int> index_;

    int index_of(const IntMat& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw std::logic_error("weyl: matrix not in group");
        return it->second;
    }

    IntMat gen_matrix(int r) const {
        int n = rank();
        IntMat m(n * n, 0);
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        // sigma_r(x_s) = x_s - a[s][r] * x_r : column s picks up -a[s][r] in row r.
        for (int s = 0; s < n; ++s) m[r * n + s] -= cartan_.a[s][r];
        return m;
    }

    IntMat mat_mul(const IntMat& a, const IntMat& b) const {
        int n = rank();
        IntMat c(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                int aik = a[i * n + k];
                if (!aik) continue;
                for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
            }
        return c;
    }

    void build() {
        int n = rank();
        IntMat id(n * n, 0);
        for (int i = 0; i < n; ++i) id[i * n + i] = 1;
        els_.push_back({id, {}});
        index_.emplace(id, 0);
        gen_idx_.assign(n, -1);

        std::vector<IntMat> gens(n);
        for (int r = 0; r < n; ++r) gens[r] = gen_matrix(r);

        size_t layer_begin = 0;
        while (layer_begin < els_.size()) {
            size_t layer_end = els_.size();
            for (size_t i = layer_begin; i < layer_end; ++i)
                for (int r = 0; r < n; ++r) {
                    IntMat m = mat_mul(els_[i].mat, gens[r]);
                    if (index_.count(m)) continue;
                    std::vector<int> w = els_[i].word;
                    w.push_back(r);
                    index_.emplace(m, static_cast<int>(els_.size()));
                    els_.push_back({std::move(m), std::move(w)});
                }
            layer_begin = layer_end;
            if (els_.size() > 100000) throw std::logic_error("weyl: group too large");
        }
        for (int r = 0; r < n; ++r) gen_idx_[r] = index_.at(gens[r]);
    }
};

}  // namespace hklr
