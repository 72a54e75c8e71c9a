#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "cauchon/root_system.hpp"

namespace cauchon {

using BigInt = boost::multiprecision::cpp_int;

// A Weyl group element as its integer matrix on the simple-root basis;
// column j is the image of alpha_{j+1}.
using WeylElement = Eigen::MatrixXi;

// A word in the simple reflections, letters 1..n.
using Word = std::vector<int>;

struct WeylHash {
    size_t operator()(const WeylElement& m) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < m.size(); ++i) {
            h ^= static_cast<uint64_t>(static_cast<int64_t>(m.data()[i]) + (1ll << 20));
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct WeylEq {
    bool operator()(const WeylElement& a, const WeylElement& b) const { return a == b; }
};

WeylElement weyl_identity(const RootSystem& sys);

// Matrix of the simple reflection s_i (1-based label).
WeylElement simple_reflection(const RootSystem& sys, int i);

// Product s_{i1} s_{i2} ... s_{ik} acting on the left, so
// apply(word_product(w), b) = s_{i1}(s_{i2}(... s_{ik}(b))).
WeylElement word_product(const RootSystem& sys, const Word& word);

Root apply(const WeylElement& w, const Root& b);

// Coxeter length: the number of positive roots mapped to negative ones.
int length(const RootSystem& sys, const WeylElement& w);

bool is_reduced(const RootSystem& sys, const Word& word);

// |W| from the closed product formulas, per family.
BigInt weyl_order(LieType type);

// |W| by breadth-first enumeration of the group (for cross-checks at
// small rank; throws SizeError above the given bound).
uint64_t weyl_order_bfs(const RootSystem& sys, uint64_t limit = 4000000);

} // namespace cauchon
