#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cauchon/cartan.hpp"

namespace cauchon {

// A root is its coefficient vector over the simple-root basis (Bourbaki
// labels, 0-based indices).
using Root = Eigen::VectorXi;

struct RootHash {
    size_t operator()(const Root& r) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < r.size(); ++i) {
            h ^= static_cast<uint64_t>(static_cast<int64_t>(r(i)) + (1ll << 20));
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct RootEq {
    bool operator()(const Root& a, const Root& b) const { return a == b; }
};

// Lexicographic comparison of coefficient vectors (used for canonical
// sorting only).
bool root_lex_less(const Root& a, const Root& b);

// A finite root system: Cartan data plus the full set of positive roots,
// with membership lookup.
class RootSystem {
public:
    explicit RootSystem(LieType type);

    LieType type() const { return cartan_.type; }
    int rank() const { return cartan_.rank(); }
    const CartanData& cartan() const { return cartan_; }

    // Positive roots sorted by height, ties broken lexicographically.
    const std::vector<Root>& positive_roots() const { return positive_; }

    Root simple_root(int i) const; // 1-based Bourbaki label

    bool is_positive_root(const Root& r) const;
    bool is_root(const Root& r) const; // positive or negative

    // Index of a positive root in positive_roots(); -1 if absent.
    int positive_index(const Root& r) const;

    // Symmetrized inner product; bilinear, so arbitrary integer vectors
    // are accepted.
    int64_t inner_product(const Root& x, const Root& y) const;

    // Reflection of b in the hyperplane orthogonal to mirror.  Throws
    // DomainError unless mirror is a root.
    Root reflect(const Root& b, const Root& mirror) const;

    int height(const Root& r) const;

private:
    CartanData cartan_;
    std::vector<Root> positive_;
    std::unordered_map<Root, int, RootHash, RootEq> index_;
};

} // namespace cauchon
