#include "cauchon/root_system.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "cauchon/errors.hpp"

namespace cauchon {

bool root_lex_less(const Root& a, const Root& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                        b.data(), b.data() + b.size());
}

RootSystem::RootSystem(LieType type) : cartan_(build_cartan(type)) {
    const int n = cartan_.rank();

    // Orbit closure: starting from the simple roots, apply simple
    // reflections and keep whatever stays positive.  This reaches every
    // positive root since each non-simple positive root can be lowered by
    // some simple reflection.
    std::unordered_set<Root, RootHash, RootEq> seen;
    std::deque<Root> work;
    for (int i = 0; i < n; ++i) {
        Root alpha = Root::Zero(n);
        alpha(i) = 1;
        seen.insert(alpha);
        work.push_back(alpha);
    }
    while (!work.empty()) {
        Root r = work.front();
        work.pop_front();
        for (int i = 0; i < n; ++i) {
            Root s = r;
            // s_i(r) = r - <r, alpha_i^vee> alpha_i, with the pairing read
            // off the Cartan matrix rows.
            int pair = 0;
            for (int j = 0; j < n; ++j) pair += cartan_.a(i, j) * r(j);
            s(i) -= pair;
            bool positive = false, negative = false;
            for (int j = 0; j < n; ++j) {
                if (s(j) > 0) positive = true;
                if (s(j) < 0) negative = true;
            }
            if (negative || !positive) continue;
            if (seen.insert(s).second) work.push_back(s);
        }
    }

    positive_.assign(seen.begin(), seen.end());
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        int ha = a.sum(), hb = b.sum();
        if (ha != hb) return ha < hb;
        return root_lex_less(a, b);
    });
    for (int i = 0; i < static_cast<int>(positive_.size()); ++i)
        index_.emplace(positive_[i], i);
}

Root RootSystem::simple_root(int i) const {
    if (i < 1 || i > rank()) throw RankError("simple root label out of range");
    Root alpha = Root::Zero(rank());
    alpha(i - 1) = 1;
    return alpha;
}

bool RootSystem::is_positive_root(const Root& r) const {
    return r.size() == rank() && index_.count(r) > 0;
}

bool RootSystem::is_root(const Root& r) const {
    return is_positive_root(r) || is_positive_root(-r);
}

int RootSystem::positive_index(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

int64_t RootSystem::inner_product(const Root& x, const Root& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw DomainError("inner product arguments have wrong dimension");
    int64_t v = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            v += static_cast<int64_t>(x(i)) * cartan_.ip(i, j) * y(j);
    return v;
}

Root RootSystem::reflect(const Root& b, const Root& mirror) const {
    if (!is_root(mirror)) throw DomainError("reflection mirror is not a root");
    int64_t num = 2 * inner_product(b, mirror);
    int64_t den = inner_product(mirror, mirror);
    // For roots 2(b,m)/(m,m) is always an integer.
    int64_t coeff = num / den;
    Root out = b;
    for (int i = 0; i < rank(); ++i)
        out(i) -= static_cast<int>(coeff) * mirror(i);
    return out;
}

int RootSystem::height(const Root& r) const {
    if (!is_root(r)) throw DomainError("height of a non-root");
    return r.sum();
}

} // namespace cauchon
