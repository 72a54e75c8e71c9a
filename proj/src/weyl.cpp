#include "cauchon/weyl.hpp"

#include <deque>
#include <unordered_set>

#include "cauchon/errors.hpp"

namespace cauchon {

WeylElement weyl_identity(const RootSystem& sys) {
    return WeylElement::Identity(sys.rank(), sys.rank());
}

WeylElement simple_reflection(const RootSystem& sys, int i) {
    const int n = sys.rank();
    if (i < 1 || i > n) throw WordError("reflection label out of range");
    // s_i(alpha_j) = alpha_j - a(i,j) alpha_i.
    WeylElement m = WeylElement::Identity(n, n);
    for (int j = 0; j < n; ++j) m(i - 1, j) -= sys.cartan().a(i - 1, j);
    return m;
}

WeylElement word_product(const RootSystem& sys, const Word& word) {
    WeylElement m = weyl_identity(sys);
    for (int letter : word) m = m * simple_reflection(sys, letter);
    return m;
}

Root apply(const WeylElement& w, const Root& b) {
    if (w.cols() != b.size()) throw DomainError("apply: dimension mismatch");
    return w * b;
}

int length(const RootSystem& sys, const WeylElement& w) {
    int len = 0;
    for (const Root& beta : sys.positive_roots()) {
        Root img = apply(w, beta);
        bool negative = true;
        for (int j = 0; j < img.size(); ++j)
            if (img(j) > 0) { negative = false; break; }
        if (negative) ++len;
    }
    return len;
}

bool is_reduced(const RootSystem& sys, const Word& word) {
    return length(sys, word_product(sys, word)) == static_cast<int>(word.size());
}

BigInt weyl_order(LieType type) {
    validate_type(type);
    const int n = type.rank;
    auto factorial = [](int k) {
        BigInt f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    auto pow2 = [](int k) { return BigInt(1) << k; };
    switch (type.family) {
        case Family::A: return factorial(n + 1);
        case Family::B:
        case Family::C: return pow2(n) * factorial(n);
        case Family::D: return pow2(n - 1) * factorial(n);
        case Family::E:
            if (n == 6) return 51840;
            if (n == 7) return 2903040;
            return BigInt(696729600);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    throw RankError("unreachable");
}

uint64_t weyl_order_bfs(const RootSystem& sys, uint64_t limit) {
    std::unordered_set<WeylElement, WeylHash, WeylEq> seen;
    std::deque<WeylElement> work;
    seen.insert(weyl_identity(sys));
    work.push_back(weyl_identity(sys));
    std::vector<WeylElement> gens;
    for (int i = 1; i <= sys.rank(); ++i) gens.push_back(simple_reflection(sys, i));
    while (!work.empty()) {
        WeylElement w = work.front();
        work.pop_front();
        for (const WeylElement& s : gens) {
            WeylElement next = w * s;
            if (seen.insert(next).second) {
                if (seen.size() > limit)
                    throw SizeError("Weyl group enumeration exceeds limit");
                work.push_back(next);
            }
        }
    }
    return seen.size();
}

} // namespace cauchon
