// Independent test oracles. These deliberately avoid the library's exact
// arithmetic so frozen expected values come from a second route.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracles {

struct Frac {
    __int128 num = 0;
    __int128 den = 1;

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Frac operator+(const Frac& o) const {
        Frac r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }

    Frac reciprocal() const {
        Frac r{den, num};
        r.reduce();
        return r;
    }
};

/// R = 1 / sum (-1)^l / prod(l - m), small sets only (__int128 headroom).
inline Frac reciprocal_product_sum(const std::vector<std::int64_t>& lambdas) {
    Frac sum{0, 1};
    for (std::int64_t l : lambdas) {
        __int128 prod = 1;
        for (std::int64_t m : lambdas) {
            if (m != l) prod *= (l - m);
        }
        bool odd = ((l % 2) + 2) % 2 == 1;
        Frac term{odd ? -1 : 1, prod};
        term.reduce();
        sum = sum + term;
    }
    if (sum.num == 0) throw std::runtime_error("oracle: zero sum");
    return sum.reciprocal();
}

/// Trinomial coefficients by the Pascal-style recursion.
inline std::uint64_t pascal_multinomial(int n, int a, int b) {
    if (a < 0 || b < 0 || a + b > n) return 0;
    if (n == 0) return 1;
    return pascal_multinomial(n - 1, a - 1, b) + pascal_multinomial(n - 1, a, b - 1) +
           pascal_multinomial(n - 1, a, b);
}

/// Number of length-`steps` walks between two vertices, by direct DP.
inline std::uint64_t walk_count(std::int64_t n,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                                std::int64_t from, std::int64_t to, int steps) {
    std::vector<std::uint64_t> state(n, 0), next(n);
    state[from] = 1;
    for (int s = 0; s < steps; ++s) {
        std::fill(next.begin(), next.end(), 0);
        for (auto [u, v] : edges) {
            next[u] += state[v];
            next[v] += state[u];
        }
        std::swap(state, next);
    }
    return state[to];
}

/// Deterministic LCG for reproducible randomized tests.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

/// All alternating-parity subsets of {0..max} containing 0 and max with more
/// than three elements.
inline std::vector<std::vector<std::int64_t>> admissible_sets(int max_value) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur{0};
    auto gen = [&](auto&& self, int target) -> void {
        std::int64_t last = cur.back();
        if (last == target) {
            if (cur.size() > 3) out.push_back(cur);
            return;
        }
        for (std::int64_t nxt = last + 1; nxt <= target; nxt += 2) {
            cur.push_back(nxt);
            self(self, target);
            cur.pop_back();
        }
    };
    for (int m = 1; m <= max_value; ++m) gen(gen, m);
    return out;
}

} // namespace oracles
