#include "xtp/oracles/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace xtp::oracle {

namespace {

void guard(unsigned n, unsigned limit, const char* what) {
    if (n > limit) {
        throw SizeGuard(std::string(what) + ": n = " + std::to_string(n) + " exceeds enumeration limit " +
                        std::to_string(limit));
    }
}

CountVector tally(unsigned n, std::size_t width) {
    CountVector cv;
    cv.n = n;
    cv.counts.assign(width, 0);
    return cv;
}

void bump(CountVector& cv, std::size_t k) {
    if (k >= cv.counts.size()) cv.counts.resize(k + 1, 0);
    ++cv.counts[k];
}

template <class Stat>
CountVector over_permutations(unsigned n, Stat stat) {
    CountVector cv = tally(n, n + 1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bump(cv, stat(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cv;
}

// Calls visit(labels, blocks) for every set partition of [n] as a restricted
// growth string.
void each_set_partition(unsigned n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> a(n, 0);
    std::function<void(unsigned, int)> rec = [&](unsigned i, int blocks) {
        if (i == n) {
            visit(a, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            a[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

}  // namespace

mpz_class CountVector::total() const {
    mpz_class t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

bool CountVector::matches(const std::vector<mpz_class>& row) const {
    const std::size_t width = std::max(counts.size(), row.size());
    for (std::size_t k = 0; k < width; ++k) {
        const mpz_class a = k < counts.size() ? counts[k] : mpz_class(0);
        const mpz_class b = k < row.size() ? row[k] : mpz_class(0);
        if (a != b) return false;
    }
    return true;
}

CountVector perms_by_descents(unsigned n) {
    guard(n, 7, "perms_by_descents");
    if (n == 0) return CountVector{0, {1}};
    return over_permutations(n, [](const std::vector<int>& p) {
        std::size_t des = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) des += p[i] > p[i + 1] ? 1 : 0;
        return des + 1;
    });
}

CountVector perms_by_cycles(unsigned n) {
    guard(n, 7, "perms_by_cycles");
    if (n == 0) return CountVector{0, {1}};
    return over_permutations(n, [](const std::vector<int>& p) {
        std::vector<bool> seen(p.size(), false);
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) seen[j] = true;
        }
        return cycles;
    });
}

CountVector set_partitions_by_blocks(unsigned n) {
    guard(n, 8, "set_partitions_by_blocks");
    CountVector cv = tally(n, n + 1);
    each_set_partition(n, [&](const std::vector<int>&, int blocks) { bump(cv, static_cast<std::size_t>(blocks)); });
    return cv;
}

CountVector set_partitions_without_singletons(unsigned n) {
    guard(n, 8, "set_partitions_without_singletons");
    CountVector cv = tally(n, n + 1);
    each_set_partition(n, [&](const std::vector<int>& a, int blocks) {
        std::vector<int> size(static_cast<std::size_t>(blocks), 0);
        for (int b : a) ++size[static_cast<std::size_t>(b)];
        if (std::find(size.begin(), size.end(), 1) == size.end()) bump(cv, static_cast<std::size_t>(blocks));
    });
    return cv;
}

CountVector stirling_perms_by_ascent_plateau(unsigned n) {
    guard(n, 5, "stirling_perms_by_ascent_plateau");
    CountVector cv = tally(n, n + 1);
    std::vector<int> word;
    for (unsigned i = 1; i <= n; ++i) {
        word.push_back(static_cast<int>(i));
        word.push_back(static_cast<int>(i));
    }
    do {
        // Every entry strictly between the two copies of i must exceed i.
        bool stirling = true;
        for (unsigned i = 1; i <= n && stirling; ++i) {
            const auto first = std::find(word.begin(), word.end(), static_cast<int>(i));
            const auto second = std::find(first + 1, word.end(), static_cast<int>(i));
            stirling = std::all_of(first + 1, second, [i](int v) { return v > static_cast<int>(i); });
        }
        if (!stirling) continue;
        std::size_t ap = 0;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            const int before = i == 0 ? 0 : word[i - 1];
            if (before < word[i] && word[i] == word[i + 1]) ++ap;
        }
        bump(cv, ap);
    } while (std::next_permutation(word.begin(), word.end()));
    return cv;
}

CountVector matchings_by_odd_smaller(unsigned n) {
    guard(n, 5, "matchings_by_odd_smaller");
    CountVector cv = tally(n, n + 1);
    std::vector<bool> used(2 * n + 1, false);
    std::function<void(std::size_t)> rec = [&](std::size_t odd_pairs) {
        unsigned first = 1;
        while (first <= 2 * n && used[first]) ++first;
        if (first > 2 * n) {
            bump(cv, odd_pairs);
            return;
        }
        used[first] = true;
        for (unsigned partner = first + 1; partner <= 2 * n; ++partner) {
            if (used[partner]) continue;
            used[partner] = true;
            rec(odd_pairs + (first % 2 == 1 ? 1 : 0));
            used[partner] = false;
        }
        used[first] = false;
    };
    rec(0);
    return cv;
}

CountVector perms_by_interior_peaks(unsigned n) {
    guard(n, 7, "perms_by_interior_peaks");
    if (n == 0) return CountVector{0, {1}};
    return over_permutations(n, [](const std::vector<int>& p) {
        std::size_t pk = 0;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) pk += (p[i - 1] < p[i] && p[i] > p[i + 1]) ? 1 : 0;
        return pk;
    });
}

CountVector perms_by_left_peaks(unsigned n) {
    guard(n, 7, "perms_by_left_peaks");
    if (n == 0) return CountVector{0, {1}};
    return over_permutations(n, [](const std::vector<int>& p) {
        std::size_t lpk = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            const int before = i == 0 ? 0 : p[i - 1];
            lpk += (before < p[i] && p[i] > p[i + 1]) ? 1 : 0;
        }
        return lpk;
    });
}

}  // namespace xtp::oracle
