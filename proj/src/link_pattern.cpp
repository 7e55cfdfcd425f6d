#include "rslab/link_pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace rslab {

LinkPattern::LinkPattern(int n, std::vector<int> match) : half_(n), match_(std::move(match)) {
    if (n < 0) throw std::invalid_argument("LinkPattern: negative n");
    const int m = 2 * n;
    if (static_cast<int>(match_.size()) != m)
        throw std::invalid_argument("LinkPattern: match length must be 2n");
    for (int p = 1; p <= m; ++p) {
        const int q = match_[p - 1];
        if (q < 1 || q > m) throw std::invalid_argument("LinkPattern: partner out of range");
        if (q == p) throw std::invalid_argument("LinkPattern: fixed point at " + std::to_string(p));
        if (match_[q - 1] != p) throw std::invalid_argument("LinkPattern: not an involution");
    }
    // noncrossing: scanning 1..2n, a closing point must match the most recent
    // open one
    std::vector<int> stack;
    for (int p = 1; p <= m; ++p) {
        if (match_[p - 1] > p) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != match_[p - 1])
                throw std::invalid_argument("LinkPattern: crossing chords");
            stack.pop_back();
        }
    }
}

int LinkPattern::partner(int p) const {
    if (p < 1 || p > points()) throw std::out_of_range("LinkPattern::partner: point out of range");
    return match_[p - 1];
}

long long catalan_number(int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

std::vector<LinkPattern> enumerate_link_patterns(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_link_patterns: negative n");
    const int m = 2 * n;
    std::vector<LinkPattern> out;
    std::vector<int> match(m, 0);

    // Match the smallest unmatched point p to each feasible q in increasing
    // order; every point strictly between p and q must still be unmatched and
    // their count even. Choosing q ascending emits patterns in lexicographic
    // order of the match sequence.
    std::function<void()> rec = [&]() {
        int p = 0;
        while (p < m && match[p] != 0) ++p;
        if (p == m) {
            out.push_back(LinkPattern(LinkPattern::Unchecked{}, n, match));
            return;
        }
        for (int q = p + 1; q < m; q += 2) {
            bool free_span = match[q] == 0;
            for (int t = p + 1; t < q && free_span; ++t)
                if (match[t] != 0) free_span = false;
            if (!free_span) continue;
            match[p] = q + 1;
            match[q] = p + 1;
            rec();
            match[p] = 0;
            match[q] = 0;
        }
    };
    rec();
    return out;
}

LinkPattern apply_e(int i, const LinkPattern& pi) {
    const int m = pi.points();
    if (i < 1 || i > m) throw std::out_of_range("apply_e: operator index out of range");
    const int succ = i % m + 1;
    if (pi.partner(i) == succ) return pi;
    const int j = pi.partner(i);
    const int k = pi.partner(succ);
    std::vector<int> match = pi.match();
    match[i - 1] = succ;
    match[succ - 1] = i;
    match[j - 1] = k;
    match[k - 1] = j;
    return LinkPattern(LinkPattern::Unchecked{}, pi.n(), std::move(match));
}

LinkPattern rotate_pattern(const LinkPattern& pi, int steps) {
    const int m = pi.points();
    if (m == 0) return pi;
    const auto shift = [&](int p) { return ((p - 1 + steps) % m + m) % m + 1; };
    std::vector<int> match(m, 0);
    for (int p = 1; p <= m; ++p) match[shift(p) - 1] = shift(pi.partner(p));
    return LinkPattern(LinkPattern::Unchecked{}, pi.n(), std::move(match));
}

int pattern_index(const std::vector<LinkPattern>& basis, const LinkPattern& pi) {
    auto it = std::lower_bound(basis.begin(), basis.end(), pi);
    if (it == basis.end() || !(*it == pi)) return -1;
    return static_cast<int>(it - basis.begin());
}

} // namespace rslab
