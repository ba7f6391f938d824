#include "hstar/poset.hpp"

#include <algorithm>

#include "hstar/errors.hpp"

namespace hstar {

Poset poset_from_relation(int n, const std::vector<std::pair<int, int>>& relation) {
    if (n < 0) throw invalid_argument_error("Poset: negative size");
    Poset p;
    p.n_ = n;
    p.less_.assign(n, std::vector<bool>(n, false));
    for (auto [i, j] : relation) {
        if (i < 1 || i > n || j < 1 || j > n || i == j)
            throw invalid_argument_error("Poset: relation out of range");
        p.less_[i - 1][j - 1] = true;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!p.less_[i][k]) continue;
            for (int j = 0; j < n; ++j)
                if (p.less_[k][j]) p.less_[i][j] = true;
        }
    for (int i = 0; i < n; ++i) {
        if (p.less_[i][i]) throw invalid_argument_error("Poset: relation has a cycle");
        for (int j = 0; j < n; ++j)
            if (p.less_[i][j] && p.less_[j][i])
                throw invalid_argument_error("Poset: relation is not antisymmetric");
    }
    return p;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    return poset_from_relation(n, covers);
}

Poset Poset::antichain(int n) { return poset_from_relation(n, {}); }

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return poset_from_relation(n, covers);
}

bool Poset::less(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw invalid_argument_error("Poset::less: out of range");
    return less_[i - 1][j - 1];
}

bool Poset::naturally_labeled() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (less(i, j) && i > j) return false;
    return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            if (!less(i, j)) continue;
            bool is_cover = true;
            for (int k = 1; k <= n_ && is_cover; ++k)
                if (less(i, k) && less(k, j)) is_cover = false;
            if (is_cover) out.emplace_back(i, j);
        }
    return out;
}

std::vector<std::vector<int>> antichains(const Poset& p) {
    std::vector<std::vector<int>> out;
    const int n = p.n();
    std::vector<int> current;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            out.push_back(current);
            return;
        }
        rec(next + 1);
        for (int v : current)
            if (p.comparable(v, next)) return;
        current.push_back(next);
        rec(next + 1);
        current.pop_back();
    };
    rec(1);
    for (auto& a : out) std::sort(a.begin(), a.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> order_filters(const Poset& p) {
    const int n = p.n();
    std::vector<std::vector<int>> out;
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            if (!(mask & (size_t(1) << (i - 1)))) continue;
            for (int j = 1; j <= n && ok; ++j)
                if (p.less(i, j) && !(mask & (size_t(1) << (j - 1)))) ok = false;
        }
        if (!ok) continue;
        std::vector<int> f;
        for (int i = 1; i <= n; ++i)
            if (mask & (size_t(1) << (i - 1))) f.push_back(i);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
    const int n = p.n();
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    std::vector<bool> used(n + 1, false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(word.size()) == n) {
            out.push_back(word);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            bool minimal = true;
            for (int u = 1; u <= n && minimal; ++u)
                if (!used[u] && p.less(u, v)) minimal = false;
            if (!minimal) continue;
            used[v] = true;
            word.push_back(v);
            rec();
            word.pop_back();
            used[v] = false;
        }
    };
    rec();
    return out;
}

int left_peaks(const std::vector<int>& word) {
    int count = 0;
    const int n = static_cast<int>(word.size());
    for (int i = 1; i <= n - 1; ++i) {
        int prev = (i >= 2) ? word[i - 2] : 0;
        if (prev < word[i - 1] && word[i - 1] > word[i]) ++count;
    }
    return count;
}

IntPolynomial left_peak_polynomial(const Poset& p) {
    if (!p.naturally_labeled())
        throw invalid_argument_error("left_peak_polynomial: poset must be naturally labeled");
    std::vector<Int> coeffs(p.n() / 2 + 1, Int(0));
    for (const auto& word : linear_extensions(p)) coeffs[left_peaks(word)] += 1;
    return IntPolynomial(std::move(coeffs));
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
    const int np = p.n(), nq = q.n();
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= np; ++i)
        for (int j = 1; j <= np; ++j)
            if (p.less(i, j)) rel.emplace_back(i, j);
    for (int i = 1; i <= nq; ++i)
        for (int j = 1; j <= nq; ++j)
            if (q.less(i, j)) rel.emplace_back(np + i, np + j);
    for (int i = 1; i <= np; ++i)
        for (int j = 1; j <= nq; ++j) rel.emplace_back(i, np + j);
    return poset_from_relation(np + nq, rel);
}

Poset induced_subposet(const Poset& p, const std::vector<int>& labels) {
    std::vector<int> newlabel(p.n() + 1, 0);
    for (size_t k = 0; k < labels.size(); ++k) {
        int v = labels[k];
        if (v < 1 || v > p.n() || (k > 0 && labels[k] <= labels[k - 1]))
            throw invalid_argument_error("induced_subposet: labels must be sorted and in range");
        newlabel[v] = static_cast<int>(k) + 1;
    }
    std::vector<std::pair<int, int>> rel;
    for (int i : labels)
        for (int j : labels)
            if (p.less(i, j)) rel.emplace_back(newlabel[i], newlabel[j]);
    return poset_from_relation(static_cast<int>(labels.size()), rel);
}

Poset ordinal_sum_on_labels(const Poset& p, const Poset& q, const std::vector<int>& i_set) {
    if (p.n() != q.n()) throw invalid_argument_error("ordinal_sum_on_labels: ground set mismatch");
    const int n = p.n();
    std::vector<bool> in_i(n + 1, false);
    for (int v : i_set) {
        if (v < 1 || v > n) throw invalid_argument_error("ordinal_sum_on_labels: label out of range");
        in_i[v] = true;
    }
    std::vector<std::pair<int, int>> rel;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            if (in_i[a] && in_i[b] && p.less(a, b)) rel.emplace_back(a, b);
            if (!in_i[a] && !in_i[b] && q.less(a, b)) rel.emplace_back(a, b);
            if (in_i[a] && !in_i[b]) rel.emplace_back(a, b);
        }
    return poset_from_relation(n, rel);
}

std::pair<Poset, std::vector<int>> relabel_natural(const Poset& p) {
    auto exts = linear_extensions(p);
    const std::vector<int>& ext = *std::min_element(exts.begin(), exts.end());
    std::vector<int> perm(p.n());  // perm[old-1] = new
    for (int k = 0; k < p.n(); ++k) perm[ext[k] - 1] = k + 1;
    return {relabel(p, perm), perm};
}

Poset relabel(const Poset& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.n()) throw invalid_argument_error("relabel: bad permutation");
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.n(); ++j)
            if (p.less(i, j)) rel.emplace_back(perm[i - 1], perm[j - 1]);
    return poset_from_relation(p.n(), rel);
}

Graph comparability_graph(const Poset& p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = i + 1; j <= p.n(); ++j)
            if (p.comparable(i, j)) edges.emplace_back(i, j);
    return Graph(p.n(), std::move(edges));
}

bool have_common_linear_extension(const Poset& p, const Poset& q) {
    if (p.n() != q.n()) throw invalid_argument_error("common extension: ground set mismatch");
    auto exts = linear_extensions(p);
    for (const auto& word : exts) {
        bool ok = true;
        std::vector<int> position(q.n() + 1);
        for (int k = 0; k < q.n(); ++k) position[word[k]] = k;
        for (int i = 1; i <= q.n() && ok; ++i)
            for (int j = 1; j <= q.n() && ok; ++j)
                if (q.less(i, j) && position[i] > position[j]) ok = false;
        if (ok) return true;
    }
    return false;
}

std::vector<Poset> all_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    std::vector<Poset> out;
    const size_t total = size_t(1) << pairs.size();
    if (pairs.size() > 20) throw resource_error("all_posets: too many elements");
    for (size_t mask = 0; mask < total; ++mask) {
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
        for (size_t k = 0; k < pairs.size(); ++k)
            if (mask & (size_t(1) << k)) rel[pairs[k].first - 1][pairs[k].second - 1] = true;
        // keep only transitively closed antisymmetric relations
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (rel[i][j] && rel[j][i]) ok = false;
                if (!ok) break;
                for (int k = 0; k < n && ok; ++k)
                    if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;
            }
        if (!ok) continue;
        std::vector<std::pair<int, int>> r;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rel[i][j]) r.emplace_back(i + 1, j + 1);
        out.push_back(poset_from_relation(n, r));
    }
    return out;
}

std::vector<Poset> all_natural_posets(int n) {
    std::vector<Poset> out;
    for (const Poset& p : all_posets(n))
        if (p.naturally_labeled()) out.push_back(p);
    return out;
}

}  // namespace hstar
