#include "tropmoduli/linalg.hpp"

#include <cassert>
#include <cstddef>

namespace tropmoduli {

int rank(RatMatrix m)
{
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

LpResult simplex_max(const RatMatrix& A, const RatVec& b, const RatVec& c)
{
    const std::size_t m = A.size(), n = c.size();
    for (const auto& bi : b) assert(bi >= 0);

    // Tableau: m rows of [A | I | b], objective row below.
    RatMatrix t(m + 1, RatVec(n + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = b[i];
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = c[j];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: entering column = lowest index with positive reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (t[m][j] > 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;  // optimal

        // Leaving row: minimal ratio, ties by lowest basis index.
        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            LpResult r;
            r.bounded = false;
            return r;
        }

        Rat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpResult r;
    r.value = -t[m][n + m];
    r.solution.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) r.solution[basis[i]] = t[i][n + m];
    return r;
}

int cone_dimension(int num_vars, const RatMatrix& equalities, const RatMatrix& inequalities)
{
    const int n = num_vars;
    // Standard form over x = u - v, u,v >= 0, with a unit box to keep the
    // per-row LPs bounded; the cone's dimension is unchanged by the box.
    auto build = [&](const RatVec& objective, LpResult& out) {
        RatMatrix A;
        RatVec b;
        auto push = [&](const RatVec& row, const Rat& rhs) {
            RatVec r(2 * n);
            for (int j = 0; j < n; ++j) {
                r[j] = row[j];
                r[n + j] = -row[j];
            }
            A.push_back(std::move(r));
            b.push_back(rhs);
        };
        for (const auto& e : equalities) {
            push(e, Rat(0));
            RatVec neg(e.size());
            for (std::size_t j = 0; j < e.size(); ++j) neg[j] = -e[j];
            push(neg, Rat(0));
        }
        for (const auto& a : inequalities) push(a, Rat(0));
        for (int j = 0; j < 2 * n; ++j) {
            RatVec box(2 * n);
            box[j] = 1;
            A.push_back(std::move(box));
            b.push_back(Rat(1));
        }
        RatVec c(2 * n);
        for (int j = 0; j < n; ++j) {
            c[j] = objective[j];
            c[n + j] = -objective[j];
        }
        out = simplex_max(A, b, c);
    };

    RatMatrix tight = equalities;
    for (const auto& a : inequalities) {
        RatVec obj(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) obj[j] = -a[j];  // maximize slack
        LpResult res;
        build(obj, res);
        assert(res.bounded);
        if (res.value == 0) tight.push_back(a);
    }
    if (tight.empty()) return n;
    return n - rank(tight);
}

}  // namespace tropmoduli
