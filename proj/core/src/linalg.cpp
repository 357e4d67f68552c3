#include "cmsdef/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace cmsdef {

std::vector<std::vector<RatK>> nullspace(const std::vector<std::vector<KPoly>>& a, int cols) {
    std::vector<std::vector<KPoly>> m(a);
    const int rows = static_cast<int>(m.size());
    for (const auto& row : m) {
        (void)row;
        assert(static_cast<int>(row.size()) == cols);
    }

    std::vector<char> row_used(rows, 0);
    std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order
    KPoly prev(1);
    for (int c = 0; c < cols; ++c) {
        int pr = -1;
        long best = -1;
        for (int r = 0; r < rows; ++r) {
            if (row_used[r] || m[r][c].is_zero()) continue;
            long nnz = 0;
            for (int j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) ++nnz;
            long score = static_cast<long>(m[r][c].degree()) * 10000 + nnz;
            if (pr < 0 || score < best) {
                pr = r;
                best = score;
            }
        }
        if (pr < 0) continue;  // free column
        row_used[pr] = 1;
        pivots.emplace_back(pr, c);
        const KPoly piv = m[pr][c];
        for (int r = 0; r < rows; ++r) {
            if (row_used[r]) continue;
            // every active row is transformed, including those with a zero
            // entry in the pivot column: the exactness of later divisions
            // relies on all entries being minors of the original matrix
            const KPoly f = m[r][c];
            for (int j = c + 1; j < cols; ++j) {
                KPoly v = f.is_zero() ? piv * m[r][j] : piv * m[r][j] - f * m[pr][j];
                m[r][j] = prev.is_one() ? std::move(v) : v.divexact(prev);
            }
            m[r][c] = KPoly();
        }
        prev = piv;
    }

    std::vector<char> is_pivot_col(cols, 0);
    for (auto [r, c] : pivots) is_pivot_col[c] = 1;

    std::vector<std::vector<RatK>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<RatK> x(cols, RatK(0));
        x[f] = RatK(1);
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            auto [r, c] = *it;
            RatK s(0);
            for (int j = c + 1; j < cols; ++j)
                if (!m[r][j].is_zero() && !x[j].is_zero()) s += RatK(m[r][j]) * x[j];
            x[c] = -s / RatK(m[r][c]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<RatK>> nullspace_ratk(const KMat& a, int cols) {
    std::vector<std::vector<KPoly>> m;
    m.reserve(a.size());
    for (const auto& row : a) {
        KPoly l(1);
        for (const auto& e : row)
            if (!e.is_zero()) l = l.divexact(KPoly::gcd(l, e.den())) * e.den();
        std::vector<KPoly> r(cols);
        for (int j = 0; j < cols; ++j)
            if (!row[j].is_zero()) r[j] = row[j].num() * l.divexact(row[j].den());
        m.push_back(std::move(r));
    }
    return nullspace(m, cols);
}

std::vector<int> rref(KMat& a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return {};
    const int cols = static_cast<int>(a[0].size());
    std::vector<int> pivot_cols;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int sel = -1;
        for (int r = pr; r < rows; ++r)
            if (!a[r][c].is_zero()) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(a[pr], a[sel]);
        RatK inv = a[pr][c].inverse();
        for (int j = c; j < cols; ++j) a[pr][j] = a[pr][j] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || a[r][c].is_zero()) continue;
            RatK f = a[r][c];
            for (int j = c; j < cols; ++j) a[r][j] = a[r][j] - f * a[pr][j];
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    return pivot_cols;
}

int rank(KMat a) {
    return static_cast<int>(rref(a).size());
}

bool in_convex_hull(const std::vector<int>& point,
                    const std::vector<std::vector<int>>& points) {
    if (points.empty()) return false;
    const int d = static_cast<int>(point.size());
    const int n = static_cast<int>(points.size());
    // quick reject: outside the bounding box
    for (int i = 0; i < d; ++i) {
        int lo = points[0][i], hi = points[0][i];
        for (const auto& p : points) {
            lo = std::min(lo, p[i]);
            hi = std::max(hi, p[i]);
        }
        if (point[i] < lo || point[i] > hi) return false;
    }
    // feasibility of  sum l_i p_i = q, sum l_i = 1, l >= 0  (phase-1 simplex)
    const int m = d + 1;
    std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(n + m + 1, 0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = points[j][i];
        t[i][n + m] = point[i];
    }
    for (int j = 0; j < n; ++j) t[d][j] = 1;
    t[d][n + m] = 1;
    for (int i = 0; i < m; ++i) {
        if (t[i][n + m] < 0)
            for (auto& v : t[i]) v = -v;
        t[i][n + i] = 1;
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;
    // objective row: minimize sum of artificials; reduced costs for columns
    std::vector<mpq_class> obj(n + m + 1, 0);
    for (int j = 0; j <= n + m; ++j) {
        mpq_class s = 0;
        for (int i = 0; i < m; ++i) s += t[i][j];
        bool artificial = j >= n && j < n + m;
        obj[j] = (artificial ? mpq_class(1) : mpq_class(0)) - s;
    }
    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (obj[j] < 0) { enter = j; break; }  // Bland's rule
        if (enter < 0) break;
        int leave = -1;
        mpq_class best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            mpq_class ratio = t[i][n + m] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return false;  // unbounded: cannot happen for phase 1
        mpq_class piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            mpq_class f = t[i][enter];
            for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        mpq_class fo = obj[enter];
        if (fo != 0)
            for (int j = 0; j <= n + m; ++j) obj[j] -= fo * t[leave][j];
        basis[leave] = enter;
    }
    mpq_class opt = 0;
    for (int i = 0; i < m; ++i)
        if (basis[i] >= n && basis[i] < n + m) opt += t[i][n + m];
    return opt == 0;
}

} // namespace cmsdef
