#include "cmsdef/bipart.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cmsdef {

int part_at(const Partition& p, int i) {
    return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

long part_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0L);
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

bool in_hook(const Partition& lam, int n, int m) {
    if (n < 0 || m < 0) return false;
    return part_at(lam, n + 1) <= m;
}

bool in_cross(const Partition& lam, const Partition& mu, int n, int m) {
    for (int p = 0; p <= n; ++p)
        for (int r = 0; r <= m; ++r)
            if (in_hook(lam, p, r) && in_hook(mu, n - p, m - r)) return true;
    return false;
}

std::pair<int, int> extremal_pair(const Partition& lam, const Partition& mu, int n, int m) {
    // H(lam,mu) = {(i,j) : lam in H(i, m-j), mu in H(n-i, j)}
    int p = -1;
    for (int i = n; i >= 0 && p < 0; --i)
        for (int j = 0; j <= m; ++j)
            if (in_hook(lam, i, m - j) && in_hook(mu, n - i, j)) {
                p = i;
                break;
            }
    if (p < 0) throw std::domain_error("bipartition not in the (n,m) cross");
    int s = -1;
    for (int j = m; j >= 0 && s < 0; --j)
        if (in_hook(lam, p, m - j) && in_hook(mu, n - p, j)) s = j;
    return {p, s};
}

FMapResult f_map(const Partition& lam, const Partition& mu, int n, int m) {
    const int lcut = part_at(lam, n + 1);
    Partition lt;
    for (int x : lam)
        if (x - lcut > 0) lt.push_back(x - lcut);
    Partition muc = conjugate(mu);
    const int mcut = part_at(muc, m + 1);
    Partition mtc;
    for (int x : muc)
        if (x - mcut > 0) mtc.push_back(x - mcut);
    return {lt, conjugate(mtc), n - mcut, m - lcut};
}

Weight pi_map(const Partition& lam, const Partition& mu, int n, int m) {
    auto [p, s] = extremal_pair(lam, mu, n, m);
    const int q = n - p, r = m - s;
    Partition lamc = conjugate(lam), muc = conjugate(mu);
    Exponent chi;
    for (int i = 1; i <= p; ++i) chi.push_back(part_at(lam, i));
    for (int t = 1; t <= q; ++t) chi.push_back(m - part_at(mu, q + 1 - t));
    for (int j = 1; j <= r; ++j) chi.push_back(part_at(lamc, j) - n);
    for (int t = 1; t <= s; ++t) chi.push_back(-part_at(muc, s + 1 - t));
    Weight w(n, m, std::move(chi));
    if (!is_dominant(w)) throw std::logic_error("pi image is not dominant");
    return w;
}

YoungLine young_line(const Partition& lam) {
    return {lam, false, 0, 0};
}

YoungLine theta_flip(int n, int m, const YoungLine& line) {
    if (line.flipped) throw std::invalid_argument("line already flipped");
    return {line.lam, true, n, m};
}

EdgeSet young_edges(const YoungLine& line, const LatticeBox& box) {
    // unflipped: staircase of lam with rays y=0 rightward and x=0 upward
    const Partition& lam = line.lam;
    const int rows = static_cast<int>(lam.size());
    EdgeSet es;
    auto add_h = [&](int y, int x0, int x1) {
        for (int x = std::max(x0, box.xlo); x < std::min(x1, box.xhi); ++x)
            es.insert(Edge{{x, y}, {x + 1, y}});
    };
    auto add_v = [&](int x, int y0, int y1) {
        for (int y = std::max(y0, box.ylo); y < std::min(y1, box.yhi); ++y)
            es.insert(Edge{{x, y}, {x, y + 1}});
    };
    add_h(0, part_at(lam, 1), box.xhi);          // right ray
    for (int i = 1; i <= rows; ++i) {
        add_v(part_at(lam, i), i - 1, i);
        add_h(i, part_at(lam, i + 1), part_at(lam, i));
    }
    add_v(0, rows, box.yhi);                     // upward ray
    if (!line.flipped) return es;
    // theta_{n,m}(x, y) = (m - x, n - y): the x axis pairs with the second
    // block, matching the [0,m] x [0,n] rectangle of the Gamma picture
    EdgeSet out;
    for (const auto& e : es) {
        Pt a{line.m - e.first.first, line.n - e.first.second};
        Pt b{line.m - e.second.first, line.n - e.second.second};
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

namespace {

LatticeBox sigma_box(const Partition& lam, const Partition& mu, int n, int m) {
    int xhi = std::max({part_at(lam, 1), m, 1});
    int yhi = std::max({static_cast<int>(lam.size()), n, 1});
    int xlo = std::min({0, m - part_at(mu, 1)});
    int ylo = std::min({0, n - static_cast<int>(mu.size())});
    return {xlo - 1, xhi + 1, ylo - 1, yhi + 1};
}

std::set<Pt> points_of(const EdgeSet& es) {
    std::set<Pt> pts;
    for (const auto& e : es) {
        pts.insert(e.first);
        pts.insert(e.second);
    }
    return pts;
}

EdgeSet side_edges(const EdgeSet& es, const Pt& M, bool below) {
    EdgeSet out;
    for (const auto& e : es) {
        bool in1 = below ? !pt_greater(e.first, M) : !pt_greater(M, e.first);
        bool in2 = below ? !pt_greater(e.second, M) : !pt_greater(M, e.second);
        if (in1 && in2) out.insert(e);
    }
    return out;
}

// read the a-block walls of a gamma edge set: one vertical edge per band
int wall_x(const EdgeSet& es, int band, const char* what) {
    int found = 0, where = 0;
    for (const auto& e : es)
        if (e.first.first == e.second.first && e.first.second == band) {
            ++found;
            where = e.first.first;
        }
    if (found != 1) throw std::logic_error(std::string("not a staircase: ") + what);
    return where;
}

int wall_y(const EdgeSet& es, int col, const char* what) {
    int found = 0, where = 0;
    for (const auto& e : es)
        if (e.first.second == e.second.second && e.first.first == col &&
            e.second.first == col + 1) {
            ++found;
            where = e.first.second;
        }
    if (found != 1) throw std::logic_error(std::string("not a staircase: ") + what);
    return where;
}

} // namespace

Weight sigma_map(const Partition& lam, const Partition& mu, int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("sigma needs n >= 1 and m >= 1");
    LatticeBox box = sigma_box(lam, mu, n, m);
    EdgeSet ey = young_edges(young_line(lam), box);
    EdgeSet et = young_edges(theta_flip(n, m, young_line(mu)), box);
    std::set<Pt> py = points_of(ey), pt = points_of(et);
    Pt M;
    bool have = false;
    for (const auto& p : py)
        if (pt.count(p) && (!have || pt_greater(p, M))) {
            M = p;
            have = true;
        }
    if (!have) throw std::domain_error("bipartition not in the (n,m) cross");
    EdgeSet ga = side_edges(ey, M, true);
    EdgeSet gb_part = side_edges(et, M, false);
    ga.insert(gb_part.begin(), gb_part.end());
    EdgeSet gb = side_edges(ey, M, false);
    EdgeSet ga_part = side_edges(et, M, true);
    gb.insert(ga_part.begin(), ga_part.end());

    Exponent chi(n + m, 0);
    for (int i = 0; i < n; ++i) chi[i] = wall_x(ga, i, "sigma a-block");
    for (int j = 0; j < m; ++j) chi[n + j] = wall_y(gb, j, "sigma b-block") - n;
    Weight w(n, m, std::move(chi));
    if (!is_dominant(w)) throw std::logic_error("sigma image is not dominant");
    return w;
}

std::pair<Partition, Partition> pi_inverse(const Weight& chi) {
    auto [ga, gb] = gamma_lines(chi);
    LatticeBox box = weight_box(chi);
    EdgeSet ea = line_edges(ga, box), eb = line_edges(gb, box);
    std::set<Pt> pa = points_of(ea), pb = points_of(eb);
    Pt M;
    bool have = false;
    for (const auto& p : pa)
        if (pb.count(p) && (!have || pt_greater(p, M))) {
            M = p;
            have = true;
        }
    if (!have) throw std::logic_error("lines of a dominant weight must intersect");
    EdgeSet ylam = side_edges(ea, M, true);
    EdgeSet up = side_edges(eb, M, false);
    ylam.insert(up.begin(), up.end());
    EdgeSet ymu_f = side_edges(eb, M, true);
    EdgeSet up2 = side_edges(ea, M, false);
    ymu_f.insert(up2.begin(), up2.end());
    // un-flip the second line: theta is an involution
    EdgeSet ymu;
    for (const auto& e : ymu_f) {
        Pt a{chi.m - e.first.first, chi.n - e.first.second};
        Pt b{chi.m - e.second.first, chi.n - e.second.second};
        if (b < a) std::swap(a, b);
        ymu.insert({a, b});
    }
    auto decode = [](const EdgeSet& es, int band_lo, int band_hi, const char* what) {
        Partition out;
        for (int band = band_lo; band < band_hi; ++band) {
            int w = wall_x(es, band, what);
            if (w < 0) throw std::logic_error(std::string("negative wall: ") + what);
            if (w == 0) break;
            out.push_back(w);
        }
        if (!std::is_sorted(out.rbegin(), out.rend()))
            throw std::logic_error(std::string("walls not a partition: ") + what);
        return out;
    };
    Partition lam = decode(ylam, 0, box.yhi, "pi_inverse lambda");
    LatticeBox mubox{chi.m - box.xhi, chi.m - box.xlo, chi.n - box.yhi, chi.n - box.ylo};
    Partition mu = decode(ymu, 0, mubox.yhi, "pi_inverse mu");
    if (pi_map(lam, mu, chi.n, chi.m) != chi)
        throw std::logic_error("pi_inverse round trip failed");
    return {lam, mu};
}

} // namespace cmsdef
