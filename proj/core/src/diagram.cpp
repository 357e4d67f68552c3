#include "cmsdef/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmsdef {

bool pt_greater(const Pt& a, const Pt& b) {
    return a.second > b.second || (a.second == b.second && a.first < b.first);
}

namespace {

bool pt_geq(const Pt& a, const Pt& b) { return a == b || pt_greater(a, b); }
bool pt_leq(const Pt& a, const Pt& b) { return a == b || pt_greater(b, a); }

Edge mk_edge(Pt a, Pt b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

void add_hrun(EdgeSet& es, int y, int x0, int x1, const LatticeBox& box) {
    x0 = std::max(x0, box.xlo);
    x1 = std::min(x1, box.xhi);
    for (int x = x0; x < x1; ++x) es.insert(mk_edge({x, y}, {x + 1, y}));
}

void add_vrun(EdgeSet& es, int x, int y0, int y1, const LatticeBox& box) {
    y0 = std::max(y0, box.ylo);
    y1 = std::min(y1, box.yhi);
    for (int y = y0; y < y1; ++y) es.insert(mk_edge({x, y}, {x, y + 1}));
}

std::set<Pt> edge_points(const EdgeSet& es) {
    std::set<Pt> pts;
    for (const auto& e : es) {
        pts.insert(e.first);
        pts.insert(e.second);
    }
    return pts;
}

} // namespace

EdgeSet line_edges(const PolyLine& line, const LatticeBox& box) {
    EdgeSet es;
    const auto& v = line.verts;
    if (line.kind == PolyLine::Kind::gamma) {
        // rays: y = y(first vertex) to the right, y = y(last) to the left
        add_hrun(es, v.front().second, v.front().first, box.xhi, box);
        add_hrun(es, v.back().second, box.xlo, v.back().first, box);
        for (size_t t = 0; t + 1 < v.size(); ++t) {
            Pt a = v[t], b = v[t + 1];
            if (a.first == b.first)
                add_vrun(es, a.first, std::min(a.second, b.second), std::max(a.second, b.second), box);
            else
                add_hrun(es, a.second, std::min(a.first, b.first), std::max(a.first, b.first), box);
        }
    } else {
        add_vrun(es, v.front().first, v.front().second, box.yhi, box);
        add_vrun(es, v.back().first, box.ylo, v.back().second, box);
        for (size_t t = 0; t + 1 < v.size(); ++t) {
            Pt a = v[t], b = v[t + 1];
            if (a.first == b.first)
                add_vrun(es, a.first, std::min(a.second, b.second), std::max(a.second, b.second), box);
            else
                add_hrun(es, a.second, std::min(a.first, b.first), std::max(a.first, b.first), box);
        }
    }
    return es;
}

std::pair<PolyLine, PolyLine> gamma_lines(const Weight& chi) {
    if (!is_dominant(chi)) throw std::domain_error("weight not dominant");
    if (chi.n < 1 || chi.m < 1)
        throw std::invalid_argument("polygonal lines need n >= 1 and m >= 1");
    PolyLine ga{PolyLine::Kind::gamma, {}};
    for (int i = 1; i <= chi.n; ++i) {
        ga.verts.push_back({chi.chi[i - 1], i - 1});
        ga.verts.push_back({chi.chi[i - 1], i});
    }
    PolyLine gb{PolyLine::Kind::gamma_hat, {}};
    for (int j = 1; j <= chi.m; ++j) {
        gb.verts.push_back({j - 1, chi.n + chi.chi[chi.n + j - 1]});
        gb.verts.push_back({j, chi.n + chi.chi[chi.n + j - 1]});
    }
    return {ga, gb};
}

LatticeBox weight_box(const Weight& chi) {
    auto [ga, gb] = gamma_lines(chi);
    LatticeBox b{0, 0, 0, 0};
    bool first = true;
    for (const auto& line : {ga, gb})
        for (const auto& p : line.verts) {
            if (first) {
                b = {p.first, p.first, p.second, p.second};
                first = false;
            }
            b.xlo = std::min(b.xlo, p.first);
            b.xhi = std::max(b.xhi, p.first);
            b.ylo = std::min(b.ylo, p.second);
            b.yhi = std::max(b.yhi, p.second);
        }
    return {b.xlo - 1, b.xhi + 1, b.ylo - 1, b.yhi + 1};
}

namespace {
// D+/D- of a single staircase block with row values vals (vals[i] at row i)
std::pair<SquareSet, SquareSet> block_regions(const std::vector<int>& vals) {
    SquareSet plus, minus;
    for (size_t i = 0; i < vals.size(); ++i) {
        for (int x = 0; x < vals[i]; ++x) plus.insert({x, static_cast<int>(i)});
        for (int x = vals[i]; x < 0; ++x) minus.insert({x, static_cast<int>(i)});
    }
    return {plus, minus};
}
} // namespace

std::pair<SquareSet, SquareSet> regions(const Weight& chi) {
    if (!is_dominant(chi)) throw std::domain_error("weight not dominant");
    std::vector<int> a(chi.chi.begin(), chi.chi.begin() + chi.n);
    std::vector<int> b(chi.chi.begin() + chi.n, chi.chi.end());
    auto [pa, ma] = block_regions(a);
    auto [pb, mb] = block_regions(b);
    // tau_n . omega maps a square with lower-left (x, y) to one at (y, x + n)
    SquareSet plus(pa), minus(ma);
    for (const auto& s : pb) plus.insert({s.second, s.first + chi.n});
    for (const auto& s : mb) minus.insert({s.second, s.first + chi.n});
    return {plus, minus};
}

RatK c_weight(const Square& s) {
    return RatK(s.first) + RatK::k() * RatK(s.second);
}

RatK b_gen_geo(int r, const Weight& chi) {
    if (r < 1) throw std::invalid_argument("generator index must be positive");
    auto [plus, minus] = regions(chi);
    RatK acc(0);
    auto cpow = [&](const Square& s) {
        RatK c = c_weight(s), p(1);
        for (int t = 0; t < r - 1; ++t) p *= c;
        return p;
    };
    for (const auto& s : plus)
        if (!minus.count(s)) acc += cpow(s);
    for (const auto& s : minus)
        if (!plus.count(s)) acc -= cpow(s);
    return acc * RatK(r);
}

namespace {
// interior corner points of an edge set: both a horizontal and a vertical
// incident edge
std::vector<Pt> corner_points(const EdgeSet& es) {
    std::map<Pt, std::pair<bool, bool>> inc;  // point -> (has horizontal, has vertical)
    for (const auto& e : es) {
        bool horiz = e.first.second == e.second.second;
        for (const Pt& p : {e.first, e.second}) {
            auto& f = inc[p];
            (horiz ? f.first : f.second) = true;
        }
    }
    std::vector<Pt> out;
    for (const auto& [p, f] : inc)
        if (f.first && f.second) out.push_back(p);
    return out;
}
} // namespace

std::string union_line_key(const Weight& chi) {
    auto [ga, gb] = gamma_lines(chi);
    LatticeBox b0 = weight_box(chi);
    EdgeSet u0 = line_edges(ga, b0);
    EdgeSet eb = line_edges(gb, b0);
    u0.insert(eb.begin(), eb.end());
    // canonical box: corners of the union are intrinsic to the point set
    auto corners = corner_points(u0);
    assert(!corners.empty());
    LatticeBox b1{corners[0].first, corners[0].first, corners[0].second, corners[0].second};
    for (const auto& p : corners) {
        b1.xlo = std::min(b1.xlo, p.first);
        b1.xhi = std::max(b1.xhi, p.first);
        b1.ylo = std::min(b1.ylo, p.second);
        b1.yhi = std::max(b1.yhi, p.second);
    }
    b1 = {b1.xlo - 1, b1.xhi + 1, b1.ylo - 1, b1.yhi + 1};
    EdgeSet u1 = line_edges(ga, b1);
    EdgeSet eb1 = line_edges(gb, b1);
    u1.insert(eb1.begin(), eb1.end());
    std::ostringstream os;
    os << chi.n << ";" << chi.m << ";" << b1.xlo << "," << b1.xhi << "," << b1.ylo << ","
       << b1.yhi << ";";
    for (const auto& e : u1)
        os << "(" << e.first.first << "," << e.first.second << ")-(" << e.second.first << ","
           << e.second.second << ");";
    return os.str();
}

Square eta(const Root& a, int n, int m) {
    if (a.i < 0 || a.i >= n || a.j < n || a.j >= n + m)
        throw std::invalid_argument("eta expects an odd positive root");
    return {a.j - n, a.i};
}

Root eta_inv(const Square& s, int n, int m) {
    if (s.first < 0 || s.first >= m || s.second < 0 || s.second >= n)
        throw std::invalid_argument("square outside the [0,m] x [0,n] rectangle");
    return Root{s.second, n + s.first};
}

namespace {

struct GapData {
    Pt from, to;          // Q_t, P_{t+1}
    EdgeSet piece_a, piece_b;
    std::vector<Square> cells;   // between the two ways
    bool a_is_lower = true;
};

// edges of `es` whose endpoints both lie in the closed order interval [lo, hi]
EdgeSet edges_between(const EdgeSet& es, const Pt& lo, const Pt& hi) {
    EdgeSet out;
    for (const auto& e : es)
        if (pt_geq(e.first, lo) && pt_leq(e.first, hi) && pt_geq(e.second, lo) &&
            pt_leq(e.second, hi))
            out.insert(e);
    return out;
}

// x of the unique vertical edge of `es` in the band [y, y+1]
int band_wall(const EdgeSet& es, int y, const char* what) {
    int found = 0, where = 0;
    for (const auto& e : es)
        if (e.first.first == e.second.first && e.first.second == y) {
            ++found;
            where = e.first.first;
        }
    if (found != 1)
        throw std::logic_error(std::string("staircase structure violated: ") + what);
    return where;
}

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

EqClassReport eq_class(const Weight& chi) {
    if (!is_dominant(chi)) throw std::domain_error("weight not dominant");
    const int n = chi.n, m = chi.m;
    auto [ga, gb] = gamma_lines(chi);
    LatticeBox box = weight_box(chi);
    EdgeSet ea = line_edges(ga, box), eb = line_edges(gb, box);

    // intersection of the two lines: shared edges and shared points
    EdgeSet shared_edges;
    for (const auto& e : ea)
        if (eb.count(e)) shared_edges.insert(e);
    std::set<Pt> pa = edge_points(ea), pb = edge_points(eb);
    std::vector<Pt> ipts;
    for (const auto& p : pa)
        if (pb.count(p)) ipts.push_back(p);
    if (ipts.empty()) throw std::logic_error("lines of a dominant weight must intersect");
    std::map<Pt, int> idx;
    for (size_t t = 0; t < ipts.size(); ++t) idx[ipts[t]] = static_cast<int>(t);
    DSU dsu(static_cast<int>(ipts.size()));
    for (const auto& e : shared_edges) dsu.unite(idx[e.first], idx[e.second]);
    std::map<int, std::vector<Pt>> comp_pts;
    for (size_t t = 0; t < ipts.size(); ++t)
        comp_pts[dsu.find(static_cast<int>(t))].push_back(ipts[t]);

    struct Comp {
        Pt pmax, pmin;
    };
    std::vector<Comp> comps;
    for (auto& [root, pts] : comp_pts) {
        Comp c{pts[0], pts[0]};
        for (const auto& p : pts) {
            if (pt_greater(p, c.pmax)) c.pmax = p;
            if (pt_greater(c.pmin, p)) c.pmin = p;
        }
        comps.push_back(c);
    }
    std::sort(comps.begin(), comps.end(),
              [](const Comp& a, const Comp& b) { return pt_greater(a.pmax, b.pmax); });
    for (size_t t = 0; t + 1 < comps.size(); ++t)
        if (!pt_greater(comps[t].pmin, comps[t + 1].pmax))
            throw std::logic_error("intersection components are not order-separated");

    const int r = static_cast<int>(comps.size()) - 1;
    std::vector<GapData> gaps;
    for (int t = 0; t < r; ++t) {
        GapData g;
        g.from = comps[t].pmin;      // Q_t
        g.to = comps[t + 1].pmax;    // P_{t+1}
        g.piece_a = edges_between(ea, g.to, g.from);
        g.piece_b = edges_between(eb, g.to, g.from);
        int str_lower = 0, str_upper = 0;
        for (int y = g.to.second; y < g.from.second; ++y) {
            int wa = band_wall(g.piece_a, y, "gap walls");
            int wb = band_wall(g.piece_b, y, "gap walls");
            for (int x = std::min(wa, wb); x < std::max(wa, wb); ++x)
                g.cells.push_back({x, y});
            if (wa < wb) ++str_lower;
            if (wa > wb) ++str_upper;
        }
        if (str_lower && str_upper)
            throw std::logic_error("gap ways cross (staircase structure violated)");
        g.a_is_lower = str_upper == 0;
        std::sort(g.cells.begin(), g.cells.end());
        gaps.push_back(std::move(g));
    }

    // assemble all 2^r members by swapping gap pieces, then decode weights
    auto decode = [&](unsigned mask) {
        EdgeSet la = ea, lb = eb;
        for (int t = 0; t < r; ++t)
            if (mask >> t & 1u) {
                for (const auto& e : gaps[t].piece_a) la.erase(e);
                for (const auto& e : gaps[t].piece_b) la.insert(e);
                for (const auto& e : gaps[t].piece_b) lb.erase(e);
                for (const auto& e : gaps[t].piece_a) lb.insert(e);
            }
        Exponent w(n + m, 0);
        for (int i = 0; i < n; ++i) w[i] = band_wall(la, i, "member decode (a block)");
        for (int j = 0; j < m; ++j) {
            int found = 0, yy = 0;
            for (const auto& e : lb)
                if (e.first.second == e.second.second && e.first.first == j &&
                    e.second.first == j + 1) {
                    ++found;
                    yy = e.first.second;
                }
            if (found != 1) throw std::logic_error("member decode (b block)");
            w[n + j] = yy - n;
        }
        Weight cw(n, m, w);
        // re-encode and compare: the assembled sets must be genuine lines
        auto [ra, rb] = gamma_lines(cw);
        if (line_edges(ra, box) != la || line_edges(rb, box) != lb)
            throw std::logic_error("member decode does not re-encode to its lines");
        return cw;
    };

    EqClassReport rep;
    rep.chi = chi;
    rep.r = r;
    for (unsigned mask = 0; mask < (1u << r); ++mask) rep.members.push_back(decode(mask));
    std::sort(rep.members.begin(), rep.members.end());
    unsigned min_mask = 0;
    for (int t = 0; t < r; ++t)
        if (!gaps[t].a_is_lower) min_mask |= 1u << t;
    rep.chi_min = decode(min_mask);
    for (const auto& c : comps) rep.gamma_endpoints.push_back({c.pmax, c.pmin});
    for (int t = 0; t < r; ++t) {
        NuComponent nc;
        nc.cells = gaps[t].cells;
        // chain order: rows top down, left to right inside a row
        std::vector<Square> ordered(nc.cells);
        std::sort(ordered.begin(), ordered.end(), [](const Square& a, const Square& b) {
            return a.second != b.second ? a.second > b.second : a.first < b.first;
        });
        nc.beta.assign(n + m, 0);
        for (const auto& s : ordered) {
            Root rt = eta_inv(s, n, m);
            nc.roots.push_back(rt);
            nc.beta[rt.i] += 1;
            nc.beta[rt.j] -= 1;
        }
        rep.nu.push_back(std::move(nc));
    }
    return rep;
}

RootChainReport r_chi(const Weight& chi_min) {
    if (!is_dominant(chi_min)) throw std::domain_error("weight not dominant");
    if (!is_regular(chi_min))
        throw std::domain_error("not the minimal representative (weight outside X_reg)");
    const int n = chi_min.n, m = chi_min.m;
    auto roots = odd_positive_roots(n, m);
    FormVector base = to_form_vector(chi_min);
    FormVector rh = rho(n, m);
    for (int i = 0; i < n + m; ++i) base[i] += rh[i];
    RatK half(KPoly(1), KPoly(2));

    // breadth-first search over accumulated shifts; an edge labelled alpha
    // exists at state s when (chi + rho + s, alpha) + (alpha,alpha)/2 = 0
    std::set<Exponent> seen;
    std::vector<Exponent> queue;
    Exponent zero(n + m, 0);
    seen.insert(zero);
    queue.push_back(zero);
    std::set<std::pair<int, int>> found;  // roots in R(chi)
    while (!queue.empty()) {
        if (seen.size() > 20000) throw std::length_error("root chain search exceeded bound");
        Exponent s = queue.back();
        queue.pop_back();
        for (const Root& a : roots) {
            RatK val(0);
            FormVector v(base);
            for (int i = 0; i < n + m; ++i) v[i] += RatK(s[i]);
            val = inner(v, root_vector(a, n + m), n) + half * root_norm2(a, n);
            if (!val.is_zero()) continue;
            found.insert({a.i, a.j});
            Exponent s2(s);
            s2[a.i] += 1;
            s2[a.j] -= 1;
            if (seen.insert(s2).second) queue.push_back(s2);
        }
    }

    RootChainReport rep;
    for (const auto& [i, j] : found) rep.all.push_back(Root{i, j});
    // orthogonal components: roots are non-orthogonal iff they share an index
    DSU dsu(static_cast<int>(rep.all.size()));
    for (size_t x = 0; x < rep.all.size(); ++x)
        for (size_t y = x + 1; y < rep.all.size(); ++y)
            if (rep.all[x].i == rep.all[y].i || rep.all[x].j == rep.all[y].j)
                dsu.unite(static_cast<int>(x), static_cast<int>(y));
    std::map<int, std::vector<Root>> groups;
    for (size_t x = 0; x < rep.all.size(); ++x)
        groups[dsu.find(static_cast<int>(x))].push_back(rep.all[x]);
    for (auto& [root, g] : groups) {
        // chain order: rows top down (i descending), columns left to right
        std::sort(g.begin(), g.end(), [](const Root& a, const Root& b) {
            return a.i != b.i ? a.i > b.i : a.j < b.j;
        });
        // verify the chain condition (exact, step by step)
        FormVector acc(base);
        for (const Root& a : g) {
            RatK val = inner(acc, root_vector(a, n + m), n) + half * root_norm2(a, n);
            if (!val.is_zero())
                throw std::logic_error("chain condition fails for the component ordering");
            acc[a.i] += RatK(1);
            acc[a.j] -= RatK(1);
        }
        Exponent beta(n + m, 0);
        for (const Root& a : g) {
            beta[a.i] += 1;
            beta[a.j] -= 1;
        }
        rep.components.push_back(g);
        rep.betas.push_back(beta);
    }
    return rep;
}

std::string render_ascii(const Weight& chi) {
    auto [ga, gb] = gamma_lines(chi);
    LatticeBox box = weight_box(chi);
    EdgeSet ea = line_edges(ga, box), eb = line_edges(gb, box);
    EqClassReport rep = eq_class(chi);
    std::set<Square> nu;
    for (const auto& c : rep.nu) nu.insert(c.cells.begin(), c.cells.end());

    const int w = 2 * (box.xhi - box.xlo) + 1;
    const int h = 2 * (box.yhi - box.ylo) + 1;
    std::vector<std::string> grid(h, std::string(w, ' '));
    auto put = [&](int gx, int gy, char c) { grid[h - 1 - gy][gx] = c; };
    auto draw = [&](const EdgeSet& es, char hc, char vc) {
        for (const auto& e : es) {
            int gx = 2 * (e.first.first - box.xlo), gy = 2 * (e.first.second - box.ylo);
            put(gx, gy, '+');
            put(2 * (e.second.first - box.xlo), 2 * (e.second.second - box.ylo), '+');
            if (e.first.second == e.second.second)
                put(gx + 1, gy, hc);
            else
                put(gx, gy + 1, vc);
        }
    };
    draw(ea, '-', '|');
    draw(eb, '=', ':');
    for (const auto& e : ea)
        if (eb.count(e)) {
            int gx = 2 * (e.first.first - box.xlo), gy = 2 * (e.first.second - box.ylo);
            if (e.first.second == e.second.second)
                put(gx + 1, gy, '#');
            else
                put(gx, gy + 1, '#');
        }
    for (const auto& s : nu)
        put(2 * (s.first - box.xlo) + 1, 2 * (s.second - box.ylo) + 1, '*');
    std::ostringstream os;
    os << "weight " << chi.str() << "  (- | Gamma_a, = : Gamma_hat_b, # common, * nu)\n";
    for (const auto& row : grid) os << row << "\n";
    return os.str();
}

} // namespace cmsdef
