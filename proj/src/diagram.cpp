#include "chowq/diagram.hpp"

#include "chowq/errors.hpp"

#include <algorithm>
#include <set>

namespace chowq {

std::vector<BasisElement> pyramid_row(const Geometry& g, int codim)
{
    require(codim >= 0 && codim <= g.D(), Errc::index_out_of_range, "pyramid rows are 0..D");
    struct Point {
        int first_codim;
        int group;
        BasisElement e;
    };
    std::vector<Point> pts;
    const int D = g.D(), d = g.d();
    for (int x = 0; x <= d; ++x) {
        // h^x × l_y has codimension x + D - y.
        const int y = x + D - codim;
        if (y >= 0 && y <= d)
            pts.push_back({x, 0, BasisElement{{Factor::h(x), Factor::l(y)}}});
        const int z = codim - x;
        if (z >= 0 && z <= d)
            pts.push_back({x, 1, BasisElement{{Factor::h(x), Factor::h(z)}}});
    }
    for (int y = 0; y <= d; ++y) {
        // l_y × h^z has codimension D - y + z.
        const int z = codim - D + y;
        if (z >= 0 && z <= d)
            pts.push_back({D - y, 2, BasisElement{{Factor::l(y), Factor::h(z)}}});
    }
    std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.first_codim != b.first_codim ? a.first_codim < b.first_codim : a.group < b.group;
    });
    std::vector<BasisElement> out;
    out.reserve(pts.size());
    for (auto& p : pts)
        out.push_back(std::move(p.e));
    return out;
}

std::string render_diagram(const Geometry& g, const Cycle* cycle, const DiagramOptions& options)
{
    if (cycle) {
        require(cycle->arity() == 2, Errc::arity_mismatch, "diagrams are drawn for arity-2 cycles");
        require(cycle->geometry() == g, Errc::geometry_mismatch, "cycle and diagram geometries differ");
    }
    if (options.splitting)
        options.splitting->validate(g);

    const char* open = options.color ? "\033[1;31m" : "";
    const char* close = options.color ? "\033[0m" : "";
    std::vector<std::vector<BasisElement>> rows;
    std::size_t widest = 0;
    for (int c = 0; c <= g.D(); ++c) {
        rows.push_back(pyramid_row(g, c));
        widest = std::max(widest, rows.back().size());
    }
    std::string out;
    for (int c = 0; c <= g.D(); ++c) {
        const auto& row = rows[static_cast<std::size_t>(c)];
        std::set<BasisElement> allowed;
        if (options.splitting) {
            std::vector<BasisElement> cells = forbidden_cells(g, *options.splitting, g.D() - c + 1);
            std::set<BasisElement> forbidden(cells.begin(), cells.end());
            for (const auto& e : row)
                if (e.essential() && !forbidden.count(e))
                    allowed.insert(e);
        }
        std::string line(widest - row.size(), ' ');
        for (std::size_t k = 0; k < row.size(); ++k) {
            const auto& e = row[k];
            if (k)
                line += ' ';
            if ((cycle && cycle->contains(e)) || allowed.count(e)) {
                line += open;
                line += "●";
                line += close;
            } else {
                line += e.essential() ? "∗" : "∘";
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace chowq
