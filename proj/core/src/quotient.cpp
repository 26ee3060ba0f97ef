#include "spectough/quotient.hpp"

#include <stdexcept>

#include "spectough/spectral.hpp"

namespace spectough {

std::vector<double> QuotientMatrix::to_double() const {
    std::vector<double> out(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) out[i] = entries[i].to_double();
    return out;
}

double QuotientMatrix::spectral_radius() const { return perron_root(to_double(), m); }

QuotientMatrix quotient_matrix(const DistanceMatrix& d, const std::vector<VertexSet>& blocks) {
    int n = d.order();
    int m = static_cast<int>(blocks.size());
    if (m == 0) throw std::invalid_argument("partition needs at least one block");

    std::vector<int> owner(n, -1);
    std::vector<int> sizes(m, 0);
    for (int b = 0; b < m; ++b) {
        if (blocks[b].universe() != n) throw std::invalid_argument("block universe mismatch");
        for (int v : blocks[b].to_vector()) {
            if (owner[v] != -1) throw std::invalid_argument("blocks are not disjoint");
            owner[v] = b;
            ++sizes[b];
        }
        if (sizes[b] == 0) throw std::invalid_argument("blocks must be nonempty");
    }
    for (int v = 0; v < n; ++v) {
        if (owner[v] == -1) throw std::invalid_argument("blocks do not cover every vertex");
    }

    QuotientMatrix q;
    q.m = m;
    q.block_sizes = sizes;
    q.entries.resize(static_cast<size_t>(m) * m);
    q.equitable = true;

    std::vector<int> members;
    for (int bi = 0; bi < m; ++bi) {
        members = blocks[bi].to_vector();
        for (int bj = 0; bj < m; ++bj) {
            long long total = 0;
            long long first = -1;
            bool constant = true;
            for (int v : members) {
                long long rs = 0;
                for (int u : blocks[bj].to_vector()) rs += d.at(v, u);
                total += rs;
                if (first < 0) {
                    first = rs;
                } else if (rs != first) {
                    constant = false;
                }
            }
            if (!constant) q.equitable = false;
            q.entries[static_cast<size_t>(bi) * m + bj] = Rational(total, sizes[bi]);
        }
    }
    return q;
}

std::array<Rational, 4> charpoly3(const QuotientMatrix& q) {
    if (q.m != 3) throw std::invalid_argument("charpoly3 needs a 3x3 quotient");
    const auto& a = q.entries;
    auto e = [&](int i, int j) { return a[static_cast<size_t>(i) * 3 + j]; };

    Rational trace = e(0, 0) + e(1, 1) + e(2, 2);
    Rational minors = (e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0)) +
                      (e(0, 0) * e(2, 2) - e(0, 2) * e(2, 0)) +
                      (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1));
    Rational det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                   e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                   e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    return {Rational(1), -trace, minors, -det};
}

double eval_cubic(const std::array<Rational, 4>& c, double x) {
    double acc = c[0].to_double();
    for (int i = 1; i < 4; ++i) acc = acc * x + c[i].to_double();
    return acc;
}

}  // namespace spectough
