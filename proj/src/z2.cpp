#include "godeaux/z2.hpp"

#include <stdexcept>

namespace godeaux {

namespace {

std::vector<int> reduce(std::vector<BitVector>& a, int cols) {
    std::vector<int> piv;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && !a[p][c]) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c])
                for (int j = c; j < cols; ++j) a[i][j] ^= a[r][j];
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::vector<BitVector> checked(const BitMatrix& m) {
    for (const auto& r : m.rows)
        if (static_cast<int>(r.size()) != m.cols) throw std::invalid_argument("bit matrix: ragged rows");
    auto a = m.rows;
    for (auto& r : a)
        for (auto& b : r) b &= 1u;
    return a;
}

}  // namespace

std::vector<BitVector> z2_kernel(const BitMatrix& m) {
    auto a = checked(m);
    auto piv = reduce(a, m.cols);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<BitVector> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        BitVector v(m.cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = a[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

int z2_rank(const BitMatrix& m) {
    auto a = checked(m);
    return static_cast<int>(reduce(a, m.cols).size());
}

}  // namespace godeaux
