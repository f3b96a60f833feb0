#include "vtx/matrix.hpp"

#include "vtx/util.hpp"

namespace vtx {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r != c) return false;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (!(at(i, j) - Cyc(i == j ? 1 : 0)).is_zero()) return false;
    return true;
}

Mat operator*(const Mat& x, const Mat& y) {
    VTX_CHECK(x.c == y.r, "matrix product shape");
    Mat z(x.r, y.c);
    for (int i = 0; i < x.r; ++i)
        for (int k = 0; k < x.c; ++k) {
            const Cyc& f = x.at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < y.c; ++j) {
                const Cyc& g = y.at(k, j);
                if (g.is_zero()) continue;
                z.at(i, j) += f * g;
            }
        }
    return z;
}

Mat operator+(const Mat& x, const Mat& y) {
    VTX_CHECK(x.r == y.r && x.c == y.c, "matrix sum shape");
    Mat z(x.r, x.c);
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

Mat operator-(const Mat& x, const Mat& y) {
    VTX_CHECK(x.r == y.r && x.c == y.c, "matrix difference shape");
    Mat z(x.r, x.c);
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

Mat scale(const Cyc& s, const Mat& x) {
    Mat z(x.r, x.c);
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = s * x.a[i];
    return z;
}

bool operator==(const Mat& x, const Mat& y) {
    if (x.r != y.r || x.c != y.c) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!(x.a[i] == y.a[i])) return false;
    return true;
}

Cyc trace(const Mat& x) {
    VTX_CHECK(x.r == x.c, "trace of square matrix");
    Cyc t(0);
    for (int i = 0; i < x.r; ++i) t += x.at(i, i);
    return t;
}

std::vector<int> row_echelon(std::vector<std::vector<Cyc>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int width = static_cast<int>(rows[0].size());
    std::size_t next = 0;
    for (int col = 0; col < width && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        const Cyc inv = rows[next][col].inverse();
        for (int j = col; j < width; ++j) rows[next][j] = inv * rows[next][j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i][col].is_zero()) continue;
            const Cyc f = rows[i][col];
            for (int j = col; j < width; ++j) rows[i][j] -= f * rows[next][j];
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(pivots.size());
    return pivots;
}

int rank(const Mat& m) {
    std::vector<std::vector<Cyc>> rows(m.r, std::vector<Cyc>(m.c));
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j) rows[i][j] = m.at(i, j);
    return static_cast<int>(row_echelon(rows).size());
}

std::vector<std::vector<Cyc>> nullspace(const Mat& m) {
    std::vector<std::vector<Cyc>> rows(m.r, std::vector<Cyc>(m.c));
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j) rows[i][j] = m.at(i, j);
    const std::vector<int> pivots = row_echelon(rows);
    std::vector<bool> is_pivot(m.c, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Cyc>> basis;
    for (int free = 0; free < m.c; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Cyc> v(m.c, Cyc(0));
        v[free] = Cyc(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RowSpan::add(std::vector<Cyc> v) {
    VTX_CHECK(static_cast<int>(v.size()) == width_, "vector width");
    std::vector<Cyc> coord(added_ + 1, Cyc(0));
    coord[added_] = Cyc(1);
    ++added_;
    for (auto& c : coords_) c.resize(added_, Cyc(0));
    // reduce v against the echelon rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Cyc f = v[pivots_[i]];
        if (f.is_zero()) continue;
        for (int j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
        for (int j = 0; j < added_; ++j) coord[j] -= f * coords_[i][j];
    }
    int piv = -1;
    for (int j = 0; j < width_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    const Cyc inv = v[piv].inverse();
    for (int j = 0; j < width_; ++j) v[j] = inv * v[j];
    for (int j = 0; j < added_; ++j) coord[j] = inv * coord[j];
    // back-substitute into earlier rows to keep reduced form
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Cyc f = rows_[i][piv];
        if (f.is_zero()) continue;
        for (int j = 0; j < width_; ++j) rows_[i][j] -= f * v[j];
        for (int j = 0; j < added_; ++j) coords_[i][j] -= f * coord[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    coords_.push_back(std::move(coord));
    return true;
}

bool RowSpan::contains(std::vector<Cyc> v) const { return coordinates(std::move(v)).has_value(); }

std::optional<std::vector<Cyc>> RowSpan::coordinates(std::vector<Cyc> v) const {
    VTX_CHECK(static_cast<int>(v.size()) == width_, "vector width");
    std::vector<Cyc> coord(added_, Cyc(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Cyc f = v[pivots_[i]];
        if (f.is_zero()) continue;
        for (int j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
        for (int j = 0; j < added_; ++j) coord[j] += f * coords_[i][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return std::nullopt;
    return coord;
}

} // namespace vtx
