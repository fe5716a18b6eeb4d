#include "quiverhom/matrix.hpp"

namespace quiverhom {

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

RowVec Matrix::row(int r) const {
    RowVec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void Matrix::set_row(int r, const RowVec& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw QhError("matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (field_.is_zero(a)) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (field_.is_zero(b)) continue;
                out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, b));
            }
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : data_)
        if (s.num != 0) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (cols_ != other.cols_ && other.rows_ != 0 && rows_ != 0)
        throw QhError("vstack width mismatch");
    int w = rows_ ? cols_ : other.cols_;
    Matrix out(field_, rows_ + other.rows_, w);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < other.rows_; ++i)
        for (int j = 0; j < other.cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
    return out;
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!f.is_zero(a.at(i, c))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
        Scalar piv_inv = f.inv(a.at(r, c));
        for (int j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), piv_inv);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || f.is_zero(a.at(i, c))) continue;
            Scalar factor = a.at(i, c);
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::vector<RowVec> kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_columns) is_pivot[c] = true;
    std::vector<RowVec> out;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        RowVec v(m.cols(), f.zero());
        v[c] = f.one();
        for (size_t r = 0; r < rr.pivot_columns.size(); ++r)
            v[rr.pivot_columns[r]] = f.neg(rr.reduced.at(int(r), c));
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<RowVec> solve(const Matrix& m, const RowVec& b) {
    if (int(b.size()) != m.rows()) throw QhError("solve: rhs length mismatch");
    const Field& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    RowVec x(m.cols(), f.zero());
    for (size_t r = 0; r < rr.pivot_columns.size(); ++r) {
        int c = rr.pivot_columns[r];
        if (c == m.cols()) return std::nullopt; // pivot in the rhs column
        x[c] = rr.reduced.at(int(r), m.cols());
    }
    return x;
}

RowVec mat_vec_row(const RowVec& x, const Matrix& m) {
    if (int(x.size()) != m.rows()) throw QhError("row-vector length mismatch");
    const Field& f = m.field();
    RowVec out(m.cols(), f.zero());
    for (int i = 0; i < m.rows(); ++i) {
        if (f.is_zero(x[i])) continue;
        for (int j = 0; j < m.cols(); ++j)
            out[j] = f.add(out[j], f.mul(x[i], m.at(i, j)));
    }
    return out;
}

RowSpan::RowSpan(const Matrix& generators)
    : field_(generators.field()), width_(generators.cols()),
      reduced_(generators.field(), 0, generators.cols()) {
    for (int r = 0; r < generators.rows(); ++r) grow(generators.row(r));
}

bool RowSpan::contains(const RowVec& v) const {
    RowVec w = v;
    for (int r = 0; r < reduced_.rows(); ++r) {
        Scalar lead = w[pivots_[r]];
        if (field_.is_zero(lead)) continue;
        for (int c = 0; c < width_; ++c)
            w[c] = field_.sub(w[c], field_.mul(lead, reduced_.at(r, c)));
    }
    for (const Scalar& s : w)
        if (!field_.is_zero(s)) return false;
    return true;
}

std::optional<RowVec> RowSpan::coordinates(const RowVec& v) const {
    RowVec w = v;
    RowVec coord(reduced_.rows(), field_.zero());
    for (int r = 0; r < reduced_.rows(); ++r) {
        Scalar lead = w[pivots_[r]];
        if (field_.is_zero(lead)) continue;
        coord[r] = lead;
        for (int c = 0; c < width_; ++c)
            w[c] = field_.sub(w[c], field_.mul(lead, reduced_.at(r, c)));
    }
    for (const Scalar& s : w)
        if (!field_.is_zero(s)) return std::nullopt;
    return coord;
}

bool RowSpan::grow(const RowVec& v) {
    RowVec w = v;
    for (int r = 0; r < reduced_.rows(); ++r) {
        Scalar lead = w[pivots_[r]];
        if (field_.is_zero(lead)) continue;
        for (int c = 0; c < width_; ++c)
            w[c] = field_.sub(w[c], field_.mul(lead, reduced_.at(r, c)));
    }
    int lead_col = -1;
    for (int c = 0; c < width_; ++c)
        if (!field_.is_zero(w[c])) { lead_col = c; break; }
    if (lead_col < 0) return false;
    Scalar inv = field_.inv(w[lead_col]);
    for (int c = 0; c < width_; ++c) w[c] = field_.mul(w[c], inv);
    // Keep rows sorted by pivot column and fully reduced.
    int pos = 0;
    while (pos < int(pivots_.size()) && pivots_[pos] < lead_col) ++pos;
    Matrix next(field_, reduced_.rows() + 1, width_);
    std::vector<int> next_pivots;
    for (int r = 0; r < pos; ++r) { next.set_row(r, reduced_.row(r)); next_pivots.push_back(pivots_[r]); }
    next.set_row(pos, w);
    next_pivots.push_back(lead_col);
    for (int r = pos; r < reduced_.rows(); ++r) { next.set_row(r + 1, reduced_.row(r)); next_pivots.push_back(pivots_[r]); }
    // Clear the new pivot column in the old rows.
    for (int r = 0; r < next.rows(); ++r) {
        if (r == pos) continue;
        Scalar factor = next.at(r, lead_col);
        if (field_.is_zero(factor)) continue;
        for (int c = 0; c < width_; ++c)
            next.at(r, c) = field_.sub(next.at(r, c), field_.mul(factor, next.at(pos, c)));
    }
    reduced_ = std::move(next);
    pivots_ = std::move(next_pivots);
    return true;
}

SpanDecomposition intersect_and_quotient(const std::vector<RowVec>& subspace_gens,
                                         const std::vector<RowVec>& ambient_gens,
                                         Field field, int width) {
    SpanDecomposition out;
    out.subspace = RowSpan(field, width);
    out.ambient = RowSpan(field, width);
    for (const RowVec& v : subspace_gens) out.subspace.grow(v);
    for (const RowVec& v : ambient_gens) out.ambient.grow(v);
    RowSpan running = out.subspace;
    for (int r = 0; r < out.ambient.dim(); ++r) {
        RowVec v = out.ambient.basis().row(r);
        if (running.grow(v)) out.complement.push_back(std::move(v));
    }
    return out;
}

} // namespace quiverhom
