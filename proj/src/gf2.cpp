#include "sepchk/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace sepchk {

Gf2Vector Gf2Vector::from_bits(const std::vector<int>& bits) {
    Gf2Vector v(static_cast<int>(bits.size()));
    for (int i = 0; i < v.dim_; ++i)
        if (bits[i] & 1) v.set(i, true);
    return v;
}

Gf2Vector Gf2Vector::from_support(int dim, const std::vector<int>& indices) {
    Gf2Vector v(dim);
    for (int i : indices) {
        if (i < 0 || i >= dim) throw std::invalid_argument("gf2: support index out of range");
        v.flip(i);
    }
    return v;
}

Gf2Vector Gf2Vector::unit(int dim, int i) {
    Gf2Vector v(dim);
    v.set(i, true);
    return v;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("gf2: xor of vectors with different dims");
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

bool Gf2Vector::is_zero() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

int Gf2Vector::lowest_set_bit() const {
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

int Gf2Vector::popcount() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

std::vector<int> Gf2Vector::support() const {
    std::vector<int> out;
    for (int i = 0; i < dim_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), rows_data_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Gf2Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("gf2: ragged row list");
        m.rows_data_[i] = Gf2Vector::from_bits(rows[i]);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_columns(const std::vector<Gf2Vector>& cols, int rows) {
    Gf2Matrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        if (cols[c].dim() != rows) throw std::invalid_argument("gf2: column dim mismatch");
        for (int r = 0; r < rows; ++r)
            if (cols[c].get(r)) m.set(r, c, true);
    }
    return m;
}

Gf2Vector Gf2Matrix::column(int c) const {
    Gf2Vector v(rows_);
    for (int r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c : rows_data_[r].support()) t.set(c, r, true);
    return t;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("gf2: apply dim mismatch");
    Gf2Vector out(rows_);
    for (int r = 0; r < rows_; ++r) {
        // dot product mod 2
        int parity = 0;
        for (int c : rows_data_[r].support()) parity ^= x.get(c) ? 1 : 0;
        if (parity) out.set(r, true);
    }
    return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("gf2: product dim mismatch");
    Gf2Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k : rows_data_[r].support()) out.rows_data_[r] ^= o.rows_data_[k];
    return out;
}

bool Gf2Matrix::is_zero() const {
    for (const auto& r : rows_data_)
        if (!r.is_zero()) return false;
    return true;
}

bool Gf2Subspace::insert(const Gf2Vector& v) {
    if (v.dim() != ambient_dim_) throw std::invalid_argument("gf2: subspace ambient mismatch");
    Gf2Vector r = reduce(v);
    int p = r.lowest_set_bit();
    if (p < 0) return false;
    // keep RREF: clear bit p from every existing basis vector
    for (auto& b : basis_)
        if (b.get(p)) b ^= r;
    size_t pos = 0;
    while (pos < basis_.size() && basis_[pos].lowest_set_bit() < p) ++pos;
    basis_.insert(basis_.begin() + pos, r);
    return true;
}

Gf2Vector Gf2Subspace::reduce(Gf2Vector v) const {
    if (v.dim() != ambient_dim_) throw std::invalid_argument("gf2: subspace ambient mismatch");
    for (const auto& b : basis_) {
        int p = b.lowest_set_bit();
        if (v.get(p)) v ^= b;
    }
    return v;
}

Gf2Subspace Gf2Subspace::span(int ambient_dim, const std::vector<Gf2Vector>& vectors) {
    Gf2Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

Gf2Subspace Gf2Subspace::full(int ambient_dim) {
    Gf2Subspace s(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) s.insert(Gf2Vector::unit(ambient_dim, i));
    return s;
}

namespace {

struct Rref {
    std::vector<Gf2Vector> rows;
    std::vector<int> pivot_cols;  // per reduced row, ascending
};

Rref rref_of(const Gf2Matrix& m) {
    Rref out;
    std::vector<Gf2Vector> work;
    work.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) work.push_back(m.row(r));
    int pivot_row = 0;
    for (int c = 0; c < m.cols() && pivot_row < static_cast<int>(work.size()); ++c) {
        int sel = -1;
        for (int r = pivot_row; r < static_cast<int>(work.size()); ++r)
            if (work[r].get(c)) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(work[pivot_row], work[sel]);
        for (int r = 0; r < static_cast<int>(work.size()); ++r)
            if (r != pivot_row && work[r].get(c)) work[r] ^= work[pivot_row];
        out.pivot_cols.push_back(c);
        ++pivot_row;
    }
    work.resize(pivot_row);
    out.rows = std::move(work);
    return out;
}

}  // namespace

int rank(const Gf2Matrix& m) { return static_cast<int>(rref_of(m).pivot_cols.size()); }

Gf2Subspace kernel_basis(const Gf2Matrix& m) {
    Rref rr = rref_of(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    Gf2Subspace ker(m.cols());
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Gf2Vector v(m.cols());
        v.set(f, true);
        for (size_t r = 0; r < rr.rows.size(); ++r)
            if (rr.rows[r].get(f)) v.set(rr.pivot_cols[r], true);
        ker.insert(v);
    }
    return ker;
}

Gf2Subspace image_basis(const Gf2Matrix& m) {
    Gf2Subspace im(m.rows());
    for (int c = 0; c < m.cols(); ++c) im.insert(m.column(c));
    return im;
}

bool contains(const Gf2Subspace& a, const Gf2Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("gf2: contains() on subspaces of different ambient spaces");
    for (const auto& v : b.basis())
        if (!a.contains_vector(v)) return false;
    return true;
}

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
    if (b.dim() != m.rows()) throw std::invalid_argument("gf2: solve rhs dim mismatch");
    // eliminate on the augmented matrix [m | b]
    Gf2Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c : m.row(r).support()) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, m.cols(), true);
    }
    Rref rr = rref_of(aug);
    Gf2Vector x(m.cols());
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        if (rr.pivot_cols[r] == m.cols()) return std::nullopt;  // inconsistent row
        if (rr.rows[r].get(m.cols())) x.set(rr.pivot_cols[r], true);
    }
    return x;
}

}  // namespace sepchk
