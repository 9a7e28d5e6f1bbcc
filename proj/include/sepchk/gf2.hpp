#ifndef SEPCHK_GF2_HPP
#define SEPCHK_GF2_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace sepchk {

/// Dense bit-packed vector over the two-element field.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(int dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

    static Gf2Vector from_bits(const std::vector<int>& bits);
    static Gf2Vector from_support(int dim, const std::vector<int>& indices);
    static Gf2Vector unit(int dim, int i);

    int dim() const { return dim_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        if (v)
            words_[i >> 6] |= uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(int i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    Gf2Vector& operator^=(const Gf2Vector& o);
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) {
        a ^= b;
        return a;
    }

    bool is_zero() const;
    int lowest_set_bit() const;  // -1 when zero
    int popcount() const;
    std::vector<int> support() const;

    bool operator==(const Gf2Vector& o) const { return dim_ == o.dim_ && words_ == o.words_; }
    bool operator!=(const Gf2Vector& o) const { return !(*this == o); }

private:
    int dim_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense bit-packed matrix over the two-element field, row-major.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    static Gf2Matrix identity(int n);
    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);  // 0/1 entries
    static Gf2Matrix from_columns(const std::vector<Gf2Vector>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return rows_data_[r].get(c); }
    void set(int r, int c, bool v) { rows_data_[r].set(c, v); }

    const Gf2Vector& row(int r) const { return rows_data_[r]; }
    Gf2Vector column(int c) const;
    Gf2Matrix transposed() const;

    /// Matrix-vector product m*x, x of length cols().
    Gf2Vector apply(const Gf2Vector& x) const;
    Gf2Matrix operator*(const Gf2Matrix& o) const;

    bool is_zero() const;
    bool operator==(const Gf2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && rows_data_ == o.rows_data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Gf2Vector> rows_data_;
};

/// A linear subspace of GF(2)^n held in reduced row echelon form, so two
/// subspaces are equal as sets exactly when their basis lists are equal.
class Gf2Subspace {
public:
    Gf2Subspace() = default;
    explicit Gf2Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {}

    static Gf2Subspace span(int ambient_dim, const std::vector<Gf2Vector>& vectors);
    static Gf2Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Gf2Vector>& basis() const { return basis_; }

    /// Inserts a vector, keeping the basis in canonical RREF.
    /// Returns true when the dimension grew.
    bool insert(const Gf2Vector& v);

    /// Remainder of v after full reduction against the basis.
    Gf2Vector reduce(Gf2Vector v) const;
    bool contains_vector(const Gf2Vector& v) const { return reduce(v).is_zero(); }

    bool operator==(const Gf2Subspace& o) const {
        return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
    }
    bool operator!=(const Gf2Subspace& o) const { return !(*this == o); }

private:
    int ambient_dim_ = 0;
    std::vector<Gf2Vector> basis_;  // sorted by pivot index, pivot columns cleared elsewhere
};

int rank(const Gf2Matrix& m);

/// Basis of {x : m*x = 0}.
Gf2Subspace kernel_basis(const Gf2Matrix& m);

/// Column span of m.
Gf2Subspace image_basis(const Gf2Matrix& m);

/// True iff b is a subspace of a. Throws std::invalid_argument on
/// mismatched ambient dimensions.
bool contains(const Gf2Subspace& a, const Gf2Subspace& b);

/// Some x with m*x = b, or nullopt when b is outside the column span.
/// Deterministic: free variables are set to zero.
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b);

}  // namespace sepchk

#endif
