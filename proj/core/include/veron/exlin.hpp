#ifndef VERON_EXLIN_HPP
#define VERON_EXLIN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "veron/gf.hpp"

namespace veron {

/// Dense matrix over a Field, row major. Operations never mutate their
/// inputs; everything returns fresh values.
class MatrixF {
public:
    MatrixF(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

    static MatrixF identity(const Field& field, std::size_t n);

    /// Builds a matrix from element codes (the packed canonical form; for
    /// prime fields these are just the residues).
    static MatrixF from_codes(const Field& field, const std::vector<std::vector<std::uint32_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    FieldElement operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const FieldElement> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    std::span<FieldElement> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

    MatrixF transpose() const;
    MatrixF mul(const MatrixF& rhs) const;
    std::vector<FieldElement> mul_vector(std::span<const FieldElement> v) const;

    /// Vertical concatenation; column counts must agree.
    MatrixF stacked_on(const MatrixF& below) const;

    void append_row(std::span<const FieldElement> r);

    friend bool operator==(const MatrixF& a, const MatrixF& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> entries_;
};

struct RrefResult {
    MatrixF matrix;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are the first nonzero entry of each
/// column in order, normalized to 1 and cleared above and below, so the
/// result is canonical for the row space.
RrefResult rref(const MatrixF& m);

/// Subspace of F^n stored as a reduced-row-echelon basis with no zero
/// rows. The representation is canonical: two subspaces are equal iff
/// their bases are entrywise equal.
class Subspace {
public:
    /// The zero subspace.
    Subspace(const Field& field, std::size_t ambient_dim);

    static Subspace from_generators(const MatrixF& generators);
    static Subspace full(const Field& field, std::size_t ambient_dim);
    /// Span of the given unit vectors.
    static Subspace unit_span(const Field& field, std::size_t ambient_dim,
                              const std::vector<std::size_t>& indices);

    const MatrixF& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    std::int64_t projective_dim() const { return std::int64_t(dim()) - 1; }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    explicit Subspace(MatrixF rref_basis) : basis_(std::move(rref_basis)) {}
    MatrixF basis_;
};

/// Solution space {v : m v = 0}.
Subspace nullspace(const MatrixF& m);

Subspace rowspace(const MatrixF& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

bool contains(const Subspace& s, std::span<const FieldElement> v);
bool is_subspace_of(const Subspace& inner, const Subspace& outer);
bool subspace_equal(const Subspace& a, const Subspace& b);

/// Image {map v : v in s} of a subspace under a linear map.
Subspace apply_map(const MatrixF& map, const Subspace& s);

}  // namespace veron

#endif
