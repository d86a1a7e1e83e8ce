#include "veron/exlin.hpp"

#include <algorithm>

namespace veron {

namespace {

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw FieldMismatch("operands belong to different fields");
}

// dst -= factor * src, starting at from_col (everything left is known zero)
void eliminate(const Field& f, std::span<FieldElement> dst, std::span<const FieldElement> src,
               FieldElement factor, std::size_t from_col) {
    for (std::size_t j = from_col; j < dst.size(); ++j)
        dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
}

}  // namespace

MatrixF MatrixF::identity(const Field& field, std::size_t n) {
    MatrixF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

MatrixF MatrixF::from_codes(const Field& field, const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    MatrixF m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw AmbientMismatch("ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] >= field.order()) throw FieldMismatch("entry code out of range");
            m(i, j) = FieldElement{rows[i][j]};
        }
    }
    return m;
}

MatrixF MatrixF::transpose() const {
    MatrixF out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

MatrixF MatrixF::mul(const MatrixF& rhs) const {
    require_same_field(field_, rhs.field_);
    if (cols_ != rhs.rows_) throw AmbientMismatch("matrix product shape mismatch");
    MatrixF out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t l = 0; l < cols_; ++l) {
            const FieldElement a = (*this)(i, l);
            if (field_.is_zero(a)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(l, j)));
        }
    }
    return out;
}

std::vector<FieldElement> MatrixF::mul_vector(std::span<const FieldElement> v) const {
    if (v.size() != cols_) throw AmbientMismatch("vector length does not match column count");
    std::vector<FieldElement> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        FieldElement acc = field_.zero();
        for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

MatrixF MatrixF::stacked_on(const MatrixF& below) const {
    require_same_field(field_, below.field_);
    if (cols_ != below.cols_) throw AmbientMismatch("cannot stack matrices of different widths");
    MatrixF out(field_, rows_ + below.rows_, cols_);
    std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
    std::copy(below.entries_.begin(), below.entries_.end(), out.entries_.begin() + std::ptrdiff_t(entries_.size()));
    return out;
}

void MatrixF::append_row(std::span<const FieldElement> r) {
    if (r.size() != cols_) throw AmbientMismatch("row length does not match column count");
    entries_.insert(entries_.end(), r.begin(), r.end());
    ++rows_;
}

RrefResult rref(const MatrixF& m) {
    MatrixF r = m;
    const Field& f = r.field();
    const std::size_t rows = r.rows(), cols = r.cols();
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
        std::size_t pr = next_row;
        while (pr < rows && f.is_zero(r(pr, col))) ++pr;
        if (pr == rows) continue;
        if (pr != next_row) {
            for (std::size_t j = col; j < cols; ++j) std::swap(r(next_row, j), r(pr, j));
        }
        const FieldElement scale = f.inv(r(next_row, col));
        if (!(scale == f.one())) {
            for (std::size_t j = col; j < cols; ++j) r(next_row, j) = f.mul(scale, r(next_row, j));
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next_row) continue;
            const FieldElement factor = r(i, col);
            if (f.is_zero(factor)) continue;
            eliminate(f, r.row(i), r.row(next_row), factor, col);
        }
        pivots.push_back(col);
        ++next_row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

Subspace::Subspace(const Field& field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::from_generators(const MatrixF& generators) {
    RrefResult r = rref(generators);
    MatrixF basis(generators.field(), 0, generators.cols());
    for (std::size_t i = 0; i < r.rank; ++i) basis.append_row(r.matrix.row(i));
    return Subspace(std::move(basis));
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
    return Subspace(MatrixF::identity(field, ambient_dim));
}

Subspace Subspace::unit_span(const Field& field, std::size_t ambient_dim,
                             const std::vector<std::size_t>& indices) {
    MatrixF gens(field, indices.size(), ambient_dim);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= ambient_dim) throw IndexOutOfRange("unit vector index out of range");
        gens(i, indices[i]) = field.one();
    }
    return from_generators(gens);
}

Subspace nullspace(const MatrixF& m) {
    const Field& f = m.field();
    const RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (const std::size_t c : r.pivot_cols) is_pivot[c] = true;

    MatrixF gens(f, 0, cols);
    std::vector<FieldElement> v(cols, f.zero());
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = f.neg(r.matrix(i, free));
        gens.append_row(v);
    }
    return Subspace::from_generators(gens);
}

Subspace rowspace(const MatrixF& m) { return Subspace::from_generators(m); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field());
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspaces live in different ambients");
    // kernel method: stack the dual constraints of both sides
    const MatrixF ca = nullspace(a.basis()).basis();
    const MatrixF cb = nullspace(b.basis()).basis();
    return nullspace(ca.stacked_on(cb));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field());
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspaces live in different ambients");
    return Subspace::from_generators(a.basis().stacked_on(b.basis()));
}

bool contains(const Subspace& s, std::span<const FieldElement> v) {
    if (v.size() != s.ambient_dim()) throw AmbientMismatch("vector length does not match ambient");
    const Field& f = s.field();
    const MatrixF& basis = s.basis();
    std::vector<FieldElement> rest(v.begin(), v.end());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        // pivot column of row i is the first nonzero entry
        std::size_t pc = 0;
        while (pc < basis.cols() && f.is_zero(basis(i, pc))) ++pc;
        const FieldElement coeff = rest[pc];
        if (f.is_zero(coeff)) continue;
        eliminate(f, rest, basis.row(i), coeff, pc);
    }
    return std::all_of(rest.begin(), rest.end(), [&](FieldElement e) { return f.is_zero(e); });
}

bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
    require_same_field(inner.field(), outer.field());
    if (inner.ambient_dim() != outer.ambient_dim()) throw AmbientMismatch("subspaces live in different ambients");
    for (std::size_t i = 0; i < inner.dim(); ++i)
        if (!contains(outer, inner.basis().row(i))) return false;
    return true;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field());
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspaces live in different ambients");
    return a == b;
}

Subspace apply_map(const MatrixF& map, const Subspace& s) {
    require_same_field(map.field(), s.field());
    if (map.cols() != s.ambient_dim()) throw AmbientMismatch("map domain does not match ambient");
    return Subspace::from_generators(s.basis().mul(map.transpose()));
}

}  // namespace veron
