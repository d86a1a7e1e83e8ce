#include "veron/veronese.hpp"

#include <algorithm>
#include <set>

namespace veron {

namespace {

constexpr std::size_t kMaxContextDim = 1u << 20;
constexpr std::size_t kMaxMatrixEntries = std::size_t(1) << 24;

std::size_t projective_point_count(const Field& f, std::size_t coords) {
    // (q^coords - 1) / (q - 1), guarded against overflow via the entry cap
    std::size_t total = 0, layer = 1;
    for (std::size_t i = 0; i < coords; ++i) {
        total += layer;
        if (total > kMaxMatrixEntries) throw EnumerationTooLarge("too many projective points to enumerate");
        if (i + 1 < coords) {
            if (layer > kMaxMatrixEntries / f.order()) throw EnumerationTooLarge("too many projective points to enumerate");
            layer *= f.order();
        }
    }
    return total;
}

void check_matrix_budget(std::size_t rows, std::size_t cols) {
    if (cols != 0 && rows > kMaxMatrixEntries / cols)
        throw EnumerationTooLarge("enumeration matrix exceeds the supported size");
}

// x_i^d for all i and d <= t
std::vector<std::vector<FieldElement>> power_table(const Field& f, std::span<const FieldElement> x,
                                                   std::uint32_t t) {
    std::vector<std::vector<FieldElement>> pows(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        pows[i].resize(t + 1);
        pows[i][0] = f.one();
        for (std::uint32_t d = 1; d <= t; ++d) pows[i][d] = f.mul(pows[i][d - 1], x[i]);
    }
    return pows;
}

}  // namespace

VeroContext::VeroContext(Field field, std::uint32_t m, std::uint32_t t)
    : field_(std::move(field)), m_(m), t_(t) {
    if (t < 1) throw ParamOutOfRange("degree t must be at least 1");
    const std::uint64_t n = exponent_count(m, t);
    if (n > kMaxContextDim) throw EnumerationTooLarge("C(m+t, t) exceeds the supported context size");
    tuples_ = enumerate_exponents(m, t);
    multinomial_consts_.reserve(tuples_.size());
    for (std::size_t i = 0; i < tuples_.size(); ++i) {
        index_.emplace(tuples_[i], i);
        multinomial_consts_.push_back(field_.from_int(multinomial_mod_p(t, tuples_[i], field_.characteristic())));
    }
}

std::size_t VeroContext::tuple_index(const ExponentTuple& e) const {
    const auto it = index_.find(e);
    if (it == index_.end()) throw IndexOutOfRange("exponent tuple does not belong to this context");
    return it->second;
}

std::vector<FieldElement> VeroContext::veronese_coords(std::span<const FieldElement> x) const {
    if (x.size() != std::size_t(m_) + 1) throw AmbientMismatch("point must have m+1 coordinates");
    const auto pows = power_table(field_, x, t_);
    std::vector<FieldElement> out(dim());
    for (std::size_t idx = 0; idx < tuples_.size(); ++idx) {
        FieldElement v = field_.one();
        const ExponentTuple& e = tuples_[idx];
        for (std::size_t i = 0; i <= m_; ++i)
            if (e[i] != 0) v = field_.mul(v, pows[i][e[i]]);
        out[idx] = v;
    }
    return out;
}

std::vector<FieldElement> VeroContext::dual_power_coords(std::span<const FieldElement> a) const {
    if (a.size() != std::size_t(m_) + 1) throw AmbientMismatch("dual point must have m+1 coordinates");
    const auto pows = power_table(field_, a, t_);
    std::vector<FieldElement> out(dim(), field_.zero());
    for (std::size_t idx = 0; idx < tuples_.size(); ++idx) {
        FieldElement v = multinomial_consts_[idx];
        if (field_.is_zero(v)) continue;
        const ExponentTuple& e = tuples_[idx];
        for (std::size_t i = 0; i <= m_; ++i)
            if (e[i] != 0) v = field_.mul(v, pows[i][e[i]]);
        out[idx] = v;
    }
    return out;
}

std::vector<std::vector<FieldElement>> projective_points(const Field& field, std::size_t coords) {
    const std::size_t count = projective_point_count(field, coords);
    std::vector<std::vector<FieldElement>> out;
    out.reserve(count);
    const auto elems = field.elements();
    std::vector<FieldElement> point(coords, field.zero());
    for (std::size_t lead = 0; lead < coords; ++lead) {
        std::fill(point.begin(), point.end(), field.zero());
        point[lead] = field.one();
        const std::size_t free = coords - lead - 1;
        std::vector<std::size_t> odo(free, 0);
        while (true) {
            for (std::size_t i = 0; i < free; ++i) point[lead + 1 + i] = elems[odo[i]];
            out.push_back(point);
            std::size_t i = free;
            while (i > 0 && odo[i - 1] == elems.size() - 1) odo[--i] = 0;
            if (i == 0) break;
            ++odo[i - 1];
        }
    }
    return out;
}

std::vector<FieldElement> normalize_projective(const Field& field, std::vector<FieldElement> v) {
    const auto lead = std::find_if(v.begin(), v.end(), [&](FieldElement e) { return !field.is_zero(e); });
    if (lead == v.end()) throw ParamOutOfRange("cannot normalize the zero vector");
    const FieldElement scale = field.inv(*lead);
    if (scale == field.one()) return v;
    for (auto& e : v) e = field.mul(scale, e);
    return v;
}

MatrixF veronese_point_matrix(const VeroContext& ctx) {
    const auto points = projective_points(ctx.field(), ctx.m() + 1);
    check_matrix_budget(points.size(), ctx.dim());
    MatrixF m(ctx.field(), 0, ctx.dim());
    for (const auto& x : points) m.append_row(ctx.veronese_coords(x));
    return m;
}

MatrixF dual_power_matrix(const VeroContext& ctx) {
    const auto points = projective_points(ctx.field(), ctx.m() + 1);
    check_matrix_budget(points.size(), ctx.dim());
    MatrixF m(ctx.field(), 0, ctx.dim());
    for (const auto& a : points) m.append_row(ctx.dual_power_coords(a));
    return m;
}

Subspace nucleus_bruteforce(const VeroContext& ctx) { return nullspace(dual_power_matrix(ctx)); }

std::vector<ExponentTuple> nucleus_basis_predicted(std::uint32_t m, std::uint32_t t, std::uint32_t p) {
    std::vector<ExponentTuple> out;
    for (auto& e : enumerate_exponents(m, t))
        if (multinomial_mod_p(t, e, p) == 0) out.push_back(std::move(e));
    return out;
}

Subspace nucleus_predicted_span(const VeroContext& ctx) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < ctx.dim(); ++i)
        if (ctx.field().is_zero(ctx.multinomial_constants()[i])) indices.push_back(i);
    return Subspace::unit_span(ctx.field(), ctx.dim(), indices);
}

Subspace image_span(const VeroContext& ctx) { return rowspace(veronese_point_matrix(ctx)); }

std::vector<FieldElement> vanishing_form_witness(const VeroContext& ctx) {
    const std::uint32_t q = ctx.field().order();
    if (q >= ctx.t() || ctx.m() < 1)
        throw HypothesisViolated("witness exists only for fields with fewer than t elements and m >= 1");
    ExponentTuple hi(ctx.m() + 1, 0), lo(ctx.m() + 1, 0);
    hi[0] = q;
    hi[1] = ctx.t() - q;
    lo[0] = 1;
    lo[1] = ctx.t() - 1;
    std::vector<FieldElement> w(ctx.dim(), ctx.field().zero());
    w[ctx.tuple_index(hi)] = ctx.field().one();
    w[ctx.tuple_index(lo)] = ctx.field().neg(ctx.field().one());
    return w;
}

Subspace osculating_subspace(const VeroContext& ctx, std::uint32_t r, std::int32_t k) {
    if (r >= ctx.m()) throw ParamOutOfRange("subspace dimension r must satisfy 0 <= r < m");
    if (k < -1 || k > std::int32_t(ctx.t()) - 1) throw ParamOutOfRange("osculation order k must lie in [-1, t-1]");
    MatrixF constraints(ctx.field(), 0, ctx.dim());
    std::vector<FieldElement> row(ctx.dim(), ctx.field().zero());
    for (std::size_t idx = 0; idx < ctx.dim(); ++idx) {
        const ExponentTuple& e = ctx.tuples()[idx];
        std::int64_t outside = 0;
        for (std::size_t i = r + 1; i <= ctx.m(); ++i) outside += e[i];
        if (outside >= std::int64_t(k) + 1) {
            row[idx] = ctx.field().one();
            constraints.append_row(row);
            row[idx] = ctx.field().zero();
        }
    }
    return nullspace(constraints);
}

Subspace sub_nucleus(const VeroContext& ctx, std::uint32_t r) {
    if (r >= ctx.m()) throw ParamOutOfRange("subspace dimension r must satisfy 0 <= r < m");
    if (ctx.field().order() < ctx.t())
        throw HypothesisViolated("sub-nucleus basis description needs a field with at least t elements");
    std::vector<std::size_t> indices;
    for (std::size_t idx = 0; idx < ctx.dim(); ++idx) {
        const ExponentTuple& e = ctx.tuples()[idx];
        const bool supported = std::all_of(e.begin() + r + 1, e.end(), [](std::uint32_t v) { return v == 0; });
        if (supported && ctx.field().is_zero(ctx.multinomial_constants()[idx])) indices.push_back(idx);
    }
    return Subspace::unit_span(ctx.field(), ctx.dim(), indices);
}

Subspace sub_image_span(const VeroContext& ctx, std::uint32_t r) {
    if (r >= ctx.m()) throw ParamOutOfRange("subspace dimension r must satisfy 0 <= r < m");
    MatrixF m(ctx.field(), 0, ctx.dim());
    std::vector<FieldElement> x(ctx.m() + 1, ctx.field().zero());
    for (const auto& u : projective_points(ctx.field(), r + 1)) {
        std::copy(u.begin(), u.end(), x.begin());
        m.append_row(ctx.veronese_coords(x));
    }
    return rowspace(m);
}

MatrixF symmetric_power_map(const VeroContext& ctx, const MatrixF& f) {
    const Field& field = ctx.field();
    if (!(f.field() == field)) throw FieldMismatch("map is over a different field");
    const std::size_t n = ctx.m() + 1;
    if (f.rows() != n || f.cols() != n) throw AmbientMismatch("map must be (m+1) x (m+1)");

    // tuple tables for every intermediate degree
    std::vector<std::vector<ExponentTuple>> tuples_by_degree(ctx.t() + 1);
    std::vector<std::map<ExponentTuple, std::size_t>> index_by_degree(ctx.t() + 1);
    for (std::uint32_t d = 0; d <= ctx.t(); ++d) {
        tuples_by_degree[d] = enumerate_exponents(ctx.m(), d);
        for (std::size_t i = 0; i < tuples_by_degree[d].size(); ++i)
            index_by_degree[d].emplace(tuples_by_degree[d][i], i);
    }

    // multiply a homogeneous polynomial of degree d by the linear form
    // with the given coefficients
    const auto mul_linear = [&](const std::vector<FieldElement>& poly, std::uint32_t d,
                                std::span<const FieldElement> coeffs) {
        std::vector<FieldElement> out(tuples_by_degree[d + 1].size(), field.zero());
        for (std::size_t idx = 0; idx < poly.size(); ++idx) {
            if (field.is_zero(poly[idx])) continue;
            ExponentTuple e = tuples_by_degree[d][idx];
            for (std::size_t j = 0; j < n; ++j) {
                if (field.is_zero(coeffs[j])) continue;
                ++e[j];
                const std::size_t target = index_by_degree[d + 1].at(e);
                --e[j];
                out[target] = field.add(out[target], field.mul(poly[idx], coeffs[j]));
            }
        }
        return out;
    };

    MatrixF s(field, ctx.dim(), ctx.dim());
    for (std::size_t src = 0; src < ctx.dim(); ++src) {
        const ExponentTuple& e = ctx.tuples()[src];
        std::vector<FieldElement> poly{field.one()};  // degree 0
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::uint32_t rep = 0; rep < e[i]; ++rep) {
                poly = mul_linear(poly, d, f.row(i));
                ++d;
            }
        }
        for (std::size_t j = 0; j < ctx.dim(); ++j) s(src, j) = poly[j];
    }
    return s;
}

NucleusReport verify_nucleus(const Field& field, std::uint32_t m, std::uint32_t t) {
    const VeroContext ctx(field, m, t);
    const Subspace brute = nucleus_bruteforce(ctx);
    const Subspace predicted = nucleus_predicted_span(ctx);

    NucleusReport r;
    r.p = field.characteristic();
    r.k = field.degree();
    r.q = field.order();
    r.m = m;
    r.t = t;
    r.predicted_dim = nucleus_dim_formula(m, t, field.characteristic()).convert_to<std::int64_t>();
    r.bruteforce_dim = brute.projective_dim();
    r.small_field = field.order() < t;
    r.basis_match = r.small_field ? is_subspace_of(predicted, brute) : subspace_equal(brute, predicted);
    return r;
}

NucleusReport verify_nucleus(std::uint32_t p, std::uint32_t k, std::uint32_t m, std::uint32_t t) {
    return verify_nucleus(Field(p, k), m, t);
}

ProjectionDemoReport projection_demo(const VeroContext& ctx) {
    if (ctx.m() != 2) throw ParamOutOfRange("the projection demo runs on a Veronese surface (m = 2)");
    const Field& f = ctx.field();
    const Subspace nucleus = nucleus_bruteforce(ctx);
    if (nucleus.dim() != 1) throw PreconditionFailed("the nucleus is not a single point");
    // the nucleus point must be a base point so a coordinate can be dropped
    std::size_t center = ctx.dim();
    for (std::size_t j = 0; j < ctx.dim(); ++j) {
        if (!f.is_zero(nucleus.basis()(0, j))) {
            if (center != ctx.dim() || !(nucleus.basis()(0, j) == f.one()))
                throw PreconditionFailed("the nucleus point is not a coordinate point");
            center = j;
        }
    }

    ProjectionDemoReport report;
    report.q = f.order();
    report.ambient_vector_dim = ctx.dim();
    report.nucleus_coordinate = center;

    const auto points = projective_points(f, 3);
    report.source_points = points.size();

    // project by dropping the nucleus coordinate, then compare as
    // projective points
    std::set<std::vector<FieldElement>> images;
    for (const auto& x : points) {
        const auto g = ctx.veronese_coords(x);
        std::vector<FieldElement> proj;
        proj.reserve(ctx.dim() - 1);
        for (std::size_t j = 0; j < ctx.dim(); ++j)
            if (j != center) proj.push_back(g[j]);
        images.insert(normalize_projective(f, std::move(proj)));
    }
    report.distinct_images = images.size();
    report.injective = report.distinct_images == report.source_points;

    // lines of the source plane, one per dual point
    report.line_spans_full = true;
    for (const auto& a : projective_points(f, 3)) {
        MatrixF rows(f, 0, ctx.dim());
        for (const auto& x : points) {
            FieldElement dot = f.zero();
            for (std::size_t i = 0; i < 3; ++i) dot = f.add(dot, f.mul(a[i], x[i]));
            if (f.is_zero(dot)) rows.append_row(ctx.veronese_coords(x));
        }
        const Subspace span = rowspace(rows);
        ++report.lines;
        if (intersect(span, nucleus).dim() == 0) ++report.lines_skew_to_nucleus;
        if (span.dim() != std::size_t(ctx.t()) + 1) report.line_spans_full = false;
    }

    // span of the projected image
    MatrixF projected(f, 0, ctx.dim() - 1);
    for (const auto& img : images) projected.append_row(img);
    report.image_span_projective_dim = rowspace(projected).projective_dim();
    return report;
}

}  // namespace veron
