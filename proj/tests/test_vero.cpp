#include <doctest.h>

#include <random>
#include <set>

#include <veron/veronese.hpp>

using namespace veron;

namespace {

MatrixF random_invertible(std::mt19937& rng, const Field& f, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f.order() - 1);
    while (true) {
        MatrixF m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = {dist(rng)};
        if (rref(m).rank == n) return m;
    }
}

FieldElement dot(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
    FieldElement acc = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

// every vector of F^n, including zero
std::vector<std::vector<FieldElement>> all_vectors(const Field& f, std::size_t n) {
    std::vector<std::vector<FieldElement>> out;
    std::vector<std::size_t> odo(n, 0);
    const auto elems = f.elements();
    while (true) {
        std::vector<FieldElement> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = elems[odo[i]];
        out.push_back(std::move(v));
        std::size_t i = n;
        while (i > 0 && odo[i - 1] == elems.size() - 1) odo[--i] = 0;
        if (i == 0) break;
        ++odo[i - 1];
    }
    return out;
}

}  // namespace

TEST_CASE("veronese_coords evaluates the degree-t monomials") {
    const Field f3(3, 1);
    const VeroContext ctx(f3, 1, 2);
    const std::vector<FieldElement> x{{1}, {2}};
    CHECK(ctx.veronese_coords(x) == std::vector<FieldElement>{{1}, {2}, {1}});

    const Field f2(2, 1);
    const VeroContext c22(f2, 2, 2);
    const std::vector<FieldElement> ones{{1}, {1}, {1}};
    CHECK(c22.veronese_coords(ones) == std::vector<FieldElement>(6, f2.one()));
}

TEST_CASE("veronese_coords is homogeneous of degree t and never vanishes") {
    for (const Field f : {Field(2, 1), Field(3, 1), Field(2, 2), Field(5, 1)}) {
        for (const std::uint32_t m : {1u, 2u}) {
            for (const std::uint32_t t : {2u, 3u}) {
                const VeroContext ctx(f, m, t);
                for (const auto& x : all_vectors(f, m + 1)) {
                    const auto gx = ctx.veronese_coords(x);
                    const bool x_zero = std::all_of(x.begin(), x.end(),
                                                    [&](FieldElement e) { return f.is_zero(e); });
                    const bool g_zero = std::all_of(gx.begin(), gx.end(),
                                                    [&](FieldElement e) { return f.is_zero(e); });
                    CHECK(x_zero == g_zero);
                    for (const auto w : f.elements()) {
                        std::vector<FieldElement> wx(x.size());
                        for (std::size_t i = 0; i < x.size(); ++i) wx[i] = f.mul(w, x[i]);
                        const auto lhs = ctx.veronese_coords(wx);
                        const FieldElement wt = f.pow(w, t);
                        for (std::size_t j = 0; j < lhs.size(); ++j)
                            CHECK(lhs[j] == f.mul(wt, gx[j]));
                    }
                }
            }
        }
    }
}

TEST_CASE("dual_power_coords carries the multinomial coefficients") {
    const Field f2(2, 1);
    const VeroContext c2(f2, 1, 2);
    const std::vector<FieldElement> a11{{1}, {1}};
    CHECK(c2.dual_power_coords(a11) == std::vector<FieldElement>{{1}, {0}, {1}});

    const Field f3(3, 1);
    const VeroContext c3(f3, 1, 2);
    CHECK(c3.dual_power_coords(a11) == std::vector<FieldElement>{{1}, {2}, {1}});
}

TEST_CASE("pairing identity: <a^t, g(x)> = (a.x)^t") {
    for (const Field f : {Field(2, 1), Field(3, 1), Field(2, 2)}) {
        for (const std::uint32_t m : {1u, 2u}) {
            for (const std::uint32_t t : {2u, 3u, 4u}) {
                const VeroContext ctx(f, m, t);
                for (const auto& a : all_vectors(f, m + 1)) {
                    const auto dual = ctx.dual_power_coords(a);
                    for (const auto& x : all_vectors(f, m + 1)) {
                        const auto gx = ctx.veronese_coords(x);
                        CHECK(dot(f, dual, gx) == f.pow(dot(f, a, x), t));
                    }
                }
            }
        }
    }
}

TEST_CASE("brute-force nucleus reproduces the worked examples") {
    const Field f2(2, 1);
    const VeroContext c22(f2, 2, 2);
    const auto n22 = nucleus_bruteforce(c22);
    const std::vector<std::size_t> expected{
        c22.tuple_index({0, 1, 1}), c22.tuple_index({1, 0, 1}), c22.tuple_index({1, 1, 0})};
    CHECK(n22 == Subspace::unit_span(f2, 6, expected));
    CHECK(n22.projective_dim() == 2);

    const Field f4(2, 2);
    const VeroContext c43(f4, 2, 3);
    const auto n43 = nucleus_bruteforce(c43);
    CHECK(n43 == Subspace::unit_span(f4, 10, {c43.tuple_index({1, 1, 1})}));
    CHECK(n43.projective_dim() == 0);

    const Field f3(3, 1);
    const VeroContext c32(f3, 1, 2);
    CHECK(nucleus_bruteforce(c32).dim() == 0);
}

TEST_CASE("predicted nucleus basis matches the worked examples") {
    CHECK(nucleus_basis_predicted(2, 2, 2) ==
          std::vector<ExponentTuple>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(nucleus_basis_predicted(2, 3, 2) == std::vector<ExponentTuple>{{1, 1, 1}});
    CHECK(nucleus_basis_predicted(1, 2, 3).empty());
}

TEST_CASE("image span is full exactly when q >= t or m = 0") {
    const Field f2(2, 1);
    CHECK(image_span(VeroContext(f2, 1, 3)).dim() == 3);  // three points, dim 3 < 4

    const Field f4(2, 2);
    CHECK(image_span(VeroContext(f4, 1, 3)).dim() == 4);

    CHECK(image_span(VeroContext(f2, 0, 5)).dim() == 1);
    CHECK(image_span(VeroContext(f4, 0, 5)).dim() == 1);
}

TEST_CASE("vanishing form witness annihilates the whole image") {
    const Field f2(2, 1);
    const VeroContext c13(f2, 1, 3);
    const auto w13 = vanishing_form_witness(c13);
    CHECK(w13[c13.tuple_index({2, 1})] == f2.one());
    CHECK(w13[c13.tuple_index({1, 2})] == f2.one());  // -1 = +1 in characteristic 2

    const VeroContext c23(f2, 2, 3);
    const auto w23 = vanishing_form_witness(c23);
    CHECK(w23[c23.tuple_index({2, 1, 0})] == f2.one());
    CHECK(w23[c23.tuple_index({1, 2, 0})] == f2.one());

    const Field f3(3, 1);
    const VeroContext c14(f3, 1, 4);
    const auto w14 = vanishing_form_witness(c14);
    CHECK(w14[c14.tuple_index({3, 1})] == f3.one());
    CHECK(w14[c14.tuple_index({1, 3})] == FieldElement{2});

    // oracle: exhaust every vector of the source space
    const auto annihilates_everything = [](const VeroContext& ctx, const std::vector<FieldElement>& w) {
        const Field& f = ctx.field();
        bool nonzero = false;
        for (const auto e : w)
            if (!f.is_zero(e)) nonzero = true;
        CHECK(nonzero);
        for (const auto& x : all_vectors(f, ctx.m() + 1))
            CHECK(f.is_zero(dot(f, w, ctx.veronese_coords(x))));
    };
    annihilates_everything(c13, w13);
    annihilates_everything(c23, w23);
    annihilates_everything(c14, w14);

    CHECK_THROWS_AS(vanishing_form_witness(VeroContext(f3, 1, 2)), HypothesisViolated);
    CHECK_THROWS_AS(vanishing_form_witness(VeroContext(f2, 0, 5)), HypothesisViolated);
}

TEST_CASE("osculating subspaces match the worked examples") {
    const Field f5(5, 1);
    const VeroContext c(f5, 2, 2);

    // r=1, k=1: a hyperplane, the vanishing of the coordinate at (0,0,2)
    const auto hyper = osculating_subspace(c, 1, 1);
    CHECK(hyper.dim() == 5);
    CHECK(hyper == Subspace::unit_span(f5, 6, {0, 1, 2, 3, 4}));
    CHECK(c.tuple_index({0, 0, 2}) == 5);

    // k = -1 yields the zero subspace
    CHECK(osculating_subspace(c, 1, -1).dim() == 0);

    const Field f2(2, 1);
    const VeroContext c2(f2, 2, 2);
    // oracle: constraints are the products of b*_2 with each basis form,
    // i.e. the tuples (1,0,1), (0,1,1), (0,0,2); the kernel is spanned by
    // the three remaining unit vectors
    const std::vector<std::size_t> constraint_idx{
        c2.tuple_index({1, 0, 1}), c2.tuple_index({0, 1, 1}), c2.tuple_index({0, 0, 2})};
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < 6; ++i)
        if (std::find(constraint_idx.begin(), constraint_idx.end(), i) == constraint_idx.end())
            complement.push_back(i);
    const auto expected = Subspace::unit_span(f2, 6, complement);
    CHECK(osculating_subspace(c2, 1, 0) == expected);
    CHECK(expected == Subspace::unit_span(f2, 6, {c2.tuple_index({2, 0, 0}), c2.tuple_index({1, 1, 0}),
                                                  c2.tuple_index({0, 2, 0})}));

    CHECK_THROWS_AS(osculating_subspace(c2, 2, 0), ParamOutOfRange);
    CHECK_THROWS_AS(osculating_subspace(c2, 1, 2), ParamOutOfRange);
}

TEST_CASE("osculating subspaces form a chain containing the subvariety") {
    for (const Field f : {Field(2, 1), Field(3, 1), Field(2, 2)}) {
        for (const std::uint32_t m : {2u, 3u}) {
            for (const std::uint32_t t : {2u, 3u}) {
                const VeroContext ctx(f, m, t);
                for (std::uint32_t r = 0; r < m; ++r) {
                    for (std::int32_t k = -1; k + 1 <= std::int32_t(t) - 1; ++k)
                        CHECK(is_subspace_of(osculating_subspace(ctx, r, k),
                                             osculating_subspace(ctx, r, k + 1)));
                    for (std::int32_t k = 0; k <= std::int32_t(t) - 1; ++k) {
                        const auto osc = osculating_subspace(ctx, r, k);
                        std::vector<FieldElement> u(m + 1, f.zero());
                        for (const auto& pt : projective_points(f, r + 1)) {
                            std::copy(pt.begin(), pt.end(), u.begin());
                            CHECK(contains(osc, ctx.veronese_coords(u)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("sub-nucleus agrees with intersecting the nucleus with the sub-image span") {
    const Field f2(2, 1);
    const VeroContext c22(f2, 2, 2);
    const auto n = nucleus_bruteforce(c22);

    const auto n1 = sub_nucleus(c22, 1);
    CHECK(n1 == Subspace::unit_span(f2, 6, {c22.tuple_index({1, 1, 0})}));
    CHECK(n1 == intersect(n, sub_image_span(c22, 1)));

    // the coordinate triangle spans a plane skew to the nucleus
    const auto triangle = Subspace::unit_span(
        f2, 6, {c22.tuple_index({2, 0, 0}), c22.tuple_index({0, 2, 0}), c22.tuple_index({0, 0, 2})});
    CHECK(triangle.dim() == 3);
    CHECK(intersect(triangle, n).dim() == 0);

    const Field f4(2, 2);
    const VeroContext c43(f4, 2, 3);
    CHECK(sub_nucleus(c43, 1).dim() == 0);
    CHECK(sub_nucleus(c43, 1) == intersect(nucleus_bruteforce(c43), sub_image_span(c43, 1)));

    CHECK_THROWS_AS(sub_nucleus(c22, 2), ParamOutOfRange);
    CHECK_THROWS_AS(sub_nucleus(VeroContext(f2, 2, 3), 1), HypothesisViolated);  // q = 2 < t = 3
}

TEST_CASE("r-nucleus identity holds across small parameter sets with q >= t") {
    for (const Field f : {Field(2, 1), Field(3, 1), Field(2, 2), Field(5, 1)}) {
        for (const std::uint32_t m : {2u, 3u}) {
            for (std::uint32_t t = 2; t <= std::min(f.order(), 4u); ++t) {
                const VeroContext ctx(f, m, t);
                const auto n = nucleus_bruteforce(ctx);
                for (std::uint32_t r = 0; r < m; ++r)
                    CHECK(sub_nucleus(ctx, r) == intersect(n, sub_image_span(ctx, r)));
            }
        }
    }
}

TEST_CASE("symmetric power map: identity, scalars, equivariance") {
    const Field f5(5, 1);
    const VeroContext c(f5, 2, 3);  // N = C(5,3) = 10

    CHECK(symmetric_power_map(c, MatrixF::identity(f5, 3)) == MatrixF::identity(f5, 10));

    // diagonal(w): the induced map is w^t times the identity
    const FieldElement w{2};
    MatrixF diag(f5, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) diag(i, i) = w;
    const auto s = symmetric_power_map(c, diag);
    const FieldElement wt = f5.pow(w, 3);  // 8 = 3 mod 5
    CHECK(wt == FieldElement{3});
    MatrixF expected(f5, 10, 10);
    for (std::size_t i = 0; i < 10; ++i) expected(i, i) = wt;
    CHECK(s == expected);

    // exhaustive pointwise check over GF(2), m=1, t=2
    const Field f2(2, 1);
    const VeroContext c12(f2, 1, 2);
    const auto shear = MatrixF::from_codes(f2, {{1, 1}, {0, 1}});
    const auto s12 = symmetric_power_map(c12, shear);
    for (const auto& x : projective_points(f2, 2))
        CHECK(s12.mul_vector(c12.veronese_coords(x)) == c12.veronese_coords(shear.mul_vector(x)));
}

TEST_CASE("symmetric power map is functorial on random invertible maps") {
    std::mt19937 rng(808);
    const Field f3(3, 1);
    const VeroContext ctx(f3, 2, 2);
    const auto points = projective_points(f3, 3);
    for (int i = 0; i < 25; ++i) {
        const auto a = random_invertible(rng, f3, 3);
        const auto b = random_invertible(rng, f3, 3);
        const auto sa = symmetric_power_map(ctx, a);
        const auto sb = symmetric_power_map(ctx, b);
        CHECK(symmetric_power_map(ctx, a.mul(b)) == sa.mul(sb));
        for (const auto& x : points)
            CHECK(sa.mul_vector(ctx.veronese_coords(x)) == ctx.veronese_coords(a.mul_vector(x)));
    }
    // non-invertible maps are fine too: the construction is polynomial
    const MatrixF zero(f3, 3, 3);
    CHECK(symmetric_power_map(ctx, zero) == MatrixF(f3, 6, 6));
}

TEST_CASE("induced collineations preserve osculating subspaces of a stabilized subspace") {
    // maps with block shape [[A, B], [0, C]] fix the span of the first r+1
    // basis vectors, so the induced map on Y must fix every osculating
    // subspace along it
    std::mt19937 rng(909);
    const Field f3(3, 1);
    const VeroContext ctx(f3, 2, 2);
    const std::uint32_t r = 0;
    std::uniform_int_distribution<std::uint32_t> dist(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixF f(f3, 3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) f(i, j) = (i > r && j <= r) ? f3.zero() : FieldElement{dist(rng)};
        } while (rref(f).rank != 3);
        const MatrixF s = symmetric_power_map(ctx, f);
        for (std::int32_t k = -1; k <= 1; ++k) {
            const auto osc = osculating_subspace(ctx, r, k);
            CHECK(apply_map(s, osc) == osc);
        }
    }
}

TEST_CASE("the GF(2) Veronese surface is a frame of 5-space") {
    // seven image points, every six of them linearly independent; the
    // 5040 permutations of such a frame all extend to collineations of
    // the target, far more than the 168 collineations of the source plane
    const Field f2(2, 1);
    const VeroContext ctx(f2, 2, 2);
    const auto points = projective_points(f2, 3);
    REQUIRE(points.size() == 7);
    MatrixF images(f2, 0, 6);
    for (const auto& x : points) images.append_row(ctx.veronese_coords(x));
    for (std::size_t skip = 0; skip < 7; ++skip) {
        MatrixF six(f2, 0, 6);
        for (std::size_t i = 0; i < 7; ++i)
            if (i != skip) six.append_row(images.row(i));
        CHECK(rref(six).rank == 6);
    }

    std::size_t invertible = 0;
    for (std::uint32_t bits = 0; bits < 512; ++bits) {
        MatrixF m(f2, 3, 3);
        for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = {(bits >> i) & 1u};
        if (rref(m).rank == 3) ++invertible;
    }
    CHECK(invertible == 7 * 6 * 4);  // = 168 source collineations, vs 7! = 5040 frame permutations
}

TEST_CASE("verify_nucleus assembles consistent reports") {
    const auto r1 = verify_nucleus(2, 1, 2, 2);
    CHECK(r1.predicted_dim == 2);
    CHECK(r1.bruteforce_dim == 2);
    CHECK(r1.basis_match);
    CHECK_FALSE(r1.small_field);
    CHECK(r1.ok());

    const auto r2 = verify_nucleus(2, 2, 2, 3);
    CHECK(r2.predicted_dim == 0);
    CHECK(r2.bruteforce_dim == 0);
    CHECK(r2.basis_match);
    CHECK(r2.ok());

    const auto r3 = verify_nucleus(2, 1, 1, 3);
    CHECK(r3.small_field);
    CHECK(r3.predicted_dim == -1);
    CHECK(r3.bruteforce_dim >= r3.predicted_dim);
    CHECK(r3.ok());
}

TEST_CASE("projective point enumeration is normalized and complete") {
    for (const Field f : {Field(2, 1), Field(3, 1), Field(2, 2)}) {
        const auto pts = projective_points(f, 3);
        const std::size_t q = f.order();
        CHECK(pts.size() == (q * q * q - 1) / (q - 1));
        std::set<std::vector<FieldElement>> distinct(pts.begin(), pts.end());
        CHECK(distinct.size() == pts.size());
        for (const auto& x : pts) {
            std::size_t lead = 0;
            while (lead < x.size() && f.is_zero(x[lead])) ++lead;
            REQUIRE(lead < x.size());
            CHECK(x[lead] == f.one());
            CHECK(normalize_projective(f, x) == x);
        }
    }
}

TEST_CASE("oversized enumerations are refused") {
    const Field f2(2, 1);
    CHECK_THROWS_AS(nucleus_bruteforce(VeroContext(f2, 25, 2)), EnumerationTooLarge);
}

TEST_CASE("projection demo needs a single-point nucleus") {
    const Field f4(2, 2);
    // the degree-2 surface over GF(4) has a plane nucleus, not a point
    CHECK_THROWS_AS(projection_demo(VeroContext(f4, 2, 2)), PreconditionFailed);
}
