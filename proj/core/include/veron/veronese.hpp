#ifndef VERON_VERONESE_HPP
#define VERON_VERONESE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "veron/exlin.hpp"
#include "veron/mono.hpp"

namespace veron {

/// Fixed setting for one Veronese embedding: a field, the projective
/// dimension m of the source and the degree t >= 1.
///
/// The target space Y and the space of degree-t dual monomials are dual
/// to each other; both are coordinatized by E^t_m in the order of
/// enumerate_exponents, so their pairing is the plain dot product of
/// coordinate vectors.
class VeroContext {
public:
    VeroContext(Field field, std::uint32_t m, std::uint32_t t);

    const Field& field() const { return field_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t t() const { return t_; }

    /// N = C(m+t, t), the vector dimension of Y.
    std::size_t dim() const { return tuples_.size(); }

    const std::vector<ExponentTuple>& tuples() const { return tuples_; }
    std::size_t tuple_index(const ExponentTuple& e) const;

    /// Multinomial coefficient of each tuple, embedded in the field.
    const std::vector<FieldElement>& multinomial_constants() const { return multinomial_consts_; }

    /// Image coordinates of x under the Veronese map: coordinate e is the
    /// monomial x_0^{e_0} ... x_m^{e_m}. Nonzero whenever x is nonzero.
    std::vector<FieldElement> veronese_coords(std::span<const FieldElement> x) const;

    /// Coordinates of the t-th power of the dual vector with coefficients
    /// a: coordinate e is the multinomial coefficient times a^e.
    std::vector<FieldElement> dual_power_coords(std::span<const FieldElement> a) const;

private:
    Field field_;
    std::uint32_t m_;
    std::uint32_t t_;
    std::vector<ExponentTuple> tuples_;
    std::map<ExponentTuple, std::size_t> index_;
    std::vector<FieldElement> multinomial_consts_;
};

/// One representative per projective point of F^coords: the first nonzero
/// coordinate is normalized to 1. Deterministic order: by position of the
/// leading 1, then by the trailing coordinates in element-code order (the
/// last coordinate varies fastest). (q^coords - 1)/(q - 1) points.
std::vector<std::vector<FieldElement>> projective_points(const Field& field, std::size_t coords);

/// Scales v so its first nonzero coordinate becomes 1; v must be nonzero.
std::vector<FieldElement> normalize_projective(const Field& field, std::vector<FieldElement> v);

/// Rows: veronese_coords over every projective point of the source.
MatrixF veronese_point_matrix(const VeroContext& ctx);

/// Rows: dual_power_coords over every projective point of the dual source.
/// Its row space is the span of all t-th powers of dual vectors; its
/// kernel cuts out the nucleus.
MatrixF dual_power_matrix(const VeroContext& ctx);

/// The nucleus computed from its definition: the intersection of all
/// osculating hyperplanes, i.e. the kernel of dual_power_matrix.
Subspace nucleus_bruteforce(const VeroContext& ctx);

/// Tuples whose multinomial coefficient vanishes mod p; the corresponding
/// base points always lie in the nucleus, and span it when the field has
/// at least t elements.
std::vector<ExponentTuple> nucleus_basis_predicted(std::uint32_t m, std::uint32_t t, std::uint32_t p);

/// Span of the unit vectors at the predicted tuples.
Subspace nucleus_predicted_span(const VeroContext& ctx);

/// Row space of veronese_point_matrix: the span of the Veronese image.
/// Full iff the field has at least t elements or m = 0.
Subspace image_span(const VeroContext& ctx);

/// For q < t and m >= 1: an explicit nonzero degree-t form (in monomial
/// coordinates) annihilating every image point, with +1 at the tuple
/// (q, t-q, 0, ..., 0) and -1 at (1, t-1, 0, ..., 0).
std::vector<FieldElement> vanishing_form_witness(const VeroContext& ctx);

/// k-osculating subspace of the Veronese variety along the image of the
/// coordinate subspace spanned by the first r+1 basis vectors, for
/// -1 <= k <= t-1. Computed as the kernel of the constraint rows: all
/// monomials with total degree at least k+1 in the positions beyond r.
Subspace osculating_subspace(const VeroContext& ctx, std::uint32_t r, std::int32_t k);

/// Nucleus of the sub-Veronese variety on the coordinate subspace spanned
/// by the first r+1 basis vectors, embedded in Y: unit vectors at tuples
/// with vanishing multinomial and support within the first r+1 slots.
/// Requires a field with at least t elements.
Subspace sub_nucleus(const VeroContext& ctx, std::uint32_t r);

/// Span of the image of the sub-Veronese on the first r+1 coordinates.
Subspace sub_image_span(const VeroContext& ctx, std::uint32_t r);

/// Matrix S of the collineation of Y induced by the linear map f of X,
/// with S * veronese_coords(x) = veronese_coords(f x) for every x.
/// Functorial: S(f g) = S(f) S(g), S(id) = id.
MatrixF symmetric_power_map(const VeroContext& ctx, const MatrixF& f);

/// Outcome of one nucleus computation, pairing the closed-form prediction
/// with the brute-force result.
struct NucleusReport {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::uint32_t m = 0;
    std::uint32_t t = 0;
    std::int64_t predicted_dim = -1;   // projective; -1 means empty
    std::int64_t bruteforce_dim = -1;  // projective
    /// q >= t: brute-force nucleus equals the predicted span exactly.
    /// q < t: the predicted span is contained in the brute-force nucleus.
    bool basis_match = false;
    bool small_field = false;  // q < t: the formula is only a lower bound

    /// The invariants the theory demands of this entry.
    bool ok() const {
        if (small_field) return bruteforce_dim >= predicted_dim && basis_match;
        return bruteforce_dim == predicted_dim && basis_match;
    }

    friend bool operator==(const NucleusReport&, const NucleusReport&) = default;
};

NucleusReport verify_nucleus(const Field& field, std::uint32_t m, std::uint32_t t);
NucleusReport verify_nucleus(std::uint32_t p, std::uint32_t k, std::uint32_t m, std::uint32_t t);

/// Result of projecting a Veronese surface with a one-point nucleus from
/// that nucleus onto the complementary coordinate hyperplane.
struct ProjectionDemoReport {
    std::uint32_t q = 0;
    std::size_t ambient_vector_dim = 0;  // N, before projecting
    std::size_t nucleus_coordinate = 0;  // dropped coordinate index
    std::size_t source_points = 0;
    std::size_t distinct_images = 0;
    bool injective = false;
    std::size_t lines = 0;
    std::size_t lines_skew_to_nucleus = 0;
    bool line_spans_full = false;  // every line image spans t+1 dimensions
    std::int64_t image_span_projective_dim = -1;

    bool ok() const {
        return injective && lines_skew_to_nucleus == lines && line_spans_full &&
               image_span_projective_dim == std::int64_t(ambient_vector_dim) - 2;
    }
};

/// Requires m = 2 and a single-point coordinate nucleus (as over GF(4)
/// with t = 3).
ProjectionDemoReport projection_demo(const VeroContext& ctx);

}  // namespace veron

#endif
