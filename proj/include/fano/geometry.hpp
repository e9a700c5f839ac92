#pragma once

#include "fano/groebner.hpp"
#include "fano/jacobian.hpp"
#include "fano/linalg.hpp"
#include "fano/rng.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fano {

struct CoincidentPoints : std::runtime_error {
    CoincidentPoints() : std::runtime_error("the two points coincide: no line through them") {}
};

struct PointOnSurface : std::runtime_error {
    explicit PointOnSurface(const std::string& what) : std::runtime_error(what) {}
};

struct PointNotOnVariety : std::runtime_error {
    PointNotOnVariety() : std::runtime_error("generators do not all vanish at the given point") {}
};

struct InterpolationError : std::runtime_error {
    explicit InterpolationError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Pluecker bookkeeping: scroll labels 00,01,02,10,11,12 index P^5; unordered
// pairs in lexicographic order index the 15 coordinates of P^14. Sign
// convention: row1 wedge row2.
// ---------------------------------------------------------------------------

const std::vector<std::string>& scroll_labels();
std::size_t plucker_pair_index(std::size_t a, std::size_t b);  // a < b in 0..5
std::pair<std::size_t, std::size_t> plucker_pair(std::size_t index);
std::vector<std::string> plucker_variable_names();  // p00_01, ..., p11_12
RingPtr plucker_ring(FieldDesc field);              // 15 variables
RingPtr p5_ring(FieldDesc field);                   // z00..z12

/// Parity sign of a permutation of distinct values (+1/-1).
int permutation_sign(const std::vector<std::size_t>& perm);

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

/// Projectively embedded linear subspace of P^(ambient-1), spanned by rows.
template <class K>
struct LinearSubspace {
    std::vector<std::vector<K>> rows;  // independent spanning vectors

    std::size_t ambient() const { return rows.empty() ? 0 : rows.front().size(); }
    std::size_t projective_dimension() const { return rows.size() - 1; }
};

/// Polynomial map into projective space: `components` live in the parameter
/// ring. For a multiprojective source, `factors` lists the variable indices of
/// each factor and all components share one multidegree; an empty `factors`
/// means an affine source (charts).
template <class K>
struct Parametrization {
    RingPtr params;
    std::vector<std::vector<std::size_t>> factors;
    std::vector<Polynomial<K>> components;
};

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

/// z_ij = x_i y0^(2-j) y1^j : P^1 x P^1 -> R^4 in P^5, multidegree (1,2).
template <class K>
Parametrization<K> scroll_map(FieldDesc field);

/// (p,q) -> the 15 Pluecker coordinates of the chord through the two scroll
/// points: (P^1 x P^1)^2 -> P^14, multidegree (1,2,1,2).
template <class K>
Parametrization<K> chord_map(FieldDesc field);

/// Complete system of cubics P^2 -> P^9 (degree-9 del Pezzo model).
template <class K>
Parametrization<K> veronese_cubic_map(FieldDesc field);

/// The paper's affine chart of M_4 at the 1_1 orbit (parameters a01,a11,b01,b11).
template <class K>
Parametrization<K> chart_1_1(FieldDesc field);

/// The paper's affine chart of M_4 at the 2_2 orbit (parameters a02,a10,b02,b10).
template <class K>
Parametrization<K> chart_2_2(FieldDesc field);

/// The six 2x2 minors of [[z00,z01,z10,z11],[z01,z02,z11,z12]] cutting R^4.
template <class K>
std::vector<Polynomial<K>> scroll_quadrics(const RingPtr& p5);

/// The three 2x2 minors of [[z00,z01,z02],[z10,z11,z12]] cutting G^3_3.
template <class K>
std::vector<Polynomial<K>> g33_equations(const RingPtr& p5);

/// The 15 three-term Grassmann-Pluecker relations of G(1,5).
template <class K>
std::vector<Polynomial<K>> plucker_relations(const RingPtr& pluckerR);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// 2x2 minors of the 2x6 matrix with rows a, b. Throws on coincident points.
template <class K>
std::vector<K> plucker_line(const std::vector<K>& a, const std::vector<K>& b);

/// Linear forms in Pluecker coordinates cutting (on G(1,5)) the lines meeting
/// `sub`: wedge of the line 2-vector with the subspace. 1 form for an S_3,
/// 6 for a plane, 15 for a line.
template <class K>
std::vector<Polynomial<K>> incidence_conditions(const RingPtr& pluckerR, const LinearSubspace<K>& sub);

/// Linear forms cutting the lines contained in the hyperplane {h.z = 0}:
/// contraction of the 2-vector by h (6 forms).
template <class K>
std::vector<Polynomial<K>> containment_conditions(const RingPtr& pluckerR, const std::vector<K>& h);

/// Degree-d forms on the target vanishing on the image of `phi`, found by
/// evaluating at `samples` random parameter points and certified exactly by
/// symbolic substitution (throws InterpolationError if a candidate fails).
template <class K>
std::vector<Polynomial<K>> image_ideal_interpolation(const Parametrization<K>& phi, const RingPtr& target,
                                                     std::uint16_t degree, std::size_t samples, Rng& rng);

/// I plus k random linear forms (recorded in *forms_out when given).
template <class K>
Ideal<K> random_linear_section(const Ideal<K>& I, std::size_t k, Rng& rng,
                               std::vector<Polynomial<K>>* forms_out = nullptr);

/// Count of the projective points of a homogeneous ideal whose variety is
/// zero-dimensional: dehomogenize by a random affine chart and count.
template <class K>
std::size_t count_projective_points(const Ideal<K>& I, Rng& rng, const Budget& budget = Budget());

/// Number of secants of R^4 through q (not on R^4), or nullopt when infinite.
template <class K>
std::optional<std::size_t> secants_through_point(const std::vector<K>& q, FieldDesc field, Rng& rng,
                                                 const Budget& budget = Budget());

/// Rank of the Jacobian of the generators at a point of V(I).
template <class K>
std::size_t jacobian_rank_at(const Ideal<K>& I, const std::vector<K>& point);

/// True iff every form vanishes identically under substitution of the chart.
template <class K>
bool chart_containment_check(const Parametrization<K>& chart, const std::vector<Polynomial<K>>& forms);

/// The five orbit representatives of M_4 as (label, Pluecker point) pairs:
/// 0_4, 0_3, 2_3, 2_2, 1_1, each with expected Jacobian corank 4.
template <class K>
std::vector<std::pair<std::string, std::vector<K>>> orbit_representatives(FieldDesc field);

// ---------------------------------------------------------------------------
// Implementation
// ---------------------------------------------------------------------------

namespace geometry_detail {

template <class K>
K random_element(const Ring& R, Rng& rng) {
    if (R.field.kind == FieldDesc::Kind::Prime) return field_ops<K>::from_int(R, rng.mod(R.field.p));
    return field_ops<K>::from_int(R, static_cast<std::int64_t>(rng.mod(2001)) - 1000);
}

template <class K>
K random_nonzero(const Ring& R, Rng& rng) {
    for (;;) {
        K x = random_element<K>(R, rng);
        if (!x.is_zero()) return x;
    }
}

/// Determinant by Laplace expansion (tiny matrices only).
template <class K>
K small_det(const std::vector<std::vector<K>>& m, const K& zero) {
    const std::size_t n = m.size();
    if (n == 0) return zero;  // caller supplies one() for the empty case
    if (n == 1) return m[0][0];
    K acc = zero;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<K>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<K> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        K term = m[0][j] * small_det(sub, zero);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// All monomials of total degree d in `arity` variables (deterministic order).
std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint16_t d);

/// Subsets of {0..5} of the given size, lexicographic.
std::vector<std::vector<std::size_t>> subsets_of_six(std::size_t size);

/// Scroll components z_ij as polynomials in (x0,x1) at indices xi and
/// (y0,y1) at indices yi of the given ring.
template <class K>
std::vector<Polynomial<K>> scroll_components(const RingPtr& R, std::size_t x0, std::size_t y0) {
    std::vector<Polynomial<K>> out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Polynomial<K> f = Polynomial<K>::variable(R, x0 + i);
            f *= Polynomial<K>::variable(R, y0, static_cast<std::uint16_t>(2 - j)) *
                 Polynomial<K>::variable(R, y0 + 1, static_cast<std::uint16_t>(j));
            out.push_back(std::move(f));
        }
    // variable(ring, i, 0) is the constant 1, so the j=0 and j=2 cases are fine
    return out;
}

/// 15 pairwise minors p_ab = r[a] s[b] - r[b] s[a] of two coordinate rows.
template <class K>
std::vector<Polynomial<K>> wedge_rows(const std::vector<Polynomial<K>>& r, const std::vector<Polynomial<K>>& s) {
    std::vector<Polynomial<K>> out;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) out.push_back(r[a] * s[b] - r[b] * s[a]);
    return out;
}

/// Random point on a projective factor / affine sample of the parameter ring.
template <class K>
std::vector<K> random_parameter_point(const Parametrization<K>& phi, Rng& rng) {
    const Ring& R = *phi.params;
    std::vector<K> pt(R.arity(), field_ops<K>::zero(R));
    if (phi.factors.empty()) {
        for (auto& x : pt) x = random_element<K>(R, rng);
        return pt;
    }
    for (const auto& fac : phi.factors) {
        bool nonzero = false;
        while (!nonzero) {
            for (auto i : fac) {
                pt[i] = random_element<K>(R, rng);
                if (!pt[i].is_zero()) nonzero = true;
            }
        }
    }
    return pt;
}

}  // namespace geometry_detail

template <class K>
Parametrization<K> scroll_map(FieldDesc field) {
    RingPtr R = make_ring({"x0", "x1", "y0", "y1"}, field);
    return {R, {{0, 1}, {2, 3}}, geometry_detail::scroll_components<K>(R, 0, 2)};
}

template <class K>
Parametrization<K> chord_map(FieldDesc field) {
    RingPtr R = make_ring({"x0", "x1", "y0", "y1", "u0", "u1", "v0", "v1"}, field);
    auto s1 = geometry_detail::scroll_components<K>(R, 0, 2);
    auto s2 = geometry_detail::scroll_components<K>(R, 4, 6);
    return {R, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, geometry_detail::wedge_rows(s1, s2)};
}

template <class K>
Parametrization<K> veronese_cubic_map(FieldDesc field) {
    RingPtr R = make_ring({"x", "y", "z"}, field);
    std::vector<Polynomial<K>> comps;
    for (const auto& m : geometry_detail::monomials_of_degree(3, 3))
        comps.push_back(Polynomial<K>::monomial(R, m, field_ops<K>::one(*R)));
    return {R, {{0, 1, 2}}, std::move(comps)};
}

template <class K>
Parametrization<K> chart_1_1(FieldDesc field) {
    RingPtr R = make_ring({"a01", "a11", "b01", "b11"}, field);
    auto v = [&](std::size_t i) { return Polynomial<K>::variable(R, i); };
    auto c = [&](std::int64_t n) { return Polynomial<K>::constant(R, n); };
    Polynomial<K> a01 = v(0), a11 = v(1), b01 = v(2), b11 = v(3);
    std::vector<Polynomial<K>> r1{c(1), a01, a01 * a01 + a11 * b01, c(0), a11, a11 * (a01 + b11)};
    std::vector<Polynomial<K>> r2{c(0), b01, b01 * (a01 + b11), c(1), b11, a11 * b01 + b11 * b11};
    return {R, {}, geometry_detail::wedge_rows(r1, r2)};
}

template <class K>
Parametrization<K> chart_2_2(FieldDesc field) {
    RingPtr R = make_ring({"a02", "a10", "b02", "b10"}, field);
    auto v = [&](std::size_t i) { return Polynomial<K>::variable(R, i); };
    auto c = [&](std::int64_t n) { return Polynomial<K>::constant(R, n); };
    Polynomial<K> a02 = v(0), a10 = v(1), b02 = v(2), b10 = v(3);
    std::vector<Polynomial<K>> r1{c(1), c(0), a02, a10, a02 * b10, a02 * (a10 + b10 * b02)};
    std::vector<Polynomial<K>> r2{c(0), c(1), b02, b10, a10 + b02 * b10, a10 * b02 + b10 * a02 + b10 * b02 * b02};
    return {R, {}, geometry_detail::wedge_rows(r1, r2)};
}

template <class K>
std::vector<Polynomial<K>> scroll_quadrics(const RingPtr& p5) {
    // rows of the scroll matrix: (z00, z01, z10, z11) over (z01, z02, z11, z12)
    const std::size_t top[4] = {0, 1, 3, 4};
    const std::size_t bot[4] = {1, 2, 4, 5};
    auto v = [&](std::size_t i) { return Polynomial<K>::variable(p5, i); };
    std::vector<Polynomial<K>> out;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) out.push_back(v(top[a]) * v(bot[b]) - v(top[b]) * v(bot[a]));
    return out;
}

template <class K>
std::vector<Polynomial<K>> g33_equations(const RingPtr& p5) {
    auto v = [&](std::size_t i) { return Polynomial<K>::variable(p5, i); };
    // rank([[z00,z01,z02],[z10,z11,z12]]) = 1
    return {v(0) * v(4) - v(1) * v(3), v(0) * v(5) - v(2) * v(3), v(1) * v(5) - v(2) * v(4)};
}

template <class K>
std::vector<Polynomial<K>> plucker_relations(const RingPtr& pluckerR) {
    std::vector<Polynomial<K>> rels;
    auto p = [&](std::size_t i, std::size_t j) {
        return Polynomial<K>::variable(pluckerR, plucker_pair_index(i, j));
    };
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            for (std::size_t c = b + 1; c < 6; ++c)
                for (std::size_t d = c + 1; d < 6; ++d)
                    rels.push_back(p(a, b) * p(c, d) - p(a, c) * p(b, d) + p(a, d) * p(b, c));
    return rels;
}

template <class K>
std::vector<K> plucker_line(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.size() != 6 || b.size() != 6) throw ArityMismatch("plucker_line expects points of P^5");
    std::vector<K> out;
    bool nonzero = false;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            K m = a[i] * b[j] - a[j] * b[i];
            if (!m.is_zero()) nonzero = true;
            out.push_back(std::move(m));
        }
    if (!nonzero) throw CoincidentPoints();
    return out;
}

template <class K>
std::vector<Polynomial<K>> incidence_conditions(const RingPtr& pluckerR, const LinearSubspace<K>& sub) {
    const std::size_t k = sub.rows.size();
    if (sub.ambient() != 6 || k < 2 || k > 4)
        throw std::invalid_argument("incidence conditions require an S_1, S_2 or S_3 in P^5");
    {
        Matrix<K> m;
        for (const auto& r : sub.rows) m.append_row(r);
        if (m.rank() != k) throw std::invalid_argument("subspace basis rows are dependent");
    }
    const K zero = field_ops<K>::zero(*pluckerR);
    std::vector<Polynomial<K>> forms;
    // coefficient of e_S in (line 2-vector) wedge (row_1 ^ ... ^ row_k)
    for (const auto& S : geometry_detail::subsets_of_six(2 + k)) {
        std::vector<Term<K>> terms;
        for (std::size_t ia = 0; ia < S.size(); ++ia)
            for (std::size_t ib = ia + 1; ib < S.size(); ++ib) {
                std::size_t a = S[ia], b = S[ib];
                std::vector<std::size_t> rest;
                for (auto s : S)
                    if (s != a && s != b) rest.push_back(s);
                std::vector<std::vector<K>> sub_m;
                for (const auto& r : sub.rows) {
                    std::vector<K> row;
                    for (auto c : rest) row.push_back(r[c]);
                    sub_m.push_back(std::move(row));
                }
                K d = geometry_detail::small_det(sub_m, zero);
                if (d.is_zero()) continue;
                std::vector<std::size_t> perm{a, b};
                perm.insert(perm.end(), rest.begin(), rest.end());
                if (permutation_sign(perm) < 0) d = -d;
                terms.push_back({Monomial::variable(15, plucker_pair_index(a, b)), std::move(d)});
            }
        forms.push_back(Polynomial<K>::from_terms(pluckerR, std::move(terms)));
    }
    return forms;
}

template <class K>
std::vector<Polynomial<K>> containment_conditions(const RingPtr& pluckerR, const std::vector<K>& h) {
    if (h.size() != 6) throw ArityMismatch("hyperplane must have 6 coefficients");
    std::vector<Polynomial<K>> forms;
    // iota_h(e_a ^ e_b) = h_a e_b - h_b e_a; coefficient of e_c below
    for (std::size_t c = 0; c < 6; ++c) {
        std::vector<Term<K>> terms;
        for (std::size_t a = 0; a < c; ++a)
            if (!h[a].is_zero()) terms.push_back({Monomial::variable(15, plucker_pair_index(a, c)), h[a]});
        for (std::size_t b = c + 1; b < 6; ++b)
            if (!h[b].is_zero()) terms.push_back({Monomial::variable(15, plucker_pair_index(c, b)), -h[b]});
        forms.push_back(Polynomial<K>::from_terms(pluckerR, std::move(terms)));
    }
    return forms;
}

template <class K>
std::vector<Polynomial<K>> image_ideal_interpolation(const Parametrization<K>& phi, const RingPtr& target,
                                                     std::uint16_t degree, std::size_t samples, Rng& rng) {
    const Ring& T = *target;
    if (phi.components.size() != T.arity())
        throw ArityMismatch("target arity must equal the number of map components");
    auto monos = geometry_detail::monomials_of_degree(T.arity(), degree);
    if (samples < 2 * monos.size())
        throw std::invalid_argument("need at least twice as many samples as degree-d monomials");
    Matrix<K> m(0, 0, field_ops<K>::zero(T));
    std::size_t taken = 0;
    std::size_t attempts = 0;
    while (taken < samples) {
        if (++attempts > 20 * samples) throw InterpolationError("could not sample enough image points");
        auto pt = geometry_detail::random_parameter_point(phi, rng);
        std::vector<K> image;
        bool nonzero = false;
        for (const auto& f : phi.components) {
            image.push_back(f.evaluate(pt));
            if (!image.back().is_zero()) nonzero = true;
        }
        if (!nonzero) continue;  // base locus
        std::vector<K> row;
        row.reserve(monos.size());
        for (const auto& mono : monos) {
            K v = field_ops<K>::one(T);
            for (std::size_t i = 0; i < T.arity(); ++i)
                for (std::uint16_t e = 0; e < mono[i]; ++e) v *= image[i];
            row.push_back(std::move(v));
        }
        m.append_row(row);
        ++taken;
    }
    std::vector<Polynomial<K>> out;
    for (const auto& coeffs : m.kernel(field_ops<K>::zero(T), field_ops<K>::one(T))) {
        std::vector<Term<K>> terms;
        for (std::size_t j = 0; j < monos.size(); ++j)
            if (!coeffs[j].is_zero()) terms.push_back({monos[j], coeffs[j]});
        Polynomial<K> f = Polynomial<K>::from_terms(target, std::move(terms));
        if (!f.substitute(phi.components).is_zero())
            throw InterpolationError("candidate form fails the symbolic substitution certificate");
        out.push_back(std::move(f));
    }
    return out;
}

template <class K>
Ideal<K> random_linear_section(const Ideal<K>& I, std::size_t k, Rng& rng,
                               std::vector<Polynomial<K>>* forms_out) {
    const Ring& R = *I.ring();
    std::vector<Polynomial<K>> forms;
    for (std::size_t s = 0; s < k; ++s) {
        std::vector<Term<K>> terms;
        for (std::size_t v = 0; v < R.arity(); ++v) {
            K c = geometry_detail::random_element<K>(R, rng);
            if (!c.is_zero()) terms.push_back({Monomial::variable(R.arity(), v), std::move(c)});
        }
        forms.push_back(Polynomial<K>::from_terms(I.ring(), std::move(terms)));
    }
    if (forms_out) *forms_out = forms;
    return I.with(std::move(forms));
}

template <class K>
std::size_t count_projective_points(const Ideal<K>& I, Rng& rng, const Budget& budget) {
    const Ring& R = *I.ring();
    std::vector<Term<K>> terms;
    for (std::size_t v = 0; v < R.arity(); ++v) {
        K c = geometry_detail::random_element<K>(R, rng);
        if (!c.is_zero()) terms.push_back({Monomial::variable(R.arity(), v), std::move(c)});
    }
    Polynomial<K> chart =
        Polynomial<K>::from_terms(I.ring(), std::move(terms)) - Polynomial<K>::constant(I.ring(), 1);
    return count_points(I.with({std::move(chart)}), budget);
}

template <class K>
std::optional<std::size_t> secants_through_point(const std::vector<K>& q, FieldDesc field, Rng& rng,
                                                 const Budget& budget) {
    if (q.size() != 6) throw ArityMismatch("expected a point of P^5");
    {
        RingPtr p5 = p5_ring(field);
        bool on_surface = true;
        for (const auto& f : scroll_quadrics<K>(p5))
            if (!f.evaluate(q).is_zero()) on_surface = false;
        if (on_surface) throw PointOnSurface("the point lies on R^4");
    }
    RingPtr R = make_ring({"x0", "x1", "y0", "y1", "u0", "u1", "v0", "v1"}, field);
    auto s1 = geometry_detail::scroll_components<K>(R, 0, 2);
    auto s2 = geometry_detail::scroll_components<K>(R, 4, 6);
    const K zero = field_ops<K>::zero(*R);
    // all 3x3 minors of [q; s1; s2]: q in the span of the two scroll points
    std::vector<Polynomial<K>> gens;
    for (const auto& cols : geometry_detail::subsets_of_six(3)) {
        Polynomial<K> det = Polynomial<K>::zero(R);
        // Laplace along the constant first row
        for (std::size_t j = 0; j < 3; ++j) {
            if (q[cols[j]].is_zero()) continue;
            std::size_t c1 = cols[(j + 1) % 3], c2 = cols[(j + 2) % 3];
            if (c1 > c2) std::swap(c1, c2);
            Polynomial<K> minor = s1[c1] * s2[c2] - s1[c2] * s2[c1];
            if (j == 1) minor = -minor;  // sign pattern + - + over the top row
            det += minor.scaled(q[cols[j]]);
        }
        if (!det.is_zero()) gens.push_back(std::move(det));
    }
    // one random affine chart per P^1 factor
    for (std::size_t fac = 0; fac < 4; ++fac) {
        std::vector<Term<K>> terms;
        bool nonzero = false;
        while (!nonzero) {
            terms.clear();
            for (std::size_t i = 0; i < 2; ++i) {
                K c = geometry_detail::random_element<K>(*R, rng);
                if (!c.is_zero()) {
                    nonzero = true;
                    terms.push_back({Monomial::variable(8, 2 * fac + i), std::move(c)});
                }
            }
        }
        gens.push_back(Polynomial<K>::from_terms(R, std::move(terms)) - Polynomial<K>::constant(R, 1));
    }
    // saturate away the diagonal (both scroll points equal): it is exactly the
    // common zero locus of the 15 chord minors, so one random combination of
    // them vanishes there and (generically) nowhere else on the solutions
    Polynomial<K> g = Polynomial<K>::zero(R);
    for (auto& minor : geometry_detail::wedge_rows(s1, s2))
        g += minor.scaled(geometry_detail::random_nonzero<K>(*R, rng));
    (void)zero;
    Ideal<K> I(R, std::move(gens));
    Ideal<K> sat = saturate(I, g, budget);
    try {
        std::size_t n = count_points(sat, budget);
        return n / 2;  // ordered pairs (p,q),(q,p) give the same chord
    } catch (const NotZeroDimensional&) {
        return std::nullopt;
    }
}

template <class K>
std::size_t jacobian_rank_at(const Ideal<K>& I, const std::vector<K>& point) {
    for (const auto& f : I.generators())
        if (!f.evaluate(point).is_zero()) throw PointNotOnVariety();
    if (I.generators().empty()) return 0;
    return jacobian_matrix(I.generators(), point).rank();
}

template <class K>
bool chart_containment_check(const Parametrization<K>& chart, const std::vector<Polynomial<K>>& forms) {
    for (const auto& f : forms)
        if (!f.substitute(chart.components).is_zero()) return false;
    return true;
}

template <class K>
std::vector<std::pair<std::string, std::vector<K>>> orbit_representatives(FieldDesc field) {
    RingPtr p5 = p5_ring(field);
    const K zero = field_ops<K>::zero(*p5);
    const K one = field_ops<K>::one(*p5);
    auto e = [&](std::size_t i) {
        std::vector<K> v(6, zero);
        v[i] = one;
        return v;
    };
    std::vector<K> e01_plus_e10 = e(1);
    e01_plus_e10[3] = one;
    return {
        {"0_4", plucker_line(e(0), e(5))},        // two points in general position: e00, e12
        {"0_3", plucker_line(e(0), e01_plus_e10)},  // tangent direction off both rulings at e00
        {"2_3", plucker_line(e(0), e(2))},        // two points on one conic: e00, e02
        {"2_2", plucker_line(e(0), e(1))},        // tangent to a conic: the line z02=z10=z11=z12=0
        {"1_1", plucker_line(e(0), e(3))},        // a line of the ruling: z01=z02=z11=z12=0
    };
}

}  // namespace fano
