#include "dio/quadrics.hpp"

#include "dio/errors.hpp"

namespace dio {

QuadricForm QuadricForm::from_polynomial(const Polynomial& p) {
    const int k = p.var_count();
    if (k < 2) throw NotQuadraticError("quadric form needs at least two variables");
    if (p.total_degree() > 2) throw NotQuadraticError("degree exceeds 2");
    QuadricForm form{k, rat_mat(k + 1)};
    for (const auto& [exps, coeff] : p.terms()) {
        int first = -1, second = -1;
        for (int i = 0; i < k; ++i) {
            for (unsigned c = 0; c < exps[i]; ++c) {
                if (first == -1)
                    first = i;
                else
                    second = i;
            }
        }
        if (first == -1) {
            form.m[k][k] = Rat(coeff);
        } else if (second == -1) {
            form.m[first][k] = form.m[k][first] = Rat(coeff) / 2;
        } else if (first == second) {
            form.m[first][first] = Rat(coeff);
        } else {
            form.m[first][second] = form.m[second][first] = Rat(coeff) / 2;
        }
    }
    bool quadratic = false;
    for (int i = 0; i < k && !quadratic; ++i)
        for (int j = 0; j < k; ++j)
            if (form.m[i][j] != 0) {
                quadratic = true;
                break;
            }
    if (!quadratic) throw NotQuadraticError("quadratic part is zero");
    return form;
}

RatMat QuadricForm::quadratic_part() const {
    RatMat d = rat_mat(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d[i][j] = m[i][j];
    return d;
}

std::string to_string(SurfaceClass s) {
    switch (s) {
        case SurfaceClass::Ellipsoid: return "ellipsoid";
        case SurfaceClass::ImaginaryEllipsoid: return "imaginary_ellipsoid";
        case SurfaceClass::OneSheetedHyperboloid: return "one_sheeted_hyperboloid";
        case SurfaceClass::TwoSheetedHyperboloid: return "two_sheeted_hyperboloid";
        case SurfaceClass::EllipticParaboloid: return "elliptic_paraboloid";
        case SurfaceClass::HyperbolicParaboloid: return "hyperbolic_paraboloid";
        case SurfaceClass::RealCone: return "real_cone";
        case SurfaceClass::ImaginaryCone: return "imaginary_cone";
        case SurfaceClass::EllipticCylinder: return "elliptic_cylinder";
        case SurfaceClass::ImaginaryEllipticCylinder: return "imaginary_elliptic_cylinder";
        case SurfaceClass::HyperbolicCylinder: return "hyperbolic_cylinder";
        case SurfaceClass::ParabolicCylinder: return "parabolic_cylinder";
        case SurfaceClass::PairOfIntersectingPlanes: return "pair_of_intersecting_planes";
        case SurfaceClass::PairOfImaginaryIntersectingPlanes:
            return "pair_of_imaginary_intersecting_planes";
        case SurfaceClass::PairOfParallelPlanes: return "pair_of_parallel_planes";
        case SurfaceClass::PairOfImaginaryParallelPlanes:
            return "pair_of_imaginary_parallel_planes";
        case SurfaceClass::PairOfCoincidentPlanes: return "pair_of_coincident_planes";
    }
    return "?";
}

QuadricInvariants quadric_invariants(const QuadricForm& q) {
    QuadricInvariants inv;
    RatMat d = q.quadratic_part();
    inv.I = 0;
    for (int i = 0; i < q.k; ++i) inv.I += d[i][i];
    inv.J = principal_minor_sum(d, 2);
    inv.detD = determinant(d);
    inv.detA = determinant(q.m);
    inv.Aprime = principal_minor_sum(q.m, q.k);
    return inv;
}

namespace {

SurfaceClass classify_by_inertia(const Inertia& quad, const Inertia& full, int k) {
    const int rank_gain = full.rank() - quad.rank();  // 0, 1 or 2
    if (quad.zero == 0) {
        // Full-rank quadratic part: central surfaces.
        if (rank_gain == 1) {
            if (quad.negative == 0)
                return full.negative == 1 ? SurfaceClass::Ellipsoid
                                          : SurfaceClass::ImaginaryEllipsoid;
            return full.negative == quad.negative + 1 ? SurfaceClass::OneSheetedHyperboloid
                                                      : SurfaceClass::TwoSheetedHyperboloid;
        }
        return quad.negative == 0 ? SurfaceClass::ImaginaryCone : SurfaceClass::RealCone;
    }
    // Degenerate quadratic part.
    if (rank_gain == 2) {
        if (quad.rank() == 1) return SurfaceClass::ParabolicCylinder;
        return quad.negative == 0 ? SurfaceClass::EllipticParaboloid
                                  : SurfaceClass::HyperbolicParaboloid;
    }
    if (rank_gain == 1) {
        if (quad.rank() == 1)
            return full.negative == quad.negative + 1
                       ? SurfaceClass::PairOfParallelPlanes
                       : SurfaceClass::PairOfImaginaryParallelPlanes;
        if (quad.negative == 0)
            return full.negative == 1 ? SurfaceClass::EllipticCylinder
                                      : SurfaceClass::ImaginaryEllipticCylinder;
        return SurfaceClass::HyperbolicCylinder;
    }
    // rank_gain == 0
    if (quad.rank() == 1) return SurfaceClass::PairOfCoincidentPlanes;
    if (quad.negative == 0) return SurfaceClass::PairOfImaginaryIntersectingPlanes;
    (void)k;
    return SurfaceClass::PairOfIntersectingPlanes;
}

// The classical determinant conditions for the classes that have them; the
// inertia result is authoritative, so a failed condition only produces a
// warning. (The stated imaginary-ellipsoid condition I*|D| < 0 is known to
// disagree with definite diagonal examples such as x1^2+x2^2+x3^2+1.)
void cross_check(QuadricClassification& out) {
    if (out.analogue) return;  // conditions are specific to three variables
    const QuadricInvariants& v = out.invariants;
    auto fail = [&](const std::string& cond) {
        out.warnings.push_back("determinant cross-check failed for " +
                               to_string(out.surface) + ": expected " + cond + " (I=" +
                               to_string(v.I) + ", |D|=" + to_string(v.detD) + ", |A|=" +
                               to_string(v.detA) + ")");
    };
    switch (out.surface) {
        case SurfaceClass::Ellipsoid:
            if (!(v.detA < 0 && v.detD != 0 && v.I * v.detD > 0))
                fail("|A| < 0, |D| != 0, I*|D| > 0");
            break;
        case SurfaceClass::ImaginaryEllipsoid:
            if (!(v.detA > 0 && v.detD != 0 && v.I * v.detD < 0))
                fail("|A| > 0, |D| != 0, I*|D| < 0");
            break;
        case SurfaceClass::OneSheetedHyperboloid:
            if (!(v.detA > 0 && v.detD != 0 && v.I * v.detD < 0))
                fail("|A| > 0, |D| != 0, I*|D| < 0");
            break;
        case SurfaceClass::TwoSheetedHyperboloid:
            if (!(v.detA < 0 && v.detD != 0 && v.I * v.detD < 0))
                fail("|A| < 0, |D| != 0, I*|D| < 0");
            break;
        case SurfaceClass::EllipticParaboloid:
            if (!(v.detA < 0 && v.detD == 0)) fail("|A| < 0, |D| = 0");
            break;
        case SurfaceClass::RealCone:
            if (!(v.detA == 0 && v.detD != 0 && v.I * v.detD <= 0))
                fail("|A| = 0, |D| != 0, I*|D| <= 0");
            break;
        case SurfaceClass::ImaginaryCone:
            if (!(v.detA == 0 && v.detD != 0 && v.I * v.detD > 0))
                fail("|A| = 0, |D| != 0, I*|D| > 0");
            break;
        default:
            break;
    }
}

}  // namespace

QuadricClassification classify_quadric(const QuadricForm& q) {
    QuadricClassification out;
    out.invariants = quadric_invariants(q);
    out.analogue = q.k != 3;

    Inertia quad = matrix_inertia(q.quadratic_part());
    Inertia full = matrix_inertia(q.m);
    // Multiplying the equation by -1 leaves the solution set alone; normalize
    // so the quadratic part has at least as many positive as negative axes.
    bool flip = quad.negative > quad.positive ||
                (quad.negative == quad.positive && full.negative > full.positive);
    if (flip) {
        std::swap(quad.positive, quad.negative);
        std::swap(full.positive, full.negative);
    }
    out.quadratic_inertia = quad;
    out.full_inertia = full;
    out.surface = classify_by_inertia(quad, full, q.k);
    cross_check(out);
    return out;
}

}  // namespace dio
