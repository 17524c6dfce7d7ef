#include "dio/bounds.hpp"

namespace dio {

std::optional<Int> BoundPrediction::value(long long N) const {
    if (category == BoundCategory::NoSolutions) return Int(0);
    if (category == BoundCategory::FiniteConstant) return std::nullopt;
    switch (*form) {
        case BoundForm::ConstTimesN:
        case BoundForm::NSquaredPlusConstTimesN:
            return std::nullopt;
        case BoundForm::NSquared: return Int(N) * N;
        case BoundForm::TwoNSquared: return 2 * Int(N) * N;
        case BoundForm::TwoN: return 2 * Int(N);
        case BoundForm::JustN: return Int(N);
        case BoundForm::DegreeTimesN: return degree * Int(N);
        case BoundForm::DegreeTimesNPow: return degree * ipow(Int(N), vars - 1);
    }
    return std::nullopt;
}

std::string BoundPrediction::formula_text() const {
    if (category == BoundCategory::NoSolutions) return "0";
    if (category == BoundCategory::FiniteConstant) return "C";
    switch (*form) {
        case BoundForm::ConstTimesN: return "c*N";
        case BoundForm::NSquared: return "N^2";
        case BoundForm::NSquaredPlusConstTimesN: return "N^2+c*N";
        case BoundForm::TwoNSquared: return "2*N^2";
        case BoundForm::TwoN: return "2*N";
        case BoundForm::JustN: return "N";
        case BoundForm::DegreeTimesN: return std::to_string(degree) + "*N";
        case BoundForm::DegreeTimesNPow:
            return std::to_string(degree) + "*N^" + std::to_string(vars - 1);
    }
    return "?";
}

namespace {

BoundPrediction make(BoundCategory cat, std::optional<BoundForm> form, int degree, int vars) {
    BoundPrediction p;
    p.category = cat;
    p.form = form;
    p.degree = degree;
    p.vars = vars;
    p.density_case = cat == BoundCategory::AtMost ? 2 : 1;
    return p;
}

}  // namespace

BoundPrediction predict_bound_generic(int degree, int vars) {
    return make(BoundCategory::AtMost, BoundForm::DegreeTimesNPow, degree, vars);
}

BoundPrediction predict_bound(CurveClass c, int degree, int vars) {
    switch (c) {
        case CurveClass::Ellipse:
        case CurveClass::DegenerateEllipse:
            return make(BoundCategory::FiniteConstant, std::nullopt, degree, vars);
        case CurveClass::ImaginaryEllipse:
        case CurveClass::ImaginaryParallelLines:
            return make(BoundCategory::NoSolutions, std::nullopt, degree, vars);
        case CurveClass::DegenerateHyperbola:
            return make(BoundCategory::AtMost, BoundForm::TwoN, degree, vars);
        case CurveClass::ParallelLines:
            // An order-n degenerate curve splits into at most n parallel
            // lines, each holding at most N box points.
            return make(BoundCategory::AtMost, BoundForm::DegreeTimesN, degree, vars);
        case CurveClass::CoincidentLines:
        case CurveClass::SingleLine:
            return make(BoundCategory::AtMost, BoundForm::JustN, degree, vars);
        case CurveClass::Hyperbola:
        case CurveClass::Parabola:
            return predict_bound_generic(degree, vars);
    }
    return predict_bound_generic(degree, vars);
}

BoundPrediction predict_bound(SurfaceClass s, int degree, int vars) {
    switch (s) {
        case SurfaceClass::Ellipsoid:
        case SurfaceClass::ImaginaryCone:  // at most its single real point
            return make(BoundCategory::FiniteConstant, std::nullopt, degree, vars);
        case SurfaceClass::ImaginaryEllipsoid:
        case SurfaceClass::ImaginaryEllipticCylinder:
        case SurfaceClass::PairOfImaginaryParallelPlanes:
            return make(BoundCategory::NoSolutions, std::nullopt, degree, vars);
        case SurfaceClass::EllipticCylinder:
            // Finitely many base-ellipse points, N box values along the axis.
            return make(BoundCategory::AtMost, BoundForm::ConstTimesN, degree, vars);
        case SurfaceClass::ParabolicCylinder:
        case SurfaceClass::HyperbolicCylinder:
            if (vars == 3) return make(BoundCategory::AtMost, BoundForm::NSquared, degree, vars);
            return predict_bound_generic(degree, vars);
        case SurfaceClass::PairOfIntersectingPlanes:
            if (vars == 3)
                return make(BoundCategory::AtMost, BoundForm::NSquaredPlusConstTimesN, degree,
                            vars);
            return predict_bound_generic(degree, vars);
        case SurfaceClass::PairOfParallelPlanes:
            if (vars == 3)
                return make(BoundCategory::AtMost, BoundForm::TwoNSquared, degree, vars);
            return predict_bound_generic(degree, vars);
        case SurfaceClass::PairOfCoincidentPlanes:
            if (vars == 3) return make(BoundCategory::AtMost, BoundForm::NSquared, degree, vars);
            return predict_bound_generic(degree, vars);
        case SurfaceClass::PairOfImaginaryIntersectingPlanes:
            // The real locus is a single line.
            return make(BoundCategory::AtMost, BoundForm::JustN, degree, vars);
        case SurfaceClass::OneSheetedHyperboloid:
        case SurfaceClass::TwoSheetedHyperboloid:
        case SurfaceClass::EllipticParaboloid:
        case SurfaceClass::HyperbolicParaboloid:
        case SurfaceClass::RealCone:
            return predict_bound_generic(degree, vars);
    }
    return predict_bound_generic(degree, vars);
}

}  // namespace dio
