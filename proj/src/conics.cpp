#include "dio/conics.hpp"

#include "dio/errors.hpp"

namespace dio {

ConicForm ConicForm::from_polynomial(const Polynomial& p) {
    if (p.var_count() != 2) throw NotQuadraticError("conic form needs exactly two variables");
    if (p.total_degree() > 2) throw NotQuadraticError("degree exceeds 2");
    ConicForm form{rat_mat(3)};
    for (const auto& [exps, coeff] : p.terms()) {
        unsigned e1 = exps[0], e2 = exps[1];
        if (e1 == 2)
            form.m[0][0] = Rat(coeff);
        else if (e2 == 2)
            form.m[1][1] = Rat(coeff);
        else if (e1 == 1 && e2 == 1)
            form.m[0][1] = form.m[1][0] = Rat(coeff) / 2;
        else if (e1 == 1)
            form.m[0][2] = form.m[2][0] = Rat(coeff) / 2;
        else if (e2 == 1)
            form.m[1][2] = form.m[2][1] = Rat(coeff) / 2;
        else
            form.m[2][2] = Rat(coeff);
    }
    if (form.m[0][0] == 0 && form.m[1][1] == 0 && form.m[0][1] == 0)
        throw NotQuadraticError("quadratic part is zero");
    return form;
}

std::string to_string(CurveClass c) {
    switch (c) {
        case CurveClass::Ellipse: return "ellipse";
        case CurveClass::ImaginaryEllipse: return "imaginary_ellipse";
        case CurveClass::Hyperbola: return "hyperbola";
        case CurveClass::Parabola: return "parabola";
        case CurveClass::DegenerateEllipse: return "degenerate_ellipse";
        case CurveClass::DegenerateHyperbola: return "degenerate_hyperbola";
        case CurveClass::ParallelLines: return "parallel_lines";
        case CurveClass::CoincidentLines: return "coincident_lines";
        case CurveClass::ImaginaryParallelLines: return "imaginary_parallel_lines";
        case CurveClass::SingleLine: return "single_line";
    }
    return "?";
}

ConicInvariants conic_invariants(const ConicForm& c) {
    ConicInvariants inv;
    inv.D = c.m[0][0] * c.m[1][1] - c.m[0][1] * c.m[0][1];
    inv.delta = determinant(c.m);
    return inv;
}

ConicClassification classify_conic(const ConicForm& c) {
    ConicClassification out{CurveClass::Ellipse, conic_invariants(c), std::nullopt};
    const Rat& D = out.invariants.D;
    const Rat& delta = out.invariants.delta;
    const Rat trace = c.m[0][0] + c.m[1][1];

    if (delta != 0) {
        if (D > 0)
            // Real vs imaginary ellipse: the center value has the sign of
            // delta/trace (trace != 0 whenever D > 0).
            out.curve = delta * trace < 0 ? CurveClass::Ellipse : CurveClass::ImaginaryEllipse;
        else if (D < 0)
            out.curve = CurveClass::Hyperbola;
        else
            out.curve = CurveClass::Parabola;
        return out;
    }

    if (D > 0) {
        out.curve = CurveClass::DegenerateEllipse;
        // Critical point of the quadratic form: solve
        //   [a11 a12][x]   [-a13]
        //   [a12 a22][y] = [-a23]
        Rat cx = (-c.m[0][2] * c.m[1][1] + c.m[1][2] * c.m[0][1]) / D;
        Rat cy = (-c.m[1][2] * c.m[0][0] + c.m[0][2] * c.m[0][1]) / D;
        out.center = std::make_pair(cx, cy);
        return out;
    }
    if (D < 0) {
        out.curve = CurveClass::DegenerateHyperbola;
        return out;
    }

    // D == 0 and delta == 0: the rank decides between a real parallel pair,
    // an imaginary pair and a doubled line.
    Inertia full = matrix_inertia(c.m);
    if (full.rank() <= 1)
        out.curve = CurveClass::CoincidentLines;
    else if (full.positive == 1 && full.negative == 1)
        out.curve = CurveClass::ParallelLines;
    else
        out.curve = CurveClass::ImaginaryParallelLines;
    return out;
}

}  // namespace dio
