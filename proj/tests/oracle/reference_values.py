#!/usr/bin/env python3
"""High-precision reference values for the operator test suites.

Every closed-form value asserted in the C++ tests is recomputed here with
mpmath (50 significant digits) directly from the defining integrals, i.e.
independently of the C++ quadrature code.  Run this script to regenerate
tests/oracle_values.hpp.

Conventions:
  left integral   (I_a^mu f)(t) = 1/Gamma(mu) * int_a^t (t-s)^(mu-1) f(s) ds
  right integral  (I_b^mu f)(t) = 1/Gamma(mu) * int_t^b (s-t)^(mu-1) f(s) ds
  left derivative  D_a^al = d/dt I_a^(1-al),   right  D_b^al = -d/dt I_b^(1-al)
"""

import mpmath as mp

mp.mp.dps = 50

A, B = mp.mpf(0), mp.mpf(1)


def left_integral(f, mu, t):
    if t == A:
        return mp.mpf(0)
    g = lambda s: (t - s) ** (mu - 1) * f(s)
    return mp.quad(g, [A, t]) / mp.gamma(mu)


def right_integral(f, mu, t):
    if t == B:
        return mp.mpf(0)
    g = lambda s: (s - t) ** (mu - 1) * f(s)
    return mp.quad(g, [t, B]) / mp.gamma(mu)


def left_derivative(f, al, t, dt=mp.mpf("1e-12")):
    lo = left_integral(f, 1 - al, t - dt)
    hi = left_integral(f, 1 - al, t + dt)
    return (hi - lo) / (2 * dt)


def right_derivative(f, al, t, dt=mp.mpf("1e-12")):
    lo = right_integral(f, 1 - al, t - dt)
    hi = right_integral(f, 1 - al, t + dt)
    return -(hi - lo) / (2 * dt)


def power_left_integral(beta, mu, t):
    """Closed form: I_0^mu t^beta = G(b+1)/G(b+1+mu) t^(b+mu)."""
    return mp.gamma(beta + 1) / mp.gamma(beta + 1 + mu) * t ** (beta + mu)


def power_left_derivative(beta, al, t):
    """Closed form: D_0^al t^beta = G(b+1)/G(b+1-al) t^(b-al)."""
    return mp.gamma(beta + 1) / mp.gamma(beta + 1 - al) * t ** (beta - al)


def check(label, closed, quadrature, tol=mp.mpf("1e-18")):
    err = abs(closed - quadrature)
    status = "ok" if err < tol * max(1, abs(closed)) else "MISMATCH"
    print(f"  {label}: closed={mp.nstr(closed, 20)} quad={mp.nstr(quadrature, 20)} [{status}]")
    assert status == "ok", label
    return closed


def main():
    out = {}

    print("power rule, left integral, mu=0.5, f=t:")
    for tv in ("0.25", "0.5", "0.75"):
        t = mp.mpf(tv)
        v = check(f"t={tv}", power_left_integral(1, mp.mpf("0.5"), t),
                  left_integral(lambda s: s, mp.mpf("0.5"), t))
        out[f"LEFT_INTEGRAL_HALF_T_AT_{tv.replace('.', '_')}"] = v

    print("power rule, right integral, mu=0.5, f=1 (mirror of left on 1-t):")
    for tv in ("0.25", "0.5", "0.75"):
        t = mp.mpf(tv)
        closed = (1 - t) ** mp.mpf("0.5") / mp.gamma(mp.mpf("1.5"))
        v = check(f"t={tv}", closed, right_integral(lambda s: 1, mp.mpf("0.5"), t))
        out[f"RIGHT_INTEGRAL_HALF_ONE_AT_{tv.replace('.', '_')}"] = v

    print("power rule, left derivative, al=0.5, f=t:")
    for tv in ("0.25", "0.5", "0.75"):
        t = mp.mpf(tv)
        v = check(f"t={tv}", power_left_derivative(1, mp.mpf("0.5"), t),
                  left_derivative(lambda s: s, mp.mpf("0.5"), t), tol=mp.mpf("1e-8"))
        out[f"LEFT_DERIV_HALF_T_AT_{tv.replace('.', '_')}"] = v

    print("left derivative of the constant 1, al=0.5 (nonzero):")
    for tv in ("0.25", "0.5", "0.75"):
        t = mp.mpf(tv)
        closed = t ** mp.mpf("-0.5") / mp.gamma(mp.mpf("0.5"))
        v = check(f"t={tv}", closed,
                  left_derivative(lambda s: 1, mp.mpf("0.5"), t), tol=mp.mpf("1e-8"))
        out[f"LEFT_DERIV_HALF_ONE_AT_{tv.replace('.', '_')}"] = v

    print("right derivative, al=0.5, f=1-t (mirror profile):")
    for tv in ("0.25", "0.5", "0.75"):
        t = mp.mpf(tv)
        closed = (1 - t) ** mp.mpf("0.5") / mp.gamma(mp.mpf("1.5"))
        v = check(f"t={tv}", closed,
                  right_derivative(lambda s: 1 - s, mp.mpf("0.5"), t), tol=mp.mpf("1e-8"))
        out[f"RIGHT_DERIV_HALF_ONEMT_AT_{tv.replace('.', '_')}"] = v

    print("integration-by-parts pair, al=0.5, f=t(1-t), g=t^2: both sides")
    al = mp.mpf("0.5")
    dg = lambda t: power_left_derivative(2, al, t)

    def df(t):  # D_b^0.5 of t-t^2 via (1-t)-powers: t-t^2 = (1-t) - (1-t)^2
        return (mp.gamma(2) / mp.gamma(2 - al) * (1 - t) ** (1 - al)
                - mp.gamma(3) / mp.gamma(3 - al) * (1 - t) ** (2 - al))

    lhs = mp.quad(lambda t: (t - t * t) * dg(t), [A, B])
    rhs = mp.quad(lambda t: t * t * df(t), [A, B])
    check("side equality", lhs, rhs, tol=mp.mpf("1e-18"))
    out["IBP_HALF_SIDE_VALUE"] = lhs

    print("ibp pair, al=1, f=sin(pi t), g=t: both sides")
    lhs1 = mp.quad(lambda t: mp.sin(mp.pi * t) * 1, [A, B])
    rhs1 = mp.quad(lambda t: t * (-mp.pi * mp.cos(mp.pi * t)), [A, B])
    check("side equality", lhs1, rhs1, tol=mp.mpf("1e-18"))
    out["IBP_CLASSICAL_SIDE_VALUE"] = lhs1

    print("functional value: int_0^1 (D_0^0.5 t)^2 dt = 2/pi")
    quadv = mp.quad(lambda t: power_left_derivative(1, al, t) ** 2, [A, B])
    check("2/pi", 2 / mp.pi, quadv, tol=mp.mpf("1e-18"))
    out["FUNCTIONAL_FRAC_KINETIC_LINE"] = 2 / mp.pi

    print("transfer-formula left side g*D_0^al f - f*D_1^al g for f=t, g=t^2, al=0.5:")

    def d_right_t2(t):  # t^2 = 1 - 2(1-t) + (1-t)^2
        return ((1 - t) ** (-al) / mp.gamma(1 - al)
                - 2 * mp.gamma(2) / mp.gamma(2 - al) * (1 - t) ** (1 - al)
                + mp.gamma(3) / mp.gamma(3 - al) * (1 - t) ** (2 - al))

    for tv in ("0.25", "0.5", "0.75"):
        t = mp.mpf(tv)
        closed = t * t * power_left_derivative(1, al, t) - t * d_right_t2(t)
        qv = t * t * left_derivative(lambda s: s, al, t) - t * right_derivative(lambda s: s * s, al, t)
        v = check(f"t={tv}", closed, qv, tol=mp.mpf("1e-8"))
        out[f"TRANSFER_LHS_AT_{tv.replace('.', '_')}"] = v

    print("classical extremal with source: min int (v^2/2 + q), q(0)=q(1)=0 -> q=(t^2-t)/2")
    out["PARABOLA_AT_0_5"] = (mp.mpf("0.25") - mp.mpf("0.5")) / 2

    hdr = ["// Generated by tests/oracle/reference_values.py -- do not edit by hand.",
           "// High-precision (50-digit mpmath) evaluations of the closed forms",
           "// asserted in the test suites.",
           "#pragma once", "", "namespace oracle {", ""]
    for k, v in out.items():
        hdr.append(f"inline constexpr double {k} = {mp.nstr(v, 17)};")
    hdr += ["", "}  // namespace oracle", ""]
    with open("../oracle_values.hpp", "w") as fh:
        fh.write("\n".join(hdr))
    print("wrote tests/oracle_values.hpp")


if __name__ == "__main__":
    main()
