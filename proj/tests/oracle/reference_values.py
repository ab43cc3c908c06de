#!/usr/bin/env python3
"""Independent high-precision reference values for the C++ test suites.

Everything here is computed with mpmath arbitrary-precision quadrature and
special functions -- a code path that shares nothing with the C++ library.
Values printed by this script are frozen as constants in tests/.

Run:  python3 tests/oracle/reference_values.py
"""
import mpmath as mp

mp.mp.dps = 40


# ---------------------------------------------------------------- IG basics

def ig_pdf(x, mu, lam):
    if x <= 0:
        return mp.mpf(0)
    return mp.sqrt(lam / (2 * mp.pi * x**3)) * mp.exp(-lam * (x - mu)**2 / (2 * mu**2 * x))


def ig_cdf_quad(x, mu, lam):
    if x <= 0:
        return mp.mpf(0)
    return mp.quad(lambda t: ig_pdf(t, mu, lam), [0, min(x, mu), x])


def ig_mode(mu, lam):
    r = mu / lam
    return mu * (mp.sqrt(1 + (9 * mu**2) / (4 * lam**2)) - 3 * mu / (2 * lam))


def ig_entropy_quad(mu, lam):
    """Differential entropy by direct quadrature of -f ln f."""
    def integrand(x):
        f = ig_pdf(x, mu, lam)
        return -f * mp.log(f) if f > 0 else mp.mpf(0)
    mode = ig_mode(mu, lam)
    hi = mu + 60 * mp.sqrt(mu**3 / lam)
    return mp.quad(integrand, [0, mode, mu, hi, mp.inf])


def ig_entropy_closed(mu, lam):
    """Closed form: 0.5 ln(2 pi mu^3/lam) + 1.5 e^{2lam/mu} Ei(-2lam/mu) + 0.5."""
    r = 2 * lam / mu
    return mp.mpf(1) / 2 * mp.log(2 * mp.pi * mu**3 / lam) \
        + mp.mpf(3) / 2 * mp.exp(r) * mp.ei(-r) + mp.mpf(1) / 2


# ------------------------------------------------------- capacity quantities

def c_star(mu, lam):
    mode = ig_mode(mu, lam)
    if ig_pdf(mode, mu, lam) < 1:
        return mp.mpf(0)
    return mp.findroot(lambda u: ig_pdf(u, mu, lam) - 1, [mode * mp.mpf("1e-6"), mode],
                       solver="bisect", tol=mp.mpf("1e-35"))


def tail_nlogf(mu, lam, c):
    """-int_c^inf f ln f du."""
    def integrand(u):
        f = ig_pdf(u, mu, lam)
        return -f * mp.log(f) if f > 0 else mp.mpf(0)
    hi = mu + 60 * mp.sqrt(mu**3 / lam)
    pts = sorted(set([float(c), float(ig_mode(mu, lam)), float(mu), float(hi)]))
    pts = [p for p in pts if p > float(c)]
    return mp.quad(integrand, [c] + pts + [mp.inf])


def g_of_cstar(mu, lam):
    h = ig_entropy_closed(mu, lam)
    first = h if h < 0 else mp.mpf(0)
    second = tail_nlogf(mu, lam, c_star(mu, lam))
    return min(first, second)


def penalty_integral(mu_r, lam_r, m):
    return mp.quad(lambda u: ig_pdf(u, mu_r, lam_r) * (1 - u / m)**2, [0, min(m, mu_r), m])


def sum_entropy_numeric(mu1, lam1, mu2, lam2):
    """h(S), S = sum of two independent IG variables, by nested double-precision
    quadrature (scipy). Used for ratio-mismatched pairs where no closed form
    applies; ~1e-8 accurate, plenty for ordering checks and 1e-4 spot tests."""
    import math
    from scipy import integrate

    def pdf(x, mu, lam):
        if x <= 0:
            return 0.0
        return math.sqrt(lam / (2 * math.pi * x**3)) * math.exp(-lam * (x - mu)**2 / (2 * mu**2 * x))

    def f_s(t):
        if t <= 0:
            return 0.0
        val, _ = integrate.quad(lambda u: pdf(u, mu1, lam1) * pdf(t - u, mu2, lam2),
                                0, t, limit=200,
                                points=[min(t, float(ig_mode(mu1, lam1))),
                                        max(0.0, t - float(ig_mode(mu2, lam2)))])
        return val

    hi = float(mu1 + mu2 + 25 * mp.sqrt(mu1**3 / lam1 + mu2**3 / lam2))

    def integrand(t):
        f = f_s(t)
        return -f * math.log(f) if f > 0 else 0.0

    val, _ = integrate.quad(integrand, 0, hi, limit=400,
                            points=[float(mu1 + mu2) / 2, float(mu1 + mu2)])
    return mp.mpf(val)


def upper_bound(d, d_t, d_r, v_i, v_c, s2, m, a):
    mu_n, lam_n = d / v_i, d**2 / s2
    mu_t, lam_t = d_t / v_c, d_t**2 / s2
    mu_r, lam_r = d_r / v_c, d_r**2 / s2
    phi = lam_n / mu_n**2
    if abs(phi - lam_t / mu_t**2) < mp.mpf("1e-30"):
        mu_s = mu_n + mu_t
        lam_s = phi * mu_s**2
        h_s = ig_entropy_closed(mu_s, lam_s)
    else:
        h_s = sum_entropy_numeric(mu_n, lam_n, mu_t, lam_t)
    g = g_of_cstar(mu_n, lam_n)
    pen = penalty_integral(mu_r, lam_r, m)
    total = mp.log(m + mu_n + mu_t) + 1 - min(g, mp.mpf(0)) - h_s * (m**2 / a) * pen
    return dict(log_term=mp.log(m + mu_n + mu_t), g=g, h_s=h_s, pen=pen, total=total)


# ------------------------------------------------------- binary lower bound

def lower_bound(v, m, dps_quad=None):
    """Common drift v on d = d_T = d_R = 1, sigma2 = 1, X ~ Exp(mean m)."""
    mu_r, lam_r = 1 / mp.mpf(v), mp.mpf(1)
    mu_s, lam_s = 2 / mp.mpf(v), mp.mpf(4)

    def ig_cdf_closed(x, mu, lam):
        if x <= 0:
            return mp.mpf(0)
        s = mp.sqrt(lam / x)
        return mp.ncdf(s * (x / mu - 1)) + mp.exp(2 * lam / mu) * mp.ncdf(-s * (x / mu + 1))

    e_hi = mu_r + 40 * mp.sqrt(mu_r**3 / lam_r) + mu_s + 40 * mp.sqrt(mu_s**3 / lam_s)

    def f_cond(x):
        def integrand(e):
            return ig_pdf(e, mu_r, lam_r) * ig_cdf_closed(e - x, mu_s, lam_s)
        return mp.quad(integrand, [x, x + mu_r, x + e_hi])

    def h2(p):
        if p <= 0 or p >= 1:
            return mp.mpf(0)
        return -p * mp.log(p) - (1 - p) * mp.log(1 - p)

    xmax = m * mp.log(mp.mpf("1e12"))
    w = lambda x: mp.exp(-x / m) / m
    fy0 = mp.quad(lambda x: w(x) * f_cond(x), [0, m, xmax])
    hbx = mp.quad(lambda x: w(x) * h2(f_cond(x)), [0, m, xmax])
    return dict(fy0=fy0, hb=h2(fy0), hbx=hbx, value=h2(fy0) - hbx)


def p(label, v, digits=17):
    print(f"{label:52s} {mp.nstr(v, digits)}")


if __name__ == "__main__":
    print("== special functions ==")
    p("std_normal_cdf(-2)", mp.ncdf(-2))
    p("E1(1)", mp.e1(1))
    p("E1(2)", mp.e1(2))
    p("binary_entropy(0.1)", -(mp.mpf("0.1") * mp.log(mp.mpf("0.1")) + mp.mpf("0.9") * mp.log(mp.mpf("0.9"))))

    print("== inverse Gaussian ==")
    p("ig_mode(1,1)", ig_mode(1, 1))
    p("ig_pdf(mode;1,1)", ig_pdf(ig_mode(1, 1), 1, 1))
    p("ig_pdf(1;1,1)", ig_pdf(1, 1, 1))
    p("ig_cdf(1;1,1) (quadrature)", ig_cdf_quad(1, 1, 1))
    p("ig_entropy(1,1) closed", ig_entropy_closed(1, 1))
    p("ig_entropy(1,1) quadrature", ig_entropy_quad(1, 1))
    p("ig_entropy(2,4) closed", ig_entropy_closed(2, 4))
    p("ig_entropy(2,4) quadrature", ig_entropy_quad(2, 4))
    p("ig_entropy(3,9) closed", ig_entropy_closed(3, 9))
    p("ig_entropy(0.5,4) closed", ig_entropy_closed(mp.mpf("0.5"), 4))
    p("gauss-limit ref 0.5*ln(2*pi*e*1e-6)", mp.mpf(1) / 2 * mp.log(2 * mp.pi * mp.e * mp.mpf("1e-6")))
    p("ig_entropy(1,1e6) closed", ig_entropy_closed(1, mp.mpf("1e6")))

    print("== capacity pieces ==")
    p("c_star(1,1)", c_star(1, 1))
    p("c_star(3,1)", c_star(3, 1))
    p("ig_pdf(mode;3,1)", ig_pdf(ig_mode(3, 1), 3, 1))
    p("c_star(0.25,1)", c_star(mp.mpf("0.25"), 1))
    p("tail_nlogf(1,1,c*)", tail_nlogf(1, 1, c_star(1, 1)))
    p("g_of_cstar(1,1)", g_of_cstar(1, 1))
    p("g_of_cstar(0.25,1)", g_of_cstar(mp.mpf("0.25"), 1))
    p("h(0.25,1)", ig_entropy_closed(mp.mpf("0.25"), 1))
    p("penalty(E_R=(0.25,1), m=3)", penalty_integral(mp.mpf("0.25"), 1, 3))

    print("== upper bound, symmetric geometry m=3 a=18 ==")
    for vc in (2, 4, 8):
        ub = upper_bound(1, 1, 1, 4, vc, 1, 3, 18)
        p(f"C_UB(v_I=4, v_C={vc}) total", ub["total"])
        if vc == 4:
            p("  log_term", ub["log_term"])
            p("  g(c*)", ub["g"])
            p("  h(N+E_T)", ub["h_s"])
            p("  penalty", ub["pen"])

    print("== binary lower bound, m=0.1, common v ==")
    for v in range(1, 11):
        lb = lower_bound(v, mp.mpf("0.1"))
        print(f"v={v:2d}  F_Y(0)={mp.nstr(lb['fy0'], 12):>16s}  h(B)={mp.nstr(lb['hb'], 12):>16s}  "
              f"h(B|X)={mp.nstr(lb['hbx'], 12):>16s}  value={mp.nstr(lb['value'], 12):>16s}")
