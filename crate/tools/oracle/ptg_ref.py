"""High-precision reference implementation of the PTG potential machinery.

Everything is computed with mpmath from inputs that are exact binary64
values, so the frozen outputs correspond to exactly the numbers the Rust
code receives. Used by gen_ptg_refs.py; not a production code path.
"""

import mpmath as mp

mp.mp.dps = 50

KIN_FACT = mp.mpf(float("0.0478450"))


def x_of_r(lam, s, r):
    """x = arctanh(y) solving lam^2 s r = g(y); brackets are exact in x."""
    if r == 0:
        return mp.mpf(0)
    target = lam * lam * s * r
    if lam > 1:
        t = mp.sqrt(lam * lam - 1)
        lo = max(target - t * mp.atan(t), mp.mpf(0))
        hi = target

        def h(x):
            return x + t * mp.atan(t * mp.tanh(x)) - target
    elif lam < 1:
        t = mp.sqrt(1 - lam * lam)
        lo = target
        hi = target + t * mp.atanh(t)

        def h(x):
            return x - t * mp.atanh(t * mp.tanh(x)) - target
    else:
        return target
    for _ in range(220):
        mid = (lo + hi) / 2
        if h(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def y_of_r(lam, s, r):
    return mp.tanh(x_of_r(lam, s, r))


def omy2_of_r(lam, s, r):
    x = x_of_r(lam, s, r)
    e = mp.e ** (-2 * x)
    return 4 * e / (1 + e) ** 2


def mu_of_r(lam, s, a, r):
    y = y_of_r(lam, s, r)
    omy2 = omy2_of_r(lam, s, r)
    mu = 1 - a * omy2
    dy = s * omy2 * (1 + (lam * lam - 1) * y * y)
    dmu = 2 * a * y * dy
    return mu, dmu


def v_ptg(lam, s, nu, a, ell, r):
    # 1 - y^2 comes from the saturation-safe route so the exponential tail
    # of the potential survives far beyond where tanh rounds to 1
    omy2 = omy2_of_r(lam, s, r)
    y2 = 1 - omy2
    t = lam * lam - 1
    mu = 1 - a * omy2
    v_mu = (1 - a + (a * (4 - 3 * lam ** 2) - 3 * (2 - lam ** 2)) * y2
            - t * (5 * (1 - a) + 2 * a * y2) * y2 * y2) \
        * a / mu ** 2 * omy2 * (1 + t * y2)
    if r > 0:
        v_l = ell * (ell + 1) * (omy2 * (1 + t * y2) / y2 - 1 / (s * r) ** 2)
    else:
        v_l = ell * (ell + 1) * (lam ** 2 - 2) / 3
    v_c = omy2 * (-lam ** 2 * nu * (nu + 1)
                  - t / 4 * (2 - (7 - lam ** 2) * y2 - 5 * t * y2 * y2))
    return s ** 2 / (KIN_FACT * mu) * (v_mu + v_l + v_c)


def v_l_term(lam, s, ell, r):
    y = y_of_r(lam, s, r)
    omy2 = omy2_of_r(lam, s, r)
    t = lam * lam - 1
    return ell * (ell + 1) * (omy2 * (1 + t * y * y) / (y * y) - 1 / (s * r) ** 2)


def classify(lam, s, nu, a, ell, n):
    """Kind and momentum of the n-th pole state. Kind codes 0/1/2."""
    N = 2 * n + ell + 1
    la2_1ma = lam * lam * (1 - a)
    if la2_1ma > 2:
        b_lam = lam * mp.sqrt((1 - a) / (la2_1ma - 2)) * (nu + mp.mpf(1) / 2) \
            - mp.mpf(1) / 2
    else:
        b_lam = mp.inf
    nu_is_int = (nu == mp.floor(nu))
    b_nu = nu - 1 if nu_is_int else mp.floor(nu)
    delta = lam ** 2 * (nu + mp.mpf(1) / 2) ** 2 * (1 - a) \
        - (la2_1ma - 1) * (N + mp.mpf(1) / 2) ** 2
    if N <= b_lam and N <= b_nu:
        kind, sign = 0, +1
    elif N <= b_lam:
        kind = 1
        sign = +1 if delta >= 0 else -1
    else:
        kind, sign = 2, -1
    sq = mp.sqrt(mp.mpc(delta))
    k = mp.mpc(0, 1) * s * (-(N + mp.mpf(1) / 2) + sign * sq) / (1 - a)
    return kind, k


def pole_params(lam, s, a, ell, n, k):
    """Hypergeometric parameters for a pole state, built from exact integers."""
    beta = -mp.mpc(0, 1) * k / (lam ** 2 * s)
    l32 = ell + mp.mpf(3) / 2
    return {
        "beta": beta,
        "l32": l32,
        "nubar": l32 + beta + 2 * n,
        "nu_p": l32 + beta + n,
        "nu_m": mp.mpc(-n),
        "mu_p": l32 + n,
        "mu_m": -(beta + n),
    }


def scatter_params(lam, s, nu, a, ell, k):
    beta = -mp.mpc(0, 1) * k / (lam ** 2 * s)
    l32 = ell + mp.mpf(3) / 2
    nubar = mp.sqrt((nu + mp.mpf(1) / 2) ** 2
                    - beta ** 2 * (lam ** 2 * (1 - a) - 1))
    return {
        "beta": beta,
        "l32": l32,
        "nubar": nubar,
        "nu_p": (l32 + beta + nubar) / 2,
        "nu_m": (l32 + beta - nubar) / 2,
        "mu_p": (l32 - beta + nubar) / 2,
        "mu_m": (l32 - beta - nubar) / 2,
    }


def hyper_args(lam, s, r):
    omy2 = omy2_of_r(lam, s, r)
    y = y_of_r(lam, s, r)
    d = omy2 + lam * lam * y * y
    return omy2 / d, lam * lam * y * y / d


def coeff_ap(pp, n=None):
    """A+ coefficient: generic form, or the pole form with A- = 0."""
    if n is not None:
        return mp.gamma(pp["l32"]) * (-1) ** n * mp.rf(pp["beta"] + 1, n) \
            / mp.gamma(pp["mu_p"])
    return mp.gamma(pp["l32"]) * mp.gamma(-pp["beta"]) \
        / (mp.gamma(pp["mu_p"]) * mp.gamma(pp["mu_m"]))


def coeff_am(pp):
    return mp.gamma(pp["l32"]) * mp.gamma(pp["beta"]) \
        / (mp.gamma(pp["nu_p"]) * mp.gamma(pp["nu_m"]))


def wave(lam, s, nu, a, ell, k, norm, r, n=None):
    """Normalized radial wave function, switching formulas at x- = 1/2."""
    pp = pole_params(lam, s, a, ell, n, k) if n is not None \
        else scatter_params(lam, s, nu, a, ell, k)
    xp, xm = hyper_args(lam, s, r)
    chi = mp.sqrt((xm + lam ** 2 * (1 - a) * xp) / mp.sqrt(xm + lam ** 2 * xp)) \
        * xm ** ((ell + 1) / mp.mpf(2))
    cap_xp = xp ** (pp["beta"] / 2)
    cap_xm = xp ** (-pp["beta"] / 2)
    if xm < mp.mpf(1) / 2:
        f = mp.hyp2f1(pp["nu_m"], pp["nu_p"], pp["l32"], xm)
        return norm * chi * cap_xp * f
    fp = mp.hyp2f1(pp["nu_m"], pp["nu_p"], 1 + pp["beta"], xp)
    if n is not None:
        return norm * chi * coeff_ap(pp, n) * cap_xp * fp
    fm = mp.hyp2f1(pp["mu_m"], pp["mu_p"], 1 - pp["beta"], xp)
    return norm * chi * (coeff_ap(pp) * cap_xp * fp + coeff_am(pp) * cap_xm * fm)


def norm_pole(lam, s, a, ell, n, k):
    beta = -mp.mpc(0, 1) * k / (lam ** 2 * s)
    l32 = ell + mp.mpf(3) / 2
    return mp.sqrt(2 * lam ** 2 * s * beta * (l32 + beta + 2 * n)
                   * mp.gamma(l32 + beta + n) * mp.gamma(l32 + n)
                   / ((l32 + beta * lam ** 2 * (1 - a) + 2 * n)
                      * mp.gamma(n + 1) * mp.gamma(beta + n + 1)
                      * mp.gamma(l32) ** 2))


def norm_scatter(lam, s, nu, a, ell, k):
    pp = scatter_params(lam, s, nu, a, ell, k)
    return mp.sqrt(mp.gamma(pp["nu_p"]) * mp.gamma(pp["nu_m"])
                   * mp.gamma(pp["mu_p"]) * mp.gamma(pp["mu_m"])
                   / (2 * mp.pi * mp.gamma(pp["beta"]) * mp.gamma(-pp["beta"])
                      * mp.gamma(pp["l32"]) ** 2))


def r_one(lam, s):
    """Phase reference radius entering the asymptotic constants."""
    if lam > 1:
        t = mp.sqrt(lam * lam - 1)
        return (t * mp.atan(t) - mp.log(lam / 2)) / (lam ** 2 * s)
    if lam < 1:
        t = mp.sqrt(1 - lam * lam)
        return -(t * mp.atanh(t) + mp.log(lam / 2)) / (lam ** 2 * s)
    return mp.log(2) / s


def asym_constants(lam, s, nu, a, ell, k, norm, n=None):
    """C0 for the r -> 0 law, C+/- for the r -> infinity law."""
    pp = pole_params(lam, s, a, ell, n, k) if n is not None \
        else scatter_params(lam, s, nu, a, ell, k)
    c0 = norm * mp.sqrt(lam * (1 - a)) * (lam * s) ** (ell + 1)
    r1 = r_one(lam, s)
    if n is not None:
        ap, am = coeff_ap(pp, n), mp.mpc(0)
    else:
        ap, am = coeff_ap(pp), coeff_am(pp)
    cp = norm * ap * mp.e ** (-mp.mpc(0, 1) * k * r1)
    cm = norm * am * mp.e ** (mp.mpc(0, 1) * k * r1)
    return c0, cp, cm


def residual(lam, s, nu, a, ell, k, norm, r, n=None):
    """Radial-equation residual of the reference wave, relative scale."""
    e = k ** 2 / KIN_FACT

    def u(rr):
        return wave(lam, s, nu, a, ell, k, norm, rr, n)

    up = mp.diff(u, r, 1, h=mp.mpf(10) ** (-12))
    upp = mp.diff(u, r, 2, h=mp.mpf(10) ** (-10))
    mu, dmu = mu_of_r(lam, s, a, r)
    v = v_ptg(lam, s, nu, a, ell, r)
    res = upp - dmu / mu * up - ell * (ell + 1) / r ** 2 * u(r) \
        - KIN_FACT * mu * (v - e) * u(r)
    scale = abs(upp) + abs(up / r) + abs(u(r) / r ** 2) \
        + abs(KIN_FACT * mu * (v - e) * u(r))
    return abs(res) / scale
