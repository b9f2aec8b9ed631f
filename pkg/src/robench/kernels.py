"""Mathematical kernels for the 23 basic benchmark functions.

Each kernel consumes a pre-transformed 1-D vector (shift, scaling and rotation
already applied by the caller) and returns the bare objective value; the
suite-wide value bias is added by the evaluation engine.  Every kernel is
exactly zero at its canonical minimizer (the origin, the all-ones point for
the Rosenbrock family, minus ones for HappyCat/HGBat, 2.5*ones for the
bi-Rastrigin), except the modified Schwefel whose published constant leaves a
residual of about 1.3e-5 per dimension.

Kernels preserve the input dtype so the same code serves the double- and
single-precision paths, and all reductions run over a contiguous axis with a
fixed summation tree so a value never depends on how points were batched.
"""

from __future__ import annotations

import numpy as np

from .errors import NonFiniteInput

# Weierstrass series.
WEIERSTRASS_A = 0.5
WEIERSTRASS_B = 3.0
WEIERSTRASS_K_MAX = 20

# Modified Schwefel.
SCHWEFEL_SHIFT = 420.9687462275036
SCHWEFEL_OFFSET = 418.9829

# Katsuura series length.
KATSUURA_TERMS = 32

# Lunacek bi-Rastrigin.
LUNACEK_MU1 = 2.5
LUNACEK_MU2 = -2.5
LUNACEK_D = 1.0
LUNACEK_S = 0.9

# Fixed axis weights.
CONDITION = 1.0e6
SHARP_VALLEY_WEIGHT = 100.0


def _checked(z) -> np.ndarray:
    z = np.asarray(z)
    if not np.all(np.isfinite(z)):
        raise NonFiniteInput("kernel input contains NaN or infinity")
    return z


def sphere(z):
    z = _checked(z)
    return np.sum(z * z)


def ellipsoid(z):
    z = _checked(z)
    i = np.arange(1, z.shape[-1] + 1, dtype=z.dtype)
    return np.sum(i * z * z)


def elliptic(z):
    z = _checked(z)
    d = z.shape[-1]
    expo = np.arange(d, dtype=z.dtype) / max(d - 1, 1)
    return np.sum(CONDITION**expo * z * z)


def discus(z):
    z = _checked(z)
    return CONDITION * z[0] * z[0] + np.sum(z[1:] * z[1:])


def cigar(z):
    z = _checked(z)
    return z[0] * z[0] + CONDITION * np.sum(z[1:] * z[1:])


def powers(z):
    z = _checked(z)
    d = z.shape[-1]
    expo = 2.0 + 4.0 * np.arange(d, dtype=z.dtype) / max(d - 1, 1)
    return np.sqrt(np.sum(np.abs(z) ** expo))


def sharp_valley(z):
    z = _checked(z)
    return z[0] * z[0] + SHARP_VALLEY_WEIGHT * np.sqrt(np.sum(z[1:] * z[1:]))


def step(z):
    z = _checked(z)
    r = np.floor(z + 0.5)
    return np.sum(r * r)


def weierstrass(z):
    z = _checked(z)
    k = np.arange(WEIERSTRASS_K_MAX + 1, dtype=z.dtype)
    ak = WEIERSTRASS_A**k
    bk = WEIERSTRASS_B**k
    total = np.sum(ak * np.cos(2.0 * np.pi * bk * (z[:, None] + 0.5)))
    # Per-coordinate value at the optimum, subtracted once per dimension.
    base = np.sum(ak * np.cos(np.pi * bk))
    return total - z.shape[-1] * base


def griewank(z):
    z = _checked(z)
    i = np.arange(1, z.shape[-1] + 1, dtype=z.dtype)
    return np.sum(z * z) / 4000.0 - np.prod(np.cos(z / np.sqrt(i))) + 1.0


def rastrigin(z):
    z = _checked(z)
    return np.sum(z * z - 10.0 * np.cos(2.0 * np.pi * z) + 10.0)


def schaffers_f7(z):
    z = _checked(z)
    d = z.shape[-1]
    if d < 2:
        return z.dtype.type(0)
    w = np.sqrt(z[:-1] ** 2 + z[1:] ** 2)
    term = np.sqrt(w) * (1.0 + np.sin(50.0 * w**0.2) ** 2)
    return (np.sum(term) / (d - 1)) ** 2


def rosenbrock_pair(x, y):
    """One link of the Rosenbrock chain."""
    return 100.0 * (x * x - y) ** 2 + (x - 1.0) ** 2


def griewank_1d(x):
    """One-dimensional Griewank term used by the expanded chain."""
    return x * x / 4000.0 - np.cos(x) + 1.0


def grie_rosen(z):
    z = _checked(z)
    return np.sum(griewank_1d(rosenbrock_pair(z, np.roll(z, -1))))


def rosenbrock(z):
    z = _checked(z)
    a = z[:-1]
    b = z[1:]
    return np.sum(100.0 * (a * a - b) ** 2 + (a - 1.0) ** 2)


def schwefel_g1(w, d):
    """Piecewise Schwefel term; `d` is the full dimension of the kernel call.

    The modulo is floored (result in [0, 500) for the positive quantities it
    is applied to in each branch), so both out-of-range branches stay real.
    """
    w = np.asarray(w)
    aw = np.abs(w)
    mid = w * np.sin(np.sqrt(aw))
    top = 500.0 - np.mod(w, 500.0)
    high = top * np.sin(np.sqrt(top)) - (w - 500.0) ** 2 / (10000.0 * d)
    rem = np.mod(-w, 500.0)
    low = (rem - 500.0) * np.sin(np.sqrt(500.0 - rem)) - (w + 500.0) ** 2 / (10000.0 * d)
    return np.where(aw <= 500.0, mid, np.where(w > 500.0, high, low))


def schwefel(z):
    z = _checked(z)
    d = z.shape[-1]
    return SCHWEFEL_OFFSET * d - np.sum(schwefel_g1(z + SCHWEFEL_SHIFT, d))


def katsuura(z):
    z = _checked(z)
    d = z.shape[-1]
    j = 2.0 ** np.arange(1, KATSUURA_TERMS + 1, dtype=z.dtype)
    w = j * z[:, None]
    s = np.sum(np.abs(w - np.floor(w + 0.5)) / j, axis=1)
    t = 1.0 + np.arange(1, d + 1, dtype=z.dtype) * s
    # Product of t**(10/d^1.2) in log space so large dimensions cannot
    # overflow the d-fold product.
    log_prod = (10.0 / d**1.2) * np.sum(np.log(t))
    return (10.0 / (d * d)) * np.expm1(log_prod)


def lunacek(z):
    z = _checked(z)
    d = z.shape[-1]
    a = z - LUNACEK_MU1
    b = z - LUNACEK_MU2
    funnel = np.minimum(np.sum(a * a), LUNACEK_D * d + LUNACEK_S * np.sum(b * b))
    return funnel + 10.0 * (d - np.sum(np.cos(2.0 * np.pi * a)))


def ackley(z):
    z = _checked(z)
    d = z.shape[-1]
    rms = np.sqrt(np.sum(z * z) / d)
    avg_cos = np.sum(np.cos(2.0 * np.pi * z)) / d
    return -20.0 * np.exp(-0.2 * rms) - np.exp(avg_cos) + 20.0 + np.e


def happycat(z):
    z = _checked(z)
    d = z.shape[-1]
    r2 = np.sum(z * z)
    sz = np.sum(z)
    return np.abs(r2 - d) ** 0.25 + (0.5 * r2 + sz) / d + 0.5


def hgbat(z):
    z = _checked(z)
    d = z.shape[-1]
    r2 = np.sum(z * z)
    sz = np.sum(z)
    return np.sqrt(np.abs(r2 * r2 - sz * sz)) + (0.5 * r2 + sz) / d + 0.5


def schaffer_f6_pair(x, y):
    """Two-argument Schaffer F6 term used by the expanded chain."""
    q = x * x + y * y
    return (np.sin(np.sqrt(q)) ** 2 - 0.5) / (1.0 + 0.001 * q) ** 2 + 0.5


def schaffers_f6(z):
    z = _checked(z)
    return np.sum(schaffer_f6_pair(z, np.roll(z, -1)))


KERNELS = {
    "sphere": sphere,
    "ellipsoid": ellipsoid,
    "elliptic": elliptic,
    "discus": discus,
    "cigar": cigar,
    "powers": powers,
    "sharp_valley": sharp_valley,
    "step": step,
    "weierstrass": weierstrass,
    "griewank": griewank,
    "rastrigin": rastrigin,
    "schaffers_f7": schaffers_f7,
    "grie_rosen": grie_rosen,
    "rosenbrock": rosenbrock,
    "schwefel": schwefel,
    "katsuura": katsuura,
    "lunacek": lunacek,
    "ackley": ackley,
    "happycat": happycat,
    "hgbat": hgbat,
    "schaffers_f6": schaffers_f6,
}
