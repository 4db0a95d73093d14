"""Independent reference values for the C++ tests.

Every quantity here is computed from its defining formula with mpmath or
sympy, never through the library. Run with python3; the printed values are
frozen into tests/oracle_values.hpp.
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 30


def show(name, value, digits=17):
    print(f"inline constexpr double {name} = {mp.nstr(value, digits)};")


# Riesz moment of sum_{j <= 10} j^2 delta at 1 - 2^-j, by direct summation.
show("kRieszDesigned10", sum(mp.mpf(j) ** 2 * (1 - (1 - mp.mpf(2) ** -j) ** 2) for j in range(1, 11)))

# Riesz density of (1 - r^2)^alpha: minus a quarter of its Laplacian.
r, a = sp.symbols("r alpha", positive=True)
omega = (1 - r**2) ** a
lap = sp.diff(omega, r, 2) + sp.diff(omega, r) / r
density = sp.lambdify((r, a), sp.simplify(-lap / 4), "mpmath")
for k, rr in enumerate(["0.1", "0.5", "0.9", "0.999"]):
    show(f"kStandardHalfDensity{k}", density(mp.mpf(rr), mp.mpf("0.5")))

# int (1 - r^2) d mu_alpha over the disc, normalized area 2 r dr.
moment = sp.simplify(sp.integrate((1 - r**2) * (-lap / 4) * 2 * r, (r, 0, 1), conds="none"))
for k, aa in enumerate(["0.05", "0.25", "0.5", "0.75", "0.95"]):
    show(f"kStandardMoment{k}", mp.mpf(sp.N(moment.subs(a, sp.Rational(aa)), 30)))

# min(2|sin(t/2)|, 1) as an outer function, value at 0.
show("kCutoffMinAtZero",
     mp.exp(mp.quad(lambda t: min(mp.log(2 * abs(mp.sin(t / 2))), 0), [0, mp.pi / 3, 5 * mp.pi / 3, 2 * mp.pi]) / (2 * mp.pi)))

# Distance outer function for E = {1}, phi(t) = t, chordal distance, at 0.
show("kDistanceOuterAtZero",
     mp.exp(mp.quad(lambda t: mp.log(2 * abs(mp.sin(t / 2))), [0, mp.pi, 2 * mp.pi]) / (2 * mp.pi)))

# Kernel diagonal estimate for mu = delta_0 at |z| = 1/2, where V = 1 - r^2.
show("kKernelDelta0Half", 1 + mp.quad(lambda x: 1 / ((1 - x) * (1 - x**2) + (1 - x) ** 2), [0, mp.mpf("0.5")]))

# Polarity integral for sum_{j <= 40} j^2 delta at (1 - 2^-j), direction 1,
# integrated block by block over [1 - 2^-k, 1 - 2^-k-1].
atoms = [(1 - mp.mpf(2) ** -j, mp.mpf(j) ** 2) for j in range(1, 41)]


def v_designed(x):
    return sum(m * (1 - x**2) * (1 - p**2) / (1 - x * p) ** 2 for p, m in atoms)


def polar_integrand(x):
    return 1 / ((1 - x) * v_designed(x) + (1 - x) ** 2)


partial = [mp.mpf(0)]
for k in range(24):
    lo, hi = 1 - mp.mpf(2) ** -k, 1 - mp.mpf(2) ** -(k + 1)
    nodes = [lo] + [p for p, _ in atoms if lo < p < hi] + [hi]
    partial.append(partial[-1] + mp.quad(polar_integrand, nodes))
for k in (4, 8, 12, 16, 20, 24):
    show(f"kDesignedPolarPartial{k}", partial[k])
print("// designed block increments, last five:",
      ", ".join(mp.nstr(partial[k + 1] - partial[k], 6) for k in range(19, 24)))

# Boundary-atom form at u = 1 - cos t, nu = delta_1.
show("kFormDelta1OneMinusCos",
     mp.quad(lambda t: (1 - mp.cos(t)) ** 2 / abs(1 - mp.expj(t)) ** 2, [0, 2 * mp.pi]) / (2 * mp.pi))

# Balayage of delta_0.5 integrated over the circle.
show("kBalayageHalfMean",
     mp.quad(lambda t: (1 - mp.mpf("0.25")) / abs(1 - mp.mpf("0.5") * mp.expj(-t)) ** 2, [0, 2 * mp.pi]) / (2 * mp.pi))

# ne bound for phi = log(e pi / t), mu = delta_0, zeta = 1 on y = pi 2^-k.
ys = [mp.pi * mp.mpf(2) ** -k for k in range(41)]
sup_deriv = max((1 / y) * y**2 / (1 + y**2) for y in ys)
show("kNeBoundLogDelta0", sup_deriv * mp.log(mp.e * mp.pi / ys[-1]))

# Bregman and entropy hand values.
show("kBregmanOneZero", mp.e - 2)
show("kEntropyTwoPoint", (mp.e ** 0 + mp.e ** (2 * mp.log(2))) / 2 - mp.e ** mp.log(2))

# d/dt log(1/t)^2 = -2 log(1/t) / t, symbolically.
t = sp.symbols("t", positive=True)
assert sp.simplify(sp.diff(sp.log(1 / t) ** 2, t) + 2 * sp.log(1 / t) / t) == 0
print("// change of variables for eta = log(1/t) verified symbolically")
