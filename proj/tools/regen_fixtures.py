#!/usr/bin/env python3
"""Regenerates the frozen numeric fixtures used by the test suite.

Each section prints the literals one test file pins, at full double
precision, so any of them can be re-derived from scratch. Constants that
were measured from tracer runs rather than derived (the step-refinement
start phase, the flat-drift bound, trace start offsets) are not
recomputable here; they live in the tests alongside comments naming the
measurement.
"""

import numpy as np
import sympy as sp

# ---- planar potential ----

A = np.array([-200.0, -100.0, -170.0, 15.0])
a = np.array([-1.0, -1.0, -6.5, 0.7])
b = np.array([0.0, 0.0, 11.0, 0.6])
c = np.array([-10.0, -10.0, -6.5, 0.7])
u1 = np.array([1.0, 0.0, -0.5, -1.0])
u2 = np.array([0.0, 0.5, 1.5, 1.0])


def mb_energy(u):
    d1, d2 = u[0] - u1, u[1] - u2
    return float(np.sum(A * np.exp(a * d1**2 + b * d1 * d2 + c * d2**2)))


def mb_gradient(u):
    d1, d2 = u[0] - u1, u[1] - u2
    e = A * np.exp(a * d1**2 + b * d1 * d2 + c * d2**2)
    return np.array([np.sum(e * (2 * a * d1 + b * d2)),
                     np.sum(e * (b * d1 + 2 * c * d2))])


def mb_hessian(u):
    d1, d2 = u[0] - u1, u[1] - u2
    e = A * np.exp(a * d1**2 + b * d1 * d2 + c * d2**2)
    g1, g2 = 2 * a * d1 + b * d2, b * d1 + 2 * c * d2
    h11 = np.sum(e * (g1**2 + 2 * a))
    h12 = np.sum(e * (g1 * g2 + b))
    h22 = np.sum(e * (g2**2 + 2 * c))
    return np.array([[h11, h12], [h12, h22]])


def newton_polish(seed):
    u = np.array(seed)
    for _ in range(50):
        g = mb_gradient(u)
        if np.linalg.norm(g) < 1e-13:
            break
        u = u - np.linalg.solve(mb_hessian(u), g)
    assert np.linalg.norm(mb_gradient(u)) < 1e-10
    return u


SEEDS = [(-0.558, 1.442), (-0.050, 0.467), (0.623, 0.028),
         (-0.822, 0.624), (0.212, 0.293)]
NAMES = ["deep minimum", "middle minimum", "right minimum",
         "left saddle", "right saddle"]

critical = [newton_polish(s) for s in SEEDS]

print("== kPlaneCritical (tests/test_manifolds.cpp) ==")
for u, name in zip(critical, NAMES):
    print(f"  ({u[0]:.17g}, {u[1]:.17g})  // {name}")

deep = critical[0]
eigs = np.linalg.eigvalsh(mb_hessian(deep))
print("\n== deep-minimum scalars (tests/test_manifolds.cpp) ==")
print(f"  energy   {mb_energy(deep):.15g}")
print(f"  hessian eigenvalues  {eigs[0]:.10g}  {eigs[1]:.10g}")

# ---- images on the unit sphere, inverse angle map ----
# u = (s1 * atan(x2/x1) + o1, s2 * atan(x3/hypot(x1, x2)) + o2)

S1, O1 = 1.973521294, -1.85
S2, O2 = 1.750704373, 0.875


def sphere_image(u):
    k1 = (u[0] - O1) / S1
    k2 = (u[1] - O2) / S2
    return np.array([np.cos(k2) * np.cos(k1),
                     np.cos(k2) * np.sin(k1),
                     np.sin(k2)])


print("\n== kSphereCritical (tests/test_manifolds.cpp) ==")
for u, name in zip(critical, NAMES):
    x = sphere_image(u)
    print(f"  ({x[0]:.17g}, {x[1]:.17g}, {x[2]:.17g})  // {name}")

# ---- the deep minimum through the north-pole chart ----

x_deep = sphere_image(deep)
p_star = x_deep[:2] / (1.0 - x_deep[2])
print("\n== deep-minimum chart image (tests/acceptance.cpp recipe) ==")
print(f"  ({p_star[0]:.17g}, {p_star[1]:.17g})")

# ---- learned-mode start: geodesic offset 0.12 from the deep minimum ----
# toward e3, i.e. along the unit tangent of the meridian

e3 = np.array([0.0, 0.0, 1.0])
t_hat = e3 - np.dot(e3, x_deep) * x_deep
t_hat /= np.linalg.norm(t_hat)
start = np.cos(0.12) * x_deep + np.sin(0.12) * t_hat
print("\n== learned-mode start point (tests/acceptance.cpp) ==")
print(f"  ({start[0]:.17g}, {start[1]:.17g}, {start[2]:.17g})")

# ---- tractrix chart images, inverse of the (radius, angle) rescale ----
# u = (0.9867606472 * angle - 1.85, 4.406507321 * radius - 1.715856588)

T1, P1 = 0.9867606472, -1.85
T2, P2 = 4.406507321, -1.715856588

print("\n== kTractrixCritical (tests/test_manifolds.cpp) ==")
for u, name in zip(critical, NAMES):
    angle = (u[0] - P1) / T1
    radius = (u[1] - P2) / T2
    print(f"  ({radius:.17g}, {angle:.17g})  // {name}")

# ---- covariant matrix of the normalized product-potential field ----
# symbolic closed forms evaluated at p = (1/2, 1/5)

p1, p2 = sp.symbols("p1 p2", real=True)
nu = p1**2 + p2**2
E = 4 * p1 * p2 * (nu - 1) / (nu + 1) ** 3
X = sp.Matrix([-sp.diff(E, p1), -sp.diff(E, p2)])
gfac = 4 / (1 + nu) ** 2
Y = X / sp.sqrt(gfac * (X[0] ** 2 + X[1] ** 2))
pv = [p1, p2]


def gamma(k, i, j):
    d = sp.KroneckerDelta
    return (-2 / (1 + nu)) * (d(i, k) * pv[j] + d(j, k) * pv[i]
                              - d(i, j) * pv[k])


Am = sp.zeros(2, 2)
for k in range(2):
    for i in range(2):
        Am[k, i] = sp.diff(Y[k], pv[i]) + sum(
            gamma(k, i, j) * Y[j] for j in range(2))

at = {p1: sp.Rational(1, 2), p2: sp.Rational(1, 5)}
print("\n== covariant matrix at p = (0.5, 0.2) (tests/test_geometry.cpp) ==")
for k in range(2):
    for i in range(2):
        print(f"  a{k + 1}{i + 1} = {sp.N(Am[k, i].subs(at), 20)}")
