"""Robust plane-geometry predicates for the incremental triangulator.

Orientation and incircle tests are evaluated in floating point first and
accepted only when the magnitude clears a forward error bound; otherwise
the determinant is recomputed exactly over rationals (floats convert to
Fraction losslessly), so a sign is never wrong.

The enclosing super-triangle is handled symbolically: its three vertices
sit at infinity along fixed integer directions, a point being represented
as affine + R * direction with R -> +inf. Every predicate involving such a
vertex becomes a short polynomial in R whose sign at infinity is the sign
of its leading nonzero coefficient; those polynomials are always evaluated
exactly. This keeps the final triangulation of the real points exact with
no dependence on a finite super-triangle scale.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "SUPER_DIRS",
    "incircle_sign",
    "orient_sign",
]

# Directions of the three vertices at infinity; they positively span the
# plane, so the limiting triangle contains every finite point.
SUPER_DIRS: dict[int, tuple[int, int]] = {
    -1: (0, 1),
    -2: (-1, -1),
    -3: (1, -1),
}

# forward error-bound coefficients for the float fast paths (conservative
# versions of the standard adaptive-precision filter constants)
_EPS = 2.0 ** -52
_ORIENT_BOUND = 4.0 * _EPS
_INCIRCLE_BOUND = 16.0 * _EPS


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# exact polynomial arithmetic in the super-triangle scale R

def _padd(p, q):
    n = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def _psub(p, q):
    n = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def _pmul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return tuple(out)


def _plead_sign(p) -> int:
    for c in reversed(p):
        if c:
            return 1 if c > 0 else -1
    return 0


def _parts(point) -> tuple[Fraction, Fraction, int, int]:
    """(affine_x, affine_y, dir_x, dir_y) of a real or at-infinity point."""
    ax, ay, bx, by = point
    return Fraction(ax), Fraction(ay), bx, by


def _coord_polys(point):
    ax, ay, bx, by = _parts(point)
    return (ax, Fraction(bx)), (ay, Fraction(by))


# ---------------------------------------------------------------------------
# orientation

def _orient_float(ax, ay, bx, by, cx, cy) -> tuple[float, float]:
    l = (bx - ax) * (cy - ay)
    r = (by - ay) * (cx - ax)
    return l - r, abs(l) + abs(r)


def _orient_exact(ax, ay, bx, by, cx, cy) -> int:
    det = ((Fraction(bx) - Fraction(ax)) * (Fraction(cy) - Fraction(ay))
           - (Fraction(by) - Fraction(ay)) * (Fraction(cx) - Fraction(ax)))
    return _sign(det)


def orient_sign(a, b, c) -> int:
    """Sign of the signed area of triangle (a, b, c); +1 = counter-clockwise.

    Each argument is (affine_x, affine_y, dir_x, dir_y); real points carry
    zero direction.
    """
    if a[2] == a[3] == b[2] == b[3] == c[2] == c[3] == 0:
        det, permanent = _orient_float(a[0], a[1], b[0], b[1], c[0], c[1])
        if abs(det) > _ORIENT_BOUND * permanent:
            return _sign(det)
        return _orient_exact(a[0], a[1], b[0], b[1], c[0], c[1])
    (axp, ayp) = _coord_polys(a)
    (bxp, byp) = _coord_polys(b)
    (cxp, cyp) = _coord_polys(c)
    ux, uy = _psub(bxp, axp), _psub(byp, ayp)
    vx, vy = _psub(cxp, axp), _psub(cyp, ayp)
    return _plead_sign(_psub(_pmul(ux, vy), _pmul(uy, vx)))


# ---------------------------------------------------------------------------
# incircle

def incircle_float(ax, ay, bx, by, cx, cy, dx, dy) -> tuple[float, float]:
    """Raw float incircle determinant and its error permanent.

    Positive means d lies strictly inside the circumcircle of the
    counter-clockwise triangle (a, b, c). Trust the sign only when |det|
    exceeds the caller's error bound times the permanent.
    """
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    bxcy, bycx = bdx * cdy, bdy * cdx
    cxay, cyax = cdx * ady, cdy * adx
    axby, aybx = adx * bdy, ady * bdx
    det = alift * (bxcy - bycx) + blift * (cxay - cyax) + clift * (axby - aybx)
    permanent = (alift * (abs(bxcy) + abs(bycx))
                 + blift * (abs(cxay) + abs(cyax))
                 + clift * (abs(axby) + abs(aybx)))
    return det, permanent


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    fax, fay = Fraction(ax) - Fraction(dx), Fraction(ay) - Fraction(dy)
    fbx, fby = Fraction(bx) - Fraction(dx), Fraction(by) - Fraction(dy)
    fcx, fcy = Fraction(cx) - Fraction(dx), Fraction(cy) - Fraction(dy)
    det = ((fax * fax + fay * fay) * (fbx * fcy - fby * fcx)
           + (fbx * fbx + fby * fby) * (fcx * fay - fcy * fax)
           + (fcx * fcx + fcy * fcy) * (fax * fby - fay * fbx))
    return _sign(det)


def _incircle_poly(a, b, c, d) -> int:
    """Full symbolic determinant; handles every degeneracy exactly."""
    dx, dy = Fraction(d[0]), Fraction(d[1])
    rows = []
    for p in (a, b, c):
        (pxp, pyp) = _coord_polys(p)
        ex = _psub(pxp, (dx,))
        ey = _psub(pyp, (dy,))
        rows.append((ex, ey, _padd(_pmul(ex, ex), _pmul(ey, ey))))
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = rows
    det = _psub(
        _padd(_pmul(a1, _psub(_pmul(b2, c3), _pmul(b3, c2))),
              _pmul(a3, _psub(_pmul(b1, c2), _pmul(b2, c1)))),
        _pmul(a2, _psub(_pmul(b1, c3), _pmul(b3, c1))))
    return _plead_sign(det)


def incircle_sign(a, b, c, d) -> int:
    """Sign of the incircle determinant of CCW triangle (a, b, c) vs point d.

    +1 means d is strictly inside the circumcircle, 0 on it, -1 outside.
    a, b, c are symbolic (affine_x, affine_y, dir_x, dir_y) points; d must
    be a real point (dir = 0). Triangles touching the super vertices are
    decided by the leading coefficient of the determinant's polynomial in
    the super scale, which has a closed form per super count; only exact
    leading-coefficient zeros fall through to full polynomial evaluation.
    """
    if d[2] != 0 or d[3] != 0:
        raise ValueError("query point must be finite")
    sup = ((a[2], a[3]) != (0, 0), (b[2], b[3]) != (0, 0), (c[2], c[3]) != (0, 0))
    count = sup[0] + sup[1] + sup[2]

    if count == 0:
        det, permanent = incircle_float(a[0], a[1], b[0], b[1],
                                        c[0], c[1], d[0], d[1])
        if abs(det) > _INCIRCLE_BOUND * permanent:
            return _sign(det)
        return _incircle_exact(a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1])

    if count == 3:
        # leading coefficient is det[[dirs, |dir|^2]] of the three fixed
        # directions: a positive constant, so every finite point is inside
        return 1

    if count == 1:
        # rotate so the super vertex is last: circumdisk of (A, B, inf)
        # degenerates to the halfplane left of A -> B
        if sup[0]:
            first, second = b, c
        elif sup[1]:
            first, second = c, a
        else:
            first, second = a, b
        o = orient_sign(first, second, d)
        if o != 0:
            return o
        return _incircle_poly(a, b, c, d)

    # two super vertices: rotate so the real vertex comes first; the
    # leading coefficient is a fixed linear form in (A - d)
    if not sup[0]:
        real, s1, s2 = a, b, c
    elif not sup[1]:
        real, s1, s2 = b, c, a
    else:
        real, s1, s2 = c, a, b
    ex, ey = s1[2], s1[3]
    fx, fy = s2[2], s2[3]
    e2 = ex * ex + ey * ey
    f2 = fx * fx + fy * fy
    p_coef = ey * f2 - e2 * fy
    q_coef = ex * f2 - e2 * fx
    adx = real[0] - d[0]
    ady = real[1] - d[1]
    lead = adx * p_coef - ady * q_coef
    if abs(lead) > 8.0 * _EPS * (abs(adx * p_coef) + abs(ady * q_coef)):
        return _sign(lead)
    exact = ((Fraction(real[0]) - Fraction(d[0])) * p_coef
             - (Fraction(real[1]) - Fraction(d[1])) * q_coef)
    if exact != 0:
        return _sign(exact)
    return _incircle_poly(a, b, c, d)
