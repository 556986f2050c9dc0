"""Constructive lifting factorization algorithms.

factor_ws peels half-sample symmetric steps off a delay-minimized WS bank
(order-reducing recursion in the scalar domain); factor_hs peels
whole-sample antisymmetric steps off a concentric HS bank down to an
equal-length base; factor_euclidean is the generic Euclidean-algorithm
oracle with two pivot policies; equivalent_mod_rescaling compares two
irreducible cascades up to a gain rescaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import (DCZero, FactorizationStuck, NotHSConcentric,
                     NotIrreducible, NotUnimodular, NotWSDelayMinimized)
from .laurent import LaurentPoly
from .lifting import (LiftingCascade, LiftingStep, normalize_semidirect,
                      scaling_matrix)
from .linsolve import solve_exact
from .polyphase import PolyphaseMatrix, classify_bank, make_bank

# ---------------------------------------------------------------------------
# Laurent division


def laurent_divmod(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder over the Laurent polynomials.

    Returns (q, r) with num = q*den + r and width(r) < width(den).  Among
    the valid remainders, picks one of minimal support width, breaking
    ties toward lower degree.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(), LaurentPoly.zero()
    a_d, b_d = den.support()
    d_order = b_d - a_d
    kills = num.order() - d_order + 1
    if kills <= 0:
        return LaurentPoly.zero(), num

    best = None  # (width, top_index, q, r)
    for tops in range(kills + 1):
        q: dict = {}
        r = num
        for _ in range(tops):
            if r.is_zero() or r.order() < d_order:
                break
            b_r = r.support()[1]
            shift = b_r - b_d
            coef = r.coeff(b_r) / den.coeff(b_d)
            q[shift] = q.get(shift, 0) + coef
            r = r - den.shift(shift).scale(coef)
        while not r.is_zero() and r.order() >= d_order:
            a_r = r.support()[0]
            shift = a_r - a_d
            coef = r.coeff(a_r) / den.coeff(a_d)
            q[shift] = q.get(shift, 0) + coef
            r = r - den.shift(shift).scale(coef)
        width = 0 if r.is_zero() else r.order() + 1
        top = 0 if r.is_zero() else -r.support()[0]  # top degree of z
        key = (width, top)
        if best is None or key < best[0]:
            best = (key, LaurentPoly(q), r)
    return best[1], best[2]


def _monomial_inverse(f: LaurentPoly) -> LaurentPoly:
    a, b = f.support()
    if a != b:
        raise ValueError("not a monomial")
    return LaurentPoly.monomial(-a, 1 / f.coeff(a))


# ---------------------------------------------------------------------------
# WS factorization


def _channel_radius(f: LaurentPoly, channel: int) -> int:
    """Support radius of a WS intermediate filter, validating that its
    support is centered at -channel."""
    a, b = f.support()
    if a + b != -2 * channel:
        raise FactorizationStuck(f"channel {channel} support not centered at {-channel}")
    return f.supprad()


def factor_ws(h: PolyphaseMatrix) -> LiftingCascade:
    """The unique irreducible lifting factorization of a delay-minimized
    unimodular WS bank into HS-filter lifting steps and a gain scaling.

    Works top-down: the row with the larger scalar support radius was
    lifted last; the step filter's support radius is forced by the radius
    recursion, and its taps are solved from the exact linear system that
    cancels the outermost taps of that row.
    """
    if not h.det_info().unimodular:
        raise NotUnimodular("factor_ws requires a unimodular bank")
    if classify_bank(h).kind != "WS_DELAY_MINIMIZED":
        raise NotWSDelayMinimized("factor_ws requires a delay-minimized WS bank")

    e = [h.scalar_filter(0), h.scalar_filter(1)]
    collected: List[LiftingStep] = []  # product order, leftmost factor first
    while True:
        r0 = _channel_radius(e[0], 0)
        r1 = _channel_radius(e[1], 1)
        if r0 == 0 and r1 == 0:
            break
        if r0 == r1:
            raise FactorizationStuck("equal nonzero support radii")
        m = 0 if r0 > r1 else 1
        center = -m
        big, small = (r0, r1) if m == 0 else (r1, r0)
        if (big - small) % 2 == 0:
            raise FactorizationStuck("radius gap has wrong parity")
        t = (big - small + 1) // 2
        lifted, other = e[m], e[1 - m]
        # Step filter is HS about +1/2 (m=0) or -1/2 (m=1); the unknown
        # half-taps are u_k = s(k) = s(1-k), resp. u_k = s(-k) = s(k-1).
        if m == 0:
            taps = [(2 * k, 2 - 2 * k) for k in range(1, t + 1)]
        else:
            taps = [(-2 * k, 2 * k - 2) for k in range(1, t + 1)]
        idxs = [i for i in range(center - big, center + big + 1)
                if abs(i - center) > small]
        rows = [[other.coeff(i - p) + other.coeff(i - q) for (p, q) in taps]
                for i in idxs]
        rhs = [lifted.coeff(i) for i in idxs]
        sol = solve_exact(rows, rhs)
        if sol is None:
            raise FactorizationStuck("singular cancellation system")
        coeffs: dict = {}
        for k, u in zip(range(1, t + 1), sol):
            if m == 0:
                coeffs[k] = u
                coeffs[1 - k] = u
            else:
                coeffs[-k] = u
                coeffs[k - 1] = u
        s = LaurentPoly(coeffs)
        if s.is_zero():
            raise FactorizationStuck("trivial peel step")
        s_up = LaurentPoly({2 * n: v for n, v in s.items()})
        new = lifted - s_up * other
        if new.is_zero() or new.supprad() >= big:
            raise FactorizationStuck("peel did not reduce the support radius")
        e[m] = new
        collected.append(LiftingStep(m, s))

    if e[0].support() != (0, 0) or e[1].support() != (-1, -1):
        raise FactorizationStuck("non-diagonal constant remainder")
    k = e[1].coeff(-1)
    if e[0].coeff(0) * k != 1:
        raise FactorizationStuck("remainder is not a unimodular scaling")
    out = normalize_semidirect(collected + [k])
    if out.product() != h:
        raise FactorizationStuck("product check failed")
    return out


# ---------------------------------------------------------------------------
# HS partial factorization


def factor_hs(h: PolyphaseMatrix, normalize_dc: bool = False) -> LiftingCascade:
    """Partial factorization of a concentric unimodular HS bank into WA
    lifting steps over a concentric equal-length HS base.

    Peels WA steps while the two scalar orders differ; equal orders are
    the terminal condition.  With normalize_dc the base is rescaled so
    its lowpass DC response is exactly 1, folding the compensating gain
    into the cascade scale.
    """
    if not h.det_info().unimodular:
        raise NotUnimodular("factor_hs requires a unimodular bank")
    if classify_bank(h).kind != "HS_CONCENTRIC":
        raise NotHSConcentric("factor_hs requires a concentric HS bank")

    e = [h.scalar_filter(0), h.scalar_filter(1)]
    collected: List[LiftingStep] = []  # product order
    while True:
        for i in (0, 1):
            a, b = e[i].support()
            if a + b != -1:
                raise FactorizationStuck("intermediate filter not concentric")
        ord0, ord1 = e[0].order(), e[1].order()
        if ord0 == ord1:
            break
        m = 0 if ord0 > ord1 else 1
        big, small = max(ord0, ord1), min(ord0, ord1)
        if (big - small) % 4:
            raise FactorizationStuck("order gap not a multiple of 4")
        t = (big - small) // 4
        lifted, other = e[m], e[1 - m]
        a_s, b_s = other.support()
        a_l, b_l = lifted.support()
        # WA step filter: s(0) = 0, s(-k) = -s(k) = u_k for k = 1..t.
        idxs = [i for i in range(a_l, b_l + 1) if i < a_s or i > b_s]
        rows = [[other.coeff(i - 2 * k) - other.coeff(i + 2 * k)
                 for k in range(1, t + 1)] for i in idxs]
        rhs = [lifted.coeff(i) for i in idxs]
        sol = solve_exact(rows, rhs)
        if sol is None:
            raise FactorizationStuck("singular cancellation system")
        s = LaurentPoly({sgn * k: sgn * u for k, u in zip(range(1, t + 1), sol)
                         for sgn in (-1, 1)})
        if s.is_zero():
            raise FactorizationStuck("trivial peel step")
        s_up = LaurentPoly({2 * n: v for n, v in s.items()})
        new = lifted - s_up * other
        if new.is_zero() or new.order() > small:
            raise FactorizationStuck("peel did not reduce the order")
        e[m] = new
        collected.append(LiftingStep(m, s))

    base = make_bank(e[0], e[1])
    cls = classify_bank(base)
    if not (base.is_unimodular and cls.kind == "HS_CONCENTRIC" and cls.equal_length_base):
        raise FactorizationStuck("terminal bank is not an equal-length HS base")

    steps = tuple(reversed(collected))
    scale = Fraction(1)
    if normalize_dc:
        alpha = e[0](1)
        if alpha == 0:
            raise DCZero("base lowpass DC response is zero")
        base = scaling_matrix(alpha) @ base
        steps = tuple(s.conjugate(alpha) for s in steps)
        scale = 1 / alpha
    out = LiftingCascade(scale, steps, base)
    if out.product() != h:
        raise FactorizationStuck("product check failed")
    return out


def dc_normalize(c: LiftingCascade) -> LiftingCascade:
    """Canonical representative of a cascade's rescaling class: base
    lowpass DC response rescaled to 1, gain folded into the scale."""
    beta = c.base.scalar_filter(0)(1)
    if beta == 0:
        raise DCZero("base lowpass DC response is zero")
    return LiftingCascade(c.scale / beta,
                          tuple(s.conjugate(beta) for s in c.steps),
                          scaling_matrix(beta) @ c.base)


# ---------------------------------------------------------------------------
# Euclidean oracle


def _antidiag_word(b: LaurentPoly) -> List[LiftingStep]:
    """[[0, b], [-1/b, 0]] = upper(b) * lower(-1/b) * upper(b)."""
    inv = _monomial_inverse(b)
    return [LiftingStep(0, b), LiftingStep(1, -inv), LiftingStep(0, b)]


def factor_euclidean(h: PolyphaseMatrix, policy: str = "A") -> LiftingCascade:
    """General lifting factorization via the Euclidean algorithm.

    No symmetry guarantee.  Policy "A" reduces via the upper-right entry
    first, policy "B" via the lower-left; the two policies exhibit
    nonuniqueness of irreducible lifting factorizations.
    """
    if policy not in ("A", "B"):
        raise ValueError("policy must be 'A' or 'B'")
    if not h.det_info().unimodular:
        raise NotUnimodular("factor_euclidean requires a unimodular bank")

    col = 1 if policy == "A" else 0
    target = 0 if policy == "A" else 1
    rows = [h.row0, h.row1]
    ops: List[LiftingStep] = []  # left-applied inverse steps, in order

    def entry(i: int) -> LaurentPoly:
        return rows[i].comp0 if col == 0 else rows[i].comp1

    def apply_step(i: int, filt: LaurentPoly):
        rows[i] = rows[i] + rows[1 - i].filtermul(filt)
        ops.append(LiftingStep(i, filt))

    while entry(0) and entry(1):
        q, _ = laurent_divmod(entry(target), entry(1 - target))
        if q.is_zero():
            target = 1 - target
            continue
        apply_step(target, -q)
        target = 1 - target

    # Endgame: one column entry is zero; clear the off-pattern entry and
    # expand the monomial remainder.
    e = lambda i, j: rows[i].comp0 if j == 0 else rows[i].comp1
    if e(1, 1).is_zero() or e(0, 0).is_zero():
        # heading to an antidiagonal remainder
        if e(1, 1).is_zero() and e(0, 0):
            apply_step(0, -(e(0, 0) * _monomial_inverse(e(1, 0))))
        elif e(0, 0).is_zero() and e(1, 1):
            apply_step(1, -(e(1, 1) * _monomial_inverse(e(0, 1))))
        b = e(0, 1)
        if e(1, 0) != -_monomial_inverse(b):
            raise FactorizationStuck("antidiagonal remainder is not unimodular")
        rem: List[LiftingStep] = _antidiag_word(b)
    else:
        # heading to a diagonal remainder
        if e(1, 0):
            apply_step(1, -(e(1, 0) * _monomial_inverse(e(0, 0))))
        elif e(0, 1):
            apply_step(0, -(e(0, 1) * _monomial_inverse(e(1, 1))))
        m = e(0, 0)
        a, b_idx = m.support()
        if a == 0:
            rem = [Fraction(e(1, 1).coeff(0))]  # constant: plain D_K
        else:
            rem = _antidiag_word(m) + _antidiag_word(LaurentPoly.constant(-1))

    word = [op.inverse() for op in ops] + rem
    out = normalize_semidirect(word)
    if out.product() != h:
        raise FactorizationStuck("product check failed")
    return out


# ---------------------------------------------------------------------------
# Rescaling equivalence


@dataclass(frozen=True)
class RescalingWitness:
    """alpha = K/K' relating two factorizations: B' = D_alpha B and
    S'_i = gamma_alpha S_i."""

    alpha: Fraction


def equivalent_mod_rescaling(c1: LiftingCascade,
                             c2: LiftingCascade) -> Optional[RescalingWitness]:
    """Witness that c2 is the alpha-rescaling of c1, or None."""
    if not (c1.is_irreducible and c2.is_irreducible):
        raise NotIrreducible("rescaling comparison requires irreducible cascades")
    if len(c1) != len(c2):
        return None
    alpha = Fraction(c1.scale) / Fraction(c2.scale)
    if c2.base != scaling_matrix(alpha) @ c1.base:
        return None
    for s, sp in zip(c1.steps, c2.steps):
        if sp.m != s.m or sp != s.conjugate(alpha):
            return None
    return RescalingWitness(alpha)
