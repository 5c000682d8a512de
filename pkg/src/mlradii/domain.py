"""Membership tests for the parameter regions W_a, W_b and W_i.

Points live in the plane (x, beta) with x = 1/alpha.  The three maps are

    A: (x, beta) -> (x/2, beta)
    B: (x, beta) -> (x/2, beta + 1/x)
    C: (x, beta) -> (x, beta - 1) if beta > 1 else (x, beta)

W_b = A(W_a) u B(W_a) occupies the band 1/4 < x < 1/2, and W_i is the forward
orbit of W_b under words in A, B, C.  C only touches beta and commutes with A;
B(C(p)) = C(B(p)) when C acts non-trivially and B(C(p)) = B(p) otherwise.  So
every word reduces to an A/B word followed by C^K, which is how ``in_wi``
searches: one A/B choice per halving of x, then an integer K.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError, InvalidQuery

DEFAULT_EPS_DOM = 1e-9
_MAX_DOUBLINGS = 48


@dataclass(frozen=True)
class PlanePoint:
    x: float
    beta: float

    def __post_init__(self):
        x, b = float(self.x), float(self.beta)
        if not (0.0 < x < 1.0):
            raise DomainError(f"x = 1/alpha must lie in (0, 1), got {x!r}")
        if not (math.isfinite(b) and b > 0.0):
            raise DomainError(f"beta must be positive and finite, got {b!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "beta", b)

    @classmethod
    def from_alpha(cls, alpha: float, beta: float) -> "PlanePoint":
        return cls(1.0 / float(alpha), beta)


class Transform(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"


class WiStatus(str, enum.Enum):
    Member = "member"
    NonMember = "nonmember"
    Boundary = "boundary"


@dataclass(frozen=True)
class WiVerdict:
    status: WiStatus
    witness: tuple = ()
    seed: PlanePoint | None = None
    notes: tuple = field(default=(), compare=False)

    def replay(self) -> PlanePoint:
        """Apply the witness to the seed (Member verdicts only)."""
        if self.status is not WiStatus.Member:
            raise InvalidQuery("only Member verdicts carry a witness")
        return replay(self.seed, self.witness)


def apply_transform(t, p: PlanePoint) -> PlanePoint:
    t = Transform(t)
    if t is Transform.A:
        return PlanePoint(p.x / 2.0, p.beta)
    if t is Transform.B:
        return PlanePoint(p.x / 2.0, p.beta + 1.0 / p.x)
    if p.beta > 1.0:
        return PlanePoint(p.x, p.beta - 1.0)
    return p


def replay(seed: PlanePoint, witness) -> PlanePoint:
    p = seed
    for t in witness:
        p = apply_transform(t, p)
    return p


def in_wa(p: PlanePoint) -> bool:
    """1 < alpha < 2 (open) and beta in [alpha - 1, 1] u [alpha, 2] (closed)."""
    if not (0.5 < p.x < 1.0):
        return False
    alpha = 1.0 / p.x
    return (alpha - 1.0 <= p.beta <= 1.0) or (alpha <= p.beta <= 2.0)


def wb_beta_intervals(y: float) -> list:
    """beta-sections of W_b at abscissa y in (1/4, 1/2), merged and sorted."""
    y = float(y)
    if not (0.25 < y < 0.5):
        raise DomainError(f"W_b abscissa must lie in (1/4, 1/2), got {y!r}")
    h = 1.0 / (2.0 * y)
    raw = [
        (h - 1.0, 1.0),          # A-image of beta in [alpha-1, 1]
        (h, 2.0),                # A-image of beta in [alpha, 2]
        (2.0 * h - 1.0, 1.0 + h),  # B-image, shifted by alpha = 1/(2y)
        (2.0 * h, 2.0 + h),
    ]
    kept = sorted((lo, hi) for lo, hi in raw if lo <= hi)
    merged = []
    for lo, hi in kept:
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def in_wb(p: PlanePoint) -> bool:
    if not (0.25 < p.x < 0.5):
        return False
    return any(lo <= p.beta <= hi for lo, hi in wb_beta_intervals(p.x))


def _classify(beta: float, intervals, eps: float) -> str:
    edge = False
    for lo, hi in intervals:
        if lo + eps < beta < hi - eps:
            return "in"
        if abs(beta - lo) <= eps or abs(beta - hi) <= eps:
            edge = True
    return "edge" if edge else "out"


def in_wi(p: PlanePoint, eps_dom: float = DEFAULT_EPS_DOM) -> WiVerdict:
    """Decide whether p lies in W_i.

    Member verdicts carry the shortest witness (fewest C steps, then A before
    B in forward order) and the W_b seed it starts from.  Points within
    ``eps_dom`` of a band edge or of a beta-interval endpoint, with no robust
    witness, are reported as Boundary.
    """
    if not isinstance(p, PlanePoint):
        raise DomainError("in_wi expects a PlanePoint")
    if not eps_dom > 0.0:
        raise DomainError("eps_dom must be positive")
    x, beta = p.x, p.beta
    if x >= 0.5 - eps_dom:
        if abs(x - 0.5) <= eps_dom:
            return WiVerdict(WiStatus.Boundary, notes=("x on the band edge 1/2",))
        return WiVerdict(WiStatus.NonMember, notes=("x >= 1/2: outside every W_i band",))

    # x_levels[j] = x * 2^j, exact in binary floating point
    levels = [x]
    while levels[-1] <= 0.25:
        levels.append(levels[-1] * 2.0)
        if len(levels) > _MAX_DOUBLINGS:
            raise DomainError(f"x = {x!r} is too small to decide")
    d = len(levels) - 1
    y = levels[-1]
    if abs(y - 0.25) <= eps_dom or abs(y - 0.5) <= eps_dom:
        return WiVerdict(WiStatus.Boundary, notes=(f"dyadic abscissa: 2^{d} x on a band edge",))

    intervals = wb_beta_intervals(y)
    lo_min = intervals[0][0]
    hi_max = intervals[-1][1]
    # B^-1 at level j subtracts 1/x_{j+1}
    deduction = [1.0 / levels[j + 1] for j in range(d)]
    remaining = [0.0] * (d + 1)
    for j in range(d - 1, -1, -1):
        remaining[j] = remaining[j + 1] + deduction[j]

    best = None  # (K, choices) with choices[j] = 1 for B at level j
    saw_edge = False

    # depth-first over levels 0..d-1; A (0) explored before B (1)
    stack = [(0, beta, ())]
    while stack:
        level, b, choices = stack.pop()
        if level == d:
            k_lo = max(0, math.ceil(lo_min - eps_dom - b))
            k_hi = math.floor(hi_max + eps_dom - b)
            for K in range(k_lo, k_hi + 1):
                if b + K <= 0.0:
                    continue
                kind = _classify(b + K, intervals, eps_dom)
                if kind == "in":
                    key = (K, tuple(reversed(choices)))
                    if best is None or key < best:
                        best = key
                    break
                if kind == "edge":
                    saw_edge = True
            continue
        # terminal beta = b - (future deductions) + K with K >= 0 and terminal <= hi_max
        if b - remaining[level] > hi_max + eps_dom:
            continue
        if best is not None and math.ceil(lo_min - eps_dom - b) > best[0]:
            continue
        stack.append((level + 1, b - deduction[level], choices + (1,)))
        stack.append((level + 1, b, choices + (0,)))

    if best is not None:
        K, forward = best
        # seed sits at level d; forward order replays levels d-1 .. 0
        seed_beta = beta + K - sum(deduction[j] for j, c in enumerate(reversed(forward)) if c)
        seed = PlanePoint(y, seed_beta)
        witness = tuple(Transform.B if c else Transform.A for c in forward) + (Transform.C,) * K
        return WiVerdict(WiStatus.Member, witness, seed)
    if saw_edge:
        return WiVerdict(WiStatus.Boundary, notes=("a preimage lies on a W_b interval endpoint",))
    return WiVerdict(WiStatus.NonMember)


def wi_status_for(alpha: float, beta: float, eps_dom: float = DEFAULT_EPS_DOM) -> WiVerdict:
    """``in_wi`` for raw (alpha, beta); alpha <= 1 is reported as NonMember."""
    if 1.0 / alpha >= 1.0:
        return WiVerdict(WiStatus.NonMember, notes=("alpha <= 1: outside the parameter plane",))
    return in_wi(PlanePoint.from_alpha(alpha, beta), eps_dom)


# names used in the interface description
in_Wa = in_wa
in_Wi = in_wi
