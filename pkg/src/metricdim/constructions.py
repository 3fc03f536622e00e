"""Closed-form witness sets for cylinders C_n x P_k and prisms (C_n x P_k) x P_m.

Cylinder families (M, N, A, B, E1, E2, E3) are in cylinder indices 1..nk;
prism families (A1, B1, C, D, E3_1, E4, T) are in global prism indices
(r-1)*nk + t.  The anchor's partner x_c is always the top-layer vertex at
the same cycle position, index (k-1)*n + anchor.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .graph import DistanceMatrix, GraphError
from .resolving import doubly_offset

RESOLVING = "resolving"
DOUBLY_RESOLVING = "doubly_resolving"
STRONG_RESOLVING = "strong_resolving"
NOT_RESOLVING = "not_resolving"
NOT_DOUBLY_RESOLVING = "not_doubly_resolving"


@dataclass(frozen=True)
class WitnessFamily:
    family_id: str
    n: int
    k: int
    m: int | None
    members: tuple[int, ...]
    claims: tuple[str, ...]
    index: int | None = None  # i or j where the family is indexed

    @property
    def on_prism(self) -> bool:
        return self.m is not None

    def labels(self) -> list[str]:
        return [format_label(v, self.n, self.k, self.m) for v in self.members]

    def __len__(self) -> int:
        return len(self.members)


def format_label(v: int, n: int, k: int, m: int | None = None) -> str:
    """Render a global index as ``x_t`` (cylinder) or ``x_t^(r)`` (prism)."""
    nk = n * k
    if m is None:
        if not 1 <= v <= nk:
            raise IndexError(f"vertex {v} outside 1..{nk}")
        return f"x_{v}"
    if not 1 <= v <= nk * m:
        raise IndexError(f"vertex {v} outside 1..{nk * m}")
    r, t = divmod(v - 1, nk)
    return f"x_{t + 1}^({r + 1})"


_LABEL = re.compile(r"^x_?(\d+)(?:\^(?:(\d+)|\((\d+)\)))?$")


def parse_label(text: str, n: int, k: int, m: int | None = None) -> int:
    """Parse ``x7``, ``x_7``, ``x16^4`` or ``x16^(4)`` into a global index."""
    match = _LABEL.match(text.strip())
    if not match:
        raise GraphError(f"cannot parse vertex label {text!r}")
    t = int(match.group(1))
    r = match.group(2) or match.group(3)
    nk = n * k
    if not 1 <= t <= nk:
        raise IndexError(f"label {text!r}: x_{t} outside 1..{nk}")
    if r is None:
        return t
    r = int(r)
    if m is None:
        if r != 1:
            raise IndexError(f"label {text!r}: copy {r} given for a cylinder")
        return t
    if not 1 <= r <= m:
        raise IndexError(f"label {text!r}: copy {r} outside 1..{m}")
    return (r - 1) * nk + t


def _check_odd(n: int, k: int) -> None:
    if n < 3 or n % 2 == 0:
        raise GraphError(f"family requires odd n >= 3, got n={n}")
    if k < 3:
        raise GraphError(f"family requires k >= 3, got k={k}")


def _check_even(n: int, k: int) -> None:
    if n < 4 or n % 2:
        raise GraphError(f"family requires even n >= 4, got n={n}")
    if k < 3:
        raise GraphError(f"family requires k >= 3, got k={k}")


def _check_m(m: int) -> None:
    if m < 2:
        raise GraphError(f"prism families require m >= 2, got m={m}")


def _check_i(i: int, n: int) -> None:
    top = math.ceil(n / 2)
    if not 1 <= i <= top:
        raise GraphError(f"index i={i} outside 1..{top}")


def _check_j(j: int, n: int) -> None:
    top = n // 2
    if not 1 <= j <= top:
        raise GraphError(f"index j={j} outside 1..{top}")


def top_partner(anchor: int, n: int, k: int) -> int:
    """The layer-V_k vertex compatible with a layer-V_1 anchor."""
    return (k - 1) * n + anchor


def make_M(i: int, n: int, k: int) -> WitnessFamily:
    _check_odd(n, k)
    _check_i(i, n)
    members = (i, math.ceil(n / 2) + i - 1)
    return WitnessFamily("M", n, k, None, members, (RESOLVING, NOT_DOUBLY_RESOLVING), i)


def make_N(j: int, n: int, k: int) -> WitnessFamily:
    _check_odd(n, k)
    _check_j(j, n)
    members = (j, math.ceil(n / 2) + j)
    return WitnessFamily("N", n, k, None, members, (RESOLVING, NOT_DOUBLY_RESOLVING), j)


def make_A(i: int, n: int, k: int) -> WitnessFamily:
    base = make_M(i, n, k)
    members = base.members + (top_partner(i, n, k),)
    return WitnessFamily("A", n, k, None, members, (DOUBLY_RESOLVING,), i)


def make_B(j: int, n: int, k: int) -> WitnessFamily:
    base = make_N(j, n, k)
    members = base.members + (top_partner(j, n, k),)
    return WitnessFamily("B", n, k, None, members, (DOUBLY_RESOLVING,), j)


def make_A1(i: int, n: int, k: int, m: int) -> WitnessFamily:
    _check_m(m)
    # copy 1 occupies global indices 1..nk, so the embedding is the identity
    members = make_A(i, n, k).members
    return WitnessFamily("A1", n, k, m, members, (RESOLVING, NOT_DOUBLY_RESOLVING), i)


def make_B1(j: int, n: int, k: int, m: int) -> WitnessFamily:
    _check_m(m)
    members = make_B(j, n, k).members
    return WitnessFamily("B1", n, k, m, members, (RESOLVING, NOT_DOUBLY_RESOLVING), j)


def make_D(i: int, n: int, k: int, m: int) -> WitnessFamily:
    a1 = make_A1(i, n, k, m)
    members = a1.members + ((m - 1) * n * k + top_partner(i, n, k),)
    return WitnessFamily("D", n, k, m, members, (DOUBLY_RESOLVING,), i)


def make_C(i: int, n: int, k: int) -> WitnessFamily:
    """D_i for two copies."""
    d = make_D(i, n, k, 2)
    return WitnessFamily("C", n, k, 2, d.members, d.claims, i)


def make_E(variant: int, n: int, k: int) -> WitnessFamily:
    _check_even(n, k)
    half = n // 2
    xc = top_partner(1, n, k)
    if variant == 1:
        return WitnessFamily("E1", n, k, None, (1, 2, xc), (RESOLVING, NOT_DOUBLY_RESOLVING))
    if variant == 2:
        return WitnessFamily(
            "E2", n, k, None, (1, half, half + 1), (RESOLVING, NOT_DOUBLY_RESOLVING)
        )
    if variant == 3:
        return WitnessFamily("E3", n, k, None, (1, half, half + 1, xc), (DOUBLY_RESOLVING,))
    raise GraphError(f"E variant must be 1, 2 or 3, got {variant}")


def make_E3_1(n: int, k: int, m: int) -> WitnessFamily:
    _check_m(m)
    members = make_E(3, n, k).members
    return WitnessFamily("E3_1", n, k, m, members, (RESOLVING, NOT_DOUBLY_RESOLVING))


def make_E4(n: int, k: int, m: int) -> WitnessFamily:
    e31 = make_E3_1(n, k, m)
    members = e31.members + ((m - 1) * n * k + top_partner(1, n, k),)
    return WitnessFamily("E4", n, k, m, members, (DOUBLY_RESOLVING,))


def make_T(n: int, k: int, m: int) -> WitnessFamily:
    """Layer V_1 of the first and last copies."""
    if n < 3 or k < 3:
        raise GraphError(f"T requires n >= 3 and k >= 3, got n={n}, k={k}")
    _check_m(m)
    nk = n * k
    members = tuple(range(1, n + 1)) + tuple((m - 1) * nk + t for t in range(1, n + 1))
    return WitnessFamily("T", n, k, m, members, (STRONG_RESOLVING,))


def counterexample_M(i: int, n: int, k: int, d: DistanceMatrix) -> tuple[tuple[int, int], int]:
    """The compatible pair (x_{i+n}, x_{i+2n}) whose M_i-representations differ by -1.

    ``d`` must be the distance matrix of C_n x P_k.  Raises if the difference
    is not the constant -1.
    """
    if k < 3:
        raise GraphError(f"counterexample needs k >= 3 (layer 3 must exist), got k={k}")
    fam = make_M(i, n, k)
    pair = (i + n, i + 2 * n)
    lam = doubly_offset(*pair, fam.members, d)
    if lam != -1:
        raise AssertionError(
            f"expected r(x_{pair[0]}|M_{i}) - r(x_{pair[1]}|M_{i}) = -1, got offset {lam}"
        )
    return pair, lam


def counterexample_adjacent_copy(
    family: WitnessFamily, d: DistanceMatrix, t: int = 1
) -> tuple[tuple[int, int], int]:
    """Pair (x_t^(1), x_t^(2)) for a set living in copy 1 of a prism.

    Every member is one step closer to x_t^(1) than to x_t^(2), so the
    representations differ by -1.  Raises if that fails.
    """
    if not family.on_prism:
        raise GraphError(f"family {family.family_id} is not a prism family")
    nk = family.n * family.k
    if any(v > nk for v in family.members):
        raise GraphError(f"family {family.family_id} has members outside copy 1")
    pair = (t, nk + t)
    lam = doubly_offset(*pair, family.members, d)
    if lam != -1:
        raise AssertionError(f"expected offset -1 on pair {pair}, got {lam}")
    return pair, lam


# family_id -> (builder, whether it is indexed by i/j, whether it takes m)
CATALOG = {
    "M": (make_M, True, False),
    "N": (make_N, True, False),
    "A": (make_A, True, False),
    "B": (make_B, True, False),
    "A1": (make_A1, True, True),
    "B1": (make_B1, True, True),
    "C": (make_C, True, False),
    "D": (make_D, True, True),
    "E1": (lambda n, k: make_E(1, n, k), False, False),
    "E2": (lambda n, k: make_E(2, n, k), False, False),
    "E3": (lambda n, k: make_E(3, n, k), False, False),
    "E3_1": (make_E3_1, False, True),
    "E4": (make_E4, False, True),
    "T": (make_T, False, True),
}


def construct(family_id: str, n: int, k: int, m: int | None = None, index: int | None = None):
    """Build any catalogued family by id."""
    try:
        builder, indexed, takes_m = CATALOG[family_id]
    except KeyError:
        raise GraphError(f"unknown family {family_id!r}; choose from {sorted(CATALOG)}") from None
    args: list[int] = []
    if indexed:
        if index is None:
            raise GraphError(f"family {family_id} needs an index i/j")
        args.append(index)
    args += [n, k]
    if takes_m:
        if m is None:
            raise GraphError(f"family {family_id} needs m")
        args.append(m)
    return builder(*args)
