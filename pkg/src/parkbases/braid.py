"""
Braid mutations on bases, the induced action on parking functions and
diagrams, orbit machinery, and staircase Young-diagram flips.

Generators are 1-based: for k in 1..n-1 the left mutation alpha_k replaces the
pair (a_k, a_{k+1}) by (a_{k+1}, a_k - s * a_{k+1}) and the right mutation
beta_k replaces it by (a_{k+1} - s * a_k, a_k), where s is the Seifert pairing
of (a_k, a_{k+1}).  A mutation result that comes out negative is immediately
replaced by its positive version, so bases always consist of positive roots.
beta_k is the inverse of alpha_k; the generators satisfy the braid relations.

A braid word is a sequence of nonzero letters, +k for alpha_k and -k for
beta_k, applied left to right.
"""
from __future__ import annotations

import dataclasses
from typing import Iterator, Literal, Sequence

from .bijection import initial_vector, ray_stops, reconstruct
from .parking import ParkingDiagram, from_diagram, parking_functions, to_diagram
from .roots import Root, SignedRoot, seifert

Basis = tuple[Root, ...]
Direction = Literal["left", "right"]


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a braid word from whitespace-separated signed integers.

    >>> parse_word("1 -2 1")
    (1, -2, 1)
    """
    letters = tuple(int(tok) for tok in text.split())
    if any(letter == 0 for letter in letters):
        raise ValueError("braid letters must be nonzero")
    return letters


def _combine(a: Root, s: int, b: Root) -> SignedRoot:
    """The signed root a - s*b, which is a root whenever the mutation rules apply."""
    if s == 0:
        return SignedRoot(a, 1)
    n = a.rank
    coeffs = [0] * (n + 2)
    for i in a.support():
        coeffs[i] += 1
    for i in b.support():
        coeffs[i] -= s
    signs = {c for c in coeffs[1 : n + 1] if c != 0}
    if signs not in ({1}, {-1}):
        raise RuntimeError(f"{a} - {s}*{b} is not a signed root")
    sign = signs.pop()
    points = [i for i in range(1, n + 1) if coeffs[i] != 0]
    if points[-1] - points[0] + 1 != len(points):
        raise RuntimeError(f"{a} - {s}*{b} has disconnected support")
    return SignedRoot(Root(points[0], points[-1], n), sign)


def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range 1..{n - 1}")


def mutate(basis: Sequence[Root], k: int, direction: Direction) -> Basis:
    """Apply alpha_k (direction "left") or beta_k ("right") to a basis.

    >>> from .roots import simple_roots
    >>> [str(r) for r in mutate(simple_roots(2), 1, "left")]
    ['e[2,2]', 'e[1,2]']
    """
    basis = tuple(basis)
    _check_k(len(basis), k)
    a, b = basis[k - 1], basis[k]
    s = seifert(a, b)
    if direction == "left":
        pair = (b, _combine(a, s, b).normalized())
    elif direction == "right":
        pair = (_combine(b, s, a).normalized(), a)
    else:
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    return basis[: k - 1] + pair + basis[k + 1 :]


def mutate_parking(f: Sequence[int], k: int, direction: Direction) -> tuple[int, ...]:
    """The braid action on parking functions, conjugated through the bijection."""
    return initial_vector(mutate(reconstruct(f), k, direction))


def arc_mutation_target(a: Root, b: Root) -> Root:
    """The positive version of a - <a,b> b, defined when seifert(b, a) == 0.

    This is the root produced at the moved position by a mutation of an
    adjacent pair (a, b).
    """
    if seifert(b, a) != 0:
        raise ValueError(f"seifert({b}, {a}) != 0")
    return _combine(a, seifert(a, b), b).normalized()


def generator_order(basis: Sequence[Root], k: int) -> int:
    """Orbit length (2 or 3) of alpha_k on the given basis.

    The orbit has length 2 exactly when the adjacent pair is Seifert-orthogonal
    both ways, and length 3 otherwise.
    """
    basis = tuple(basis)
    _check_k(len(basis), k)
    a, b = basis[k - 1], basis[k]
    return 2 if seifert(a, b) == 0 and seifert(b, a) == 0 else 3


def apply_word(basis: Sequence[Root], word: Sequence[int]) -> Basis:
    """Apply a braid word left to right; +k means alpha_k, -k means beta_k."""
    current = tuple(basis)
    for letter in word:
        current = mutate(current, abs(letter), "left" if letter > 0 else "right")
    return current


def apply_word_parking(f: Sequence[int], word: Sequence[int]) -> tuple[int, ...]:
    """`apply_word`, conjugated to parking functions."""
    return initial_vector(apply_word(reconstruct(f), word))


def mutate_diagram(diagram: ParkingDiagram, k: int, direction: Direction) -> ParkingDiagram:
    """The braid action computed directly on the staircase diagram.

    This is an independent implementation: the adjacent pair (k, k+1) is
    classified purely geometrically via the ray stops, and the new values for
    the labels follow from the drawn surgery rules.  The four configurations:

    - corners P_k, P_{k+1} in the same column (arcs share left ends): alpha
      moves label k+1 to the column where its ray stops; beta moves label k
      there instead, label k+1 taking the old shared value.
    - rays of k and k+1 stop in the same column (arcs share right ends): alpha
      pulls label k back to the column of P_{k+1}; beta swaps the two labels.
    - the ray of k stops in the column of P_{k+1} (arcs touch): alpha swaps;
      beta moves label k+1 onto the column of P_k.
    - otherwise both directions just swap the labels.

    Agreement with the algebraic path (`mutate_parking`) is checked
    exhaustively by the test suite.
    """
    f = from_diagram(diagram)
    _check_k(len(f), k)
    stops = ray_stops(diagram)
    v_k, v_next = f[k - 1], f[k]
    t_k, t_next = stops[k - 1], stops[k]
    g = list(f)
    if v_k == v_next:
        if direction == "left":
            g[k] = t_next + 1
        else:
            g[k - 1] = t_next + 1
            g[k] = v_k
    elif t_k == t_next:
        if direction == "left":
            g[k - 1] = v_next
            g[k] = v_next
        else:
            g[k - 1], g[k] = v_next, v_k
    elif t_k == v_next - 1:
        if direction == "left":
            g[k - 1], g[k] = v_next, v_k
        else:
            g[k] = v_k
    else:
        g[k - 1], g[k] = v_next, v_k
    return to_diagram(g)


@dataclasses.dataclass(frozen=True)
class OrbitGraph:
    """The full action graph of the alpha generators on parking functions."""

    n: int
    nodes: tuple[tuple[int, ...], ...]
    alpha: dict[tuple[tuple[int, ...], int], tuple[int, ...]]

    def edges(self) -> Iterator[tuple[tuple[int, ...], int, tuple[int, ...]]]:
        """All (source, k, target) alpha edges, in deterministic order."""
        for f in self.nodes:
            for k in range(1, self.n):
                yield f, k, self.alpha[(f, k)]


def orbit_graph(n: int) -> OrbitGraph:
    """The action graph of all generators on the parking functions of n cars."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    nodes = tuple(parking_functions(n))
    alpha: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}
    for f in nodes:
        basis = reconstruct(f)
        for k in range(1, n):
            alpha[(f, k)] = initial_vector(mutate(basis, k, "left"))
    return OrbitGraph(n, nodes, alpha)


Young = tuple[int, ...]


def validate_young(lengths: Sequence[int], n: int) -> Young:
    """Check that `lengths` is a staircase Young diagram (top-down rows).

    The canonical form has exactly n weakly decreasing entries with row d of
    length at most n - d.
    """
    mu = tuple(lengths)
    if len(mu) != n:
        raise ValueError(f"expected {n} rows, got {len(mu)}")
    for d in range(1, n + 1):
        if not 0 <= mu[d - 1] <= n - d:
            raise ValueError(f"row {d} of length {mu[d - 1]} leaves the staircase")
        if d > 1 and mu[d - 1] > mu[d - 2]:
            raise ValueError("row lengths must decrease weakly downwards")
    return mu


def young_of_diagram(diagram: ParkingDiagram) -> Young:
    """The unlabelled staircase Young diagram underlying a parking diagram."""
    return tuple(reversed(diagram.lengths))


def _young_boundary(mu: Young, n: int) -> set[tuple[int, int]]:
    points = {(0, -n)}
    x = 0
    for d in range(n, 0, -1):
        y = -d
        while x < mu[d - 1]:
            x += 1
            points.add((x, y))
        points.add((x, y + 1))
    while x < n:
        x += 1
        points.add((x, 0))
    return points


def flip_row(young: Sequence[int], k: int) -> Young:
    """Resize row k of a staircase Young diagram by a diagonal walk.

    Starting at the SE corner (mu_k, -k), walk along the line x - y = mu_k + k:
    south-west when row k is strictly longer than row k+1, north-east when
    their lengths are equal.  The walk stops at the first lattice point on the
    diagram boundary or on a coordinate axis; its x-coordinate is the new row
    length, and the resized row is re-inserted in sorted position.

    Row n is degenerate (its walk runs along the staircase hypotenuse) and
    flips to the diagram itself.
    """
    n = len(young)
    mu = validate_young(young, n)
    if not 1 <= k <= n:
        raise ValueError(f"row index {k} out of range 1..{n}")
    if k == n:
        return mu
    boundary = _young_boundary(mu, n)
    step = -1 if mu[k - 1] > mu[k] else 1
    x, y = mu[k - 1], -k
    while True:
        x += step
        y += step
        if (x, y) in boundary or x == 0 or y == 0:
            break
    rows = sorted(mu[: k - 1] + mu[k:] + (x,), reverse=True)
    return validate_young(rows, n)


def young_diagrams(n: int) -> Iterator[Young]:
    """All staircase Young diagrams with n rows (counted by Catalan numbers)."""

    def rec(d: int, prev: int) -> Iterator[tuple[int, ...]]:
        if d > n:
            yield ()
            return
        for length in range(min(prev, n - d), -1, -1):
            for rest in rec(d + 1, length):
                yield (length, *rest)

    yield from rec(1, n)
