"""Evaluation of closed trivalent networks by Jones-Wenzl projector expansion.

A network is a planar trivalent graph whose edges carry nonnegative integer
labels.  Each edge labelled ``n`` stands for ``n`` parallel strands through a
projector ``P_n``; at a vertex with labels ``p, q, s`` consecutive legs share
``(p+q-s)/2`` arcs.  The value is obtained by expanding every projector into
TL diagrams and counting loops.

The planar embedding is a rotation system: each vertex lists its incident
edges counterclockwise.  Strand positions at an edge end are also numbered
counterclockwise around the vertex.

Contraction proceeds box by box.  A state is a perfect matching of the points
still attached to unexpanded boxes; any state that joins two neighbouring
points on the same side of an unexpanded box is dropped, since the projector
kills turnbacks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tl import jones_wenzl

__all__ = [
    "Network",
    "NetworkError",
    "evaluate_closed_network",
    "loop_network",
    "theta_network",
    "tet_network",
]


class NetworkError(ValueError):
    """Malformed, non-planar or inadmissible network."""


@dataclass(frozen=True)
class Network:
    """``edges[k] = (u, v, label)``; ``rotation[v]`` lists edge ids ccw.

    Edges with ``u = v = None`` are free loops (no vertices)."""

    edges: tuple[tuple[int | None, int | None, int], ...]
    rotation: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def validate(self) -> None:
        ends: dict[int, list[int]] = {}
        for k, (u, v, n) in enumerate(self.edges):
            if n < 0:
                raise NetworkError(f"edge {k} has negative label {n}")
            if (u is None) != (v is None):
                raise NetworkError(f"edge {k} has a free end; network must be closed")
            for w in (u, v):
                if w is not None:
                    ends.setdefault(w, []).append(k)
        if set(ends) != set(self.rotation):
            raise NetworkError("rotation system does not match the edge list")
        for w, rot in self.rotation.items():
            if len(rot) != 3 or sorted(rot) != sorted(ends[w]):
                raise NetworkError(f"vertex {w} must list its three incident edges")
            p, q, s = (self.edges[e][2] for e in rot)
            if (p + q + s) % 2 or p > q + s or q > p + s or s > p + q:
                raise NetworkError(f"vertex {w} has inadmissible labels ({p},{q},{s})")
        self._check_planar()

    def darts(self) -> dict[int, list[tuple[int, int]]]:
        """Per vertex, the ccw list of (edge, end) pairs incident to it."""
        out = {}
        for w, rot in self.rotation.items():
            seen: set[int] = set()
            ds = []
            for k in rot:
                u, v, _ = self.edges[k]
                if u == v:
                    s = 1 if k in seen else 0
                    seen.add(k)
                else:
                    s = 0 if u == w else 1
                ds.append((k, s))
            out[w] = ds
        return out

    def _check_planar(self) -> None:
        # faces of the rotation system; planar iff V - E + F = 2 per component
        real = [k for k, (u, _, _) in enumerate(self.edges) if u is not None]
        if not real:
            return
        succ = {}
        for ds in self.darts().values():
            for idx, d in enumerate(ds):
                succ[d] = ds[(idx + 1) % len(ds)]
        seen = set()
        faces = 0
        for d in succ:
            if d in seen:
                continue
            faces += 1
            cur = d
            while cur not in seen:
                seen.add(cur)
                k, s = cur
                cur = succ[(k, 1 - s)]
        comps = _components(self.edges, real)
        if len(self.rotation) - len(real) + faces != 2 * comps:
            raise NetworkError("rotation system is not planar")


def _components(edges, real) -> int:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in real:
        u, v, _ = edges[k]
        parent[find(u)] = find(v)
    return len({find(x) for x in list(parent)})


# ------------------------------------------------------------------ presets


def loop_network(a: int) -> Network:
    return Network(edges=((None, None, a),))


def theta_network(a: int, b: int, c: int) -> Network:
    return Network(edges=((0, 1, a), (0, 1, b), (0, 1, c)),
                   rotation={0: (0, 1, 2), 1: (2, 1, 0)})


def tet_network(a: int, b: int, i: int, c: int, d: int, j: int) -> Network:
    """Tetrahedron with vertex triples (a,b,i), (c,d,i), (a,c,j), (b,d,j).

    Vertices V1..V4 are 0..3 and the edges are a=V1V3, b=V1V4, i=V1V2,
    c=V2V3, d=V2V4, j=V3V4."""
    edges = ((0, 2, a), (0, 3, b), (0, 1, i), (1, 2, c), (1, 3, d), (2, 3, j))
    # V4 drawn in the middle of triangle V1 V2 V3
    rotation = {
        3: (1, 4, 5),  # V4: towards V1, V2, V3
        0: (2, 1, 0),  # V1: V2, V4, V3
        1: (3, 4, 2),  # V2: V3, V4, V1
        2: (0, 5, 3),  # V3: V1, V4, V2
    }
    return Network(edges=edges, rotation=rotation)


# --------------------------------------------------------------- evaluation


def _delta_at(A: complex) -> complex:
    return -A * A - 1 / (A * A)


def evaluate_closed_network(net: Network, A: complex, max_label: int = 8) -> complex:
    """Value of the closed network at the complex parameter ``A``."""
    net.validate()
    if any(n > max_label for _, _, n in net.edges):
        raise NetworkError(f"labels above {max_label} exceed the expansion cap")
    A = complex(A)
    delta = _delta_at(A)
    value = complex(1.0)

    # free loops contribute their projector closure
    boxes = []
    for k, (u, v, n) in enumerate(net.edges):
        if u is None:
            value *= _loop_value(n, delta)
        elif n > 0:
            boxes.append(k)
    if not boxes:
        return value

    # point ids: box k end s position t
    base: dict[int, int] = {}
    total = 0
    for k in boxes:
        base[k] = total
        total += 2 * net.edges[k][2]

    def pid(k: int, s: int, t: int) -> int:
        return base[k] + s * net.edges[k][2] + t

    partner = [-1] * total
    for w, ds in net.darts().items():
        legs = [(k, s, net.edges[k][2]) for k, s in ds]
        for idx in range(3):
            k1, s1, p = legs[idx]
            k2, s2, q = legs[(idx + 1) % 3]
            s_ = legs[(idx + 2) % 3][2]
            for t in range((p + q - s_) // 2):
                x = pid(k1, s1, p - 1 - t)
                y = pid(k2, s2, t)
                partner[x], partner[y] = y, x

    states: dict[tuple[int, ...], complex] = {tuple(partner): complex(1.0)}
    remaining = list(boxes)
    while remaining:
        # cheapest box first
        remaining.sort(key=lambda k: net.edges[k][2])
        k = remaining.pop(0)
        states = _expand_box(states, k, net.edges[k][2], base[k], delta)
        states = _prune(states, remaining, net, base)
        if not states:
            return 0j
    (coeff,) = states.values()
    return value * coeff


def _loop_value(n: int, delta: complex) -> complex:
    # closure of P_n by direct expansion
    if n == 0:
        return complex(1.0)
    from .tl import closure_value

    return complex(closure_value(jones_wenzl(n, delta=delta), "trace", normalized=False))


def _expand_box(states, k, n, b0, delta):
    P = jones_wenzl(n, delta=delta)
    # local TL index -> global point id
    local = [b0 + t for t in range(n)] + [b0 + n + (n - 1 - t) for t in range(n)]
    back = {g: i for i, g in enumerate(local)}
    terms = list(P.terms.items())
    out: dict[tuple[int, ...], complex] = {}
    for state, c0 in states.items():
        for diag, c in terms:
            new = list(state)
            loops = 0
            visited = [False] * (2 * n)
            for i in range(2 * n):
                if visited[i]:
                    continue
                g = local[i]
                ext = state[g]
                if ext in back:
                    continue
                # walk from the outside partner of point i through the box
                visited[i] = True
                j = diag[i]
                visited[j] = True
                nxt = state[local[j]]
                while nxt in back:
                    li = back[nxt]
                    visited[li] = True
                    j = diag[li]
                    visited[j] = True
                    nxt = state[local[j]]
                new[ext], new[nxt] = nxt, ext
            # whatever is left forms closed loops inside the box
            for i in range(2 * n):
                if visited[i]:
                    continue
                loops += 1
                cur = i
                while not visited[cur]:
                    visited[cur] = True
                    m = back[state[local[cur]]]
                    visited[m] = True
                    cur = diag[m]
            for i in range(2 * n):
                new[local[i]] = -1
            key = tuple(new)
            out[key] = out.get(key, 0j) + c0 * c * delta ** loops
    return {s: c for s, c in out.items() if abs(c) > 1e-300}


def _prune(states, remaining, net, base):
    checks = []
    for k in remaining:
        n = net.edges[k][2]
        for s in (0, 1):
            for t in range(n - 1):
                checks.append((base[k] + s * n + t, base[k] + s * n + t + 1))
    if not checks:
        return states
    return {st: c for st, c in states.items() if all(st[x] != y for x, y in checks)}
