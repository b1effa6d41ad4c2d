"""Minor models, relaxed models with bounded overlap, and exact oracles.

A model of a pattern H in a host G assigns every pattern vertex a nonempty
connected branch set of host vertices.  A relaxed model with multiplicity k
lets each host vertex appear in up to k branch sets; two sets "touch" when
they share a vertex or the host has an edge between them.  A multiplicity-1
model is the classical notion: disjoint sets, one host edge per pattern edge.

The oracles are exact and exponential; they refuse hosts above a vertex cap.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import graphs
from .errors import BudgetExceeded, CapacityExceeded, SideInvalid
from .graphs import SimpleGraph
from .report import Report


@dataclass(frozen=True)
class MinorModel:
    """Branch sets keyed by pattern vertex, as host vertex indices."""

    host: SimpleGraph
    pattern: SimpleGraph
    branch_sets: dict
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")


def _sets_touch(host: SimpleGraph, s1: frozenset, s2: frozenset) -> bool:
    if s1 & s2:
        return True
    return any(host.adj[u] & s2 for u in s1)


def verify_model(model: MinorModel) -> Report:
    """Check every model property; failures carry witnesses."""
    rep = Report()
    host, pattern = model.host, model.pattern
    sets = model.branch_sets

    missing = [x for x in range(pattern.n) if x not in sets]
    rep.add("sets-cover-pattern", not missing, missing or None)

    bad_range = [
        x for x, s in sets.items()
        if not s or any(not 0 <= v < host.n for v in s)
    ]
    rep.add("sets-nonempty-in-host", not bad_range, bad_range or None)
    if missing or bad_range:
        return rep

    disconnected = [
        x for x in range(pattern.n)
        if not graphs.is_connected_subset(host, sets[x])
    ]
    rep.add("sets-connected", not disconnected, disconnected or None)

    load: dict = {}
    for x in range(pattern.n):
        for v in sets[x]:
            load[v] = load.get(v, 0) + 1
    overloaded = sorted(v for v, c in load.items() if c > model.multiplicity)
    rep.add(
        f"capacity-{model.multiplicity}",
        not overloaded,
        [(v, load[v]) for v in overloaded] or None,
    )

    untouched = [
        (x, y) for x, y in pattern.edges()
        if not _sets_touch(host, sets[x], sets[y])
    ]
    rep.add("pattern-edges-touch", not untouched, untouched or None)
    return rep


# ------------------------------------------------------------ multiplicity

def model_to_lex(model: MinorModel, k: int) -> MinorModel:
    """Turn a multiplicity-k model in G into a multiplicity-1 model in G[k]
    by handing the branch sets through v (in pattern-index order) the copies
    (v, 1), (v, 2), ...  Raises CapacityExceeded if some vertex carries more
    than k sets."""
    host = model.host
    lex = graphs.lex_product(host, k)
    users: dict = {v: [] for v in range(host.n)}
    for x in sorted(model.branch_sets):
        for v in model.branch_sets[x]:
            users[v].append(x)
    for v, xs in users.items():
        if len(xs) > k:
            raise CapacityExceeded(
                f"vertex {host.labels[v]!r} lies in {len(xs)} sets, k={k}"
            )
    new_sets = {}
    for x, s in model.branch_sets.items():
        lifted = set()
        for v in s:
            copy = users[v].index(x) + 1
            lifted.add(lex.index_of((host.labels[v], copy)))
        new_sets[x] = frozenset(lifted)
    return MinorModel(lex, model.pattern, new_sets, 1)


def lex_to_model(model: MinorModel, base: SimpleGraph, k: int) -> MinorModel:
    """Project a multiplicity-1 model in base[k] down to a multiplicity-k
    model in the base.  Host labels must have the (base label, copy) shape."""
    new_sets = {}
    for x, s in model.branch_sets.items():
        projected = set()
        for v in s:
            lab, _copy = model.host.labels[v]
            projected.add(base.index_of(lab))
        new_sets[x] = frozenset(projected)
    return MinorModel(base, model.pattern, new_sets, k)


# ------------------------------------------------------------ transport

def project_model_cliquesum(
    model: MinorModel, side_graph: SimpleGraph, embed
) -> MinorModel:
    """Restrict a model in a clique-sum to one summand.

    `embed` maps summand vertices to host vertices.  Branch-set pieces cut
    off by the other side reconnect through the identified clique, whose
    edges the summand retains.  Raises SideInvalid when some set misses the
    summand entirely or the restriction stops being a model.
    """
    inverse = {h: s for s, h in enumerate(embed)}
    new_sets = {}
    for x, s in model.branch_sets.items():
        projected = frozenset(inverse[v] for v in s if v in inverse)
        if not projected:
            raise SideInvalid(f"branch set {x} avoids the chosen side")
        new_sets[x] = projected
    out = MinorModel(side_graph, model.pattern, new_sets, model.multiplicity)
    rep = verify_model(out)
    if not rep.ok:
        raise SideInvalid("; ".join(str(c) for c in rep.failures))
    return out


def compose_models(outer: MinorModel, inner: MinorModel) -> MinorModel:
    """Model composition: a model of J in H and a model of H in G give a
    model of J in G.  The inner model must have multiplicity 1."""
    if inner.multiplicity != 1:
        raise ValueError("inner model must have multiplicity 1")
    if inner.host.n != outer.pattern.n or set(inner.host.edges()) - set(
        outer.pattern.edges()
    ):
        raise ValueError("inner host does not match outer pattern")
    new_sets = {
        x: frozenset().union(*(outer.branch_sets[h] for h in s))
        for x, s in inner.branch_sets.items()
    }
    return MinorModel(outer.host, inner.pattern, new_sets, outer.multiplicity)


# ------------------------------------------------------------ oracles

def max_clique(g: SimpleGraph) -> list[int]:
    """One maximum clique, by pivoted Bron-Kerbosch on vertex bitmasks."""
    adj = [0] * g.n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best = []

    def expand(r: list[int], p: int, x: int):
        nonlocal best
        if p == 0 and x == 0:
            if len(r) > len(best):
                best = list(r)
            return
        if len(r) + bin(p).count("1") <= len(best):
            return
        pivot = (p | x).bit_length() - 1
        candidates = p & ~adj[pivot]
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    expand([], (1 << g.n) - 1 if g.n else 0, 0)
    return sorted(best)


def _check_budget(g: SimpleGraph, cap: int):
    if g.n > cap:
        raise BudgetExceeded(f"host has {g.n} vertices, oracle cap is {cap}")


def hadwiger_model(g: SimpleGraph, cap: int = 12) -> tuple[int, MinorModel]:
    """Exact largest complete minor with a verified witness model.

    Search over edge contractions: the answer is the maximum clique number
    over all quotients by connected partitions.  States are memoized by the
    partition; branches whose quotient is already no larger than the best
    known clique are pruned.
    """
    _check_budget(g, cap)
    if g.n == 0:
        raise ValueError("empty host")
    adj = [0] * g.n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    best = 0
    best_bags: tuple = ()
    visited: set = set()

    def bag_adjacent(bags, i, j):
        mask_j = bags[j]
        m = bags[i]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if adj[v] & mask_j:
                return True
        return False

    def search(bags: tuple):
        nonlocal best, best_bags
        key = frozenset(bags)
        if key in visited:
            return
        visited.add(key)
        q = len(bags)
        if q <= best:
            return
        quotient_edges = [
            (i, j) for i, j in combinations(range(q), 2) if bag_adjacent(bags, i, j)
        ]
        quotient = graphs.from_edges(q, quotient_edges)
        clique = max_clique(quotient)
        if len(clique) > best:
            best = len(clique)
            best_bags = tuple(bags[i] for i in clique)
        if len(quotient_edges) == q * (q - 1) // 2:
            return
        for i, j in quotient_edges:
            merged = tuple(
                sorted(
                    [bags[t] for t in range(q) if t not in (i, j)]
                    + [bags[i] | bags[j]]
                )
            )
            search(merged)

    search(tuple(sorted(1 << v for v in range(g.n))))

    sets = {}
    for x, mask in enumerate(best_bags):
        members = set()
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            members.add(v)
        sets[x] = frozenset(members)
    model = MinorModel(g, graphs.complete_graph(best), sets, 1)
    return best, model


def hadwiger_oracle(g: SimpleGraph, cap: int = 12) -> int:
    return hadwiger_model(g, cap)[0]


def treewidth_oracle(g: SimpleGraph, cap: int = 12) -> int:
    """Exact treewidth by dynamic programming over elimination prefixes."""
    _check_budget(g, cap)
    n = g.n
    if n == 0:
        return 0
    adj = [0] * n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    def back_degree(subset: int, v: int) -> int:
        # neighbors of v outside `subset` reachable through subset ∪ {v}
        seen = 1 << v
        stack = [v]
        out = 0
        while stack:
            u = stack.pop()
            m = adj[u] & ~seen
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                seen |= 1 << w
                if subset >> w & 1:
                    stack.append(w)
                else:
                    out |= 1 << w
        return bin(out).count("1")

    full = (1 << n) - 1
    dp = [n] * (full + 1)
    dp[0] = -1
    for subset in range(1, full + 1):
        m = subset
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            prev = subset & ~(1 << v)
            cost = max(dp[prev], back_degree(prev, v))
            if cost < dp[subset]:
                dp[subset] = cost
    return dp[full]
