"""
Brute-force reference implementations of every metric and of Spearman's rho.

Nothing here imports the engine: definitions are re-derived directly from the
raw class list with plain loops, so agreement with ``compute_all`` is
evidence rather than tautology.
"""

import math
from typing import Dict, List, Optional, Sequence, Set

PRIMITIVES = {"byte", "short", "int", "long", "float", "double", "boolean", "char", "void"}


def _internal(model) -> Dict[str, object]:
    return {c.fqn: c for c in model.classes if not c.is_external}


def _considered(info, include_constructors: bool):
    simple = info.fqn.rsplit(".", 1)[-1]
    return [m for m in info.methods if include_constructors or m.name != simple]


def _counts(target: str, owner: str) -> bool:
    return target != owner and target != "?" and target not in PRIMITIVES


def depends_on(info) -> Set[str]:
    targets = set()
    for f in info.fields:
        targets.add(f.declared_type)
    for m in info.methods:
        targets.update(m.param_types)
        targets.add(m.return_type)
        for c in m.calls:
            if c.resolved:
                targets.add(c.target_class)
    targets.update(info.parents)
    return {t for t in targets if _counts(t, info.fqn)}


def oracle_ce(model, fqn: str) -> int:
    return len(depends_on(_internal(model)[fqn]))


def oracle_ca(model, fqn: str) -> int:
    return sum(1 for other in _internal(model).values() if other.fqn != fqn and fqn in depends_on(other))


def oracle_dit(model, fqn: str) -> int:
    internal = _internal(model)

    def depth(name: str, trail: tuple) -> int:
        assert name not in trail, "cycle"
        parents = [p for p in internal[name].parents if p in internal]
        return max((1 + depth(p, trail + (name,)) for p in parents), default=0)

    return depth(fqn, ())


def oracle_cbo(model, fqn: str) -> int:
    info = _internal(model)[fqn]
    used = set()
    for m in info.methods:
        used.update(c.target_class for c in m.calls if c.resolved)
        used.update(m.param_types)
        used.add(m.return_type)
    return len({t for t in used if _counts(t, fqn)})


def oracle_rfc(model, fqn: str, include_constructors: bool = True) -> int:
    methods = _considered(_internal(model)[fqn], include_constructors)
    response = {(fqn, m.name, m.arity) for m in methods}
    for m in methods:
        for c in m.calls:
            if c.resolved:
                response.add((c.target_class, c.target_method, c.arity))
    return len(response)


def oracle_pairs(model, fqn: str, include_constructors: bool = True):
    methods = _considered(_internal(model)[fqn], include_constructors)
    disjoint = sharing = 0
    for i in range(len(methods)):
        for j in range(i + 1, len(methods)):
            if set(methods[i].attributes_used) & set(methods[j].attributes_used):
                sharing += 1
            else:
                disjoint += 1
    return disjoint, sharing


def _components(n: int, adjacent) -> int:
    seen = [False] * n
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            node = stack.pop()
            for other in range(n):
                if not seen[other] and adjacent(node, other):
                    seen[other] = True
                    stack.append(other)
    return count


def oracle_lcom3(model, fqn: str, include_constructors: bool = True) -> int:
    methods = _considered(_internal(model)[fqn], include_constructors)
    return _components(
        len(methods),
        lambda a, b: bool(set(methods[a].attributes_used) & set(methods[b].attributes_used)),
    )


def oracle_lcom4(model, fqn: str, include_constructors: bool = True) -> int:
    methods = _considered(_internal(model)[fqn], include_constructors)

    def calls(a: int, b: int) -> bool:
        target = methods[b]
        return any(
            c.resolved and c.target_class == fqn and c.target_method == target.name and c.arity == target.arity
            for c in methods[a].calls
        )

    return _components(
        len(methods),
        lambda a, b: bool(set(methods[a].attributes_used) & set(methods[b].attributes_used))
        or calls(a, b) or calls(b, a),
    )


def oracle_row(model, fqn: str, include_constructors: bool = True) -> Dict[str, int]:
    disjoint, sharing = oracle_pairs(model, fqn, include_constructors)
    return {
        "ce": oracle_ce(model, fqn),
        "ca": oracle_ca(model, fqn),
        "dit": oracle_dit(model, fqn),
        "cbo": oracle_cbo(model, fqn),
        "rfc": oracle_rfc(model, fqn, include_constructors),
        "lcom1": disjoint,
        "lcom2": max(disjoint - sharing, 0),
        "lcom3": oracle_lcom3(model, fqn, include_constructors),
        "lcom4": oracle_lcom4(model, fqn, include_constructors),
    }


def average_ranks(values: Sequence[float]) -> List[float]:
    """1-based ranks; tied values share the mean of the positions they span."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        for k in range(i, j + 1):
            ranks[order[k]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def textbook_spearman(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    rx = average_ranks(xs)
    ry = average_ranks(ys)
    mx = sum(rx) / len(rx)
    my = sum(ry) / len(ry)
    cov = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    vx = sum((a - mx) ** 2 for a in rx)
    vy = sum((b - my) ** 2 for b in ry)
    if vx == 0 or vy == 0:
        return None
    return cov / math.sqrt(vx * vy)
