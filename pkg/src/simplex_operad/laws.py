"""Sweep checkers for the composition laws.

Associativity and identity are checked on exact rationals (bit-exact
comparison, residual 0 or bust); the function-space laws are checked
pointwise at random evaluation points.  Every checker accepts `perturb`,
which injects a fault of that size into the computed left-hand side --
useful for verifying that the sweeps actually detect violations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .endo import EndoFn, add, endo_compose, evaluate, left_compose, represent, right_compose
from .reports import ASSOC_CASES, LawCase, LawReport, _Tracker, assoc_window
from .sampling import random_endofn, random_exact_dist, random_point, rng_for
from .simplex import Dist, compose_at, compose_simul, format_dist, uniform_dist, unit_dist
from .trees import corolla_of, tree_flatten, tree_graft


def _exact_residual(lhs: tuple, rhs: tuple) -> float:
    if lhs == rhs:
        return 0.0
    return max(abs(float(a - b)) for a, b in zip(lhs, rhs))


def _bump(probs: tuple, perturb: float) -> tuple:
    if not perturb:
        return probs
    eps = perturb if isinstance(probs[0], float) else Fraction(perturb)
    return (probs[0] + eps,) + probs[1:]


def check_operad_assoc(
    max_arity: int = 4,
    mode: str = "exact",
    triples: int = 100,
    seed: int = 0,
    tol: float = 1e-12,
    perturb: float = 0.0,
) -> LawReport:
    """Associativity of slot composition, all three index windows.

    Enumerates every arity combination n, m, k <= max_arity and every
    valid slot pair (j, i); for each combination it draws `triples`
    distribution triples (the first is the uniform one) and compares both
    sides of the matching window identity.  Exact mode demands equality;
    float mode allows `tol` componentwise.
    """
    if max_arity < 2:
        raise ValueError("max_arity must be >= 2")
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    tracker = _Tracker("operad-assoc", seed, 0.0 if mode == "exact" else tol)
    counter = 0
    for n, m, k in product(range(1, max_arity + 1), repeat=3):
        for t in range(triples):
            rng = rng_for(seed, counter)
            counter += 1
            if t == 0:
                p, q, r = uniform_dist(n), uniform_dist(m), uniform_dist(k)
            else:
                p = random_exact_dist(rng, n)
                q = random_exact_dist(rng, m)
                r = random_exact_dist(rng, k)
            if mode == "float":
                p, q, r = p.to_float(), q.to_float(), r.to_float()
            pq = compose_at(p, q, j := 0) if False else None  # placeholder, see loop
            for j in range(1, n + 1):
                pq = compose_at(p, q, j)
                for i in range(1, n + m):
                    window = assoc_window(j, m, i)
                    lhs = compose_at(pq, r, i)
                    if window == "assoc-left":
                        rhs = compose_at(compose_at(p, r, i), q, j + k - 1)
                    elif window == "assoc-nested":
                        rhs = compose_at(p, compose_at(q, r, i - j + 1), j)
                    else:
                        rhs = compose_at(compose_at(p, r, i - m + 1), q, j)
                    residual = _exact_residual(_bump(lhs.probs, perturb), rhs.probs)
                    tracker.record(
                        residual,
                        lambda window=window, n=n, m=m, k=k, i=i, j=j, p=p, q=q, r=r: {
                            "case": LawCase(window, (n, m, k), (i, j)).to_dict(),
                            "p": format_dist(p),
                            "q": format_dist(q),
                            "r": format_dist(r),
                        },
                    )
    return tracker.report()


def check_operad_identity(
    max_arity: int = 6,
    samples_per_arity: int = 25,
    seed: int = 0,
    perturb: float = 0.0,
) -> LawReport:
    """The unit distribution is a two-sided identity for composition,
    checked exactly at every slot of every arity up to max_arity."""
    if max_arity < 1:
        raise ValueError("max_arity must be >= 1")
    tracker = _Tracker("operad-identity", seed, 0.0)
    unit = unit_dist()
    counter = 0
    for n in range(1, max_arity + 1):
        for t in range(samples_per_arity):
            rng = rng_for(seed, counter)
            counter += 1
            p = uniform_dist(n) if t == 0 else random_exact_dist(rng, n)
            left = compose_at(unit, p, 1)
            tracker.record(
                _exact_residual(_bump(left.probs, perturb), p.probs),
                lambda n=n, p=p: {
                    "case": LawCase("identity-left", (n,), (1,)).to_dict(),
                    "p": format_dist(p),
                },
            )
            for i in range(1, n + 1):
                right = compose_at(p, unit, i)
                tracker.record(
                    _exact_residual(_bump(right.probs, perturb), p.probs),
                    lambda n=n, i=i, p=p: {
                        "case": LawCase("identity-right", (n,), (i,)).to_dict(),
                        "p": format_dist(p),
                    },
                )
    return tracker.report()


def check_representation(
    samples: int = 1000,
    seed: int = 0,
    tol: float = 1e-12,
    max_arity: int = 4,
    perturb: float = 0.0,
) -> LawReport:
    """The inner-product action respects composition and the unit:
    acting with a composite equals substituting the actions."""
    tracker = _Tracker("representation", seed, tol)
    identity = represent(unit_dist())
    for t in range(samples):
        rng = rng_for(seed, t)
        n = rng.randint(1, max_arity)
        m = rng.randint(1, max_arity)
        i = rng.randint(1, n)
        p = random_exact_dist(rng, n)
        q = random_exact_dist(rng, m)
        x = random_point(rng, n + m - 1)
        lhs = evaluate(represent(compose_at(p, q, i)), x)
        rhs = evaluate(endo_compose(represent(p), i, represent(q)), x)
        x0 = rng.uniform(-10.0, 10.0)
        unit_residual = abs(evaluate(identity, (x0,)) - x0)
        residual = max(abs(lhs + perturb - rhs), unit_residual)
        tracker.record(
            residual,
            lambda n=n, m=m, i=i, p=p, q=q, x=x, lhs=lhs, rhs=rhs: {
                "case": LawCase("representation", (n, m), (i,)).to_dict(),
                "p": format_dist(p),
                "q": format_dist(q),
                "x": list(x),
                "lhs": lhs,
                "rhs": rhs,
            },
        )
    return tracker.report()


def oracle_equivalence(
    samples: int = 500,
    max_total_arity: int = 10,
    seed: int = 0,
    perturb: float = 0.0,
) -> LawReport:
    """Symbolic grafting against tuple composition.

    Builds random grafting sequences as painted trees, flattens them, and
    compares bit-exactly with the matching compose_at fold; every fifth
    sample grafts into all slots at once and compares against
    compose_simul.
    """
    tracker = _Tracker("oracle", seed, 0.0)
    for t in range(samples):
        rng = rng_for(seed, t)
        if t % 5 == 4:
            # simultaneous grafting, right to left so slots stay put
            n = rng.randint(1, 3)
            p = random_exact_dist(rng, n)
            qs = [random_exact_dist(rng, rng.randint(1, 3)) for _ in range(n)]
            tree = corolla_of(p)
            for i in range(n, 0, -1):
                tree = tree_graft(tree, i, corolla_of(qs[i - 1]))
            reference = compose_simul(p, qs)
            trail = [f"simul {format_dist(p)} o ({', '.join(map(format_dist, qs))})"]
        else:
            arity = rng.randint(1, 6)
            p = random_exact_dist(rng, arity)
            tree = corolla_of(p)
            reference = p
            trail = [format_dist(p)]
            for _ in range(rng.randint(1, 4)):
                room = max_total_arity - reference.arity + 1
                if room < 1:
                    break
                m = rng.randint(1, min(4, room))
                i = rng.randint(1, reference.arity)
                q = random_exact_dist(rng, m)
                tree = tree_graft(tree, i, corolla_of(q))
                reference = compose_at(reference, q, i)
                trail.append(f"o_{i} {format_dist(q)}")
        flattened = tree_flatten(tree)
        residual = _exact_residual(_bump(flattened.probs, perturb), reference.probs)
        tracker.record(
            residual,
            lambda trail=trail, flattened=flattened, reference=reference: {
                "grafts": trail,
                "flattened": format_dist(flattened),
                "composed": format_dist(reference),
            },
        )
    return tracker.report()


def _mod(a, b, i: int):
    # composition dispatch: distribution x distribution stays in the
    # operad, one function operand routes to the module composition
    a_dist, b_dist = isinstance(a, Dist), isinstance(b, Dist)
    if a_dist and b_dist:
        return compose_at(a, b, i)
    if a_dist:
        return left_compose(a, i, b)
    if b_dist:
        return right_compose(a, i, b)
    raise TypeError("at most one function operand per composition")


_PLACEMENTS = ("module-left", "module-middle", "module-right")


def _window_indices(rng, window: str, max_arity: int) -> tuple[int, int, int, int, int]:
    """Sample (n, m, k, i, j) uniformly inside one associativity window."""
    m = rng.randint(1, max_arity)
    k = rng.randint(1, max_arity)
    if window == "assoc-left":
        n = rng.randint(2, max_arity)
        j = rng.randint(2, n)
        i = rng.randint(1, j - 1)
    elif window == "assoc-nested":
        n = rng.randint(1, max_arity)
        j = rng.randint(1, n)
        i = rng.randint(j, j + m - 1)
    else:
        n = rng.randint(2, max_arity)
        j = rng.randint(1, n - 1)
        i = rng.randint(j + m, n + m - 1)
    return n, m, k, i, j


def check_module_assoc(
    samples: int = 1000,
    seed: int = 0,
    tol: float = 1e-12,
    max_arity: int = 4,
    points: int = 2,
    perturb: float = 0.0,
) -> LawReport:
    """The three-case associativity of the module compositions.

    Cycles through the nine combinations of (which operand is the
    function) x (index window), sampling random function bodies and
    distributions and comparing both sides at random points.
    """
    if max_arity < 2:
        raise ValueError("max_arity must be >= 2")
    tracker = _Tracker("module-assoc", seed, tol)
    from .sexpr import format_endofn  # local import: sexpr depends on endo only

    for t in range(samples):
        rng = rng_for(seed, t)
        placement = _PLACEMENTS[(t // 3) % 3]
        window = ASSOC_CASES[t % 3]
        n, m, k, i, j = _window_indices(rng, window, max_arity)
        arities = (n, m, k)
        slot = _PLACEMENTS.index(placement)
        operands = [
            random_endofn(rng, arities[pos]) if pos == slot else random_exact_dist(rng, arities[pos])
            for pos in range(3)
        ]
        p, q, r = operands
        lhs = _mod(_mod(p, q, j), r, i)
        if window == "assoc-left":
            rhs = _mod(_mod(p, r, i), q, j + k - 1)
        elif window == "assoc-nested":
            rhs = _mod(p, _mod(q, r, i - j + 1), j)
        else:
            rhs = _mod(_mod(p, r, i - m + 1), q, j)
        worst = 0.0
        worst_x = None
        for _ in range(points):
            x = random_point(rng, n + m + k - 2)
            res = abs(evaluate(lhs, x) + perturb - evaluate(rhs, x))
            if res >= worst:
                worst, worst_x = res, x
        fn = operands[slot]
        tracker.record(
            worst,
            lambda placement=placement, window=window, arities=arities, i=i, j=j, fn=fn, operands=operands, worst_x=worst_x: {
                "case": LawCase("module-assoc", arities, (i, j)).to_dict(),
                "placement": placement,
                "window": window,
                "function": format_endofn(fn),
                "operands": [
                    o if isinstance(o, str) else format_dist(o)
                    for o in (
                        "<fn>" if isinstance(op, EndoFn) else op for op in operands
                    )
                ],
                "x": list(worst_x),
            },
        )
    return tracker.report()


def check_distributivity(
    samples: int = 1000,
    seed: int = 0,
    tol: float = 1e-12,
    max_arity: int = 4,
    perturb: float = 0.0,
) -> LawReport:
    """Both module compositions distribute over pointwise sums."""
    tracker = _Tracker("distributivity", seed, tol)
    from .sexpr import format_endofn

    for t in range(samples):
        rng = rng_for(seed, t)
        n = rng.randint(1, max_arity)
        m = rng.randint(1, max_arity)
        if t % 2 == 0:
            f = random_endofn(rng, n)
            g = random_endofn(rng, n)
            d = random_exact_dist(rng, m)
            i = rng.randint(1, n)
            lhs = right_compose(add(f, g), i, d)
            rhs = add(right_compose(f, i, d), right_compose(g, i, d))
            side = "right"
        else:
            f = random_endofn(rng, m)
            g = random_endofn(rng, m)
            d = random_exact_dist(rng, n)
            i = rng.randint(1, n)
            lhs = left_compose(d, i, add(f, g))
            rhs = add(left_compose(d, i, f), left_compose(d, i, g))
            side = "left"
        worst = 0.0
        worst_x = None
        for _ in range(2):
            x = random_point(rng, lhs.arity)
            res = abs(evaluate(lhs, x) + perturb - evaluate(rhs, x))
            if res >= worst:
                worst, worst_x = res, x
        tracker.record(
            worst,
            lambda side=side, f=f, g=g, d=d, i=i, worst_x=worst_x: {
                "case": LawCase("distributivity").to_dict(),
                "side": side,
                "f": format_endofn(f),
                "g": format_endofn(g),
                "dist": format_dist(d),
                "i": i,
                "x": list(worst_x),
            },
        )
    return tracker.report()
