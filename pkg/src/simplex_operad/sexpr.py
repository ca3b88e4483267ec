"""S-expression serialization for function trees.

Grammar:

    E := (const C) | (proj K) | (repr P1 ... Pn) | (sum E E)
       | (lcomp P1 ... Pn @I E) | (rcomp E @I Q1 ... Qm) | (ecomp E @I E)

Scalars are fractions ("1/2"), integers, or decimals; slot markers are
"@i".  The grammar does not spell out arities for (const ...) and
(proj k), so those nodes are flexible: parsing resolves them from an
optional target arity, from a rigid sibling, or, failing both, to their
minimal arity.  Pass `arity=` to pin the result when it matters.

Templates are the same grammar with placeholders: `$pK` for the K-th
probability of the distribution a derivation is applied to, and `$H` for
its entropy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .endo import Const, EndoComp, EndoFn, LeftComp, Proj, Repr, RightComp, Sum
from .scalars import format_scalar, is_exact, parse_scalar
from .simplex import Dist, entropy


class SExprError(ValueError):
    """Malformed s-expression or unsatisfiable arity constraints."""


def format_endofn(f: EndoFn) -> str:
    if isinstance(f, Const):
        return f"(const {format_scalar(f.value)})"
    if isinstance(f, Proj):
        return f"(proj {f.index})"
    if isinstance(f, Repr):
        return f"(repr {_probs(f.dist)})"
    if isinstance(f, Sum):
        return f"(sum {format_endofn(f.left)} {format_endofn(f.right)})"
    if isinstance(f, LeftComp):
        return f"(lcomp {_probs(f.dist)} @{f.index} {format_endofn(f.inner)})"
    if isinstance(f, RightComp):
        return f"(rcomp {format_endofn(f.inner)} @{f.index} {_probs(f.dist)})"
    if isinstance(f, EndoComp):
        return f"(ecomp {format_endofn(f.outer)} @{f.index} {format_endofn(f.inner)})"
    raise TypeError(f"not a function node: {f!r}")


def _probs(d: Dist) -> str:
    return " ".join(format_scalar(p) for p in d.probs)


def parse_endofn(text: str, arity: int | None = None) -> EndoFn:
    """Parse an s-expression, optionally pinning the overall arity."""
    form, rest = _read(_tokenize(text))
    if rest:
        raise SExprError(f"trailing input: {' '.join(rest[:4])!r}")
    if arity is not None and arity < 1:
        raise SExprError(f"bad target arity {arity}")
    return _build(form, arity)


def _tokenize(text: str) -> list[str]:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    if not tokens:
        raise SExprError("empty expression")
    return tokens


def _read(tokens: list[str]):
    if tokens[0] != "(":
        raise SExprError(f"expected '(', got {tokens[0]!r}")
    out: list = []
    rest = tokens[1:]
    while rest:
        tok = rest[0]
        if tok == ")":
            return out, rest[1:]
        if tok == "(":
            sub, rest = _read(rest)
            out.append(sub)
        else:
            out.append(tok)
            rest = rest[1:]
    raise SExprError("unbalanced parentheses")


def _slot(token) -> int:
    if not isinstance(token, str) or not token.startswith("@"):
        raise SExprError(f"expected a slot marker '@i', got {token!r}")
    try:
        return int(token[1:])
    except ValueError:
        raise SExprError(f"bad slot marker {token!r}") from None


def _scalar(token):
    if not isinstance(token, str):
        raise SExprError(f"expected a scalar, got a subexpression")
    try:
        return parse_scalar(token)
    except ValueError as exc:
        raise SExprError(str(exc)) from None


def _split_at_slot(items: list) -> tuple[list, int, list]:
    for idx, item in enumerate(items):
        if isinstance(item, str) and item.startswith("@"):
            return items[:idx], _slot(item), items[idx + 1 :]
    raise SExprError("missing slot marker '@i'")


def _dist(tokens: list) -> Dist:
    if not tokens:
        raise SExprError("missing distribution entries")
    return Dist(tuple(_scalar(t) for t in tokens))


def _head(form) -> str:
    if not isinstance(form, list) or not form or not isinstance(form[0], str):
        raise SExprError(f"expected a (head ...) form, got {form!r}")
    return form[0]


def _rigid(form) -> int | None:
    """The arity fully determined by the form itself, if any."""
    head = _head(form)
    if head in ("const", "proj"):
        return None
    if head == "repr":
        return len(form) - 1
    if head == "sum":
        a, b = _rigid(form[1]), _rigid(form[2])
        if a is not None and b is not None and a != b:
            raise SExprError(f"sum of arity {a} and arity {b}")
        return a if a is not None else b
    if head == "lcomp":
        probs, _, rest = _split_at_slot(form[1:])
        inner = _rigid(rest[0])
        return None if inner is None else len(probs) + inner - 1
    if head == "rcomp":
        inner = _rigid(form[1])
        _, _, probs = _split_at_slot(form[2:])
        return None if inner is None else inner + len(probs) - 1
    if head == "ecomp":
        a, b = _rigid(form[1]), _rigid(form[3])
        return a + b - 1 if a is not None and b is not None else None
    raise SExprError(f"unknown form {head!r}")


def _min_arity(form) -> int:
    head = _head(form)
    if head == "const":
        return 1
    if head == "proj":
        return int(form[1])
    if head == "repr":
        return len(form) - 1
    if head == "sum":
        return max(_min_arity(form[1]), _min_arity(form[2]))
    if head == "lcomp":
        probs, _, rest = _split_at_slot(form[1:])
        return len(probs) + _min_arity(rest[0]) - 1
    if head == "rcomp":
        _, i, probs = _split_at_slot(form[2:])
        return max(_min_arity(form[1]), i) + len(probs) - 1
    if head == "ecomp":
        i = _slot(form[2])
        return max(_min_arity(form[1]), i) + _min_arity(form[3]) - 1
    raise SExprError(f"unknown form {head!r}")


def _check_shape(form, head: str, length: int | None = None):
    if length is not None and len(form) != length:
        raise SExprError(f"({head} ...) takes {length - 1} arguments")


def _build(form, target: int | None) -> EndoFn:
    head = _head(form)
    try:
        if head == "const":
            _check_shape(form, head, 2)
            return Const(float(_scalar(form[1])), target or 1)
        if head == "proj":
            _check_shape(form, head, 2)
            k = int(form[1])
            if target is not None and k > target:
                raise SExprError(f"(proj {k}) cannot have arity {target}")
            return Proj(k, target or k)
        if head == "repr":
            d = _dist(form[1:])
            if target is not None and target != d.arity:
                raise SExprError(f"(repr ...) has arity {d.arity}, not {target}")
            return Repr(d)
        if head == "sum":
            _check_shape(form, head, 3)
            n = target or _rigid(form) or _min_arity(form)
            return Sum(_build(form[1], n), _build(form[2], n))
        if head == "lcomp":
            probs, i, rest = _split_at_slot(form[1:])
            if len(rest) != 1:
                raise SExprError("(lcomp ...) takes one inner expression")
            p = _dist(probs)
            inner_target = None
            if target is not None:
                inner_target = target - p.arity + 1
                if inner_target < 1:
                    raise SExprError(f"(lcomp ...) cannot have arity {target}")
            return LeftComp(p, i, _build(rest[0], inner_target))
        if head == "rcomp":
            _check_shape(form, head, None)
            inner_form = form[1]
            _, i, probs = _split_at_slot(form[2:])
            q = _dist(probs)
            if target is not None:
                n = target - q.arity + 1
                if n < 1:
                    raise SExprError(f"(rcomp ...) cannot have arity {target}")
            else:
                n = _rigid(inner_form) or max(_min_arity(inner_form), i)
            return RightComp(_build(inner_form, n), i, q)
        if head == "ecomp":
            _check_shape(form, head, 4)
            a_form, i, b_form = form[1], _slot(form[2]), form[3]
            ra, rb = _rigid(a_form), _rigid(b_form)
            if target is not None:
                if ra is not None:
                    na, nb = ra, target - ra + 1
                elif rb is not None:
                    na, nb = target - rb + 1, rb
                else:
                    # both flexible: the inner one takes its minimum
                    nb = _min_arity(b_form)
                    na = target - nb + 1
                if na < 1 or nb < 1:
                    raise SExprError(f"(ecomp ...) cannot have arity {target}")
            else:
                na = ra or max(_min_arity(a_form), i)
                nb = rb or _min_arity(b_form)
            return EndoComp(_build(a_form, na), i, _build(b_form, nb))
    except (ValueError, IndexError) as exc:
        if isinstance(exc, SExprError):
            raise
        raise SExprError(str(exc)) from None
    raise SExprError(f"unknown form {head!r}")


_PLACEHOLDER = re.compile(r"\$(H|p(\d+))")


@dataclass(frozen=True)
class Template:
    """An s-expression with `$pK` / `$H` placeholders, instantiated per
    distribution to produce the function a derivation assigns to it."""

    source: str

    def instantiate(self, p: Dist) -> EndoFn:
        def sub(match: re.Match) -> str:
            if match.group(1) == "H":
                return repr(entropy(p))
            k = int(match.group(2))
            if not 1 <= k <= p.arity:
                raise SExprError(
                    f"placeholder $p{k} out of range for arity {p.arity}"
                )
            return format_scalar(p.prob(k))

        return parse_endofn(_PLACEHOLDER.sub(sub, self.source), arity=p.arity)
