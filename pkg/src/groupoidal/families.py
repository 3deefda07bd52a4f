"""Built-in families of finite inverse semigroups."""

from itertools import product

from .core import FiniteInverseSemigroup, semigroup_from_generators
from .errors import ValidationError
from .groups import cyclic_group, symmetric_group
from .partial_perm import PartialPerm


def inverse_symmetric(n):
    """The symmetric inverse monoid I_n of all partial bijections of n points."""
    if n < 1:
        raise ValidationError("inverse_symmetric needs n >= 1")
    gens = [PartialPerm.identity(n, range(1, n))]
    if n >= 2:
        gens.append(PartialPerm.from_dict(n, {1: 2, 2: 1, **{k: k for k in range(3, n + 1)}}))
        gens.append(PartialPerm.from_dict(n, {k: k % n + 1 for k in range(1, n + 1)}))
    else:
        gens.append(PartialPerm.identity(1))
    return semigroup_from_generators(gens, name=f"inverse_symmetric({n})")


def chain(n):
    """The n-element chain 0 < 1 < ... < n-1 under minimum."""
    if n < 1:
        raise ValidationError("chain needs n >= 1")
    table = [[min(a, b) for b in range(n)] for a in range(n)]
    return FiniteInverseSemigroup(table, list(range(n)), labels=[str(a) for a in range(n)], check=False, name=f"chain({n})")


def group_semigroup(G, name=None):
    """A group viewed as an inverse semigroup."""
    return FiniteInverseSemigroup(G.table, G.inverse, labels=[G.label(a) for a in range(G.order)], check=False, name=name)


def named_group(spec):
    """``C<k>`` for the cyclic group of order k, ``S<k>`` for the symmetric group."""
    spec = spec.strip()
    kind, arg = spec[:1].upper(), spec[1:]
    if not arg.isdigit() or kind not in "CS":
        raise ValidationError(f"unknown group {spec!r}; use C<k> or S<k>")
    k = int(arg)
    if k < 1:
        raise ValidationError("group parameter must be positive")
    return cyclic_group(k) if kind == "C" else symmetric_group(k)[0]


def brandt(G, n):
    """Brandt semigroup B(G, n): triples (i, g, j) and a zero, with
    (i, g, j)(k, h, l) = (i, gh, l) when j = k and 0 otherwise."""
    if n < 1:
        raise ValidationError("brandt needs n >= 1")
    triples = list(product(range(1, n + 1), range(G.order), range(1, n + 1)))
    pos = {t: i + 1 for i, t in enumerate(triples)}
    size = len(triples) + 1
    table = [[0] * size for _ in range(size)]
    inverse = [0] * size
    for (i, g, j), a in pos.items():
        inverse[a] = pos[(j, G.inv(g), i)]
        for (k, h, l), b in pos.items():
            if j == k:
                table[a][b] = pos[(i, G.mul(g, h), l)]
    labels = ["0"] + [f"({i},{G.label(g)},{j})" for i, g, j in triples]
    return FiniteInverseSemigroup(table, inverse, labels=labels, check=False, name=f"brandt({n})")


def adjoin_identity(S, label="1"):
    n = len(S)
    table = [list(map(int, row)) + [a] for a, row in enumerate(S.table)]
    table.append(list(range(n + 1)))
    inverse = list(map(int, S.inverse)) + [n]
    name = f"{S.name}^1" if S.name else None
    return FiniteInverseSemigroup(table, inverse, labels=list(S.labels) + [label], check=False, name=name)


def adjoin_zero(S, label="0"):
    n = len(S)
    table = [list(map(int, row)) + [n] for row in S.table]
    table.append([n] * (n + 1))
    inverse = list(map(int, S.inverse)) + [n]
    name = f"{S.name}^0" if S.name else None
    return FiniteInverseSemigroup(table, inverse, labels=list(S.labels) + [label], check=False, name=name)


def builtin(spec):
    """Parse ``NAME:ARG`` into a semigroup.

    ``inverse_symmetric:3``, ``chain:4``, ``brandt:C2,3``, ``group:S3``.
    """
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    try:
        if name == "inverse_symmetric":
            n = int(arg)
            if not 1 <= n <= 4:
                raise ValidationError("inverse_symmetric supports 1 <= n <= 4")
            return inverse_symmetric(n)
        if name == "chain":
            return chain(int(arg))
        if name == "brandt":
            gspec, _, n = arg.partition(",")
            n = int(n)
            if not 1 <= n <= 3:
                raise ValidationError("brandt supports 1 <= n <= 3")
            S = brandt(named_group(gspec), n)
            S.name = f"brandt({gspec},{n})"
            return S
        if name == "group":
            return group_semigroup(named_group(arg), name=f"group({arg})")
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"bad builtin argument in {spec!r}: {exc}") from None
    raise ValidationError(f"unknown builtin {name!r}")
