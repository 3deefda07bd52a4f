"""JSON input and output for semigroups, actions, groupoids and reps."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

from .core import FiniteInverseSemigroup, semigroup_from_generators
from .errors import ValidationError
from .partial_perm import PartialPerm


def semigroup_to_json(S):
    return {
        "size": len(S),
        "mul": S.table.tolist(),
        "inv": S.inverse.tolist(),
        "labels": list(S.labels),
    }


def semigroup_from_json(data, name=None):
    """Accepts the table schema {size, mul, inv?, labels?}, a list of
    partial permutation strings, or {"generators": [...]}."""
    if isinstance(data, dict) and "generators" in data:
        data = data["generators"]
    if isinstance(data, list):
        if not data or not all(isinstance(g, str) for g in data):
            raise ValidationError("generator list must be non-empty strings like \"[2,0]\"")
        return semigroup_from_generators([PartialPerm.parse(g) for g in data], name=name)
    if not isinstance(data, dict):
        raise ValidationError("semigroup JSON must be an object or a generator list")
    missing = {"size", "mul"} - set(data)
    if missing:
        raise ValidationError(f"semigroup JSON lacks {sorted(missing)}")
    n = data["size"]
    mul = data["mul"]
    if not isinstance(n, int) or n <= 0:
        raise ValidationError("size must be a positive integer")
    if not isinstance(mul, list) or len(mul) != n or any(not isinstance(r, list) or len(r) != n for r in mul):
        raise ValidationError(f"mul must be a {n} x {n} array")
    if any(not isinstance(x, int) for r in mul for x in r):
        raise ValidationError("mul entries must be integers")
    inv = data.get("inv")
    if inv is not None and (not isinstance(inv, list) or len(inv) != n):
        raise ValidationError(f"inv must be a list of length {n}")
    labels = data.get("labels")
    if labels is not None and len(labels) != n:
        raise ValidationError(f"labels must be a list of length {n}")
    return FiniteInverseSemigroup(mul, inv, labels=labels, name=name or data.get("name"))


def parse_json_text(text, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}", witness=(exc.lineno, exc.colno)) from None


def load_semigroup(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return semigroup_from_json(parse_json_text(text, path), name=name)


def dumps(obj):
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def content_hash(*parts):
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode("utf-8") if isinstance(p, str) else p)
        h.update(b"\0")
    return h.hexdigest()


def atomic_write(path, data):
    """Write to a temporary file in the same directory, then rename."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
