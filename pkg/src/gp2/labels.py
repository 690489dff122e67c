"""Matching left-hand side rule labels against host labels.

An environment maps variable names to values: ``int`` or ``str`` for atom-like
variables and a tuple of atoms for list variables.  Matching never mutates the
environment it is given; a successful match returns an extended copy.
"""

from __future__ import annotations

from typing import Mapping, Optional

from . import ast
from .ast import VarType
from .graph import Atom, HostLabel

Value = object  # int | str | tuple[Atom, ...]
Environment = dict


def _fits(t: VarType, a: Atom) -> bool:
    if t is VarType.INT:
        return isinstance(a, int)
    if t is VarType.STRING:
        return isinstance(a, str)
    if t is VarType.CHAR:
        return isinstance(a, str) and len(a) == 1
    return True


def _bind(env: dict, name: str, value) -> bool:
    old = env.get(name, _MISSING)
    if old is _MISSING:
        env[name] = value
        return True
    return old == value and type(old) is type(value)


_MISSING = object()


def _is_list_var(item: ast.Expr, var_types: Mapping[str, VarType]) -> bool:
    return isinstance(item, ast.Var) and var_types.get(item.name) is VarType.LIST


def _match_atom_into(env: dict, ra: ast.Expr, ha: Atom, var_types) -> bool:
    if isinstance(ra, ast.Const):
        return type(ra.value) is type(ha) and ra.value == ha
    if isinstance(ra, ast.Var):
        t = var_types[ra.name]
        if t is VarType.LIST:
            return _bind(env, ra.name, (ha,))
        return _fits(t, ha) and _bind(env, ra.name, ha)
    if isinstance(ra, ast.Concat):
        return isinstance(ha, str) and _match_concat_into(env, ra.parts, ha, var_types)
    return False


def _match_concat_into(env: dict, parts, s: str, var_types) -> bool:
    # the single string variable (if any) absorbs whatever the other parts leave
    split = next(
        (i for i, p in enumerate(parts) if isinstance(p, ast.Var) and var_types[p.name] is VarType.STRING),
        None,
    )
    left = parts if split is None else parts[:split]
    right = () if split is None else parts[split + 1 :]

    def width(p) -> int:
        return len(p.value) if isinstance(p, ast.Const) else 1

    fixed = sum(width(p) for p in left) + sum(width(p) for p in right)
    if fixed > len(s) or (split is None and fixed != len(s)):
        return False
    pos = 0
    for p in left:
        w = width(p)
        if not _match_atom_into(env, p, s[pos : pos + w], var_types):
            return False
        pos += w
    end = len(s)
    for p in reversed(right):
        w = width(p)
        if not _match_atom_into(env, p, s[end - w : end], var_types):
            return False
        end -= w
    if split is not None:
        return _bind(env, parts[split].name, s[pos:end])
    return True


def match_atom(env: Mapping, ra: ast.Expr, ha: Atom, var_types: Mapping[str, VarType]) -> Optional[Environment]:
    out = dict(env)
    return out if _match_atom_into(out, ra, ha, var_types) else None


def label_length_bound(rl: ast.RuleLabel, var_types: Mapping[str, VarType]) -> tuple[int, bool]:
    """Minimum number of host atoms ``rl`` needs, and whether it has a list variable."""
    lists = sum(1 for i in rl.items if _is_list_var(i, var_types))
    return len(rl.items) - lists, lists > 0


def match_label(
    env: Mapping, rl: ast.RuleLabel, hl: HostLabel, var_types: Mapping[str, VarType]
) -> Optional[Environment]:
    """Extend ``env`` so that ``rl`` denotes ``hl``, or return None."""
    if rl.mark is not hl.mark:
        return None
    items, host = rl.items, hl.values
    out = dict(env)
    split = next((i for i, item in enumerate(items) if _is_list_var(item, var_types)), None)
    if split is None:
        if len(items) != len(host):
            return None
        for ra, ha in zip(items, host):
            if not _match_atom_into(out, ra, ha, var_types):
                return None
        return out
    # the list variable takes the segment left over by the atoms around it
    n_right = len(items) - split - 1
    if len(host) < len(items) - 1:
        return None
    for ra, ha in zip(items[:split], host[:split]):
        if not _match_atom_into(out, ra, ha, var_types):
            return None
    tail = len(host) - n_right
    for ra, ha in zip(items[split + 1 :], host[tail:]):
        if not _match_atom_into(out, ra, ha, var_types):
            return None
    if not _bind(out, items[split].name, tuple(host[split:tail])):
        return None
    return out
