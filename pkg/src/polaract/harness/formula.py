"""Integer expressions over named parameters, used for table expectations.

Allowed: integer literals, parameter names, + - *, // and % (floor
division and remainder), unary minus, parentheses, ``floor(a / b)`` and
``min(...)``/``max(...)``. Constraints additionally allow comparisons and
``and``/``or``/``not``.
"""
from __future__ import annotations

import ast
import operator
from fractions import Fraction

_CMPOPS = {ast.Lt: operator.lt, ast.LtE: operator.le, ast.Gt: operator.gt, ast.GtE: operator.ge,
           ast.Eq: operator.eq, ast.NotEq: operator.ne}
_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.FloorDiv: operator.floordiv, ast.Mod: operator.mod, ast.Div: lambda a, b: Fraction(a) / Fraction(b)}


class FormulaError(ValueError):
    pass


def _eval(node, env):
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise FormulaError(f"unknown parameter {node.id!r}")
        return env[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, env)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env)
        for op, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env)
            if type(op) not in _CMPOPS or not _CMPOPS[type(op)](left, right):
                if type(op) not in _CMPOPS:
                    raise FormulaError("unsupported comparison")
                return False
            left = right
        return True
    if isinstance(node, ast.BoolOp):
        vals = [_eval(v, env) for v in node.values]
        return all(vals) if isinstance(node.op, ast.And) else any(vals)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
        return not _eval(node.operand, env)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        args = [_eval(a, env) for a in node.args]
        if node.func.id == "floor" and len(args) == 1:
            return Fraction(args[0]).__floor__()
        if node.func.id in ("min", "max") and args:
            return (min if node.func.id == "min" else max)(args)
    raise FormulaError(f"unsupported syntax: {ast.dump(node)}")


def _parse(expr: str):
    try:
        return ast.parse(str(expr), mode="eval")
    except SyntaxError as exc:
        raise FormulaError(f"cannot parse {expr!r}") from exc


def holds(expr: str, **params: int) -> bool:
    """Truth value of a constraint such as ``"k <= n // 2"``."""
    return bool(_eval(_parse(expr), params))


def evaluate(expr: str | int, **params: int) -> int:
    """Evaluate ``expr`` with the given integer parameters; the result must be an integer."""
    if isinstance(expr, int):
        return expr
    value = _eval(_parse(expr), params)
    if isinstance(value, bool):
        raise FormulaError(f"{expr!r} is a constraint, not an integer expression")
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise FormulaError(f"{expr!r} is not an integer at {params}")
        value = value.numerator
    return int(value)
