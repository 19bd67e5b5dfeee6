"""Symbolic names for the ideals and quotients listed in the classification tables.

Grammar::

    Zero | Field | Laurent | Leavitt(n >= 2) | Mat(k >= 1, d) | MatInf(d)
         | Product(d, d, ...) | Full

``Full`` stands for the whole algebra.  Products are flattened and sorted, so
structural equality already accounts for commutativity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True, order=True)
class Descriptor:
    kind: str
    n: int = 0
    args: tuple["Descriptor", ...] = ()

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "Leavitt":
            out["n"] = self.n
        elif self.kind == "Mat":
            out["k"] = self.n
            out["of"] = self.args[0].to_json()
        elif self.kind == "MatInf":
            out["of"] = self.args[0].to_json()
        elif self.kind == "Product":
            out["factors"] = [a.to_json() for a in self.args]
        return out

    def __str__(self) -> str:
        k = self.kind
        if k == "Zero":
            return "0"
        if k == "Field":
            return "K"
        if k == "Laurent":
            return "K[x,x^-1]"
        if k == "Full":
            return "L_K(E)"
        if k == "Leavitt":
            return f"L(1,{self.n})"
        if k == "Mat":
            return f"M_{self.n}({self.args[0]})"
        if k == "MatInf":
            return f"M_inf({self.args[0]})"
        return " x ".join(str(a) for a in self.args)


ZERO = Descriptor("Zero")
FIELD = Descriptor("Field")
LAURENT = Descriptor("Laurent")
FULL = Descriptor("Full")


def leavitt(n: int) -> Descriptor:
    if n < 2:
        raise InputError(f"Leavitt(n) needs n >= 2, got {n}")
    return Descriptor("Leavitt", n)


def mat(k: int, d: Descriptor) -> Descriptor:
    if k < 1:
        raise InputError(f"Mat(k, d) needs k >= 1, got {k}")
    return Descriptor("Mat", k, (d,))


def mat_inf(d: Descriptor) -> Descriptor:
    return Descriptor("MatInf", 0, (d,))


def product(*factors: Descriptor) -> Descriptor:
    flat: list[Descriptor] = []
    for f in factors:
        flat.extend(f.args if f.kind == "Product" else (f,))
    return Descriptor("Product", 0, tuple(sorted(flat)))


def from_json(obj: dict) -> Descriptor:
    kind = obj["kind"]
    if kind == "Leavitt":
        return leavitt(obj["n"])
    if kind == "Mat":
        return mat(obj["k"], from_json(obj["of"]))
    if kind == "MatInf":
        return mat_inf(from_json(obj["of"]))
    if kind == "Product":
        return product(*(from_json(f) for f in obj["factors"]))
    if kind in ("Zero", "Field", "Laurent", "Full"):
        return Descriptor(kind)
    raise InputError(f"unknown descriptor kind {kind!r}")
