"""Compact family specs, ``NAME:params``, used by the CLI and the certificate files.

==============  ============================================
``W:s,t``       universal graph W(s, t)
``Omega:s,t``   its set-chain form
``KG:n,k``      Kneser graph
``cycle:n``     C_n
``complete:t``  K_t
``M:h,d/BASE``  d-fold generalized Mycielskian M_h of BASE
==============  ============================================

Names are case-insensitive on input; :func:`family_spec` always writes the
canonical spelling so certificates round-trip.
"""

from __future__ import annotations

from .graph import Graph, complete_graph, cycle_graph, kneser_graph
from .mycielski import iterated_mycielskian
from .universal import build_Omega, build_W

_ARITY = {"w": 2, "omega": 2, "kg": 2, "cycle": 1, "complete": 1}
_CANON = {"w": "W", "omega": "Omega", "kg": "KG", "cycle": "cycle", "complete": "complete"}


class SpecError(ValueError):
    pass


def _ints(text, count, spec):
    try:
        vals = [int(p) for p in text.split(",")] if text else []
    except ValueError:
        raise SpecError(f"non-integer parameter in {spec!r}") from None
    if len(vals) != count:
        raise SpecError(f"{spec!r} needs {count} parameter(s)")
    return vals


def parse_spec(spec: str) -> tuple:
    """``"W:2,3"`` -> ``("W", 2, 3)``; Mycielski specs give ``("M", h, d, base_tuple)``."""
    spec = spec.strip()
    name, sep, rest = spec.partition(":")
    key = name.lower()
    if not sep:
        raise SpecError(f"family spec {spec!r} has no ':'")
    if key in ("m", "mycielski"):
        params, slash, base = rest.partition("/")
        if not slash:
            raise SpecError(f"Mycielski spec {spec!r} needs a '/BASE' part")
        h, d = _ints(params, 2, spec)
        return ("M", h, d, parse_spec(base))
    if key not in _ARITY:
        raise SpecError(f"unknown family {name!r}")
    return (_CANON[key], *_ints(rest, _ARITY[key], spec))


def family_spec(fam: tuple) -> str:
    if fam[0] == "M":
        return f"M:{fam[1]},{fam[2]}/{family_spec(fam[3])}"
    return f"{fam[0]}:{','.join(str(x) for x in fam[1:])}"


def build_family(fam: tuple | str) -> Graph:
    if isinstance(fam, str):
        fam = parse_spec(fam)
    kind = fam[0]
    if kind == "W":
        return build_W(*fam[1:])
    if kind == "Omega":
        return build_Omega(*fam[1:])
    if kind == "KG":
        return kneser_graph(*fam[1:])
    if kind == "cycle":
        return cycle_graph(fam[1])
    if kind == "complete":
        return complete_graph(fam[1])
    if kind == "M":
        return iterated_mycielskian(build_family(fam[3]), fam[1], fam[2])
    raise SpecError(f"unknown family {kind!r}")
