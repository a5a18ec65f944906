"""Built-in algebras, certificate targets, and name resolution.

Built-in names: ``square`` (bound commutative square), ``bipartite-a3``
(path algebra of 1 -> 2 <- 3 -> 4), ``linear:n`` (path algebra of the
linear quiver on n vertices), ``bs:n,r,p`` (Borel-type Schur algebra,
n = 2 only), reduced algebras ``b15-2-5-p3`` / ``b18-2-6-p5`` /
``b17-2-6-p5`` used by the sign-region computations, and the
tame-concealed certificate targets ``concealed:a3sq|a5bi|d6|e7-27|e7-p1``.
A name that is none of these is treated as a path to a DSL file.
"""

import os

from .fields import QQ
from .presentation import parse_presentation
from .algebra import build_based_algebra
from .borelschur import borel_schur_presentation_n2, borel_schur_algebra


class CatalogError(ValueError):
    pass


_SQUARE = """
vertices: 1 2 3 4
arrow a: 1 -> 2
arrow b: 1 -> 3
arrow c: 2 -> 4
arrow d: 3 -> 4
rel a*c - b*d
"""

_BIPARTITE_A3 = """
vertices: 1 2 3 4
arrow a1: 1 -> 2
arrow a2: 3 -> 2
arrow a3: 3 -> 4
"""

# reduced algebra replacing S(2,5;3) on the sign region (-,-,+,+,-,+)
_B15 = """
vertices: 0 1 2 3 4 5
arrow a4: 5 -> 4
arrow z: 4 -> 2
arrow a1: 2 -> 1
arrow a0: 1 -> 0
arrow y: 5 -> 3
arrow a2: 3 -> 2
arrow b0: 3 -> 0
rel y*a2
rel a2*a1*a0
rel y*b0 - a4*z*a1*a0
"""

# reduced algebras replacing S(2,6;5) on (-,+,+,-,+,-,+) and (-,+,-,+,+,-,+)
_B18 = """
vertices: 0 1 2 3 4 5 6
arrow a5: 6 -> 5
arrow x: 5 -> 1
arrow a0: 1 -> 0
arrow a4: 5 -> 4
arrow a3: 4 -> 3
arrow a2: 3 -> 2
arrow a1: 2 -> 1
rel a4*a3*a2
"""

_B17 = """
vertices: 0 1 2 3 4 5 6
arrow a5: 6 -> 5
arrow x: 5 -> 1
arrow a0: 1 -> 0
arrow a4: 5 -> 4
arrow a3: 4 -> 3
arrow a2: 3 -> 2
arrow a1: 2 -> 1
rel a4*a3*a2*a1
"""

# tame-concealed certificate targets
_TARGET_A3SQ = """
vertices: 1 2 3 4
arrow a: 1 -> 2
arrow b: 1 -> 3
arrow c: 2 -> 4
arrow d: 3 -> 4
"""

_TARGET_A5BI = """
vertices: 0 1 2 3 4 5
arrow b0: 2 -> 0
arrow a1: 2 -> 1
arrow c0: 4 -> 0
arrow a3: 4 -> 3
arrow c1: 5 -> 1
arrow b3: 5 -> 3
"""

_TARGET_D6 = """
vertices: 0 1 2 3 4 5 6
arrow x1: 4 -> 1
arrow x2: 4 -> 3
arrow x3: 6 -> 3
arrow x4: 6 -> 5
arrow x5: 1 -> 0
arrow x6: 3 -> 0
arrow x7: 3 -> 2
arrow x8: 5 -> 2
rel x1*x5 - x2*x6
rel x3*x7 - x4*x8
"""

_TARGET_E7_27 = """
vertices: 0 1 2 3 4 5 6 7
arrow a6: 7 -> 6
arrow a5: 6 -> 5
arrow a4: 5 -> 4
arrow b2: 7 -> 2
arrow b1: 6 -> 1
arrow b0: 5 -> 0
arrow a2: 3 -> 2
arrow a1: 2 -> 1
arrow a0: 1 -> 0
rel a6*b1 - b2*a1
rel a5*b0 - b1*a0
"""

# vertices u0..u3 stand for p-2, p-1, p, p+1
_TARGET_E7_P1 = """
vertices: 0 1 2 3 u0 u1 u2 u3
arrow c3: u3 -> u2
arrow c2: u2 -> u1
arrow c1: u1 -> u0
arrow d1: u3 -> 1
arrow d0: u2 -> 0
arrow a2: 3 -> 2
arrow a1: 2 -> 1
arrow a0: 1 -> 0
rel c3*d0 - d1*a0
"""

_NAMED_DSL = {
    "square": _SQUARE,
    "bipartite-a3": _BIPARTITE_A3,
    "b15-2-5-p3": _B15,
    "b18-2-6-p5": _B18,
    "b17-2-6-p5": _B17,
}

_TARGET_DSL = {
    "a3sq": _TARGET_A3SQ,
    "a5bi": _TARGET_A5BI,
    "d6": _TARGET_D6,
    "e7-27": _TARGET_E7_27,
    "e7-p1": _TARGET_E7_P1,
}


def _linear_dsl(n):
    if n < 1:
        raise CatalogError("linear:n needs n >= 1")
    lines = ["vertices: " + " ".join(str(v) for v in range(1, n + 1))]
    for v in range(1, n):
        lines.append("arrow a%d: %d -> %d" % (v, v, v + 1))
    return "\n".join(lines)


def resolve_presentation(name):
    """A Presentation for a built-in name, a `linear:`/`bs:` form, a
    `concealed:` target, or a DSL file path."""
    if name in _NAMED_DSL:
        return parse_presentation(_NAMED_DSL[name])
    if name.startswith("concealed:"):
        return concealed_target(name.split(":", 1)[1])
    if name.startswith("linear:"):
        return parse_presentation(_linear_dsl(int(name.split(":", 1)[1])))
    if name.startswith("bs:"):
        try:
            n, r, p = (int(t) for t in name.split(":", 1)[1].split(","))
        except ValueError:
            raise CatalogError("expected bs:n,r,p with integers")
        if n != 2:
            raise CatalogError(
                "bs:%d,%d,%d: presentations are only available for n = 2 "
                "(use `report` for the n >= 3 classification)" % (n, r, p))
        return borel_schur_presentation_n2(r, p)
    if os.path.exists(name):
        with open(name) as fh:
            return parse_presentation(fh.read())
    raise CatalogError("unknown algebra %r (not a built-in name or a "
                       "readable DSL file)" % name)


def resolve_algebra(name, field=QQ):
    return build_based_algebra(resolve_presentation(name), field)


def concealed_target(name):
    if name not in _TARGET_DSL:
        raise CatalogError("unknown certificate target %r (expected one of "
                           "%s)" % (name, ", ".join(sorted(_TARGET_DSL))))
    return parse_presentation(_TARGET_DSL[name])


def certificate_spec(name, p=7):
    """Construction recipe for a named tame-concealed certificate: the
    ambient algebra, the quotient generators / truncation vertices, and
    the target presentation."""
    if name == "a5bi":
        return {
            "algebra": borel_schur_algebra(5, 2),
            "quotient": ["a0", "a2", "a4", "b1", "b2"],
            "truncate": None,
            "target": concealed_target("a5bi"),
        }
    if name == "d6":
        return {
            "algebra": borel_schur_algebra(6, 3),
            "quotient": ["a1", "a4"],
            "truncate": None,
            "target": concealed_target("d6"),
        }
    if name == "e7-27":
        return {
            "algebra": borel_schur_algebra(7, 5),
            "quotient": ["a3"],
            "truncate": None,
            "target": concealed_target("e7-27"),
        }
    if name == "e7-p1":
        if p < 7:
            raise CatalogError("the truncation certificate needs p >= 7")
        chain = "*".join("a%d" % t for t in range(p - 3, 2, -1))
        return {
            "algebra": borel_schur_algebra(p + 1, p),
            "quotient": [chain],
            "truncate": [0, 1, 2, 3, p - 2, p - 1, p, p + 1],
            "target": concealed_target("e7-p1"),
        }
    raise CatalogError("unknown certificate %r" % name)
