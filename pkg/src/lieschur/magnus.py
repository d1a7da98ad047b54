"""Magnus embedding of the ideal I into δU(L) ⊗_{U(L)} U(L/I)."""

from __future__ import annotations

from .errors import NotInIdealError
from .freealg import NCPoly, left_decompose
from .quotient import QuotientPresentation, UQElement, project, uq_mul


class MagnusImage:
    """``sum_x x ⊗ components[x]``, with only nonzero components stored."""

    __slots__ = ("pres", "components")

    def __init__(self, pres: QuotientPresentation, components=None):
        self.pres = pres
        self.components = {x: u for x, u in sorted((components or {}).items()) if u}

    def __eq__(self, other):
        if not isinstance(other, MagnusImage):
            return NotImplemented
        return self.components == other.components

    def __bool__(self):
        return bool(self.components)

    def right_mul(self, u: UQElement) -> MagnusImage:
        """Right action of U(L/I) on the second tensor factor."""
        return MagnusImage(self.pres, {x: uq_mul(c, u) for x, c in self.components.items()})

    def __str__(self):
        if not self.components:
            return "0"
        names = self.pres.alphabet.names
        return " + ".join(f"{names[x]} ⊗ ({c})" for x, c in self.components.items())

    __repr__ = __str__


def check_in_ideal(pres: QuotientPresentation, a: NCPoly, label=None):
    if () in a.terms:
        raise NotInIdealError(f"{label or a} has a nonzero constant term")
    image = project(pres, a)
    if image:
        raise NotInIdealError(f"{label or a} is not in I: it projects to {image}")


def magnus_phi(pres: QuotientPresentation, a: NCPoly) -> MagnusImage:
    check_in_ideal(pres, a)
    comps = left_decompose(a)
    return MagnusImage(pres, {x: project(pres, u) for x, u in comps.items()})


def magnus_project(img: MagnusImage, x) -> UQElement:
    """The coordinate ``p_x``."""
    alphabet = img.pres.alphabet
    if isinstance(x, str):
        x = alphabet.index(x)
    if not 0 <= x < len(alphabet):
        raise IndexError(f"generator index {x} out of range")
    return img.components.get(x, UQElement.zero(img.pres))


def leaf_image(pres: QuotientPresentation, a: NCPoly, x) -> UQElement:
    return magnus_project(magnus_phi(pres, a), x)
