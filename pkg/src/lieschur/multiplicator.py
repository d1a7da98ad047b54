"""Witnesses in the Schur multiplicator of L/I^n and their rank certification.

A witness is the left-normed bracket ``[alpha . l, alpha, ..., alpha]`` with n
leaves in I.  Its image is obtained by expanding the bracket tree into the
n-fold tensor power, replacing each leaf by its Magnus coordinate, and
collapsing one tensor slot with the Hopf-module isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import CaseMismatchError, DegreeCapError, LiftMismatchError
from .freealg import NCPoly
from .freelie import Leaf, adjoint_action, left_normed_tree, tree_leaves
from .hopf import (TensorElement, antipode, counit_slots, hopf_collapse, iterated_coproduct,
                   tensor, tensor_mul, tensor_power)
from .linalg import column_keys, sparse_rank
from .magnus import check_in_ideal, leaf_image
from .quotient import QuotientPresentation, UQElement, project
from .scalar import FieldSpec, int_to_scalar

CONVENTION = ("left-normed brackets [[...[w1,w2],...],wn]; [A,B] expands to A⊗B - B⊗A; "
              "collapse h1⊗...⊗hn -> (h1⊗...⊗h(n-1))·Δ^(n-1)(S(hn)) with Δ^(m) landing in m slots")


def expand_tree(tree) -> dict:
    """Formal expansion of a bracket tree: ``{tuple of leaf positions: integer coefficient}``.

    Leaves are numbered left to right; ``[A, B]`` becomes ``A⊗B - B⊗A``.
    """
    counter = iter(range(1 << 30))

    def walk(t):
        if isinstance(t, Leaf):
            return {(next(counter),): 1}
        left = walk(t.left)
        right = walk(t.right)
        out = {}
        for k1, c1 in left.items():
            for k2, c2 in right.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
                out[k2 + k1] = out.get(k2 + k1, 0) - c1 * c2
        return {k: c for k, c in out.items() if c}

    return walk(tree)


def expand_with_values(tree, values) -> TensorElement:
    """Expand a bracket tree whose leaves are replaced by the given UQ elements."""
    values = list(values)
    leaves = tree_leaves(tree)
    if len(values) != len(leaves):
        raise ValueError(f"tree has {len(leaves)} leaves but {len(values)} values were given")
    pres = values[0].pres
    out = TensorElement.zero(pres, len(values))
    for positions, c in sorted(expand_tree(tree).items()):
        out = out + tensor(*(values[p] for p in positions)).scale(c)
    return out


def tensor_expand(pres: QuotientPresentation, tree, slots) -> TensorElement:
    """Image of a bracket tree with leaves in I under the composite slot projections.

    The leaf that lands in tensor position ``j`` of an expanded term is
    mapped by the Magnus coordinate of ``slots[j]``.
    """
    leaves = tree_leaves(tree)
    slots = tuple(pres.alphabet.index(s) if isinstance(s, str) else s for s in slots)
    if len(slots) != len(leaves):
        raise ValueError(f"tree has {len(leaves)} leaves but {len(slots)} slot generators")
    for k, leaf in enumerate(leaves):
        check_in_ideal(pres, leaf, label=f"leaf {k} ({leaf})")
    images = {}

    def image(k, x):
        if (k, x) not in images:
            images[k, x] = leaf_image(pres, leaves[k], x)
        return images[k, x]

    out = TensorElement.zero(pres, len(leaves))
    for positions, c in sorted(expand_tree(tree).items()):
        factors = [image(k, slots[j]) for j, k in enumerate(positions)]
        out = out + tensor(*factors).scale(c)
    return out


def cartan_weyl(a: UQElement, b: UQElement, n: int) -> TensorElement:
    """``sum_i (-1)^i C(n-1, i) (b^{⊗i}) ⊗ a ⊗ (b^{⊗(n-1-i)})``."""
    if n < 2:
        raise ValueError("cartan_weyl needs n >= 2")
    F = a.pres.field
    out = TensorElement.zero(a.pres, n)
    for i in range(n):
        parts = [b] * i + [a] + [b] * (n - 1 - i)
        coef = int_to_scalar((-1) ** i * comb(n - 1, i), F)
        out = out + tensor(*parts).scale(coef)
    return out


def closed_f(l: UQElement, n: int) -> TensorElement:
    """``sum_i (-1)^i C(n-1,i) (1^{⊗i} ⊗ l ⊗ 1^{⊗(n-2-i)}) + (-1)^(n-1) Δ^(n-1)(S(l))``."""
    if n < 2:
        raise ValueError("closed_f needs n >= 2")
    pres = l.pres
    F = pres.field
    one = UQElement.one(pres)
    m = n - 1
    out = TensorElement.zero(pres, m)
    for i in range(m):
        parts = [one] * i + [l] + [one] * (m - 1 - i)
        out = out + tensor(*parts).scale(int_to_scalar((-1) ** i * comb(m, i), F))
    return out + iterated_coproduct(antipode(l), m).scale(int_to_scalar((-1) ** m, F))


def eps_slot(t: TensorElement, j: int) -> UQElement:
    return counit_slots(t, j)


def eps_slot_prediction(l: UQElement, n: int, j: int) -> UQElement:
    """``(-1)^j C(n-1,j) l + (-1)^(n-1) S(l)``, the counit-slot value of closed_f."""
    F = l.pres.field
    return (l.scale(int_to_scalar((-1) ** j * comb(n - 1, j), F))
            + antipode(l).scale(int_to_scalar((-1) ** (n - 1), F)))


def classify_case(field: FieldSpec, n: int, pres: QuotientPresentation) -> str:
    """Case label I/II/III/IV from the characteristic, n and commutativity of L/I."""
    p = field.characteristic
    if n > 2 and (p == 0 or n % p):
        return "I"
    if p != 2:
        return "II"
    return "IV" if pres.is_commutative else "III"


@dataclass
class WitnessSpec:
    pres: QuotientPresentation
    alpha: NCPoly
    slots: tuple
    n: int
    family: list = dc_field(default_factory=list)  # (UQElement, NCPoly lift) pairs
    labels: list = dc_field(default_factory=list)

    def __post_init__(self):
        alphabet = self.pres.alphabet
        self.slots = tuple(alphabet.index(s) if isinstance(s, str) else s for s in self.slots)
        if self.n < 2:
            raise ValueError("witness needs n >= 2")
        if len(self.slots) != self.n:
            raise ValueError(f"expected {self.n} slot generators, got {len(self.slots)}")
        check_in_ideal(self.pres, self.alpha, label=f"alpha ({self.alpha})")
        if not leaf_image(self.pres, self.alpha, self.slots[0]):
            raise ValueError(
                f"alpha has zero Magnus coordinate at slot generator {alphabet.names[self.slots[0]]}")
        if not self.labels:
            self.labels = [str(l) for l, _ in self.family]
        for (l, lift), label in zip(self.family, self.labels):
            check_lift(self.pres, l, lift, label)

    @property
    def leaf_value(self) -> UQElement:
        """``a = p_{x1}(phi(alpha))``."""
        return leaf_image(self.pres, self.alpha, self.slots[0])

    @property
    def case(self) -> str:
        return classify_case(self.pres.field, self.n, self.pres)


def check_lift(pres, l: UQElement, lift: NCPoly, label=None):
    image = project(pres, lift)
    if image != l:
        raise LiftMismatchError(f"lift {lift} of {label or l} projects to {image}, not {l}")


def witness_tree(w: WitnessSpec, lift: NCPoly):
    return left_normed_tree([adjoint_action(w.alpha, lift)] + [w.alpha] * (w.n - 1))


def pipeline_image(w: WitnessSpec, l: UQElement, lift: NCPoly) -> TensorElement:
    """Collapsed image of ``[alpha . lift, alpha, ..., alpha]`` under the slot projections."""
    check_lift(w.pres, l, lift)
    return hopf_collapse(tensor_expand(w.pres, witness_tree(w, lift), w.slots))


def factored_closed_form(w: WitnessSpec, l: UQElement) -> TensorElement:
    """``(a^{⊗(n-1)}) · closed_f(l) · Δ^(n-1)(S(a))`` with ``a`` the alpha leaf value."""
    a = w.leaf_value
    m = w.n - 1
    return tensor_mul(tensor_mul(tensor_power(a, m), closed_f(l, w.n)),
                      iterated_coproduct(antipode(a), m))


@dataclass
class Case1Verdict:
    n: int
    nonzero: bool
    slot_values: list
    n_in_field: str
    diagnostic: str


def case1_kernel_check(l: UQElement, n: int) -> Case1Verdict:
    """closed_f(l) != 0 for nonscalar l when n > 2 and char(k) does not divide n.

    If closed_f(l) vanished, the counit applied to all but slot j would force
    ``S(l) = (-1)^(n+j) C(n-1,j) l`` for every j; slots 0 and 1 together give
    ``n l = 0``.
    """
    F = l.pres.field
    if n <= 2:
        raise CaseMismatchError(f"case mismatch: n={n} must exceed 2")
    n_scalar = int_to_scalar(n, F)
    if not n_scalar:
        raise CaseMismatchError(f"case mismatch: characteristic {F.characteristic} divides n={n}")
    if not l or any(m for m in l.terms if m == ()):
        raise CaseMismatchError(
            "case mismatch: l must be a nonzero element of the augmentation ideal")
    f = closed_f(l, n)
    slots = [str(eps_slot(f, j)) for j in range(n - 1)]
    diagnostic = (f"if f(l)=0 then slot 0 gives S(l) = {(-1) ** n}*l and slot 1 gives "
                  f"S(l) = {(-1) ** (n + 1) * (n - 1)}*l, hence {n}*l = 0 with {n} = {n_scalar} in {F}")
    return Case1Verdict(n, bool(f), slots, str(n_scalar), diagnostic)


@dataclass
class RankReport:
    family_size: int
    rows: int
    cols: int
    rank: int
    degrees: list
    case: str
    mode: str
    images: list
    verdict: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "family_size": self.family_size,
            "matrix": [self.rows, self.cols],
            "rank": self.rank,
            "degrees": self.degrees,
            "case": self.case,
            "mode": self.mode,
            "images": self.images,
            "verdict": self.verdict,
            "passed": self.passed,
        }


def family_images(w: WitnessSpec, use_pipeline: bool = True) -> list:
    out = []
    for idx, ((l, lift), label) in enumerate(zip(w.family, w.labels)):
        try:
            if use_pipeline:
                out.append(pipeline_image(w, l, lift))
            else:
                out.append(closed_f(l, w.n))
        except DegreeCapError as exc:
            raise DegreeCapError(f"family member {idx} ({label}): {exc}", exc.degree, exc.cap) from exc
    return out


def family_rank(w: WitnessSpec, use_pipeline: bool = True, images=None) -> RankReport:
    if images is None:
        images = family_images(w, use_pipeline)
    rows = [dict(t.terms) for t in images]
    rank = sparse_rank(rows, w.pres.field)
    cols = len(column_keys(rows))
    degrees = [t.degree() for t in images]
    case = w.case
    N = len(images)
    if case == "IV":
        passed = rank == 0
        verdict = (f"rank {rank}: all images vanish" if passed else f"rank {rank}: nonzero image")
        verdict += ("; in characteristic 2 with n even and commutative L/I the witnesses carry no "
                    "rank information, and non-finite generation follows from a universal-coefficient "
                    "base change over Z rather than from rank growth (not certified here)")
    else:
        passed = rank == N
        verdict = (f"rank {rank} of {N}: images linearly independent" if passed
                   else f"rank {rank} of {N}: images dependent")
    return RankReport(N, N, cols, rank, degrees, case,
                      "pipeline" if use_pipeline else "closed-form",
                      [t.to_text() for t in images], verdict, passed)


@dataclass
class DegreeVerdict:
    degrees: list
    passed: bool
    message: str


def degree_growth_check(w: WitnessSpec, use_pipeline: bool = False, images=None) -> DegreeVerdict:
    """Image degrees must increase strictly along the family."""
    if images is None:
        images = family_images(w, use_pipeline)
    degrees = [t.degree() for t in images]
    ok = all(d is not None for d in degrees) and all(
        a < b for a, b in zip(degrees, degrees[1:]))
    msg = "degrees " + ", ".join("undefined" if d is None else str(d) for d in degrees)
    msg += " strictly increasing" if ok else " NOT strictly increasing"
    return DegreeVerdict(degrees, ok, msg)
