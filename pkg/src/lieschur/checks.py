"""Seeded randomized invariant suites, shared by ``verify`` and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CriterionUnavailableError
from .freealg import NCPoly, left_decompose, reassemble
from .freelie import Bracket, Leaf, adjoint_action, bracket, dynkin_map, left_normed_tree
from .hopf import (TensorElement, antipode, coproduct, counit, counit_slots, diagonal_action,
                   hopf_collapse, iterated_coproduct, tensor_mul)
from .magnus import magnus_phi
from .multiplicator import (cartan_weyl, closed_f, eps_slot, eps_slot_prediction,
                            expand_with_values, factored_closed_form, pipeline_image,
                            tensor_expand)
from .quotient import (QuotientPresentation, UQElement, project, straighten,
                       straighten_with, uq_degree)
from .scalar import FieldSpec, Scalar, int_to_scalar


@dataclass
class CheckResult:
    name: str
    passed: bool
    samples: int
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "samples": self.samples,
                "detail": self.detail}


def _run(name, samples, body):
    """Run ``body(i)`` for each sample; the first falsy return or exception fails the check."""
    for i in range(samples):
        try:
            bad = body(i)
        except Exception as exc:  # reported, not swallowed
            return CheckResult(name, False, i + 1, f"sample {i}: {type(exc).__name__}: {exc}")
        if bad:
            return CheckResult(name, False, i + 1, f"sample {i}: {bad}")
    return CheckResult(name, True, samples)


# random generators

def random_scalar(rng: random.Random, F: FieldSpec, nonzero=False):
    while True:
        if F.p:
            c = rng.randrange(F.p)
        else:
            c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if c or not nonzero:
            return F.coerce(c)


def random_word(rng, nletters, max_len, min_len=0):
    return tuple(rng.randrange(nletters) for _ in range(rng.randint(min_len, max_len)))


def random_ncpoly(rng, alphabet, F, max_deg=3, max_terms=4, constant=True) -> NCPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_word(rng, len(alphabet), max_deg, 0 if constant else 1)
        terms[w] = random_scalar(rng, F, nonzero=True)
    return NCPoly(alphabet, F, terms)


def random_nonzero_ncpoly(rng, alphabet, F, max_deg=3, max_terms=4) -> NCPoly:
    while True:
        p = random_ncpoly(rng, alphabet, F, max_deg, max_terms)
        if p:
            return p


def random_bracket_tree(rng, alphabet, F, degree):
    """Random bracket tree of generators with exactly ``degree`` leaves."""
    if degree == 1:
        return Leaf(NCPoly.gen(alphabet, F, rng.randrange(len(alphabet))))
    k = rng.randint(1, degree - 1)
    return Bracket(random_bracket_tree(rng, alphabet, F, k),
                   random_bracket_tree(rng, alphabet, F, degree - k))


def _tree_poly(tree):
    if isinstance(tree, Leaf):
        return tree.value
    return bracket(_tree_poly(tree.left), _tree_poly(tree.right))


def random_lie(rng, alphabet, F, max_deg=3, max_terms=3, degree=None) -> NCPoly:
    """Random combination of bracket trees (homogeneous of ``degree`` if given)."""
    out = NCPoly.zero(alphabet, F)
    for _ in range(rng.randint(1, max_terms)):
        d = degree if degree is not None else rng.randint(1, max_deg)
        out = out + _tree_poly(random_bracket_tree(rng, alphabet, F, d)).scale(
            random_scalar(rng, F, nonzero=True))
    return out


def random_uq(rng, pres: QuotientPresentation, max_deg=3, max_terms=4, constant=True,
              nonzero=False) -> UQElement:
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            mono = tuple(sorted(random_word(rng, pres.dim, max_deg, 0 if constant else 1)))
            terms[mono] = random_scalar(rng, pres.field, nonzero=True)
        a = UQElement(pres, terms)
        if a or not nonzero:
            return a


def random_tensor(rng, pres, arity, max_deg=2, max_terms=3) -> TensorElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = tuple(tuple(sorted(random_word(rng, pres.dim, max_deg))) for _ in range(arity))
        terms[key] = random_scalar(rng, pres.field, nonzero=True)
    return TensorElement(pres, arity, terms)


def random_ideal_element(rng, pres, ideal_generators, max_word=2, max_terms=2) -> NCPoly:
    """Random element of I as a combination of ``g . u`` for ideal generators ``g``."""
    A, F = pres.alphabet, pres.field
    out = NCPoly.zero(A, F)
    for _ in range(rng.randint(1, max_terms)):
        g = rng.choice(ideal_generators)
        u = NCPoly.from_word(A, F, random_word(rng, len(A), max_word))
        out = out + adjoint_action(g, u).scale(random_scalar(rng, F, nonzero=True))
    return out


def random_lift(rng, pres, max_deg=3, max_terms=3):
    """Random ``(l, lift)`` with ``lift`` in U(L) and ``l = project(lift)``."""
    lift = random_ncpoly(rng, pres.alphabet, pres.field, max_deg, max_terms)
    return project(pres, lift), lift


# scalar

def scalar_suite(F: FieldSpec, rng, samples=100) -> list:
    def axioms(_):
        a, b, c = (Scalar(random_scalar(rng, F), F) for _ in range(3))
        if (a + b) + c != a + (b + c):
            return f"additive associativity {a},{b},{c}"
        if (a * b) * c != a * (b * c):
            return f"multiplicative associativity {a},{b},{c}"
        if a + b != b + a or a * b != b * a:
            return f"commutativity {a},{b}"
        if a * (b + c) != a * b + a * c:
            return f"distributivity {a},{b},{c}"
        if a and a * a.inverse() != 1:
            return f"inverse of {a}"
        return None

    def ints(_):
        char = F.characteristic
        for m in range(-100, 101):
            zero = not int_to_scalar(m, F)
            if zero != (m % char == 0 if char else m == 0):
                return f"int_to_scalar({m})"
        return None

    return [_run(f"scalar field axioms ({F})", samples, axioms),
            _run(f"int_to_scalar vanishes iff char | m ({F})", 1, ints)]


# free associative algebra

def freealg_suite(alphabet, F, rng, samples=50) -> list:
    def assoc(_):
        p, q, r = (random_ncpoly(rng, alphabet, F, 4, 5) for _ in range(3))
        return None if (p * q) * r == p * (q * r) else f"({p})({q})({r})"

    def degree_laws(_):
        p, q = (random_nonzero_ncpoly(rng, alphabet, F, 4, 5) for _ in range(2))
        if (p * q).degree() != p.degree() + q.degree():
            return f"deg of ({p})({q})"
        s = p + q
        if s and s.degree() > max(p.degree(), q.degree()):
            return f"deg of ({p})+({q})"
        if p.degree() != q.degree() and s.degree() != max(p.degree(), q.degree()):
            return f"strict deg of ({p})+({q})"
        return None

    def roundtrip(_):
        p = random_ncpoly(rng, alphabet, F, 4, 5, constant=False)
        return None if reassemble(alphabet, F, left_decompose(p)) == p else f"{p}"

    return [_run("ncp_mul associativity", samples, assoc),
            _run("degree laws", samples, degree_laws),
            _run("left_decompose round-trip", samples, roundtrip)]


# free Lie algebra

def freelie_suite(alphabet, F, rng, samples=50) -> list:
    def jacobi(_):
        a, b, c = (random_lie(rng, alphabet, F, 3, 2) for _ in range(3))
        total = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)
        return None if not total else f"{a}; {b}; {c}"

    def antisym(_):
        a, b = (random_lie(rng, alphabet, F, 3, 2) for _ in range(2))
        return None if bracket(a, b) == -bracket(b, a) else f"{a}; {b}"

    def dynkin(_):
        m = rng.randint(1, 6)
        p = _tree_poly(random_bracket_tree(rng, alphabet, F, m))
        return None if dynkin_map(p) == p.scale(m) else f"degree {m}: {p}"

    def action_law(_):
        a = random_lie(rng, alphabet, F, 2, 2)
        u = NCPoly.from_word(alphabet, F, random_word(rng, len(alphabet), 3))
        v = NCPoly.from_word(alphabet, F, random_word(rng, len(alphabet), 3))
        lhs = adjoint_action(a, u * v)
        rhs = adjoint_action(adjoint_action(a, u), v)
        return None if lhs == rhs else f"a={a}, u={u}, v={v}"

    out = [_run("Jacobi identity", samples, jacobi),
           _run("antisymmetry", samples, antisym)]
    if F.characteristic == 0:
        out.append(_run("Dynkin D(p) = m p", samples, dynkin))
    out.append(_run("adjoint action is a module-algebra action", samples, action_law))
    return out


# quotient

def quotient_suite(pres: QuotientPresentation, rng, samples=50) -> list:
    F = pres.field

    def confluence(_):
        word = random_word(rng, pres.dim, 6)
        left = straighten_with(pres, word, "leftmost")
        right = straighten_with(pres, word, "rightmost")
        return None if left == right and left == straighten(pres, word) else f"word {word}"

    def assoc(_):
        a, b, c = (random_uq(rng, pres, 3, 3) for _ in range(3))
        return None if (a * b) * c == a * (b * c) else f"{a}; {b}; {c}"

    def proj_mult(_):
        p = random_ncpoly(rng, pres.alphabet, F, 3, 3)
        q = random_ncpoly(rng, pres.alphabet, F, 3, 3)
        return None if project(pres, p * q) == project(pres, p) * project(pres, q) else f"{p}; {q}"

    def degree_law(_):
        a = random_uq(rng, pres, 3, 3, nonzero=True)
        b = random_uq(rng, pres, 3, 3, nonzero=True)
        return None if uq_degree(a * b) == uq_degree(a) + uq_degree(b) else f"{a}; {b}"

    return [_run("straightening confluence", samples, confluence),
            _run("uq_mul associativity", samples, assoc),
            _run("project is multiplicative", samples, proj_mult),
            _run("degree law in U(L/I)", samples, degree_law)]


# Hopf structure

def _flip_apply(t: TensorElement, slot, fn) -> TensorElement:
    """Apply a linear map UQ -> tensor to one slot of ``t``, splicing the result in."""
    pres = t.pres
    F = pres.field
    out = None
    for key, c in t.terms.items():
        image = fn(UQElement._raw(pres, {key[slot]: F.one}))
        before = key[:slot]
        after = key[slot + 1:]
        terms = {before + k + after: F.mul(v, c) for k, v in image.terms.items()}
        piece = TensorElement._raw(pres, t.arity - 1 + image.arity, terms)
        out = piece if out is None else out + piece
    return out if out is not None else TensorElement.zero(pres, t.arity + 1)


def _mult(t: TensorElement, left_fn=None, right_fn=None) -> UQElement:
    """m ∘ (left_fn ⊗ right_fn) on an arity-2 tensor."""
    pres = t.pres
    F = pres.field
    out = UQElement.zero(pres)
    for (m1, m2), c in t.terms.items():
        a = UQElement._raw(pres, {m1: F.one})
        b = UQElement._raw(pres, {m2: F.one})
        if left_fn:
            a = left_fn(a)
        if right_fn:
            b = right_fn(b)
        out = out + (a * b).scale(c)
    return out


def hopf_suite(pres: QuotientPresentation, rng, samples=200, max_deg=4) -> list:
    F = pres.field

    def elem():
        return random_uq(rng, pres, max_deg, 3)

    def coassoc(_):
        a = elem()
        d = coproduct(a)
        lhs = _flip_apply(d, 0, coproduct)
        rhs = _flip_apply(d, 1, coproduct)
        return None if lhs == rhs == iterated_coproduct(a, 3) else f"{a}"

    def counit_laws(_):
        a = elem()
        d = coproduct(a)
        left = counit_slots(d, 1)
        right = counit_slots(d, 0)
        return None if left == a and right == a else f"{a}"

    def antipode_law(_):
        a = elem()
        d = coproduct(a)
        unit = UQElement.one(pres, counit(a).value)
        if _mult(d, left_fn=antipode) != unit:
            return f"(S⊗id) on {a}"
        if _mult(d, right_fn=antipode) != unit:
            return f"(id⊗S) on {a}"
        return None

    def homs(_):
        a, b = elem(), elem()
        if coproduct(a * b) != tensor_mul(coproduct(a), coproduct(b)):
            return f"Δ(ab) for {a}; {b}"
        if antipode(a * b) != antipode(b) * antipode(a):
            return f"S(ab) for {a}; {b}"
        return None

    return [_run(f"coassociativity ({F})", samples, coassoc),
            _run(f"counit laws ({F})", samples, counit_laws),
            _run(f"antipode law ({F})", samples, antipode_law),
            _run(f"Δ multiplicative, S anti-multiplicative ({F})", samples, homs)]


def collapse_kill_suite(pres, rng, samples=100) -> list:
    def kill(i):
        arity = 2 + i % 3
        t = random_tensor(rng, pres, arity, 2, 3)
        u = random_uq(rng, pres, 2, 3)
        lhs = hopf_collapse(diagonal_action(t, u))
        rhs = hopf_collapse(t).scale(counit(u))
        return None if lhs == rhs else f"t={t}, u={u}"

    return [_run(f"collapse kills the augmentation action ({pres.field})", samples, kill)]


# Magnus embedding

def magnus_suite(pres, ideal_generators, rng, samples=100) -> list:
    A, F = pres.alphabet, pres.field

    def equivariance(_):
        a = random_ideal_element(rng, pres, ideal_generators)
        u = random_ncpoly(rng, A, F, 3, 2)
        lhs = magnus_phi(pres, adjoint_action(a, u))
        rhs = magnus_phi(pres, a).right_mul(project(pres, u))
        return None if lhs == rhs else f"a={a}, u={u}"

    def vanishing(_):
        a = random_ideal_element(rng, pres, ideal_generators)
        b = random_ideal_element(rng, pres, ideal_generators)
        img = magnus_phi(pres, bracket(a, b))
        return None if not img else f"phi([{a}, {b}]) = {img}"

    return [_run("Magnus equivariance", samples, equivariance),
            _run("Magnus vanishes on I'", samples, vanishing)]


# multiplicator

def symbolic_leaves(F: FieldSpec):
    """Two algebraically independent leaves in the free abelian quotient k[a, b]."""
    from .freealg import Alphabet
    pres = QuotientPresentation.free_abelian(F, Alphabet(("a", "b")), ("a", "b"), max_degree=64)
    return UQElement.basis_element(pres, "a"), UQElement.basis_element(pres, "b")


def cartan_weyl_suite(n_max=5, F: FieldSpec = FieldSpec(0)) -> list:
    a, b = symbolic_leaves(F)
    results = []
    for n in range(2, n_max + 1):
        tree = left_normed_tree(["A"] + ["B"] * (n - 1))
        lhs = expand_with_values(tree, [a] + [b] * (n - 1))
        rhs = cartan_weyl(a, b, n)
        ok = lhs == rhs
        results.append(CheckResult(f"Cartan-Weyl n={n}", ok, 1,
                                   "" if ok else f"expansion {lhs} vs formula {rhs}"))
    return results


def cartan_weyl_coefficients(n: int, F: FieldSpec = FieldSpec(0)) -> list:
    """Coefficients of b^i ⊗ a ⊗ b^(n-1-i) in the expanded left-normed bracket."""
    a, b = symbolic_leaves(F)
    t = expand_with_values(left_normed_tree(["A"] + ["B"] * (n - 1)), [a] + [b] * (n - 1))
    out = []
    ma, mb = (0,), (1,)
    for i in range(n):
        key = (mb,) * i + (ma,) + (mb,) * (n - 1 - i)
        c = t.terms.get(key, F.zero)
        out.append(int(c) if not F.p else c)
    return out


def pipeline_consistency_suite(w_factory, pres, rng, ns=(2, 3, 4), samples=5, max_deg=3) -> list:
    """pipeline_image == (a^{⊗(n-1)}) closed_f(l) Δ^(n-1)(S(a)) for random lifts.

    ``w_factory(n)`` returns a WitnessSpec of arity ``n`` for the instance.
    """
    out = []
    for n in ns:
        w = w_factory(n)

        def body(_, w=w):
            l, lift = random_lift(rng, pres, max_deg, 3)
            lhs = pipeline_image(w, l, lift)
            rhs = factored_closed_form(w, l)
            return None if lhs == rhs else f"n={w.n}, lift={lift}"

        out.append(_run(f"pipeline = closed form (n={n})", samples, body))
    return out


def eps_slot_suite(pres, rng, ns=range(2, 6), samples=20, max_deg=3) -> list:
    """Counit-slot identity for l in the augmentation ideal (it uses ε(l) = 0)."""
    out = []
    for n in ns:
        def body(_, n=n):
            l = random_uq(rng, pres, max_deg, 3, constant=False)
            f = closed_f(l, n)
            for j in range(n - 1):
                if eps_slot(f, j) != eps_slot_prediction(l, n, j):
                    return f"n={n}, j={j}, l={l}"
            return None

        out.append(_run(f"eps-slot identity (n={n})", samples, body))
    return out


def closed_f_suite(pres, rng, ns=(2, 3, 4, 5), samples=20) -> list:
    F = pres.field

    def unit(_):
        for n in ns:
            c = random_scalar(rng, F)
            if closed_f(UQElement.one(pres, c), n):
                return f"closed_f({c}) != 0 for n={n}"
        return None

    def linear(_):
        n = rng.choice(ns)
        l1, l2 = random_uq(rng, pres, 3, 3), random_uq(rng, pres, 3, 3)
        c = random_scalar(rng, F)
        if closed_f(l1 + l2.scale(c), n) != closed_f(l1, n) + closed_f(l2, n).scale(c):
            return f"n={n}, l1={l1}, l2={l2}, c={c}"
        return None

    return [_run("closed_f(scalar) = 0", samples, unit),
            _run("closed_f is linear", samples, linear)]


def case1_suite(pres, rng, ns=(3, 4, 5), samples=200, max_deg=4) -> list:
    """closed_f(l) != 0 for nonscalar l whenever n > 2 and char(k) does not divide n."""
    F = pres.field
    out = []
    for n in ns:
        if not int_to_scalar(n, F):
            continue

        def body(_, n=n):
            l = random_uq(rng, pres, max_deg, 4, constant=True, nonzero=True)
            if set(l.terms) == {()}:
                l = l + UQElement.basis_element(pres, 0)
            return None if closed_f(l, n) else f"closed_f({l}) = 0 for n={n}"

        out.append(_run(f"Case I kernel is k·1 (n={n})", samples, body))
    return out


def remark_suite(pres, ideal_generators, slots, rng, samples=10) -> list:
    """Collapsed images of brackets of elements of I vanish (char 2, commutative L/I)."""
    def body(_):
        a = b = None
        while not (a and b):
            a = random_ideal_element(rng, pres, ideal_generators)
            b = random_ideal_element(rng, pres, ideal_generators)
        tree = Bracket(Leaf(a), Leaf(b))
        img = hopf_collapse(tensor_expand(pres, tree, slots))
        return None if not img else f"[{a}, {b}] -> {img}"

    return [_run("final remark: bracket images vanish", samples, body)]


def dynkin_refusal(alphabet, F) -> CheckResult:
    """In characteristic p the Dynkin test must refuse degrees >= p."""
    if not F.characteristic:
        return CheckResult("Dynkin refusal in positive characteristic", True, 0, "n/a over Q")
    from .freelie import is_lie_element
    word = (0,) * F.characteristic
    try:
        is_lie_element(NCPoly.from_word(alphabet, F, word))
    except CriterionUnavailableError:
        return CheckResult("Dynkin refusal in positive characteristic", True, 1)
    return CheckResult("Dynkin refusal in positive characteristic", False, 1, "no refusal")

