"""Instance configuration files.

A config is an INI-style text file with three sections::

    [instance]
    name = case2_char0
    field = Q
    generators = x, y
    n = 2
    alpha = y
    slots = y, y
    ideal_generators = y
    max_degree = 12
    family_cap = 6

    [quotient]
    kind = structure_constants
    basis = e1
    brackets =
    projection =
        x -> e1
        y -> 0

    [family]
    members =
        e1 <- x
        e1^3 <- x^3

Bracket table lines read ``[e1, e2] = e2``.  For ``kind = free_abelian`` the
section lists ``surviving = x, y`` instead of basis/brackets/projection.
Family lines pair an element of U(L/I) with its lift to U(L).
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import (ConfigError, LieSchurError, NotInIdealError, ParseError,
                     PresentationError)
from .freealg import Alphabet, parse_poly
from .freelie import parse_lie
from .magnus import check_in_ideal
from .multiplicator import WitnessSpec, check_lift
from .quotient import (DEFAULT_MAX_DEGREE, FREE_ABELIAN, STRUCTURE_CONSTANTS,
                       QuotientPresentation, lincomb, parse_uq)
from .scalar import FieldSpec


@dataclass(frozen=True)
class InstanceConfig:
    name: str
    field: str
    generators: tuple
    n: int
    alpha: str
    slots: tuple
    quotient_kind: str
    basis: tuple = ()
    brackets: tuple = ()  # (left, right, combination) name triples
    projection: tuple = ()  # (generator, combination) pairs
    surviving: tuple = ()
    family: tuple = ()  # (quotient element, lift) pairs
    ideal_generators: tuple = ()
    max_degree: int = DEFAULT_MAX_DEGREE
    family_cap: int | None = None
    json: str | None = None

    def to_text(self) -> str:
        """Canonical rendering; :func:`parse_config` maps it back to an equal config."""
        lines = ["[instance]",
                 f"name = {self.name}",
                 f"field = {self.field}",
                 f"generators = {', '.join(self.generators)}",
                 f"n = {self.n}",
                 f"alpha = {self.alpha}",
                 f"slots = {', '.join(self.slots)}"]
        if self.ideal_generators:
            lines.append(f"ideal_generators = {'; '.join(self.ideal_generators)}")
        lines.append(f"max_degree = {self.max_degree}")
        if self.family_cap is not None:
            lines.append(f"family_cap = {self.family_cap}")
        if self.json is not None:
            lines.append(f"json = {self.json}")
        lines += ["", "[quotient]", f"kind = {self.quotient_kind}"]
        if self.quotient_kind == FREE_ABELIAN:
            lines.append(f"surviving = {', '.join(self.surviving)}")
        else:
            lines.append(f"basis = {', '.join(self.basis)}")
            lines.append("brackets =")
            lines += [f"    [{a}, {b}] = {c}" for a, b, c in self.brackets]
            lines.append("projection =")
            lines += [f"    {x} -> {c}" for x, c in self.projection]
        lines += ["", "[family]", "members ="]
        lines += [f"    {l} <- {lift}" for l, lift in self.family]
        return "\n".join(lines) + "\n"


def _names(text: str) -> tuple:
    return tuple(t.strip() for t in text.split(",") if t.strip())


def _lines(text: str) -> list:
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def _normalize(text: str) -> str:
    """Collapse whitespace so expressions compare structurally after a round trip."""
    return " ".join(text.split())


def parse_config(text: str, source: str = "<config>") -> InstanceConfig:
    cp = configparser.ConfigParser(interpolation=None, comment_prefixes=("#",),
                                   inline_comment_prefixes=None)
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(str(exc), source) from None
    for section in ("instance", "quotient"):
        if not cp.has_section(section):
            raise ConfigError(f"missing section [{section}]", source)
    inst = cp["instance"]
    quo = cp["quotient"]

    def need(sec, key):
        if key not in sec:
            raise ConfigError(f"missing key {key!r}", f"{source} [{sec.name}]")
        return sec[key].strip()

    def integer(sec, key, default=None):
        if key not in sec:
            return default
        try:
            return int(sec[key])
        except ValueError:
            raise ConfigError(f"{key} must be an integer", f"{source} [{sec.name}] {key}") from None

    kind = need(quo, "kind")
    if kind not in (STRUCTURE_CONSTANTS, FREE_ABELIAN):
        raise ConfigError(f"unknown quotient kind {kind!r}", f"{source} [quotient] kind")

    brackets = []
    projection = []
    basis = ()
    surviving = ()
    if kind == FREE_ABELIAN:
        surviving = _names(need(quo, "surviving"))
    else:
        basis = _names(need(quo, "basis"))
        for k, ln in enumerate(_lines(quo.get("brackets", ""))):
            loc = f"{source} [quotient] brackets line {k + 1}"
            lhs, sep, rhs = ln.partition("=")
            lhs = lhs.strip()
            if not sep or not (lhs.startswith("[") and lhs.endswith("]")):
                raise ConfigError(f"expected '[a, b] = combination', got {ln!r}", loc)
            pair = _names(lhs[1:-1])
            if len(pair) != 2:
                raise ConfigError(f"bracket entry needs two basis names: {ln!r}", loc)
            brackets.append((pair[0], pair[1], _normalize(rhs)))
        for k, ln in enumerate(_lines(quo.get("projection", ""))):
            loc = f"{source} [quotient] projection line {k + 1}"
            x, sep, rhs = ln.partition("->")
            if not sep:
                raise ConfigError(f"expected 'x -> combination', got {ln!r}", loc)
            projection.append((x.strip(), _normalize(rhs)))

    family = []
    if cp.has_section("family"):
        for k, ln in enumerate(_lines(cp["family"].get("members", ""))):
            l, sep, lift = ln.partition("<-")
            if not sep:
                raise ConfigError(f"expected 'element <- lift', got {ln!r}",
                                  f"{source} [family] members line {k + 1}")
            family.append((_normalize(l), _normalize(lift)))

    ideal = tuple(_normalize(t) for t in inst.get("ideal_generators", "").split(";") if t.strip())
    cfg = InstanceConfig(
        name=need(inst, "name"),
        field=need(inst, "field"),
        generators=_names(need(inst, "generators")),
        n=integer(inst, "n"),
        alpha=_normalize(need(inst, "alpha")),
        slots=_names(need(inst, "slots")),
        quotient_kind=kind,
        basis=basis,
        brackets=tuple(brackets),
        projection=tuple(projection),
        surviving=surviving,
        family=tuple(family),
        ideal_generators=ideal,
        max_degree=integer(inst, "max_degree", DEFAULT_MAX_DEGREE),
        family_cap=integer(inst, "family_cap"),
        json=inst.get("json", None),
    )
    if cfg.n is None:
        raise ConfigError("missing key 'n'", f"{source} [instance]")
    return cfg


def bundled_names() -> list:
    root = resources.files("lieschur") / "instances"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".cfg"))


def load_config(name_or_path: str) -> InstanceConfig:
    """Read a config file, or a bundled instance by name (e.g. ``case2_char0``)."""
    path = Path(name_or_path)
    if path.is_file():
        return parse_config(path.read_text(), str(path))
    bundled = resources.files("lieschur") / "instances" / f"{name_or_path}.cfg"
    if bundled.is_file():
        return parse_config(bundled.read_text(), f"{name_or_path}.cfg")
    raise ConfigError(f"no config file or bundled instance named {name_or_path!r} "
                      f"(bundled: {', '.join(bundled_names())})")


@dataclass
class Instance:
    config: InstanceConfig
    field: FieldSpec
    alphabet: Alphabet
    pres: QuotientPresentation
    alpha: object
    ideal_generators: list
    witness: WitnessSpec

    def witness_for(self, n: int) -> WitnessSpec:
        """Same alpha and slot generator, arity ``n``, no family."""
        return WitnessSpec(self.pres, self.alpha, (self.witness.slots[0],) * n, n)


def build_instance(cfg: InstanceConfig, max_degree=None, max_family=None) -> Instance:
    """Resolve every cross-reference of the config; errors name their location."""
    loc = f"{cfg.name} [instance]"
    try:
        field = FieldSpec.parse(cfg.field)
    except ValueError as exc:
        raise ConfigError(str(exc), f"{loc} field") from None
    try:
        alphabet = Alphabet(cfg.generators)
    except ValueError as exc:
        raise ConfigError(str(exc), f"{loc} generators") from None
    cap = cfg.max_degree if max_degree is None else max_degree

    qloc = f"{cfg.name} [quotient]"
    try:
        if cfg.quotient_kind == FREE_ABELIAN:
            for s in cfg.surviving:
                if s not in alphabet.names:
                    raise ConfigError(f"unknown generator {s!r}", f"{qloc} surviving")
            pres = QuotientPresentation.free_abelian(field, alphabet, cfg.surviving, cap)
        else:
            basis = cfg.basis
            table = {}
            for a, b, c in cfg.brackets:
                for name in (a, b):
                    if name not in basis:
                        raise ConfigError(f"unknown basis element {name!r}", f"{qloc} brackets")
                key = (basis.index(a), basis.index(b))
                if key in table:
                    raise ConfigError(f"duplicate bracket entry [{a}, {b}]", f"{qloc} brackets")
                table[key] = lincomb(c, basis)
            proj = {}
            for x, c in cfg.projection:
                if x not in alphabet.names:
                    raise ConfigError(f"unknown generator {x!r}", f"{qloc} projection")
                proj[x] = lincomb(c, basis)
            missing = [x for x in alphabet.names if x not in proj]
            if missing:
                raise ConfigError(f"no projection given for {missing}", f"{qloc} projection")
            pres = QuotientPresentation(STRUCTURE_CONSTANTS, field, alphabet, basis, table,
                                        [proj[x] for x in alphabet.names], cap)
    except PresentationError as exc:
        raise ConfigError(f"invalid presentation: {exc}", qloc) from None
    except (ParseError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc), qloc) from None

    try:
        alpha = parse_lie(cfg.alpha, alphabet, field)
        check_in_ideal(pres, alpha, label=f"alpha = {cfg.alpha}")
    except NotInIdealError as exc:
        raise ConfigError(f"precondition failed: {exc}", f"{loc} alpha") from None
    except (LieSchurError, ValueError) as exc:
        raise ConfigError(str(exc), f"{loc} alpha") from None

    ideal = []
    for g in cfg.ideal_generators or (cfg.alpha,):
        try:
            poly = parse_lie(g, alphabet, field)
            check_in_ideal(pres, poly, label=f"ideal generator {g}")
        except (LieSchurError, ValueError) as exc:
            raise ConfigError(str(exc), f"{loc} ideal_generators") from None
        ideal.append(poly)

    for s in cfg.slots:
        if s not in alphabet.names:
            raise ConfigError(f"unknown generator {s!r}", f"{loc} slots")

    family = list(cfg.family)
    limit = max_family if max_family is not None else cfg.family_cap
    if limit is not None:
        family = family[:limit]
    members, labels = [], []
    for k, (l_text, lift_text) in enumerate(family):
        floc = f"{cfg.name} [family] member {k + 1}"
        try:
            l = parse_uq(l_text, pres)
            lift = parse_poly(lift_text, alphabet, field)
            check_lift(pres, l, lift, l_text)
        except (LieSchurError, ValueError) as exc:
            raise ConfigError(str(exc), floc) from None
        members.append((l, lift))
        labels.append(l_text)
    try:
        witness = WitnessSpec(pres, alpha, cfg.slots, cfg.n, members, labels)
    except (LieSchurError, ValueError) as exc:
        raise ConfigError(str(exc), f"{cfg.name} witness") from None
    return Instance(cfg, field, alphabet, pres, alpha, ideal, witness)

