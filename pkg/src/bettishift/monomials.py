"""Monomials, monomial ideals, parsing, canonical printing, polarization.

A monomial is an exponent tuple over a fixed variable list; a monomial
ideal stores its minimal generating set in a frozen order (the Taylor
differential signs depend on that order, the Betti numbers do not).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InputError, ParseError

MAX_EXPONENT = 2**31 - 1


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) < 1:
            raise InputError("monomial needs at least one ambient variable")
        for e in self.exponents:
            if e < 0:
                raise InputError("negative exponent")
            if e > MAX_EXPONENT:
                raise InputError("exponent overflow (exceeds 32-bit range)")

    @property
    def n(self):
        return len(self.exponents)

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def is_constant(self):
        return all(e == 0 for e in self.exponents)

    @property
    def is_squarefree(self):
        return all(e <= 1 for e in self.exponents)

    def support(self):
        """Bitmask of variables with positive exponent."""
        mask = 0
        for i, e in enumerate(self.exponents):
            if e:
                mask |= 1 << i
        return mask

    def divides(self, other: "Monomial") -> bool:
        _check_same_ambient(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def ratio_to(self, other: "Monomial") -> "Monomial":
        """self / other, requiring other | self."""
        if not other.divides(self):
            raise InputError("ratio is not a monomial")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def render(self, var_names) -> str:
        if self.is_constant:
            return "1"
        parts = []
        for name, e in zip(var_names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


def _check_same_ambient(*ms):
    n = ms[0].n
    for m in ms[1:]:
        if m.n != n:
            raise InputError("monomials live in different ambient rings")


def divides(d: Monomial, m: Monomial) -> bool:
    return d.divides(m)


def lcm_of(ms, n=None) -> Monomial:
    """Componentwise max; the empty collection gives the constant monomial."""
    ms = list(ms)
    if not ms:
        if n is None:
            raise InputError("lcm of an empty set needs an explicit ambient n")
        return Monomial((0,) * n)
    _check_same_ambient(*ms)
    return Monomial(tuple(max(col) for col in zip(*(m.exponents for m in ms))))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    var_names: tuple[str, ...]
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.var_names) != self.n:
            raise InputError("variable list does not match ambient n")
        for g in self.gens:
            if g.n != self.n:
                raise InputError("generator in wrong ambient ring")
        for i, g in enumerate(self.gens):
            for j, h in enumerate(self.gens):
                if i != j and g.divides(h):
                    raise InputError(
                        f"generating set not minimal: {g.render(self.var_names)} "
                        f"divides {h.render(self.var_names)}"
                    )

    @property
    def r(self):
        return len(self.gens)

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return any(g.is_constant for g in self.gens)

    @property
    def is_proper_nonzero(self):
        return bool(self.gens) and not self.is_unit

    @property
    def is_squarefree(self):
        return all(g.is_squarefree for g in self.gens)

    def max_generator_degree(self):
        return max(g.degree for g in self.gens)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        text = "; ".join(g.render(self.var_names) for g in self.gens)
        appearance = []
        for g in self.gens:
            for i, e in enumerate(g.exponents):
                if e and self.var_names[i] not in appearance:
                    appearance.append(self.var_names[i])
        if tuple(appearance) != self.var_names:
            # first-appearance order would not reconstruct the stored ring;
            # pin it with an explicit declaration so parse(render(I)) == I
            return "vars " + ",".join(self.var_names) + "; " + text
        return text


def minimalize(ms, n, var_names) -> MonomialIdeal:
    """Drop duplicates and anything divisible by another element; keep order."""
    survivors: list[Monomial] = []
    for i, m in enumerate(ms):
        redundant = False
        for j, other in enumerate(ms):
            if i == j:
                continue
            if other.divides(m) and not (m.divides(other) and j > i):
                # strict divisor elsewhere, or an equal copy earlier in the list
                redundant = True
                break
        if not redundant:
            survivors.append(m)
    return MonomialIdeal(n, tuple(var_names), tuple(survivors))


_TOKEN_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|[;*^,])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        chunk = text[pos:]
        if chunk.strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse `mono (';' mono)*` with `mono ::= factor ('*' factor)*` and
    `factor ::= var ('^' posint)?`; optional leading `vars a,b,c;`.

    Variables are ordered by declaration, or first appearance otherwise.
    The result is minimalized; surviving generators keep textual order.
    """
    return parse_ideal_verbose(text)[0]


def parse_ideal_verbose(text: str) -> tuple[MonomialIdeal, int]:
    """As parse_ideal, also reporting how many non-minimal generators the
    minimalization dropped."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty generator list", 0)

    idx = 0

    def peek():
        return tokens[idx][0] if idx < len(tokens) else None

    def pos():
        return tokens[idx][1] if idx < len(tokens) else len(text)

    declared = None
    if peek() == "vars":
        idx += 1
        declared = []
        while True:
            name = peek()
            if name is None or not name[0].isalpha() and name[0] != "_":
                raise ParseError("expected variable name in vars declaration", pos())
            if name in declared:
                raise ParseError(f"duplicate variable {name!r}", pos())
            declared.append(name)
            idx += 1
            if peek() == ",":
                idx += 1
                continue
            if peek() == ";":
                idx += 1
                break
            raise ParseError("expected ',' or ';' in vars declaration", pos())

    var_order: list[str] = list(declared) if declared else []
    var_index = {v: i for i, v in enumerate(var_order)}
    raw_gens: list[dict[str, int]] = []

    def parse_factor(current):
        nonlocal idx
        name = peek()
        if name is None or name[0].isdigit() or name in ";*^,":
            raise ParseError("expected a variable", pos())
        if declared is not None and name not in var_index:
            raise ParseError(f"undeclared variable {name!r}", pos())
        if name not in var_index:
            var_index[name] = len(var_order)
            var_order.append(name)
        idx += 1
        exp = 1
        if peek() == "^":
            idx += 1
            tok = peek()
            if tok is None or not tok.isdigit():
                raise ParseError("expected an integer exponent after '^'", pos())
            exp = int(tok)
            if exp == 0:
                raise ParseError("zero exponent is not allowed", pos())
            if exp > MAX_EXPONENT:
                raise ParseError("exponent overflow (exceeds 32-bit range)", pos())
            idx += 1
        current[name] = current.get(name, 0) + exp
        if current[name] > MAX_EXPONENT:
            raise ParseError("exponent overflow (exceeds 32-bit range)", pos())

    while True:
        current: dict[str, int] = {}
        parse_factor(current)
        while peek() == "*":
            idx += 1
            parse_factor(current)
        raw_gens.append(current)
        if peek() == ";":
            idx += 1
            if peek() is None:
                break  # trailing semicolon tolerated
            continue
        if peek() is None:
            break
        raise ParseError(f"unexpected token {peek()!r}", pos())

    if not raw_gens:
        raise ParseError("empty generator list", 0)

    n = len(var_order)
    monos = []
    for g in raw_gens:
        exps = [0] * n
        for name, e in g.items():
            exps[var_index[name]] = e
        monos.append(Monomial(tuple(exps)))
    ideal = minimalize(monos, n, var_order)
    return ideal, len(monos) - ideal.r


@dataclass(frozen=True)
class DegreeMap:
    """Records how polarization split each original variable.

    blocks[i] is the list of new-variable indices that variable i expanded
    into (in copy order); old_of[k] is the original index of new variable k.
    """

    blocks: tuple[tuple[int, ...], ...]
    old_of: tuple[int, ...]
    old_names: tuple[str, ...] = field(default=())

    def fold(self, m: Monomial) -> Monomial:
        """Translate a squarefree monomial on the new ring back to the old."""
        exps = [0] * len(self.blocks)
        for k, e in enumerate(m.exponents):
            if e:
                exps[self.old_of[k]] += e
        return Monomial(tuple(exps))


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, DegreeMap]:
    """Standard polarization: x_i^k becomes x_{i,1}*...*x_{i,k} where x_i
    splits into as many squarefree copies as its maximum exponent."""
    if not I.is_proper_nonzero:
        raise InputError("polarization needs a proper nonzero ideal")
    max_exp = [max(g.exponents[i] for g in I.gens) for i in range(I.n)]

    blocks = []
    new_names = []
    old_of = []
    for i, e in enumerate(max_exp):
        block = []
        for k in range(1, e + 1):
            block.append(len(new_names))
            new_names.append(f"{I.var_names[i]}_{k}")
            old_of.append(i)
        blocks.append(tuple(block))
    n_new = len(new_names)

    new_gens = []
    for g in I.gens:
        exps = [0] * n_new
        for i, e in enumerate(g.exponents):
            for k in range(e):
                exps[blocks[i][k]] = 1
        new_gens.append(Monomial(tuple(exps)))

    # polarization preserves minimality, so direct construction is safe
    J = MonomialIdeal(n_new, tuple(new_names), tuple(new_gens))
    return J, DegreeMap(tuple(blocks), tuple(old_of), I.var_names)
