"""Polyhedral cones and piecewise-linear functions supported on them.

A :class:`Cone` is an H-representation: a list of inequalities ``F >= 0``
where each ``F`` is an affine form.  Rows are stored as primitive integer
tuples ``(g_1, ..., g_n, h)``; scaling a row by a positive number does not
change the solution set, so this loses nothing.

A :class:`ConeSupportedExpressionSet` is a piecewise-linear function on a
domain cone: full-dimensional pieces with pairwise disjoint interiors whose
union is the domain, each carrying one affine expression.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import NamedTuple

import numpy as np

from . import dd, lp

# ---------------------------------------------------------------------------
# rows


def _to_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    if hasattr(v, "numerator") and hasattr(v, "denominator"):
        return Fraction(int(v.numerator), int(v.denominator))
    raise TypeError(f"expected an exact rational, got {v!r}")


def normalize_row(values):
    """Scale a rational row to the primitive integer row with the same sign."""
    vals = [_to_fraction(v) for v in values]
    den = 1
    for v in vals:
        den = lcm(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return tuple(ints)


def negate(row):
    return tuple(-c for c in row)


def row_value(row, point):
    """Exact value of the affine row at a rational point."""
    total = Fraction(row[-1])
    for g, z in zip(row, point):
        if g:
            total += g * z
    return total


def _canon(rows):
    return tuple(sorted(set(rows)))


def _full_dim(rows, n):
    t, _ = lp.max_slack(_canon(rows), n)
    return t > 0


def _witness(rows, n):
    t, z = lp.max_slack(_canon(rows), n)
    if t <= 0:
        return None
    return tuple(Fraction(int(v.numerator), int(v.denominator)) for v in z)


def _strictly_inside(rows, point):
    return all(row_value(r, point) > 0 for r in rows)


def _inside(rows, point):
    return all(row_value(r, point) >= 0 for r in rows)


def _valid_on(row, rows, n, witness=None):
    """True when ``row >= 0`` holds on the full-dimensional set ``{rows >= 0}``."""
    if witness is not None and row_value(row, witness) < 0:
        return False
    if row in rows:
        return True
    return not _full_dim(list(rows) + [negate(row)], n)


def _reduce_rows(rows, n):
    rows = list(dict.fromkeys(rows))
    rows = [r for r in rows if any(r[:n]) or r[n] < 0]
    keep = list(rows)
    for r in rows:
        others = [k for k in keep if k != r]
        if not _full_dim(others + [negate(r)], n):
            keep = others
    return tuple(sorted(keep))


# ---------------------------------------------------------------------------
# linear forms


@dataclass(frozen=True)
class LinearForm:
    """An affine form ``sum coeffs[i] * variables[i] + constant`` with rational coefficients."""

    variables: tuple
    coeffs: tuple
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "coeffs", tuple(_to_fraction(c) for c in self.coeffs))
        object.__setattr__(self, "constant", _to_fraction(self.constant))
        if len(self.coeffs) != len(self.variables):
            raise ValueError("coefficient count does not match the variable tuple")

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        return cls(variables, [1 if v == name else 0 for v in variables], 0)

    @classmethod
    def const(cls, variables, value):
        return cls(variables, [0] * len(tuple(variables)), value)

    @classmethod
    def from_row(cls, variables, row):
        return cls(variables, row[:-1], row[-1])

    @property
    def row(self):
        return self.coeffs + (self.constant,)

    def normalized_row(self):
        return normalize_row(self.row)

    def is_zero(self):
        return self.constant == 0 and not any(self.coeffs)

    def is_constant(self):
        return not any(self.coeffs)

    def _check(self, other):
        if other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def __add__(self, other):
        if isinstance(other, LinearForm):
            self._check(other)
            return LinearForm(
                self.variables,
                [a + b for a, b in zip(self.coeffs, other.coeffs)],
                self.constant + other.constant,
            )
        return LinearForm(self.variables, self.coeffs, self.constant + _to_fraction(other))

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(self.variables, [-c for c in self.coeffs], -self.constant)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        k = _to_fraction(k)
        return LinearForm(self.variables, [k * c for c in self.coeffs], k * self.constant)

    __rmul__ = __mul__

    def __call__(self, point):
        if isinstance(point, dict):
            point = [point[v] for v in self.variables]
        total = self.constant
        for c, z in zip(self.coeffs, point):
            if c:
                total += c * _to_fraction(z)
        return total

    def substitute(self, mapping, target_variables):
        """Replace each variable by an affine form over ``target_variables``."""
        out = LinearForm.const(target_variables, self.constant)
        for c, v in zip(self.coeffs, self.variables):
            if c:
                out = out + mapping[v] * c
        return out

    def to_json(self):
        return [_rational_json(c) for c in self.row]

    def __str__(self):
        terms = []
        for c, v in zip(self.coeffs, self.variables):
            if c:
                terms.append(f"{_fmt_coeff(c)}{v}")
        if self.constant or not terms:
            terms.append(str(self.constant))
        return " + ".join(terms).replace("+ -", "- ")


def _fmt_coeff(c):
    if c == 1:
        return ""
    if c == -1:
        return "-"
    return f"({c})" if c.denominator != 1 else f"{c}"


def _rational_json(q):
    q = _to_fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _rational_from_json(v):
    return Fraction(v) if isinstance(v, str) else Fraction(int(v))


# ---------------------------------------------------------------------------
# cones


class Generators(NamedTuple):
    """V-representation: ``conv(points) + cone(rays) + span(lines)``."""

    points: tuple
    rays: tuple
    lines: tuple


def _as_row(item, n):
    if isinstance(item, LinearForm):
        return normalize_row(item.row)
    row = tuple(item)
    if len(row) != n + 1:
        raise ValueError(f"row {row} has wrong length for {n} variables")
    if all(isinstance(c, int) for c in row):
        g = 0
        for c in row:
            g = gcd(g, c)
        return tuple(c // g for c in row) if g > 1 else row
    return normalize_row(row)


@dataclass(frozen=True, eq=True)
class Cone:
    """Polyhedron ``{z : F(z) >= 0 for every row F}`` in the named variables.

    >>> c = Cone(("x", "y"), [(1, 0, 0), (0, 1, 0)])
    >>> c.is_full_dimensional()
    True
    """

    variables: tuple
    rows: tuple = ()

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        n = len(variables)
        object.__setattr__(self, "rows", tuple(_as_row(r, n) for r in self.rows))

    @classmethod
    def whole_space(cls, variables):
        return cls(variables, ())

    @property
    def dim(self):
        return len(self.variables)

    @property
    def inequalities(self):
        return [LinearForm.from_row(self.variables, r) for r in self.rows]

    def _check(self, other):
        if other.variables != self.variables:
            raise ValueError(f"ambient mismatch: {self.variables} vs {other.variables}")

    def contains(self, point):
        return _inside(self.rows, point)

    def strictly_contains(self, point):
        return _strictly_inside(self.rows, point)

    @cached_property
    def interior_point(self):
        """A rational point strictly inside, or ``None`` if not full-dimensional."""
        return _witness(self.rows, self.dim)

    def is_full_dimensional(self):
        return self.interior_point is not None

    def is_empty(self):
        t, _ = lp.max_slack(_canon(self.rows), self.dim)
        return t < 0

    def intersect(self, other):
        self._check(other)
        return Cone(self.variables, self.rows + other.rows)

    def reduce(self):
        """Irredundant rows in canonical order.  Requires a full-dimensional cone."""
        if not self.is_full_dimensional():
            raise ValueError("reduce needs a full-dimensional cone")
        reduced = Cone(self.variables, _reduce_rows(self.rows, self.dim))
        reduced.__dict__["interior_point"] = self.interior_point
        return reduced

    def minimum(self, form):
        """Exact minimum of an affine form over the cone (``None`` if unbounded below)."""
        row = form.row if isinstance(form, LinearForm) else tuple(form)
        t, z = lp.max_slack(_canon(self.rows), self.dim)
        if t < 0:
            raise ValueError("minimum over an empty cone")
        neg = tuple(-_to_fraction(c) for c in row)
        den = 1
        for c in neg:
            den = lcm(den, c.denominator)
        value, _ = lp.maximize(self.rows, self.dim, tuple(int(c * den) for c in neg), z)
        if value is None:
            return None
        return -Fraction(int(value.numerator), int(value.denominator)) / den

    def contains_cone(self, other):
        """True when ``other`` is a subset of ``self``."""
        self._check(other)
        if other.is_empty():
            return True
        for r in self.rows:
            m = other.minimum(r)
            if m is None or m < 0:
                return False
        return True

    def same_set(self, other):
        return self.contains_cone(other) and other.contains_cone(self)

    def rays_and_lines(self):
        """Exact V-representation via the double description method."""
        n = self.dim
        homog = list(self.rows) + [tuple([0] * n + [1])]
        lines, rays = dd.extreme_rays(homog, n + 1)
        points, recession = [], []
        for r in rays:
            s = r[n]
            if s > 0:
                points.append(tuple(Fraction(c, s) for c in r[:n]))
            else:
                recession.append(tuple(r[:n]))
        return Generators(
            tuple(sorted(points)),
            tuple(sorted(recession)),
            tuple(sorted(tuple(line[:n]) for line in lines)),
        )

    @classmethod
    def from_generators(cls, variables, generators):
        """H-representation of ``conv(points) + cone(rays) + span(lines)``."""
        variables = tuple(variables)
        n = len(variables)
        gens = []
        for p in generators.points:
            gens.append(normalize_row(tuple(p) + (1,)))
        for r in generators.rays:
            gens.append(normalize_row(tuple(r) + (0,)))
        for line in generators.lines:
            row = normalize_row(tuple(line) + (0,))
            gens.extend([row, negate(row)])
        lines, rays = dd.extreme_rays(gens, n + 1)
        rows = [r for r in rays if any(r[:n])]
        for line in lines:
            rows.extend([line, negate(line)])
        return cls(variables, tuple(sorted(set(rows))))

    def to_json(self):
        return [[_rational_json(c) for c in r] for r in self.rows]

    def __str__(self):
        return "{" + ", ".join(f"{f} >= 0" for f in self.inequalities) + "}"


def is_full_dimensional(c):
    return c.is_full_dimensional()


def intersect(c1, c2):
    return c1.intersect(c2)


def reduce(c):
    return c.reduce()


def rays_and_lines(c):
    return c.rays_and_lines()


# ---------------------------------------------------------------------------
# coverage and convexity


def _split_off(cell, piece_rows, n):
    """Full-dimensional cells partitioning ``cell`` minus the piece."""
    out = []
    for i, r in enumerate(piece_rows):
        if r in cell:
            continue
        sub = list(cell) + [negate(r)] + list(piece_rows[:i])
        if _full_dim(sub, n):
            if len(sub) > 3 * n:
                sub = list(_reduce_rows(sub, n))
            out.append(tuple(sub))
    return out


def find_uncovered_point(region_rows, pieces, n):
    """Interior point of ``region`` outside every piece, or ``None`` if covered.

    ``pieces`` is a list of row tuples.  Depth-first case split: pick the
    max-slack point of the current cell, find a piece containing it, and
    recurse into the cell minus that piece.
    """
    region_rows = tuple(region_rows)
    if not _full_dim(region_rows, n):
        return None
    stack = [region_rows]
    while stack:
        cell = stack.pop()
        w = _witness(cell, n)
        if w is None:
            continue
        hit = next((p for p in pieces if _inside(p, w)), None)
        if hit is None:
            return w
        stack.extend(_split_off(cell, hit, n))
    return None


def _envelope(cones):
    n = cones[0].dim
    env = []
    for i, c in enumerate(cones):
        for r in c.rows:
            if r in env:
                continue
            if all(
                _valid_on(r, other.rows, n, other.interior_point)
                for j, other in enumerate(cones)
                if j != i
            ):
                env.append(r)
    return env


def union_hull(cones):
    """Rows of the union when it is convex, else ``None``.

    Uses the envelope: rows of each cone valid on all the others.  The union
    is convex exactly when the envelope is covered by the cones.
    """
    cones = list(cones)
    if not cones:
        raise ValueError("need at least one cone")
    n = cones[0].dim
    for c in cones:
        cones[0]._check(c)
        if not c.is_full_dimensional():
            raise ValueError("union convexity needs full-dimensional cones")
    if len(cones) == 1:
        return _reduce_rows(cones[0].rows, n)
    env = _envelope(cones)
    if find_uncovered_point(env, [c.rows for c in cones], n) is not None:
        return None
    return _reduce_rows(env, n)


def is_union_convex(cones):
    """Decide exactly whether the union of full-dimensional cones is convex."""
    return union_hull(cones) is not None


# ---------------------------------------------------------------------------
# piecewise-linear functions


@dataclass(frozen=True)
class ConeSupportedExpression:
    cone: Cone
    expression: LinearForm

    def __post_init__(self):
        if self.cone.variables != self.expression.variables:
            raise ValueError("cone and expression use different variables")

    def sort_key(self):
        return (self.expression.row, self.cone.rows)


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    problems: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class ConeSupportedExpressionSet:
    """Piecewise-linear function on ``domain``."""

    variables: tuple
    domain: Cone
    pieces: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.domain.variables != self.variables:
            raise ValueError("domain uses different variables")
        for p in self.pieces:
            if p.cone.variables != self.variables:
                raise ValueError("piece uses different variables")

    @classmethod
    def constant(cls, domain, value=0):
        v = domain.variables
        return cls(v, domain, (ConeSupportedExpression(domain, LinearForm.const(v, value)),))

    @property
    def dim(self):
        return len(self.variables)

    def __len__(self):
        return len(self.pieces)

    def nonzero_pieces(self):
        return [p for p in self.pieces if not p.expression.is_zero()]

    def zero_pieces(self):
        return [p for p in self.pieces if p.expression.is_zero()]

    def _check(self, other):
        if other.variables != self.variables:
            raise ValueError("variable mismatch")
        if other.domain.rows != self.domain.rows and not other.domain.same_set(self.domain):
            raise ValueError("domain mismatch")

    def locate(self, point):
        if not self.domain.contains(point):
            raise ValueError(f"point {tuple(point)} is outside the domain")
        for p in self.pieces:
            if p.cone.contains(point):
                return p
        raise LookupError(f"no piece contains {tuple(point)}")

    def evaluate(self, point):
        """Value at a rational point of the domain."""
        if isinstance(point, dict):
            point = [point[v] for v in self.variables]
        point = [_to_fraction(z) for z in point]
        return self.locate(point).expression(point)

    def evaluate_many(self, points):
        """Vectorized evaluation at integer points; returns a list of Fractions."""
        pts = np.asarray(points, dtype=np.int64)
        if pts.ndim != 2 or pts.shape[1] != self.dim:
            raise ValueError("points must be an (N, dim) integer array")
        aug = np.hstack([pts, np.ones((len(pts), 1), dtype=np.int64)])
        dom = np.array(self.domain.rows, dtype=np.int64).reshape(-1, self.dim + 1)
        if len(dom) and (aug @ dom.T < 0).any():
            raise ValueError("some points are outside the domain")
        den = 1
        for p in self.pieces:
            for c in p.expression.row:
                den = lcm(den, c.denominator)
        exprs = np.array([[int(c * den) for c in p.expression.row] for p in self.pieces], dtype=np.int64)
        hit = np.full(len(pts), -1, dtype=np.int64)
        for k, p in enumerate(self.pieces):
            rows = np.array(p.cone.rows, dtype=np.int64).reshape(-1, self.dim + 1)
            inside = (aug @ rows.T >= 0).all(axis=1) if len(rows) else np.ones(len(pts), bool)
            hit[(hit < 0) & inside] = k
        if (hit < 0).any():
            raise LookupError("some points lie in no piece")
        scaled = (aug * exprs[hit]).sum(axis=1)
        return [Fraction(int(v), den) for v in scaled]

    # -- algebra -------------------------------------------------------

    def __add__(self, other):
        return cses_add(self, other)

    def __neg__(self):
        return cses_scale(self, -1)

    def __sub__(self, other):
        return cses_add(self, cses_scale(other, -1))

    def scale(self, k):
        return cses_scale(self, k)

    def simplify(self):
        return cses_simplify(self)

    def sorted(self):
        return ConeSupportedExpressionSet(
            self.variables, self.domain, sorted(self.pieces, key=ConeSupportedExpression.sort_key)
        )

    # -- invariants ----------------------------------------------------

    def check_partition(self, continuity=True):
        """Check the partition assumptions exactly.

        Every piece is full-dimensional and inside the domain, interiors are
        pairwise disjoint, the pieces cover the domain, and (optionally)
        neighbouring expressions agree wherever two pieces meet.
        """
        n = self.dim
        problems = []
        for k, p in enumerate(self.pieces):
            if not p.cone.is_full_dimensional():
                problems.append(f"piece {k} is not full-dimensional")
                continue
            for r in self.domain.rows:
                if not _valid_on(r, p.cone.rows, n, p.cone.interior_point):
                    problems.append(f"piece {k} leaves the domain")
                    break
        pieces = self.pieces
        for i in range(len(pieces)):
            ci = pieces[i].cone
            neg_i = {negate(r) for r in ci.rows}
            for j in range(i + 1, len(pieces)):
                cj = pieces[j].cone
                if neg_i.intersection(cj.rows):
                    overlap = False
                else:
                    overlap = _full_dim(ci.rows + cj.rows, n)
                if overlap:
                    problems.append(f"pieces {i} and {j} overlap")
                if continuity and pieces[i].expression != pieces[j].expression:
                    if not _agree_on_contact(ci.rows + cj.rows, pieces[i].expression, pieces[j].expression, n):
                        problems.append(f"pieces {i} and {j} disagree where they meet")
        w = find_uncovered_point(self.domain.rows, [p.cone.rows for p in pieces], n)
        if w is not None:
            problems.append(f"domain point {tuple(str(c) for c in w)} is not covered")
        return PartitionReport(not problems, tuple(problems))

    # -- serialization -------------------------------------------------

    def to_json(self):
        return {
            "variables": list(self.variables),
            "domain": self.domain.to_json(),
            "pieces": [
                {"cone": p.cone.to_json(), "expr": p.expression.to_json()}
                for p in self.sorted().pieces
            ],
        }

    def dumps(self, **kwargs):
        return json.dumps(self.to_json(), **kwargs)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        v = tuple(data["variables"])

        def rows(rs):
            return [tuple(_rational_from_json(c) for c in r) for r in rs]

        domain = Cone(v, rows(data["domain"]))
        pieces = [
            ConeSupportedExpression(
                Cone(v, rows(p["cone"])),
                LinearForm.from_row(v, [_rational_from_json(c) for c in p["expr"]]),
            )
            for p in data["pieces"]
        ]
        return cls(v, domain, pieces)


def _agree_on_contact(rows, e1, e2, n):
    t, z = lp.max_slack(_canon(rows), n)
    if t < 0:
        return True
    diff = normalize_row((e1 - e2).row)
    for sign in (1, -1):
        value, _ = lp.maximize(rows, n, tuple(sign * c for c in diff), z)
        if value is None or value > 0:
            return False
    return True


def _overlap_cone(c1, c2):
    """Reduced intersection when full-dimensional, else ``None``."""
    neg = {negate(r) for r in c1.rows}
    if neg.intersection(c2.rows):
        return None
    n = c1.dim
    rows = c1.rows + c2.rows
    w1, w2 = c1.interior_point, c2.interior_point
    if w1 is not None and _strictly_inside(c2.rows, w1):
        witness = w1
    elif w2 is not None and _strictly_inside(c1.rows, w2):
        witness = w2
    else:
        witness = _witness(rows, n)
        if witness is None:
            return None
    cone = Cone(c1.variables, _reduce_rows(rows, n))
    cone.__dict__["interior_point"] = witness
    return cone


def cses_add(s1, s2):
    """Sum on the common refinement; lower-dimensional overlaps are dropped."""
    s1._check(s2)
    pieces = []
    for p in s1.pieces:
        for q in s2.pieces:
            cone = _overlap_cone(p.cone, q.cone)
            if cone is not None:
                pieces.append(ConeSupportedExpression(cone, p.expression + q.expression))
    return ConeSupportedExpressionSet(s1.variables, s1.domain, pieces)


def cses_scale(s, k):
    k = _to_fraction(k)
    return ConeSupportedExpressionSet(
        s.variables,
        s.domain,
        [ConeSupportedExpression(p.cone, p.expression * k) for p in s.pieces],
    )


def _merge_group(pieces):
    """Greedily merge same-expression pieces whose union is convex."""
    expr = pieces[0].expression
    if len(pieces) > 1:
        hull = union_hull([p.cone for p in pieces])
        if hull is not None:
            return [ConeSupportedExpression(Cone(expr.variables, hull), expr)]
    cones = sorted((p.cone for p in pieces), key=lambda c: c.rows)
    merged = True
    while merged:
        merged = False
        for i in range(len(cones)):
            neg_i = {negate(r) for r in cones[i].rows}
            for j in range(i + 1, len(cones)):
                # Interior-disjoint pieces with a convex union share a facet.
                if not neg_i.intersection(cones[j].rows):
                    continue
                hull = union_hull([cones[i], cones[j]])
                if hull is None:
                    continue
                new = Cone(expr.variables, hull)
                cones = sorted(cones[:i] + cones[i + 1 : j] + cones[j + 1 :] + [new], key=lambda c: c.rows)
                merged = True
                break
            if merged:
                break
    return [ConeSupportedExpression(c, expr) for c in cones]


def cses_simplify(s):
    """Merge pieces carrying the same expression wherever their union is convex.

    Each expression group is first tried as a whole; otherwise pairs sharing
    a facet are merged in canonical order, restarting after every merge.
    """
    groups = {}
    for p in s.pieces:
        groups.setdefault(p.expression.row, []).append(p)
    pieces = []
    for key in sorted(groups):
        pieces.extend(_merge_group(groups[key]))
    return ConeSupportedExpressionSet(s.variables, s.domain, pieces)


def pullback(s, substitution, target_domain):
    """Compose ``s`` with an affine map into its variables.

    ``substitution`` maps each variable of ``s`` to a :class:`LinearForm`
    over the target variables (a dict, or a sequence aligned with
    ``s.variables``).  Pieces are intersected with ``target_domain`` and
    lower-dimensional ones are dropped.
    """
    if not isinstance(substitution, dict):
        substitution = dict(zip(s.variables, substitution))
    if set(substitution) != set(s.variables):
        raise ValueError("substitution must give every source variable")
    target = target_domain.variables
    for form in substitution.values():
        if form.variables != target:
            raise ValueError("substitution forms must use the target variables")
    n = len(target)

    degenerate = False

    def pull_rows(cone):
        nonlocal degenerate
        out = []
        for r in cone.rows:
            pulled = normalize_row(LinearForm.from_row(s.variables, r).substitute(substitution, target).row)
            if any(pulled):
                out.append(pulled)
            else:
                # The whole target lands on this wall.
                degenerate = True
        return out

    for r in pull_rows(s.domain):
        if not _valid_on(r, target_domain.rows, n, target_domain.interior_point):
            raise ValueError("target domain does not map into the source domain")
    pulled = []
    for p in s.pieces:
        rows = tuple(pull_rows(p.cone)) + target_domain.rows
        if _full_dim(rows, n):
            pulled.append((rows, p.expression.substitute(substitution, target)))
    if degenerate:
        # Preimages of neighbouring pieces now overlap; by continuity they
        # carry the same expression there, so keep each overlap once.
        cells, seen = [], []
        for rows, expr in pulled:
            parts = [rows]
            for prev in seen:
                nxt = []
                for cell in parts:
                    if _full_dim(cell + prev, n):
                        nxt.extend(_split_off(cell, prev, n))
                    else:
                        nxt.append(cell)
                parts = nxt
            seen.append(rows)
            cells.extend((cell, expr) for cell in parts)
        pulled = cells
    pieces = []
    for rows, expr in pulled:
        w = _witness(rows, n)
        if w is None:
            continue
        cone = Cone(target, _reduce_rows(rows, n))
        cone.__dict__["interior_point"] = w
        pieces.append(ConeSupportedExpression(cone, expr))
    return ConeSupportedExpressionSet(target, target_domain, pieces)


def evaluate(s, point):
    return s.evaluate(point)
