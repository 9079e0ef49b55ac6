"""Exact arithmetic in three integral domains, plus canonical finite windows.

Supported rings and element representations:

* ``Z`` -- rational integers; the value is a Python int (arbitrary
  precision, so products never overflow).
* ``Zi`` -- Gaussian integers; the value is an ``(re, im)`` pair of ints.
* ``GF(q)[x]`` -- polynomials over a prime field; the value is a tuple of
  coefficients ``(c0, c1, ...)`` in ``{0..q-1}``, constant term first,
  with no trailing zeros (``()`` is the zero polynomial).

Each element has exactly one canonical representation, so structural
equality is ring equality and elements are usable as dict keys.

A :class:`Window` is a canonically ordered finite slice of a ring:

* ``Z``: ``{1..N}`` ascending, or ``[-N..N]`` ascending with the
  ``signed`` flag,
* ``Zi``: the box ``|re| <= B, |im| <= B`` ordered by ``(norm, re, im)``,
* ``GF(q)[x]``: all polynomials of degree < d ordered by their base-q
  integer value (equivalently by (degree, coefficient vector)).

The fixed order pins down element indices, which keeps colorings, CNF
variable numbering and scan order reproducible across runs and
implementations.

Spec strings accepted by :func:`parse_ring_spec`: ``Z``, ``Zi``,
``GF(q)[x]`` with q a decimal prime.  Window parameter strings accepted
by :func:`parse_window_params`: ``N=<int>`` (optionally ``N=<int>,signed``),
``B=<int>``, ``d=<int>``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Optional


class RingKind(enum.Enum):
    INTEGERS = "Z"
    GAUSSIAN = "Zi"
    POLY = "GF(q)[x]"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """Identifies one of the three supported rings (q only for GF(q)[x])."""

    kind: RingKind
    q: Optional[int] = None

    def __post_init__(self):
        if self.kind is RingKind.POLY:
            if self.q is None or not _is_prime(self.q):
                raise ValueError(f"GF(q)[x] needs a prime modulus, got q={self.q}")
        elif self.q is not None:
            raise ValueError(f"modulus q is only meaningful for GF(q)[x], got q={self.q} for {self.kind.value}")

    # -- element constructors ------------------------------------------

    def integer(self, n: int) -> "RingElement":
        if self.kind is not RingKind.INTEGERS:
            raise ValueError("integer() is only for Z; use from_int() for the canonical embedding")
        return RingElement(self, n)

    def gaussian(self, re_part: int, im_part: int) -> "RingElement":
        if self.kind is not RingKind.GAUSSIAN:
            raise ValueError("gaussian() is only for Zi")
        return RingElement(self, (re_part, im_part))

    def poly(self, coeffs) -> "RingElement":
        if self.kind is not RingKind.POLY:
            raise ValueError("poly() is only for GF(q)[x]")
        return RingElement(self, _poly_normalize(coeffs, self.q))

    def from_int(self, n: int) -> "RingElement":
        """Canonical image of the integer n (n times the ring's 1)."""
        if self.kind is RingKind.INTEGERS:
            return RingElement(self, n)
        if self.kind is RingKind.GAUSSIAN:
            return RingElement(self, (n, 0))
        return RingElement(self, _poly_normalize((n,), self.q))

    @property
    def zero(self) -> "RingElement":
        return self.from_int(0)

    @property
    def one(self) -> "RingElement":
        return self.from_int(1)


def _poly_normalize(coeffs, q: int) -> tuple:
    out = [c % q for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RingElement:
    """A canonical element of one of the supported rings.

    Arithmetic is exact; operands must come from the same RingSpec.
    """

    __slots__ = ("spec", "val")

    def __init__(self, spec: RingSpec, val):
        self.spec = spec
        self.val = val

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(f"ring mismatch: {format_ring_spec(self.spec)} vs {format_ring_spec(other.spec)}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        kind = self.spec.kind
        if kind is RingKind.INTEGERS:
            return RingElement(self.spec, self.val + other.val)
        if kind is RingKind.GAUSSIAN:
            a, b = self.val
            c, d = other.val
            return RingElement(self.spec, (a + c, b + d))
        return RingElement(self.spec, _poly_add(self.val, other.val, self.spec.q))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __neg__(self) -> "RingElement":
        kind = self.spec.kind
        if kind is RingKind.INTEGERS:
            return RingElement(self.spec, -self.val)
        if kind is RingKind.GAUSSIAN:
            a, b = self.val
            return RingElement(self.spec, (-a, -b))
        q = self.spec.q
        return RingElement(self.spec, tuple((-c) % q for c in self.val))

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        kind = self.spec.kind
        if kind is RingKind.INTEGERS:
            return RingElement(self.spec, self.val * other.val)
        if kind is RingKind.GAUSSIAN:
            a, b = self.val
            c, d = other.val
            return RingElement(self.spec, (a * c - b * d, a * d + b * c))
        return RingElement(self.spec, _poly_mul(self.val, other.val, self.spec.q))

    def __pow__(self, exponent: int) -> "RingElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = self.spec.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.spec == other.spec
            and self.val == other.val
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.val))

    def __repr__(self) -> str:
        return f"<{format_ring_spec(self.spec)}: {format_element(self)}>"

    def is_zero(self) -> bool:
        return self == self.spec.zero

    def is_one(self) -> bool:
        return self == self.spec.one

    def sort_key(self):
        """Key realizing the ring's canonical enumeration order."""
        kind = self.spec.kind
        if kind is RingKind.INTEGERS:
            return self.val
        if kind is RingKind.GAUSSIAN:
            a, b = self.val
            return (a * a + b * b, a, b)
        # base-q value; consistent with (degree, coefficient vector) order
        v = 0
        for c in reversed(self.val):
            v = v * self.spec.q + c
        return v


def _poly_add(a: tuple, b: tuple, q: int) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % q
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_mul(a: tuple, b: tuple, q: int) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % q
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_divmod(a: tuple, b: tuple, q: int) -> tuple:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], -1, q)
    for k in range(len(rem) - len(b), -1, -1):
        coeff = (rem[k + len(b) - 1] * inv_lead) % q
        if coeff:
            quo[k] = coeff
            for j, cb in enumerate(b):
                rem[k + j] = (rem[k + j] - coeff * cb) % q
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(quo), tuple(rem)


def ring_arith(op: str, a: RingElement, b: Optional[RingElement] = None) -> RingElement:
    """String-dispatched arithmetic: op in {add, mul, neg, sub}."""
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def exact_divide(a: RingElement, b: RingElement) -> Optional[RingElement]:
    """The unique c with b*c = a, or None when a is not divisible by b.

    Uniqueness holds by cancellation (all three rings are integral
    domains).  Raises ZeroDivisionError for b = 0.
    """
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("exact_divide by ring zero")
    kind = a.spec.kind
    if kind is RingKind.INTEGERS:
        quo, rem = divmod(a.val, b.val)
        return RingElement(a.spec, quo) if rem == 0 else None
    if kind is RingKind.GAUSSIAN:
        ar, ai = a.val
        br, bi = b.val
        norm = br * br + bi * bi
        num_re = ar * br + ai * bi
        num_im = ai * br - ar * bi
        if num_re % norm or num_im % norm:
            return None
        return RingElement(a.spec, (num_re // norm, num_im // norm))
    quo, rem = _poly_divmod(a.val, b.val, a.spec.q)
    return RingElement(a.spec, _poly_normalize(quo, a.spec.q)) if not rem else None


# ---------------------------------------------------------------------------
# Windows
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WindowParams:
    """One integer parameter (N, B or d, per ring kind) plus the Z-only
    ``signed`` flag selecting [-N..N] instead of {1..N}."""

    size: int
    signed: bool = False


class Window:
    """A canonically ordered finite slice of a ring with O(1) position lookup.

    Identity (equality, hashing) is (spec, params); the element list is
    derived deterministically from those.
    """

    __slots__ = ("spec", "params", "elements", "index")

    def __init__(self, spec: RingSpec, params: WindowParams):
        self.spec = spec
        self.params = params
        self.elements: tuple = tuple(_enumerate_elements(spec, params))
        self.index: dict = {e: k for k, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[RingElement]:
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in self.index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Window)
            and self.spec == other.spec
            and self.params == other.params
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.params))

    def __repr__(self) -> str:
        return f"<Window {format_ring_spec(self.spec)} {format_window_params(self.spec, self.params)} (|W|={len(self)})>"

    def position(self, e: RingElement) -> int:
        return self.index[e]


def _enumerate_elements(spec: RingSpec, params: WindowParams):
    kind = spec.kind
    size = params.size
    if params.signed and kind is not RingKind.INTEGERS:
        raise ValueError("the signed flag only applies to windows of Z")
    if kind is RingKind.INTEGERS:
        if size < 1:
            raise ValueError(f"window of Z needs N >= 1, got {size}")
        lo = -size if params.signed else 1
        return [RingElement(spec, n) for n in range(lo, size + 1)]
    if kind is RingKind.GAUSSIAN:
        if size < 0:
            raise ValueError(f"window of Zi needs B >= 0, got {size}")
        box = [
            (a, b)
            for a in range(-size, size + 1)
            for b in range(-size, size + 1)
        ]
        box.sort(key=lambda p: (p[0] * p[0] + p[1] * p[1], p[0], p[1]))
        return [RingElement(spec, p) for p in box]
    if size < 1:
        raise ValueError(f"window of GF(q)[x] needs d >= 1, got {size}")
    q = spec.q
    out = []
    for v in range(q**size):
        coeffs = []
        w = v
        while w:
            coeffs.append(w % q)
            w //= q
        out.append(RingElement(spec, tuple(coeffs)))
    return out


def enumerate_window(spec: RingSpec, params: WindowParams) -> Window:
    """Build the canonical window for (spec, params); validates params."""
    return Window(spec, params)


# ---------------------------------------------------------------------------
# Spec / parameter / element literals
# ---------------------------------------------------------------------------

_GF_RE = re.compile(r"^GF\((\d+)\)\[x\]$")


def parse_ring_spec(text: str) -> RingSpec:
    text = text.strip()
    if text == "Z":
        return RingSpec(RingKind.INTEGERS)
    if text == "Zi":
        return RingSpec(RingKind.GAUSSIAN)
    m = _GF_RE.match(text)
    if m:
        return RingSpec(RingKind.POLY, int(m.group(1)))
    raise ValueError(f"unknown ring spec {text!r} (expected Z, Zi, or GF(q)[x])")


def format_ring_spec(spec: RingSpec) -> str:
    if spec.kind is RingKind.POLY:
        return f"GF({spec.q})[x]"
    return spec.kind.value


def parse_window_params(spec: RingSpec, text: str) -> WindowParams:
    text = text.strip()
    parts = [p.strip() for p in text.split(",")]
    signed = False
    if len(parts) == 2 and parts[1] == "signed":
        signed = True
    elif len(parts) != 1:
        raise ValueError(f"bad window parameter string {text!r}")
    key, _, raw = parts[0].partition("=")
    expected = {RingKind.INTEGERS: "N", RingKind.GAUSSIAN: "B", RingKind.POLY: "d"}[spec.kind]
    if key != expected:
        raise ValueError(
            f"window parameter for {format_ring_spec(spec)} must be {expected}=<int>, got {text!r}"
        )
    try:
        size = int(raw)
    except ValueError:
        raise ValueError(f"bad window size in {text!r}") from None
    if signed and spec.kind is not RingKind.INTEGERS:
        raise ValueError("the signed flag only applies to windows of Z")
    return WindowParams(size, signed)


def format_window_params(spec: RingSpec, params: WindowParams) -> str:
    key = {RingKind.INTEGERS: "N", RingKind.GAUSSIAN: "B", RingKind.POLY: "d"}[spec.kind]
    suffix = ",signed" if params.signed else ""
    return f"{key}={params.size}{suffix}"


def format_element(e: RingElement) -> str:
    """Canonical literal: Z decimal, Zi like 3+2i / -1i, GF like x^2+2x+1."""
    kind = e.spec.kind
    if kind is RingKind.INTEGERS:
        return str(e.val)
    if kind is RingKind.GAUSSIAN:
        a, b = e.val
        if b == 0:
            return str(a)
        imag = f"{b}i"
        if a == 0:
            return imag
        return f"{a}+{b}i" if b > 0 else f"{a}-{-b}i"
    if not e.val:
        return "0"
    terms = []
    for deg in range(len(e.val) - 1, -1, -1):
        c = e.val[deg]
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
        else:
            var = "x" if deg == 1 else f"x^{deg}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms)


_POLY_TERM_RE = re.compile(r"^(\d+)?(?:(x)(?:\^(\d+))?)?$")


def parse_element(spec: RingSpec, text: str) -> RingElement:
    """Parse a canonical (or mildly relaxed) element literal."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty element literal")
    kind = spec.kind
    if kind is RingKind.INTEGERS:
        try:
            return RingElement(spec, int(text))
        except ValueError:
            raise ValueError(f"bad integer literal {text!r}") from None
    if kind is RingKind.GAUSSIAN:
        return _parse_gaussian(spec, text)
    return _parse_gf_poly(spec, text)


def _parse_gaussian(spec: RingSpec, text: str) -> RingElement:
    try:
        if "i" not in text:
            return RingElement(spec, (int(text), 0))
        if not text.endswith("i"):
            raise ValueError
        body = text[:-1]
        # split real and imaginary parts at the last sign not in front position
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-":
                re_raw, im_raw = body[:k], body[k:]
                break
        else:
            re_raw, im_raw = "", body
        re_part = int(re_raw) if re_raw else 0
        if im_raw in ("", "+"):
            im_part = 1
        elif im_raw == "-":
            im_part = -1
        else:
            im_part = int(im_raw)
        return RingElement(spec, (re_part, im_part))
    except ValueError:
        raise ValueError(f"bad Gaussian integer literal {text!r}") from None


def _parse_gf_poly(spec: RingSpec, text: str) -> RingElement:
    coeffs: dict = {}
    for raw in text.split("+"):
        m = _POLY_TERM_RE.match(raw)
        if not m or raw == "":
            raise ValueError(f"bad GF({spec.q})[x] literal {text!r}")
        c_raw, has_x, deg_raw = m.groups()
        if c_raw is None and not has_x:
            raise ValueError(f"bad GF({spec.q})[x] literal {text!r}")
        coeff = int(c_raw) if c_raw is not None else 1
        deg = 0 if not has_x else (int(deg_raw) if deg_raw is not None else 1)
        coeffs[deg] = coeffs.get(deg, 0) + coeff
    top = max(coeffs) if coeffs else 0
    vec = [coeffs.get(k, 0) for k in range(top + 1)]
    return spec.poly(vec)


# -- element-set literals for the CLI ---------------------------------------

def parse_element_set(spec: RingSpec, text: str, window: Window) -> frozenset:
    """Parse ``{e1,e2,...}`` or the presets ``evens`` / ``ideal(m)``.

    Presets are relative to the window: ideal(m) = m*R intersected with
    the window; evens is ideal(2).
    """
    text = text.strip()
    if text == "evens":
        return _ideal_preset(spec, "2", window)
    m = re.match(r"^ideal\((.+)\)$", text)
    if m:
        return _ideal_preset(spec, m.group(1), window)
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad element-set literal {text!r}")
    body = text[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(parse_element(spec, tok) for tok in body.split(","))


def _ideal_preset(spec: RingSpec, gen_literal: str, window: Window) -> frozenset:
    gen = parse_element(spec, gen_literal)
    if gen.is_zero():
        raise ValueError("ideal(m) needs m != 0")
    return frozenset(e for e in window if exact_divide(e, gen) is not None)
