from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property, lru_cache

import galois
import numpy as np

from ..config import get_setting
from ..errors import (
    FieldConstructionError,
    FieldMismatchError,
    FieldSizeError,
    QuadraticStructureError,
)

logger = logging.getLogger(__name__)

_DESCRIPTORS = {}


@dataclass(frozen=True)
class FieldDescriptor:
    """GF(p^m) with a fixed primitive modulus and generator.

    `modulus` holds the descending integer coefficients of the modulus over GF(p);
    `GF` is the galois FieldArray class doing the arithmetic.
    """

    p: int
    m: int
    modulus: tuple
    GF: type = dataclass_field(compare=False, repr=False)

    @property
    def order(self):
        return self.p**self.m

    @property
    def generator(self):
        return self.GF.primitive_element

    @property
    def zero(self):
        return self.GF(0)

    @property
    def one(self):
        return self.GF(1)

    @property
    def quadratic_base(self):
        """q with q^2 = order, or None when the extension degree is odd."""
        if self.m % 2:
            return None
        return self.p ** (self.m // 2)

    @property
    def modulus_poly(self):
        return galois.Poly(list(self.modulus), field=make_field(self.p).GF)

    def element(self, value):
        if isinstance(value, galois.FieldArray):
            require_field(value, self)
            return value
        # integers name prime-subfield elements
        return self.GF(int(value) % self.p)

    def contains(self, x):
        return isinstance(x, galois.FieldArray) and type(x) is self.GF

    def log(self, x):
        return int(np.asarray(x.log()))

    def __str__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


def descriptor_of(x):
    try:
        return _DESCRIPTORS[type(x)]
    except KeyError:
        raise FieldMismatchError(f"Value {x!r} does not belong to a constructed field") from None


def require_field(x, descriptor):
    if type(x) is not descriptor.GF:
        raise FieldMismatchError(f"Element {x} is not in {descriptor}")


@lru_cache(maxsize=None)
def _build_field(p, m, modulus):
    if m == 1:
        generator = (-modulus[1]) % p
        GF = galois.GF(p, primitive_element=generator)
    else:
        poly = galois.Poly(list(modulus), field=galois.GF(p))
        try:
            GF = galois.GF(p**m, irreducible_poly=poly, primitive_element=p)
        except ValueError as exc:
            raise FieldConstructionError(f"Modulus {poly} is not primitive over GF({p})") from exc
    descriptor = FieldDescriptor(p=p, m=m, modulus=tuple(modulus), GF=GF)
    _DESCRIPTORS[GF] = descriptor
    logger.debug("Built %s with modulus %s", descriptor, modulus)
    return descriptor


def make_field(p, m=1, modulus=None, limit=None):
    """Build GF(p^m).

    Args:
        p: Prime characteristic.
        m: Extension degree.
        modulus: Optional primitive modulus (galois.Poly over GF(p) or descending
            coefficient sequence). Defaults to the lexicographically smallest primitive
            polynomial, which for m = 1 is x - g with g the largest primitive root.
        limit: Largest allowed order; defaults to the `field_size_limit` setting.

    Returns:
        The cached FieldDescriptor.
    """
    if not galois.is_prime(p):
        raise FieldConstructionError(f"Characteristic {p} is not prime")
    if m < 1:
        raise FieldConstructionError(f"Extension degree must be positive, got {m}")
    limit = get_setting("field_size_limit", limit)
    if p**m > limit:
        raise FieldSizeError(p**m, limit)

    if modulus is None:
        if m == 1:
            coeffs = (1, next(c for c in range(p) if _is_primitive_root((-c) % p, p)))
        else:
            coeffs = tuple(int(c) for c in galois.primitive_poly(p, m, method="min").coeffs)
    else:
        if isinstance(modulus, galois.Poly):
            coeffs = tuple(int(c) for c in modulus.coeffs)
        else:
            coeffs = tuple(int(c) % p for c in modulus)
        if len(coeffs) != m + 1 or coeffs[0] != 1:
            raise FieldConstructionError(f"Modulus must be monic of degree {m}: {coeffs}")
        if m == 1 and not _is_primitive_root((-coeffs[1]) % p, p):
            raise FieldConstructionError(f"Modulus {coeffs} is not primitive over GF({p})")
    return _build_field(p, m, coeffs)


def _is_primitive_root(g, p):
    if g == 0:
        return False
    if p == 2:
        return True
    return all(pow(g, (p - 1) // r, p) != 1 for r in galois.factors(p - 1)[0])


def field_from_order(q, modulus=None, limit=None):
    if q < 2 or not galois.is_prime_power(q):
        raise FieldConstructionError(f"Field order {q} is not a prime power")
    primes, exponents = galois.factors(q)
    return make_field(int(primes[0]), int(exponents[0]), modulus=modulus, limit=limit)


def _check_pair(x, y):
    if type(x) is not type(y):
        raise FieldMismatchError(f"Elements {x} and {y} live in different fields")


def add(x, y):
    _check_pair(x, y)
    return x + y


def subtract(x, y):
    _check_pair(x, y)
    return x - y


def multiply(x, y):
    _check_pair(x, y)
    return x * y


def inverse(x):
    if x == 0:
        raise ZeroDivisionError("Cannot invert zero")
    return x ** -1


def power(x, e):
    if e < 0 and x == 0:
        raise ZeroDivisionError("Cannot raise zero to a negative power")
    return x ** int(e)


def conjugate(x):
    """Frobenius conjugation x -> x^q of GF(q^2) over GF(q). Works elementwise on arrays."""
    descriptor = descriptor_of(x)
    q = descriptor.quadratic_base
    if q is None:
        raise QuadraticStructureError(f"{descriptor} has no quadratic subfield structure")
    return x**q


def sqrt(x):
    """Canonical square root, or None for a non-residue."""
    descriptor = descriptor_of(x)
    if descriptor.p == 2:
        return x ** (descriptor.order // 2)
    if x == 0:
        return x
    e = descriptor.log(x)
    if e % 2:
        return None
    return descriptor.generator ** (e // 2)


class FieldEmbedding:
    """Homomorphic embedding GF(p^m) -> GF(p^M) for m | M.

    The base generator goes to the root of the base modulus in the extension with the
    smallest discrete log.
    """

    def __init__(self, base, ext):
        if base.p != ext.p or ext.m % base.m:
            raise FieldMismatchError(f"{base} does not embed in {ext}")
        self.base = base
        self.ext = ext
        self.generator_image = self._find_generator_image()

    def _find_generator_image(self):
        base, ext = self.base, self.ext
        if base is ext:
            return ext.generator
        if base.m == 1:
            return ext.GF(int(base.generator))
        q, Q = base.order, ext.order
        step = (Q - 1) // (q - 1)
        lifted = galois.Poly(list(base.modulus), field=ext.GF)
        for t in range(1, q - 1):
            if math.gcd(t, q - 1) != 1:
                continue
            candidate = ext.generator ** (t * step)
            if lifted(candidate) == 0:
                return candidate
        raise FieldConstructionError(f"No root of the {base} modulus in {ext}")

    @cached_property
    def table(self):
        table = np.zeros(self.base.order, dtype=np.int64)
        if self.base is self.ext:
            table[:] = np.arange(self.base.order)
            return table
        current_base, current_image = self.base.one, self.ext.one
        for _ in range(self.base.order - 1):
            table[int(current_base)] = int(current_image)
            current_base = current_base * self.base.generator
            current_image = current_image * self.generator_image
        return table

    def __call__(self, x):
        require_field(x, self.base)
        if self.base is self.ext:
            return x
        return self.ext.GF(self.table[x.view(np.ndarray)])

    def poly(self, f):
        if self.base is self.ext:
            return f
        return galois.Poly(self(f.coeffs), field=self.ext.GF)


@lru_cache(maxsize=None)
def field_embedding(base, ext):
    return FieldEmbedding(base, ext)


@dataclass(frozen=True, eq=False)
class UnityContext:
    """Extension GF(q^s) of a base GF(q) holding a primitive k-th root of unity."""

    base: FieldDescriptor
    ext: FieldDescriptor
    k: int
    theta: object
    mu: object
    embedding: FieldEmbedding

    @property
    def s(self):
        return self.ext.m // self.base.m

    @property
    def generator_image(self):
        return self.embedding.generator_image

    @property
    def embed_map(self):
        return self.embedding

    def embed(self, x):
        return self.embedding(x)

    def embed_poly(self, f):
        return self.embedding.poly(f)

    def root_of_unity(self, order):
        """Element of exact multiplicative order `order` in the extension."""
        if (self.ext.order - 1) % order:
            raise FieldConstructionError(f"{self.ext} has no element of order {order}")
        return self.ext.generator ** ((self.ext.order - 1) // order)


@lru_cache(maxsize=None)
def unity_context(base, k, need_mu=False, extra_orders=()):
    """Smallest extension of `base` containing a primitive k-th root of unity.

    `need_mu` also asks for a square root of -1 (odd characteristic); `extra_orders`
    lists further element orders the extension must contain.
    """
    if k < 1:
        raise ValueError(f"Root-of-unity order must be positive, got {k}")
    orders = [k, *extra_orders]
    if need_mu and base.p != 2:
        orders.append(4)
    for order in orders:
        if order % base.p == 0:
            raise FieldConstructionError(
                f"No element of order {order} exists in characteristic {base.p}"
            )
    modulus = math.lcm(*orders)
    s = 1
    while modulus > 1 and pow(base.order, s, modulus) != 1:
        s += 1
    ext = base if s == 1 else make_field(base.p, base.m * s)
    theta = ext.generator ** ((ext.order - 1) // k)
    mu = ext.generator ** ((ext.order - 1) // 4) if need_mu and base.p != 2 else None
    logger.debug("Unity context for order %d over %s uses %s", k, base, ext)
    return UnityContext(base=base, ext=ext, k=k, theta=theta, mu=mu, embedding=field_embedding(base, ext))


def embed(x, ctx):
    return ctx.embed(x)
