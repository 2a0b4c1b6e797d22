from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field as dataclass_field

from ..errors import DegenerateSpectrumError
from ..fields import descriptor_of, field_embedding, sqrt, unity_context
from .matrix_utils import determinant
from .polynomial_utils import dickson_eval
from .tridiagonal import build_tridiagonal, decompose_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumComponent:
    """One T block: its order, the n + 1 = p^r (m + 1) split, and how often it repeats."""

    order: int
    r: int
    m: int
    repeat: int = 1

    def root_order(self, p):
        return self.m + 1 if p == 2 else 2 * (self.m + 1)


@dataclass(eq=False)
class SpectrumMultiset:
    ctx: object
    pairs: list
    components: list = dataclass_field(default_factory=list)
    sqrt_bc: object = None

    @property
    def r(self):
        return self.components[0].r

    @property
    def m(self):
        return self.components[0].m

    @property
    def size(self):
        return sum(multiplicity for _, multiplicity in self.pairs)

    def values(self):
        return [value for value, _ in self.pairs]


def spectrum_components(spec):
    if spec.kind == "T":
        orders = [(spec.n, 1)]
    elif spec.n % 2 == 0:
        orders = [(spec.n // 2, 2)]
    else:
        orders = [(spec.n // 2, 1), (spec.n // 2 + 1, 1)]
    components = []
    for order, repeat in orders:
        if order == 0:
            continue
        r, m = decompose_order(order + 1, spec.field.p)
        components.append(SpectrumComponent(order=order, r=r, m=m, repeat=repeat))
    return components


def _explicit_sqrt(spec):
    """Square root of b*c in the base field when a closed form exists, else None."""
    if spec.is_symmetric():
        return spec.b
    if spec.is_hermitian():
        q = spec.field.quadratic_base
        if spec.field.p == 2:
            return spec.b ** ((q + 1) * q * q // 2)
        return spec.b ** ((q + 1) // 2)
    return sqrt(spec.b * spec.c)


def _element_order(x):
    descriptor = descriptor_of(x)
    return (descriptor.order - 1) // math.gcd(descriptor.log(x), descriptor.order - 1)


def char_poly_value(spec, lam):
    """phi_n(lam) = E_n(a - lam, bc) for T, and phi_{floor(n/2)} * phi_{ceil(n/2)} for T'."""
    a, b, c = spec.a, spec.b, spec.c
    target = descriptor_of(lam)
    if target is not spec.field:
        embedding = field_embedding(spec.field, target)
        a, b, c = embedding(a), embedding(b), embedding(c)
    if spec.kind == "T":
        return dickson_eval(spec.n, a - lam, b * c)
    low, high = spec.n // 2, spec.n - spec.n // 2
    return dickson_eval(low, a - lam, b * c) * dickson_eval(high, a - lam, b * c)


def eigen_spectrum(spec, need_mu=False, extra_orders=()):
    """Closed-form eigenvalue multiset of T_n(a, b, c) or T'_n(a, b, c).

    Args:
        spec: TridiagonalSpec with b*c nonzero.
        need_mu: Also place a square root of -1 in the working extension.
        extra_orders: Further element orders the extension must contain.

    Returns:
        SpectrumMultiset whose eigenvalues live in a single extension field.
    """
    if spec.b * spec.c == 0:
        raise DegenerateSpectrumError("b*c = 0: the closed-form spectrum does not apply")
    p = spec.field.p
    components = spectrum_components(spec)

    root = _explicit_sqrt(spec)
    extra = tuple(extra_orders)
    if root is None:
        extra += (2 * _element_order(spec.b * spec.c),)
        logger.debug("sqrt(bc) not in %s, extending", spec.field)

    k = math.lcm(*(component.root_order(p) for component in components))
    ctx = unity_context(spec.field, k, need_mu, extra)
    a = ctx.embed(spec.a)
    s = ctx.embed(root) if root is not None else sqrt(ctx.embed(spec.b * spec.c))
    two = ctx.ext.GF(2 % p)

    merged = {}
    for component in components:
        theta = ctx.theta ** (k // component.root_order(p))
        r, m, repeat = component.r, component.m, component.repeat
        entries = []
        if p == 2:
            if r == 0:
                entries += [(a - s * (theta**i + theta**-i), 2) for i in range(1, component.order // 2 + 1)]
            else:
                entries.append((a, 2**r - 1))
                entries += [(a - s * (theta**i + theta**-i), 2 ** (r + 1)) for i in range(1, m // 2 + 1)]
        else:
            if r >= 1:
                entries.append((a + two * s, (p**r - 1) // 2))
                entries.append((a - two * s, (p**r - 1) // 2))
            entries += [(a - s * (theta**i + theta**-i), p**r) for i in range(1, m + 1)]
        for value, multiplicity in entries:
            key = int(value)
            if key in merged:
                merged[key] = (merged[key][0], merged[key][1] + multiplicity * repeat)
            else:
                merged[key] = (value, multiplicity * repeat)

    return SpectrumMultiset(ctx=ctx, pairs=list(merged.values()), components=components, sqrt_bc=s)


def spectrum_consistency(spectrum, spec):
    """Violated spectrum invariants, as readable strings. Empty when consistent."""
    problems = []
    if spectrum.size != spec.n:
        problems.append(f"multiplicities sum to {spectrum.size}, expected {spec.n}")
    product = spectrum.ctx.ext.one
    for value, multiplicity in spectrum.pairs:
        product = product * value**multiplicity
    det = spectrum.ctx.embed(determinant(build_tridiagonal(spec)))
    if product != det:
        problems.append("eigenvalue product differs from the determinant")
    for value, _ in spectrum.pairs:
        if char_poly_value(spec, value) != 0:
            problems.append(f"eigenvalue {int(value)} is not a characteristic root")
    return problems
