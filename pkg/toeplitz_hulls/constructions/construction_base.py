from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property

from ..codes import from_generator
from ..errors import FieldMismatchError, ShapeError
from ..fields import format_element, make_field
from ..linalg import build_tridiagonal, format_polynomial, hconcat, identity, poly_eval_matrix


@dataclass(frozen=True, eq=False)
class ConstructionSpec:
    """A derivative code (I | f_1(A) | ... | f_{t-1}(A)) or a power code (I | A^k), A tridiagonal Toeplitz."""

    tridiag: object
    inner: str = "E"
    polynomials: tuple = ()
    exponent: int | None = None

    @property
    def field(self):
        return self.tridiag.field

    @property
    def family(self):
        return "power" if self.exponent is not None else "derivative"

    @property
    def t(self):
        return len(self.polynomials) + 1

    @property
    def k(self):
        return self.exponent

    @property
    def k_p_power(self):
        return self._split_exponent()[0]

    @property
    def k_prime(self):
        return self._split_exponent()[1]

    def _split_exponent(self):
        p, rest, power = self.field.p, self.exponent, 0
        while rest % p == 0:
            rest //= p
            power += 1
        return power, rest

    def validate(self):
        if self.inner not in ("E", "H"):
            raise ValueError(f"Unsupported inner product: {self.inner}")
        if self.exponent is not None:
            if self.polynomials:
                raise ValueError("A construction takes either polynomials or an exponent, not both")
            if self.exponent < 1:
                raise ValueError(f"Power exponent must be positive, got {self.exponent}")
            if self.inner != "E":
                raise ShapeError("Power codes use the Euclidean inner product")
        else:
            if not self.polynomials:
                raise ValueError("A derivative code needs at least one polynomial")
            for f in self.polynomials:
                if f.field is not self.field.GF:
                    raise FieldMismatchError(f"Polynomial {f} is not over {self.field}")
        if self.inner == "E" and not self.tridiag.is_symmetric():
            raise ShapeError("Euclidean constructions need the symmetric shape c = b")
        if self.inner == "H" and not self.tridiag.is_hermitian():
            raise ShapeError("Hermitian constructions need a in GF(q) and c = b^q")
        return self

    def describe(self):
        spec = self.tridiag
        field = self.field
        text = f"q={field.order}"
        if make_field(field.p, field.m) is not field:
            modulus = format_polynomial(field.modulus_poly)
            text += f" modulus={modulus}"
        text += (
            f" kind={spec.kind} n={spec.n} a={format_element(spec.a)} b={format_element(spec.b)}"
            f" c={format_element(spec.c)} inner={self.inner}"
        )
        if self.exponent is not None:
            return text + f" k={self.exponent}"
        return text + " f=" + ";".join(format_polynomial(f) for f in self.polynomials)


class ConstructionBase(ABC):
    def __init__(self, spec):
        self.spec = spec.validate()

    @cached_property
    def matrix(self):
        return build_tridiagonal(self.spec.tridiag)

    @abstractmethod
    def blocks(self):
        """Right-hand blocks placed after the identity."""

    def generator(self):
        return hconcat(identity(self.spec.field, self.spec.tridiag.n), *self.blocks())

    def code(self):
        return from_generator(self.spec.field, self.generator(), self.spec.inner)


class DerivativeConstruction(ConstructionBase):
    def blocks(self):
        return [poly_eval_matrix(f, self.matrix) for f in self.spec.polynomials]


class PowerConstruction(ConstructionBase):
    def blocks(self):
        result = identity(self.spec.field, self.spec.tridiag.n)
        for _ in range(self.spec.exponent):
            result = result @ self.matrix
        return [result]


def construction_for(spec):
    if spec.family == "power":
        return PowerConstruction(spec)
    return DerivativeConstruction(spec)


def derivative_code(spec):
    if spec.family != "derivative":
        raise ValueError("derivative_code needs a polynomial payload")
    return DerivativeConstruction(spec).code()


def power_code(spec):
    if spec.family != "power":
        raise ValueError("power_code needs an exponent payload")
    return PowerConstruction(spec).code()
