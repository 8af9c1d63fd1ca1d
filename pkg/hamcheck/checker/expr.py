# -*- encoding: utf-8 -*-
"""
Expression trees for theorem statements. Arithmetic nodes evaluate to ExtNat
against an InvariantReport and an optional lambda binding; conditions
evaluate to True, False or None (undecided).
"""
from dataclasses import dataclass

from hamcheck.core.constants import Predicate
from hamcheck.invariants.extnat import ExtNat, ext_min
from hamcheck.invariants.report import MissingAtomError

# atom name -> InvariantReport attribute
ATOMS = {
    "n": "n",
    "p": "p",
    "c": "c",
    "kappa": "connectivity",
    "delta": "min_degree",
    "alpha": "independence_number",
}


def as_expr(value):
    if isinstance(value, Expr):
        return value
    if isinstance(value, int):
        return Lit(value)
    raise TypeError(f"Cannot use {value!r} in an expression")


class Expr(object):
    """Arithmetic node; operators build trees, ge/eq build comparisons"""

    def __add__(self, other):
        return Add(self, as_expr(other))

    def __radd__(self, other):
        return Add(as_expr(other), self)

    def __sub__(self, other):
        return Sub(self, as_expr(other))

    def __rsub__(self, other):
        return Sub(as_expr(other), self)

    def __mul__(self, other):
        return Mul(self, as_expr(other))

    def __rmul__(self, other):
        return Mul(as_expr(other), self)

    def ge(self, other):
        return Comparison(self, ">=", as_expr(other))

    def eq(self, other):
        return Comparison(self, "==", as_expr(other))

    def children(self):
        return ()

    def sigma_orders(self, lam=None):
        """Every k such that evaluation reads sigma_k"""
        output = set()
        for child in self.children():
            output |= child.sigma_orders(lam)
        return output

    @property
    def uses_lambda(self):
        return any(child.uses_lambda for child in self.children())


@dataclass(frozen=True)
class Lit(Expr):
    value: int

    def evaluate(self, rep, lam=None):
        return ExtNat(self.value)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Atom(Expr):
    name: str

    def __post_init__(self):
        if self.name not in ATOMS:
            raise ValueError(f"Unknown atom {self.name}")

    def evaluate(self, rep, lam=None):
        return ExtNat(getattr(rep, ATOMS[self.name]))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Lambda(Expr):
    def evaluate(self, rep, lam=None):
        if lam is None:
            raise MissingAtomError("lambda is unbound")
        return ExtNat(lam)

    @property
    def uses_lambda(self):
        return True

    def __str__(self):
        return "lambda"


@dataclass(frozen=True)
class Sigma(Expr):
    """sigma_k for a literal k, or sigma_(lambda + offset) when k is None"""

    k: int = None
    offset: int = 0

    def order(self, lam=None):
        if self.k is not None:
            return self.k
        if lam is None:
            raise MissingAtomError(f"{self} needs a lambda binding")
        return lam + self.offset

    def evaluate(self, rep, lam=None):
        return rep.sigma_value(self.order(lam))

    def sigma_orders(self, lam=None):
        return {self.order(lam)}

    @property
    def uses_lambda(self):
        return self.k is None

    def __str__(self):
        if self.k is not None:
            return f"sigma_{self.k}"
        if self.offset:
            return f"sigma_(lambda{self.offset:+d})"
        return "sigma_lambda"


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)

    def evaluate(self, rep, lam=None):
        return self.left.evaluate(rep, lam) + self.right.evaluate(rep, lam)

    def __str__(self):
        return f"{self.left} + {self.right}"


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)

    def evaluate(self, rep, lam=None):
        return self.left.evaluate(rep, lam) - self.right.evaluate(rep, lam)

    def __str__(self):
        right = f"({self.right})" if isinstance(self.right, (Add, Sub)) else str(self.right)
        return f"{self.left} - {right}"


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)

    def evaluate(self, rep, lam=None):
        return self.left.evaluate(rep, lam) * self.right.evaluate(rep, lam)

    def __str__(self):
        parts = [f"({e})" if isinstance(e, (Add, Sub)) else str(e) for e in self.children()]
        return "*".join(parts)


@dataclass(frozen=True)
class Min(Expr):
    terms: tuple

    def children(self):
        return self.terms

    def evaluate(self, rep, lam=None):
        return ext_min(*(t.evaluate(rep, lam) for t in self.terms))

    def __str__(self):
        return "min{" + ", ".join(str(t) for t in self.terms) + "}"


def minimum(*terms):
    return Min(tuple(as_expr(t) for t in terms))


N, P, C = Atom("n"), Atom("p"), Atom("c")
KAPPA, DELTA, ALPHA = Atom("kappa"), Atom("delta"), Atom("alpha")
LAMBDA = Lambda()


def sigma(k=None, offset=0):
    return Sigma(k, offset)


class Condition(object):
    """Boolean node; evaluate returns True, False or None when undecided"""

    def children(self):
        return ()

    def sigma_orders(self, lam=None):
        output = set()
        for child in self.children():
            output |= child.sigma_orders(lam)
        return output

    def predicates(self):
        output = set()
        for child in self.children():
            if isinstance(child, Condition):
                output |= child.predicates()
        return output

    @property
    def uses_lambda(self):
        return any(child.uses_lambda for child in self.children())


@dataclass(frozen=True)
class Comparison(Condition):
    left: Expr
    op: str
    right: Expr

    def __post_init__(self):
        if self.op not in (">=", "=="):
            raise ValueError(f"Unsupported comparison {self.op}")

    def children(self):
        return (self.left, self.right)

    def evaluate(self, rep, lam=None):
        left, right = self.left.evaluate(rep, lam), self.right.evaluate(rep, lam)
        return left >= right if self.op == ">=" else left == right

    def __str__(self):
        return f"{self.left} {self.op} {self.right}"


@dataclass(frozen=True)
class Pred(Condition):
    name: Predicate

    def predicates(self):
        return {self.name}

    def evaluate(self, rep, lam=None):
        if self.name == Predicate.HAMILTONIAN:
            return rep.is_hamiltonian
        if rep.all_longest_cycles_dominating is not None:
            return rep.all_longest_cycles_dominating
        if rep.dominating_cap_exceeded or rep.c < 3:
            return None
        raise MissingAtomError(f"Dominating-cycle predicate not resolved for {rep.g6}")

    def __str__(self):
        return str(self.name)


@dataclass(frozen=True)
class AnyOf(Condition):
    terms: tuple

    def children(self):
        return self.terms

    def evaluate(self, rep, lam=None):
        values = [t.evaluate(rep, lam) for t in self.terms]
        if any(v is True for v in values):
            return True
        if any(v is None for v in values):
            return None
        return False

    def __str__(self):
        return " or ".join(f"({t})" if isinstance(t, AllOf) else str(t) for t in self.terms)


@dataclass(frozen=True)
class AllOf(Condition):
    terms: tuple

    def children(self):
        return self.terms

    def evaluate(self, rep, lam=None):
        values = [t.evaluate(rep, lam) for t in self.terms]
        if any(v is False for v in values):
            return False
        if any(v is None for v in values):
            return None
        return True

    def __str__(self):
        return " and ".join(f"({t})" if isinstance(t, AnyOf) else str(t) for t in self.terms)


def any_of(*terms):
    return AnyOf(tuple(terms))


def all_of(*terms):
    return AllOf(tuple(terms))


HAMILTONIAN = Pred(Predicate.HAMILTONIAN)
DOMINATING = Pred(Predicate.DOMINATING)
