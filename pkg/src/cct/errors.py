"""Exceptions raised by the kernel.

Every kernel error carries the witness that makes the failure checkable,
so callers (the DSL, the CLI) can report it without recomputing anything.
"""


class KernelError(Exception):
    """Base class for all kernel failures."""


class NotARelation(KernelError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"element {witness!r} is not an ordered pair")


class NotFunctional(KernelError):
    def __init__(self, x, images):
        self.x = x
        self.images = tuple(images)
        super().__init__(f"{x!r} has more than one image: {self.images!r}")


class OutsideDomain(KernelError):
    def __init__(self, x):
        self.x = x
        super().__init__(f"{x!r} is outside the domain")


class NotInjective(KernelError):
    def __init__(self, x, x2):
        self.x, self.x2 = x, x2
        super().__init__(f"{x!r} and {x2!r} have the same image")


class NotWellDefined(KernelError):
    def __init__(self, x, x2):
        self.x, self.x2 = x, x2
        super().__init__(
            f"{x!r} and {x2!r} have equal proxy images but different target values"
        )


class DomainNotPairs(KernelError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"domain element {witness!r} is not an ordered pair")


class NotSetFamily(KernelError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"family value at index {index!r} is not a set")


class NotFunctionFamily(KernelError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"family value at index {index!r} is not a function")


class NotRelationFamily(KernelError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"family value at index {index!r} is not a relation")


class EmptyFamily(KernelError):
    def __init__(self):
        super().__init__("family must be nonempty")


class EmptyIndex(KernelError):
    def __init__(self):
        super().__init__("index set must be nonempty")


class CarrierMismatch(KernelError):
    def __init__(self, index, reason=""):
        self.index = index
        self.reason = reason
        msg = f"carrier mismatch at index {index!r}"
        super().__init__(f"{msg}: {reason}" if reason else msg)


class BudgetExceeded(KernelError):
    def __init__(self, estimate, cap):
        self.estimate = estimate
        self.cap = cap
        super().__init__(f"estimated {estimate} instances exceeds cap {cap}")


class UnknownLaw(KernelError, LookupError):
    def __init__(self, law_id):
        self.law_id = law_id
        super().__init__(f"unknown law {law_id!r}")
