"""Exception types shared across the package."""


class DivtopError(Exception):
    """Base class for every error this package raises on purpose."""


class ZeroElement(DivtopError):
    """Operation needs a nonzero element."""


class UnitElement(DivtopError):
    """Operation needs a non-unit element."""


class ZeroDivisor(DivtopError):
    """Divisibility query with a zero left-hand side."""


class RingMismatch(DivtopError):
    """Operands belong to different rings."""


class CapabilityMissing(DivtopError):
    """The ring does not support the requested operation."""


class NotAtomic(CapabilityMissing):
    """Factorization requested on a ring without the atomic capability."""


class SizeGuard(DivtopError):
    """Input exceeds the ring's enumeration bounds."""


class FragmentTooLarge(DivtopError):
    """Fragment would exceed the global point cap."""


class FragmentTooLargeForEnumeration(DivtopError):
    """Open-set enumeration requested on a fragment above the enumeration cap."""


class PointNotInFragment(DivtopError):
    """A class was used with a fragment that does not contain it."""


class FragmentMismatch(DivtopError):
    """A point set was used with a fragment it does not belong to."""


class EmptyFamily(DivtopError):
    """An operation that needs a nonempty family received an empty one."""


class NotIrreducible(DivtopError):
    """A witness constructor needs irreducible inputs."""


class AssociatedInputs(DivtopError):
    """A witness constructor needs pairwise non-associated inputs."""


class ModulusMissing(DivtopError):
    """Ring needs a modulus parameter that was not supplied."""


class ElementSyntaxError(DivtopError):
    """Element text does not match the ring's grammar."""

    def __init__(self, text: str, position: int, reason: str):
        super().__init__(f"{reason} at position {position} in {text!r}")
        self.text = text
        self.position = position
        self.reason = reason
