"""Exception hierarchy shared by all permlat modules."""


class PermlatError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(PermlatError):
    """Two permutations (or a permutation and a group) act on different point sets."""


class NotAPermutation(PermlatError):
    """An image array is not a bijection on {0..degree-1}."""


class NotASubgroup(PermlatError):
    """A claimed subgroup has a generator outside the parent group."""


class NotMembers(PermlatError):
    """Elements handed to an operation do not belong to the ambient group."""


class BoundExceeded(PermlatError):
    """A brute-force operation was asked to exceed its configured size cap."""


class DegenerateInput(PermlatError):
    """The operation is undefined for this input (e.g. the trivial group)."""


class InvalidPoint(PermlatError):
    """A point index is out of range or violates a precondition (e.g. a == b)."""


class IntransitiveAction(PermlatError):
    """An operation requiring a transitive action received an intransitive one."""


class NotAPartialOrder(PermlatError):
    """Cover/relation input does not describe a partial order."""


class NotALattice(PermlatError):
    """A partial order is missing a meet or join for some pair."""


class NoBoundedTop(PermlatError):
    """A partial order has no unique top (or bottom) element."""


class TooFewPanels(PermlatError):
    """The parachute constructor needs at least two panels."""


class PanelTooSmall(PermlatError):
    """Every parachute panel must have at least two elements."""


class ShapeMismatch(PermlatError):
    """Wreath elements with incompatible coordinate counts or base degrees."""


class IndexTooSmall(PermlatError):
    """The wreath construction needs |G:H| >= 3."""


class NotInInterval(PermlatError):
    """A subgroup is not inside the interval it was claimed to belong to."""


class EmptyCatalog(PermlatError):
    """The search catalog has no entries."""


class EmptyInput(PermlatError):
    """A nonempty collection was required."""


class ParseError(PermlatError):
    """A group file or lattice JSON document is malformed."""


class NotCoreFree(PermlatError):
    """A core-free subgroup was required."""


class PermlatWarning(UserWarning):
    """Base class for warnings issued by this package."""


class NotSimpleWarning(PermlatWarning):
    """The base group of a wreath construction is not nonabelian simple."""


class HypothesisViolated(PermlatWarning):
    """An input violates a theorem hypothesis; results carry no guarantee."""
