"""Object handles for finite star-autonomous models.

Objects are hash-consed descriptor terms over a model's declared generators,
closed under tensor, par, the two units and the two duals.  Structurally
equal descriptors are interned to the same handle, so ``is`` comparison is
object equality.
"""

from dataclasses import dataclass, field


class UniverseError(Exception):
    """A descriptor falls outside the model's generated universe."""


TENS = "tens"
PAR = "par"
UNIT_T = "unit_t"   # the tensor unit
UNIT_P = "unit_p"   # the par unit (dualizing object)
RDUAL = "rdual"     # right dual, written with a leading bottom in reports
LDUAL = "ldual"     # left dual
GEN = "gen"


@dataclass(frozen=True, eq=False)
class ObjRef:
    """Interned handle for an object descriptor.

    ``args`` holds child ObjRefs for composite kinds and a generator name for
    ``gen``.  Equality and hashing are by identity; the interner guarantees
    structural equality implies identity within one model.
    """

    kind: str
    args: tuple
    depth: int
    key: str = field(default="", compare=False)

    def __str__(self):
        return self.key

    def __repr__(self):
        return f"ObjRef({self.key})"


def _key_of(kind, args):
    if kind == GEN:
        return args[0]
    if kind == UNIT_T:
        return "e"
    if kind == UNIT_P:
        return "d"
    if kind == RDUAL:
        return "⊥" + args[0].key
    if kind == LDUAL:
        return "ᵖ" + args[0].key
    if kind == TENS:
        return f"({args[0].key}⊗{args[1].key})"
    if kind == PAR:
        return f"({args[0].key}⅋{args[1].key})"
    raise ValueError(kind)


class Interner:
    """Hash-consing table for one model's descriptors."""

    def __init__(self, depth_limit):
        self.depth_limit = depth_limit
        self._table = {}

    def intern(self, kind, args):
        ident = (kind,) + tuple(id(a) if isinstance(a, ObjRef) else a for a in args)
        hit = self._table.get(ident)
        if hit is not None:
            return hit
        if kind in (UNIT_T, UNIT_P):
            depth = 0
        elif kind == GEN:
            depth = 0
        elif kind in (RDUAL, LDUAL):
            depth = args[0].depth + 1
        else:
            depth = 1 + max(args[0].depth, args[1].depth)
        if depth > self.depth_limit:
            raise UniverseError(
                f"descriptor depth {depth} exceeds the universe depth limit "
                f"{self.depth_limit}; rebuild the model with a larger depth "
                f"(CLI flag --depth)")
        ref = ObjRef(kind, tuple(args), depth)
        object.__setattr__(ref, "key", _key_of(kind, args))
        self._table[ident] = ref
        return ref
