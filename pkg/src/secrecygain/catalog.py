"""Reference lattices: the ten extremal even unimodular dimensions and a few auxiliaries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Any

from .lattice import GramMatrix, ThetaCoefficients, enumerate_counts
from .poly import PolyQ, format_rational, from_factored
from .qseries import BasisCoeffsGeneral, extremal_b_coeffs
from .secrecy import denom_from_ar, denom_from_bj

EXTREMAL_DIMENSIONS = (8, 16, 24, 32, 40, 48, 56, 64, 72, 80)

# D(z) for the extremal lattices as sum c (1-z)^e z^f, locked regression data.
EXTREMAL_TABLE: dict[int, tuple[tuple[F, int, int], ...]] = {
    8: ((F(1), 1, 0),),
    16: ((F(1), 2, 0),),
    24: ((F(1), 3, 0), (F(-45, 16), 0, 2)),
    32: ((F(1), 4, 0), (F(-15, 4), 1, 2)),
    40: ((F(1), 5, 0), (F(-75, 16), 2, 2)),
    48: ((F(1), 6, 0), (F(-45, 8), 3, 2), (F(3915, 2048), 0, 4)),
    56: ((F(1), 7, 0), (F(-105, 16), 4, 2), (F(21735, 4096), 1, 4)),
    64: ((F(1), 8, 0), (F(-15, 2), 5, 2), (F(4905, 512), 2, 4)),
    72: ((F(1), 9, 0), (F(-135, 16), 6, 2), (F(60345, 4096), 3, 4), (F(-53325, 32768), 0, 6)),
    80: ((F(1), 10, 0), (F(-75, 8), 7, 2), (F(42525, 2048), 4, 4), (F(-202125, 32768), 1, 6)),
}

# Cartan matrix of the E8 root system (branch node 3 carries the arm of length 1).
E8_GRAM = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
)

# (z - 1/8)^2 written in the a-basis of a 16-dimensional form: a_r = 16^r d_r.
REFUTED_AR = (F(1, 64), F(-4), F(256))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    source: str  # "extremal_generated", "gram_file" or "explicit_ar"
    expected_D: PolyQ
    data: Any = None
    is_lattice: bool = True

    @property
    def factored(self) -> tuple[tuple[F, int, int], ...] | None:
        return EXTREMAL_TABLE.get(self.n) if self.source == "extremal_generated" else None

    def generated_D(self) -> PolyQ:
        """Recompute D from the entry's source data."""
        if self.source == "extremal_generated":
            return denom_from_bj(extremal_b_coeffs(self.n))
        if self.source == "explicit_ar":
            return denom_from_ar(BasisCoeffsGeneral(self.n, self.data))
        from .qseries import fit_a_basis

        counts = enumerate_counts(GramMatrix(self.data), self.n // 8 + 1)
        return denom_from_ar(fit_a_basis(counts, self.n))

    def theta(self, cut: int | None = None) -> ThetaCoefficients:
        """Vector counts N_0..N_cut (default: enough to fit the a-basis)."""
        if not self.is_lattice:
            raise ValueError(f"{self.name} is not a lattice")
        if cut is None:
            cut = self.n // 8 + 1
        if self.source == "extremal_generated":
            return ThetaCoefficients(extremal_b_coeffs(self.n).expand(cut + 1).as_ints())
        return enumerate_counts(GramMatrix(self.data), cut)

    def descriptor(self) -> dict:
        """JSON lattice descriptor understood by the command line tool."""
        if self.source == "extremal_generated":
            return {"name": self.name, "dim": self.n, "kind": "extremal"}
        if self.source == "gram_file":
            return {"name": self.name, "dim": self.n, "kind": "gram", "data": [list(r) for r in self.data]}
        return {
            "name": self.name,
            "dim": self.n,
            "kind": "ar",
            "data": [format_rational(a) for a in self.data],
        }


def _identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _build() -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    for n in EXTREMAL_DIMENSIONS:
        name = f"extremal-{n}"
        entries[name] = CatalogEntry(name, n, "extremal_generated", from_factored(EXTREMAL_TABLE[n]))
    for n in range(1, 9):
        entries[f"Z{n}"] = CatalogEntry(f"Z{n}", n, "gram_file", PolyQ([1]), _identity(n))
    entries["E8-gram"] = CatalogEntry("E8-gram", 8, "gram_file", PolyQ([1, -1]), E8_GRAM)
    entries["refuted-fixture"] = CatalogEntry(
        "refuted-fixture", 16, "explicit_ar", PolyQ([F(1, 64), F(-1, 4), 1]), REFUTED_AR, is_lattice=False
    )
    return entries


_ENTRIES = _build()


def catalog_names() -> list[str]:
    return list(_ENTRIES)


def catalog_entry(key: int | str) -> CatalogEntry:
    """Look up an extremal dimension (8, 16, ..., 80) or an auxiliary by name."""
    if isinstance(key, int) or (isinstance(key, str) and key.isdigit()):
        key = f"extremal-{int(key)}"
    try:
        return _ENTRIES[key]
    except KeyError:
        raise KeyError(f"unknown catalog entry {key!r}") from None


def lattice_entries() -> list[CatalogEntry]:
    return [e for e in _ENTRIES.values() if e.is_lattice]


def format_factored(terms) -> str:
    """Render sum c (1-z)^e z^f in the style of the published table."""
    out = ""
    for i, (c, e, f) in enumerate(terms):
        factors = []
        if e:
            factors.append("(1-z)" if e == 1 else f"(1-z)^{e}")
        if f:
            factors.append("z" if f == 1 else f"z^{f}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, format_rational(mag))
        body = "*".join(factors)
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out
