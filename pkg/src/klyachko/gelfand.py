"""Gelfand-model verification for GL_n(F_q).

For every irreducible pi and every decomposition n = r + 2k this
computes the multiplicity of pi in the Klyachko model
Ind_{H_{r,2k}}^G(psi_r), assembles the full multiplicity matrix, and
reports four flags:

- existence:    every irreducible appears in some model,
- disjointness: no irreducible appears in two different models,
- uniqueness:   no multiplicity exceeds one,
- gelfand:      every total multiplicity is exactly one.

Disjointness and uniqueness are empirical findings per (n, q); nothing
here assumes them.  The dimension cross-check compares
sum_k [G : H_{n-2k,2k}] with sum_pi dim(pi), two independently computed
integers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import __version__
from .arena import ModularArena, build_arena
from .characters import DEFAULT_SEED, ClassFunction, character_table, induced_klyachko_character, multiplicity
from .config import DEFAULT_MAX_ELEMENTS
from .errors import CacheError
from .gf import field_from_q
from .groups import GroupTable, KlyachkoSubgroupSpec, conjugacy_classes, gl_enumerate, h_order
from .tablecache import cache_path, load_table, save_table


@dataclass(frozen=True)
class GelfandRow:
    index: int
    dim: int
    mults: tuple[tuple[int, int], ...]  # (k, multiplicity)
    total: int


@dataclass(frozen=True)
class GelfandReport:
    n: int
    q: int
    ell: int
    psi_seed: int
    class_count: int
    rows: tuple[GelfandRow, ...]
    existence: bool
    disjointness: bool
    uniqueness: bool
    gelfand: bool
    model_dims: tuple[tuple[int, int], ...]  # (k, [G : H_{n-2k,2k}])
    irreducible_dim_sum: int
    seconds: float = dc_field(compare=False, default=0.0)

    @property
    def model_dim_sum(self) -> int:
        return sum(d for _, d in self.model_dims)

    @property
    def dim_check(self) -> bool:
        return self.model_dim_sum == self.irreducible_dim_sum

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "ell": self.ell,
            "psi_seed": self.psi_seed,
            "class_count": self.class_count,
            "rows": [
                {
                    "index": row.index,
                    "dim": row.dim,
                    "mults": [list(pair) for pair in row.mults],
                    "total": row.total,
                }
                for row in self.rows
            ],
            "flags": {
                "existence": self.existence,
                "disjointness": self.disjointness,
                "uniqueness": self.uniqueness,
                "gelfand": self.gelfand,
            },
            "model_dims": [list(pair) for pair in self.model_dims],
            "dim_check": {
                "model_total": self.model_dim_sum,
                "irreducible_total": self.irreducible_dim_sum,
                "equal": self.dim_check,
            },
            "meta": {"version": __version__, "table_seed": DEFAULT_SEED},
        }


def load_or_compute_table(n: int, q: int, cache_dir: str | Path | None = None,
                          max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    field = field_from_q(q)
    if cache_dir is not None:
        path = cache_path(cache_dir, n, q)
        if path.exists():
            try:
                cached = load_table(path, field, n)
                if cached.classes is not None:
                    return cached
            except CacheError:
                pass  # fall through and recompute
    table = conjugacy_classes(gl_enumerate(n, field, max_elements=max_elements))
    if cache_dir is not None:
        save_table(table, cache_path(cache_dir, n, q))
    return table


def model_multiplicity_matrix(table: GroupTable, arena: ModularArena,
                              chars: list[ClassFunction], psi: int = 1,
                              ) -> tuple[list[list[int]], list[int]]:
    """Multiplicities [pi][k] over k = 0..floor(n/2), plus model dims."""
    n = table.n
    matrix: list[list[int]] = [[] for _ in chars]
    dims = []
    for k in range(n // 2 + 1):
        spec = KlyachkoSubgroupSpec(n - 2 * k, k, psi_generator=psi)
        chi_model = induced_klyachko_character(table, spec, arena)
        dims.append(chi_model.dimension(table))
        for i, cf in enumerate(chars):
            matrix[i].append(multiplicity(chi_model, cf, table))
    return matrix, dims


def verify_gelfand(n: int, q: int, *, ell: int | None = None, psi: int = 1,
                   max_elements: int = DEFAULT_MAX_ELEMENTS,
                   cache_dir: str | Path | None = None,
                   table: GroupTable | None = None,
                   seed: int = DEFAULT_SEED) -> GelfandReport:
    """Run the full verification for one (n, q)."""
    start = time.monotonic()
    if table is None:
        table = load_or_compute_table(n, q, cache_dir=cache_dir, max_elements=max_elements)
    else:
        conjugacy_classes(table)
    arena = build_arena(table.order, table.exponent(), table.field.p, ell=ell)
    chars = character_table(table, arena, seed=seed)
    matrix, model_dims = model_multiplicity_matrix(table, arena, chars, psi=psi)
    rows = []
    for i, cf in enumerate(chars):
        mults = matrix[i]
        rows.append(
            GelfandRow(
                index=i,
                dim=cf.dimension(table),
                mults=tuple((k, m) for k, m in enumerate(mults)),
                total=sum(mults),
            )
        )
    existence = all(row.total >= 1 for row in rows)
    disjointness = all(sum(1 for _, m in row.mults if m) <= 1 for row in rows)
    uniqueness = all(m <= 1 for row in rows for _, m in row.mults)
    gelfand = all(row.total == 1 for row in rows)
    # independent dimension bookkeeping: index formula vs character dims
    for k, dim in enumerate(model_dims):
        assert dim == table.order // h_order(n - 2 * k, k, q)
    return GelfandReport(
        n=n,
        q=q,
        ell=arena.ell,
        psi_seed=psi,
        class_count=len(table.classes),
        rows=tuple(rows),
        existence=existence,
        disjointness=disjointness,
        uniqueness=uniqueness,
        gelfand=gelfand,
        model_dims=tuple((k, d) for k, d in enumerate(model_dims)),
        irreducible_dim_sum=sum(cf.dimension(table) for cf in chars),
        seconds=time.monotonic() - start,
    )
