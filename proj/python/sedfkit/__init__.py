"""Alpha-valuations of complete bipartite graphs and the SEDFs they induce."""

import json as _json

from ._core import (
    SedfkitError,
    Valuation,
    blowup,
    canonical_form,
    compose,
    decompose,
    dihedral_equivalence,
    equivalent,
    phi,
    project,
    to_sedf,
    verify_dihedral_tile,
    verify_sedf,
    verify_valuation,
)
from ._core import enumerate_sedfs as _enumerate_sedfs


def enumerate_sedfs(a, workers=1, unit_filter=True):
    """Return the enumeration report for Z_{a^2+1} as a dict."""
    return _json.loads(_enumerate_sedfs(a, workers, unit_filter))


__all__ = [
    "SedfkitError",
    "Valuation",
    "blowup",
    "canonical_form",
    "compose",
    "decompose",
    "dihedral_equivalence",
    "enumerate_sedfs",
    "equivalent",
    "phi",
    "project",
    "to_sedf",
    "verify_dihedral_tile",
    "verify_sedf",
    "verify_valuation",
]
