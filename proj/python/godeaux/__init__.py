"""Exact linear systems of singular plane curves and double plane invariants."""

import json as _json

from ._core import (
    ContractError,
    DomainError,
    Report,
    Scene,
    SceneError,
    Status,
    absolute_factor_count,
    builtin_scene,
    dim,
    embedded_names,
    invariants,
    locus,
    multiplicity_at,
    normalize,
    parse_scene,
    reproduce,
    run_cli,
    solve,
    torsion,
    verify,
)


def report_dict(report):
    """The JSON form of a report as a dict with task, status, data, witnesses."""
    return _json.loads(report.json())


def load_scene(path):
    with open(path, encoding="utf-8") as f:
        return parse_scene(f.read())


__all__ = [
    "ContractError",
    "DomainError",
    "Report",
    "Scene",
    "SceneError",
    "Status",
    "absolute_factor_count",
    "builtin_scene",
    "dim",
    "embedded_names",
    "invariants",
    "load_scene",
    "locus",
    "multiplicity_at",
    "normalize",
    "parse_scene",
    "report_dict",
    "reproduce",
    "run_cli",
    "solve",
    "torsion",
    "verify",
]
