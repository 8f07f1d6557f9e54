"""Verification reports with canonical JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

MAX_COUNTEREXAMPLES = 10


@dataclass
class CheckReport:
    """Outcome of one lemma verification on one instance.

    ``counterexamples`` holds at most MAX_COUNTEREXAMPLES entries, each a
    JSON-serializable dict; enumeration order is deterministic, so reports
    are byte-stable across runs.
    """

    lemma: str
    instance: dict
    level: str
    passed: bool
    counterexamples: list = field(default_factory=list)
    wall_ms: int | None = None

    def add_counterexample(self, entry: dict) -> None:
        self.passed = False
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(entry)

    def to_json_dict(self, *, include_timings: bool = False) -> dict:
        out = {
            "lemma": self.lemma,
            "instance": self.instance,
            "level": self.level,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
        }
        if include_timings and self.wall_ms is not None:
            out["wall_ms"] = self.wall_ms
        return out

    def sort_key(self) -> tuple[str, str]:
        return (self.lemma, json.dumps(self.instance, sort_keys=True))


def instance_label(type_string: str | None, nodes) -> dict:
    return {"type": type_string or "custom", "levi": sorted(nodes)}


def dumps_canonical(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
