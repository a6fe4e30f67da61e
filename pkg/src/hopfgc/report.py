"""Structured validation results."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, List, Optional

TOOL_VERSION = "0.1.0"


def _load_tags() -> dict:
    with resources.files("hopfgc").joinpath("tags.json").open("r", encoding="utf-8") as fh:
        return json.load(fh)


_TAGS = _load_tags()


def tag_for(check_id: str) -> str:
    """Reference tag for a check id; falls back to the id's family prefix."""
    if check_id in _TAGS:
        return _TAGS[check_id]
    family = check_id.split(":")[0]
    return _TAGS.get(family, "")


@dataclass
class Failure:
    check: str
    where: tuple
    lhs: Any
    rhs: Any

    def as_dict(self, fmt=repr) -> dict:
        return {"where": [fmt(w) for w in self.where], "lhs": fmt(self.lhs), "rhs": fmt(self.rhs)}


@dataclass
class ValidationReport:
    failures: List[Failure] = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)

    def fail(self, check: str, where, lhs, rhs) -> None:
        self.counts[check] += 1
        self.failures.append(Failure(check, tuple(where), lhs, rhs))

    def tick(self, check: str, n: int = 1) -> None:
        self.counts[check] += n

    def expect(self, check: str, where, lhs, rhs, equal) -> bool:
        if equal(lhs, rhs):
            self.counts[check] += 1
            return True
        self.fail(check, where, lhs, rhs)
        return False

    def extend(self, other: "ValidationReport") -> "ValidationReport":
        self.failures.extend(other.failures)
        self.counts.update(other.counts)
        return self

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        # truthy means "has problems", mirroring a non-empty list of violations
        return bool(self.failures)

    def __len__(self):
        return len(self.failures)

    def failed_checks(self) -> List[str]:
        return sorted({f.check for f in self.failures})

    def by_check(self, check: str) -> List[Failure]:
        return [f for f in self.failures if f.check == check]

    def checks(self) -> List[str]:
        return sorted(set(self.counts) | {f.check for f in self.failures})

    def summary(self) -> str:
        if self.ok:
            return f"ok ({sum(self.counts.values())} instances)"
        return f"{len(self.failures)} failures in {', '.join(self.failed_checks())}"


@dataclass
class CheckRecord:
    check: str
    tag: str
    status: str
    instances: int
    witnesses: List[dict]

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "tag": self.tag,
            "status": self.status,
            "instances": self.instances,
            "witnesses": self.witnesses,
        }


@dataclass
class Report:
    """What the command line emits: one record per check id plus an overall verdict."""

    input_digest: str
    records: List[CheckRecord] = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    tool_version: str = TOOL_VERSION

    @property
    def status(self) -> str:
        return "pass" if all(r.status == "pass" for r in self.records) else "fail"

    def add(self, rep: ValidationReport, prefix: str = "", fmt=repr) -> None:
        for check in rep.checks():
            fails = rep.by_check(check)
            cid = f"{prefix}{check}"
            self.records.append(
                CheckRecord(
                    cid,
                    tag_for(check),
                    "fail" if fails else "pass",
                    rep.counts.get(check, 0),
                    [f.as_dict(fmt) for f in fails],
                )
            )

    def add_record(self, check: str, ok: bool, witnesses=(), instances=1, tag: Optional[str] = None):
        self.records.append(
            CheckRecord(check, tag if tag is not None else tag_for(check), "pass" if ok else "fail",
                        instances, list(witnesses))
        )

    def as_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
            "status": self.status,
            "notes": self.notes,
            "records": [r.as_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_human(self, full: bool = False) -> str:
        lines = [f"hopfgc {self.tool_version}  input {self.input_digest[:16]}  status {self.status.upper()}"]
        for k, v in sorted(self.notes.items()):
            lines.append(f"  note {k}: {v}")
        for r in self.records:
            tag = f" [{r.tag}]" if r.tag else ""
            noun = "instance" if r.instances == 1 else "instances"
            lines.append(f"  {r.status.upper():4} {r.check}{tag}  ({r.instances} {noun})")
            shown = r.witnesses if full else r.witnesses[:3]
            for w in shown:
                lines.append(f"       at {w.get('where')}: lhs={w.get('lhs')} rhs={w.get('rhs')}")
            if len(r.witnesses) > len(shown):
                lines.append(f"       ... {len(r.witnesses) - len(shown)} more (use --full)")
        return "\n".join(lines) + "\n"
