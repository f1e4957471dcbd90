"""Tower config files: a start variety followed by blow-ups, blow-downs and flips.

The format is line oriented.  Blocks are separated by blank lines, every line
inside a block is ``key: value`` and ``#`` starts a comment.  The first block
names the start variety; each further block is one step introduced by ``op``::

    start: p4

    op: blowup_point

    op: flip_lines
    n: 1

    op: blowup_surface
    KS2: 0
    KS_dot_KW: 0
    KW2: 132
    c2N: 32
    chiOS: 2
    h11S: 20
    h20S: 1
    b1S: 0

Unknown keys, duplicates and missing keys are errors carrying line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields
from pathlib import Path

from .invariants import (
    FourfoldRecord,
    blow_down_surface,
    blow_up_point,
    blow_up_surface,
    flip_lines,
    p4_record,
)
from .surfaces import SurfaceData

__all__ = [
    "ConfigError",
    "TowerStepError",
    "Step",
    "TowerConfig",
    "parse_config",
    "load_config",
    "serialize_config",
    "run_tower",
]

STARTS = ("p4",)
SURFACE_KEYS = tuple(f.name for f in fields(SurfaceData))
STEP_KEYS = {
    "blowup_point": (),
    "flip_lines": ("n",),
    "blowup_surface": SURFACE_KEYS,
    "blowdown_surface": SURFACE_KEYS,
}

_INT = re.compile(r"[+-]?\d+")
_LINE = re.compile(r"(?P<key>[^:\s][^:]*?)\s*:\s*(?P<value>.*?)\s*$")


class ConfigError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class TowerStepError(ValueError):
    def __init__(self, index: int, op: str, reason: str):
        self.index = index
        self.op = op
        self.reason = reason
        super().__init__(f"step {index} ({op}): {reason}")


@dataclass(frozen=True)
class Step:
    op: str
    n: int | None = None
    data: SurfaceData | None = None

    def __post_init__(self):
        if self.op not in STEP_KEYS:
            raise ValueError(f"unknown op {self.op!r}")
        if (self.op == "flip_lines") != (self.n is not None):
            raise ValueError("n is required for flip_lines and only there")
        if (self.op in ("blowup_surface", "blowdown_surface")) != (self.data is not None):
            raise ValueError("surface data is required for surface steps and only there")


@dataclass(frozen=True)
class TowerConfig:
    start: str = "p4"
    steps: tuple[Step, ...] = ()


@dataclass
class _Entry:
    key: str
    value: str
    line: int
    key_col: int
    value_col: int


def _blocks(text: str) -> list[list[_Entry]]:
    blocks: list[list[_Entry]] = []
    current: list[_Entry] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            if current:
                blocks.append(current)
                current = []
            continue
        m = _LINE.match(body, len(body) - len(body.lstrip()))
        if m is None:
            col = len(body) - len(body.lstrip()) + 1
            raise ConfigError("expected 'key: value'", lineno, col)
        current.append(_Entry(m["key"], m["value"], lineno, m.start("key") + 1, m.start("value") + 1))
    if current:
        blocks.append(current)
    return blocks


def _int(entry: _Entry) -> int:
    if not _INT.fullmatch(entry.value):
        raise ConfigError(f"{entry.key} must be an integer, got {entry.value!r}", entry.line, entry.value_col)
    return int(entry.value)


def _keyed(head: _Entry, block: list[_Entry], allowed: tuple[str, ...]) -> dict[str, _Entry]:
    seen: dict[str, _Entry] = {}
    for entry in block:
        if entry.key not in allowed:
            raise ConfigError(f"unknown key {entry.key!r}", entry.line, entry.key_col)
        if entry.key in seen:
            raise ConfigError(f"duplicate key {entry.key!r}", entry.line, entry.key_col)
        seen[entry.key] = entry
    for key in allowed:
        if key not in seen:
            raise ConfigError(f"missing key {key!r} for op {head.value!r}", head.line, 1)
    return seen


def _step(block: list[_Entry]) -> Step:
    head = block[0]
    if head.key != "op":
        raise ConfigError("a step block must start with 'op'", head.line, head.key_col)
    if head.value not in STEP_KEYS:
        raise ConfigError(
            f"unknown op {head.value!r} (expected one of {', '.join(STEP_KEYS)})",
            head.line, head.value_col,
        )
    keys = STEP_KEYS[head.value]
    entries = _keyed(head, block[1:], keys) if keys else {}
    if not keys and len(block) > 1:
        extra = block[1]
        raise ConfigError(f"unknown key {extra.key!r}", extra.line, extra.key_col)
    if head.value == "flip_lines":
        n = _int(entries["n"])
        if n < 0:
            raise ConfigError("n must be nonnegative", entries["n"].line, entries["n"].value_col)
        return Step("flip_lines", n=n)
    if keys:
        values = {k: _int(entries[k]) for k in keys}
        try:
            data = SurfaceData(**values)
        except ValueError as exc:
            raise ConfigError(str(exc), head.line, 1) from None
        return Step(head.value, data=data)
    return Step(head.value)


def parse_config(text: str) -> TowerConfig:
    blocks = _blocks(text)
    if not blocks:
        raise ConfigError("empty config, expected 'start: p4'", 1)
    head = blocks[0]
    if head[0].key != "start":
        raise ConfigError("the first block must be 'start: <variety>'", head[0].line, head[0].key_col)
    if len(head) > 1:
        extra = head[1]
        raise ConfigError(
            f"unknown key {extra.key!r} in the start block (separate steps by a blank line)",
            extra.line, extra.key_col,
        )
    if head[0].value not in STARTS:
        raise ConfigError(f"unknown start {head[0].value!r}", head[0].line, head[0].value_col)
    return TowerConfig(head[0].value, tuple(_step(b) for b in blocks[1:]))


def load_config(path: str | Path) -> TowerConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def serialize_config(config: TowerConfig) -> str:
    blocks = [f"start: {config.start}"]
    for step in config.steps:
        lines = [f"op: {step.op}"]
        if step.n is not None:
            lines.append(f"n: {step.n}")
        if step.data is not None:
            lines += [f"{k}: {v}" for k, v in zip(SURFACE_KEYS, step.data.as_tuple())]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _apply(rec: FourfoldRecord, step: Step) -> FourfoldRecord:
    if step.op == "blowup_point":
        return blow_up_point(rec)
    if step.op == "flip_lines":
        return flip_lines(rec, step.n)
    if step.op == "blowup_surface":
        return blow_up_surface(rec, step.data)
    return blow_down_surface(rec, step.data)


def run_tower(config: TowerConfig) -> list[FourfoldRecord]:
    """Records after the start and after every step (steps numbered from 1)."""
    records = [p4_record()]
    for index, step in enumerate(config.steps, start=1):
        try:
            records.append(_apply(records[-1], step))
        except ValueError as exc:
            raise TowerStepError(index, step.op, str(exc)) from exc
    return records
