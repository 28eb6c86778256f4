"""Collects one result line per acceptance criterion."""
from __future__ import annotations

_results: dict[int, str] = {}


def record(number: int, title: str, ok: bool, seconds: float, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number:2d}: {status}  {title} ({seconds:.2f}s)"
    if detail:
        line += f" - {detail}"
    _results[number] = line


def lines() -> list[str]:
    return [_results[k] for k in sorted(_results)]
